from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from convalg import (
    FiniteTopology,
    chain_lattice,
    check_heyting_laws,
    enumerate_topologies,
    lattice_from_order,
    make_topology,
    open_set_heyting,
)


def fs(*labels):
    return frozenset(labels)


class TestMakeTopology:
    def test_three_point_example(self, wedge_topology):
        assert wedge_topology.opens == {
            fs(),
            fs("b"),
            fs("a", "b"),
            fs("b", "c"),
            fs("a", "b", "c"),
        }

    def test_smallest_topology(self):
        t = make_topology({"p"}, [])
        assert t.opens == {fs(), fs("p")}

    def test_discrete_from_singletons(self):
        # oracle: closure of all singletons must be the full powerset
        t = make_topology({"1", "2", "3"}, [{"1"}, {"2"}, {"3"}])
        assert len(t.opens) == 8
        from itertools import combinations

        expected = {
            frozenset(c) for r in range(4) for c in combinations(("1", "2", "3"), r)
        }
        assert t.opens == expected

    def test_unknown_generator_point(self):
        with pytest.raises(ValueError):
            make_topology({"a"}, [{"a", "z"}])

    def test_idempotent(self, wedge_topology):
        again = make_topology(wedge_topology.points, wedge_topology.opens)
        assert again == wedge_topology

    @given(
        gens=st.lists(
            st.frozensets(st.sampled_from("abcd"), max_size=4), max_size=4
        ),
        extra=st.frozensets(st.sampled_from("abcd"), max_size=4),
    )
    @settings(max_examples=60, deadline=None)
    def test_closure_monotone_and_extensive(self, gens, extra):
        points = "abcd"
        t = make_topology(points, gens)
        assert all(frozenset(g) in t.opens for g in gens)
        bigger = make_topology(points, gens + [extra])
        assert t.opens <= bigger.opens

    def test_invalid_family_rejected(self):
        with pytest.raises(ValueError):
            FiniteTopology(fs("a", "b"), frozenset({fs(), fs("a"), fs("b"), fs("a", "b")}) - {fs("a", "b")})
        with pytest.raises(ValueError):
            # closed under neither union nor intersection
            FiniteTopology(fs("a", "b", "c"), frozenset({fs(), fs("a"), fs("b"), fs("a", "b", "c")}))


class TestOpenSetHeyting:
    def test_negation_of_ab_is_empty(self, wedge_topology, wedge_lattice):
        # oracle: union of opens disjoint from {a, b}
        expected = frozenset()
        for w in wedge_topology.opens:
            if not (w & fs("a", "b")):
                expected |= w
        assert expected == fs()
        assert wedge_lattice.neg(fs("a", "b")) == fs()

    def test_impl_bc_b(self, wedge_topology, wedge_lattice):
        # oracle: union of opens whose trace on {b, c} lies inside {b}
        expected = frozenset()
        for w in wedge_topology.opens:
            if w & fs("b", "c") <= fs("b"):
                expected |= w
        assert expected == fs("a", "b")
        assert wedge_lattice.impl(fs("b", "c"), fs("b")) == fs("a", "b")

    def test_negation_of_empty_is_everything(self, wedge_lattice, wedge_topology):
        assert wedge_lattice.neg(fs()) == wedge_topology.points

    def test_adjunction_exhaustive(self, wedge_lattice):
        for a in wedge_lattice.elements:
            for b in wedge_lattice.elements:
                c = wedge_lattice.impl(a, b)
                for w in wedge_lattice.elements:
                    assert (w & a <= b) == (w <= c)

    def test_bounds(self, wedge_lattice, wedge_topology):
        assert wedge_lattice.bottom == fs()
        assert wedge_lattice.top == wedge_topology.points
        assert wedge_lattice.join_all(()) == wedge_lattice.bottom
        assert wedge_lattice.meet_all(()) == wedge_lattice.top


class TestChainLattice:
    def test_two_element_chain(self):
        two = chain_lattice(1)
        assert two.elements == (Fraction(0), Fraction(1))
        assert two.impl(Fraction(1), Fraction(0)) == Fraction(0)

    def test_impl_against_bruteforce(self):
        lat = chain_lattice(2)
        a, b = Fraction(1, 2), Fraction(0)
        # oracle: the largest c with min(c, a) <= b
        best = max(c for c in lat.elements if min(c, a) <= b)
        assert best == Fraction(0)
        assert lat.impl(a, b) == best

    def test_impl_reflexive_is_top(self):
        lat = chain_lattice(5)
        for a in lat.elements:
            assert lat.impl(a, a) == Fraction(1)

    def test_zero_size_rejected(self):
        with pytest.raises(ValueError):
            chain_lattice(0)

    def test_negation_involution_and_antisymmetry(self):
        lat = chain_lattice(7)
        for x in lat.elements:
            assert lat.negation(lat.negation(x)) == x
            assert lat.negation(x) in lat.element_set
        for x in lat.elements:
            for y in lat.elements:
                if x <= y:
                    assert lat.negation(y) <= lat.negation(x)

    def test_negation_rejects_off_chain(self):
        with pytest.raises(ValueError):
            chain_lattice(2).negation(Fraction(1, 3))


class TestCheckHeytingLaws:
    def test_open_set_lattice_passes(self, wedge_lattice):
        assert check_heyting_laws(wedge_lattice).ok

    def test_chain_passes(self):
        assert check_heyting_laws(chain_lattice(4)).ok

    def test_m3_fails_distributivity(self):
        els = ("0", "p", "q", "r", "1")
        below = {("0", x) for x in els} | {(x, "1") for x in els}
        m3 = lattice_from_order(els, below)
        report = check_heyting_laws(m3)
        assert not report.ok
        assert report.failure.law == "distributivity"

    def test_every_small_topology_is_heyting(self):
        for t in enumerate_topologies(("1", "2")):
            assert check_heyting_laws(open_set_heyting(t)).ok


class TestEnumerateTopologies:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29)])
    def test_labeled_counts(self, n, count):
        points = [str(i) for i in range(n)]
        assert sum(1 for _ in enumerate_topologies(points)) == count

    def test_too_many_points(self):
        with pytest.raises(ValueError):
            list(enumerate_topologies("abcde"))
