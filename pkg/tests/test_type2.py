import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from convalg import (
    GridFunction,
    StepFunction,
    chain_lattice,
    conv_op,
    crosscheck,
    grid_conv_oracle,
    interval_structure,
    random_grid_step,
    random_step,
    sample_to_grid,
    step_from_grid,
    sup_left,
    sup_right,
    t2_constants,
    t2_join,
    t2_meet,
    t2_neg,
)
from convalg.convolution import LatticeMap


@st.composite
def step_functions(draw):
    rng = random.Random(draw(st.integers(min_value=0, max_value=10**6)))
    return random_step(rng, max_denominator=10, max_interior=3)


class TestConstants:
    def test_zero_spike_values(self):
        z, o = t2_constants()
        assert z(0) == 1
        assert z(F(1, 2)) == 0
        assert z(1) == 0
        assert o(1) == 1
        assert o(0) == 0

    def test_negation_swaps_constants(self):
        z, o = t2_constants()
        assert t2_neg(z) == o
        assert t2_neg(o) == z


class TestUnitLaws:
    @given(step_functions())
    @settings(max_examples=60, deadline=None)
    def test_zero_spike_is_join_unit(self, alpha):
        z, _ = t2_constants()
        assert t2_join(z, alpha) == alpha
        assert t2_join(alpha, z) == alpha

    @given(step_functions())
    @settings(max_examples=60, deadline=None)
    def test_one_spike_is_meet_unit(self, alpha):
        _, o = t2_constants()
        assert t2_meet(o, alpha) == alpha
        assert t2_meet(alpha, o) == alpha

    @given(step_functions())
    @settings(max_examples=60, deadline=None)
    def test_negation_involutive(self, alpha):
        assert t2_neg(t2_neg(alpha)) == alpha

    def test_one_spike_join_collapses(self):
        rng = random.Random(2)
        _, o = t2_constants()
        for _ in range(20):
            beta = random_step(rng)
            expected = StepFunction.make((F(0), F(1)), (F(0), beta.sup()), (F(0),))
            assert t2_join(o, beta) == expected


class TestEnvelopes:
    @given(step_functions())
    @settings(max_examples=60, deadline=None)
    def test_sup_left_idempotent_and_extensive(self, f):
        env = sup_left(f)
        assert sup_left(env) == env
        for x in list(f.breakpoints) + [F(1, 97), F(13, 31)]:
            assert f(x) <= env(x)

    @given(step_functions())
    @settings(max_examples=60, deadline=None)
    def test_sup_right_idempotent_and_extensive(self, f):
        env = sup_right(f)
        assert sup_right(env) == env
        for x in list(f.breakpoints) + [F(1, 97), F(13, 31)]:
            assert f(x) <= env(x)

    def test_envelopes_are_monotone(self):
        rng = random.Random(8)
        for _ in range(30):
            f = random_step(rng)
            grid = [F(k, 24) for k in range(25)]
            left = [sup_left(f)(x) for x in grid]
            assert all(a <= b for a, b in zip(left, left[1:]))
            right = [sup_right(f)(x) for x in grid]
            assert all(a >= b for a, b in zip(right, right[1:]))


class TestGridExamples:
    def test_two_grid_join_meet(self):
        a = GridFunction(2, (F(1, 2), F(1), F(0)))
        b = GridFunction(2, (F(0), F(1, 2), F(1)))
        assert grid_conv_oracle(2, "join", a, b).values == (F(0), F(1, 2), F(1))
        assert grid_conv_oracle(2, "meet", a, b).values == (F(1, 2), F(1), F(0))
        sa, sb = step_from_grid(a), step_from_grid(b)
        assert sample_to_grid(t2_join(sa, sb), 2) == grid_conv_oracle(2, "join", a, b)
        assert sample_to_grid(t2_meet(sa, sb), 2) == grid_conv_oracle(2, "meet", a, b)

    def test_neg_reflects_thirds(self):
        lower_third = StepFunction.make(
            (F(0), F(1, 3), F(1)), (F(1), F(0), F(0)), (F(1), F(0))
        )
        upper_third = t2_neg(lower_third)
        assert upper_third == StepFunction.make(
            (F(0), F(2, 3), F(1)), (F(0), F(0), F(1)), (F(0), F(1))
        )
        sampled = sample_to_grid(upper_third, 3)
        assert sampled == grid_conv_oracle(3, "neg", sample_to_grid(lower_third, 3))

    def test_oracle_join_unit(self):
        rng = random.Random(4)
        z, _ = t2_constants()
        gz = sample_to_grid(z, 6)
        g = sample_to_grid(random_grid_step(rng, 6), 6)
        assert grid_conv_oracle(6, "join", gz, g) == g

    def test_oracle_neg_is_reflection(self):
        rng = random.Random(5)
        g = sample_to_grid(random_grid_step(rng, 6), 6)
        out = grid_conv_oracle(6, "neg", g)
        assert out.values == tuple(reversed(g.values))


class TestClosedFormVsOracle:
    @pytest.mark.parametrize("n", [4, 8])
    def test_seeded_crosscheck(self, n):
        report = crosscheck(n, 40, seed=n)
        assert report.ok
        assert report.checks == 120

    def test_oracle_agrees_with_convolution_module(self):
        # two independent code paths over the same relational data
        n = 8
        lat = chain_lattice(n)
        s = interval_structure(n)
        rng = random.Random(42)
        for _ in range(50):
            ga = sample_to_grid(random_grid_step(rng, n, value_denominator=n), n)
            gb = sample_to_grid(random_grid_step(rng, n, value_denominator=n), n)
            ma = LatticeMap(s.carrier, lat, {F(k, n): ga.values[k] for k in range(n + 1)})
            mb = LatticeMap(s.carrier, lat, {F(k, n): gb.values[k] for k in range(n + 1)})
            for op, args, margs in (
                ("join", (ga, gb), [ma, mb]),
                ("meet", (ga, gb), [ma, mb]),
                ("neg", (ga,), [ma]),
            ):
                oracle = grid_conv_oracle(n, op, *args)
                conv = conv_op(lat, s, op, margs)
                assert tuple(conv.values[F(k, n)] for k in range(n + 1)) == oracle.values

    def test_de_morgan_interchange(self):
        rng = random.Random(13)
        for _ in range(40):
            a = random_step(rng)
            b = random_step(rng)
            assert t2_neg(t2_join(a, b)) == t2_meet(t2_neg(a), t2_neg(b))
            assert t2_neg(t2_meet(a, b)) == t2_join(t2_neg(a), t2_neg(b))

    def test_de_morgan_on_grids_via_oracle(self):
        n = 6
        rng = random.Random(19)
        for _ in range(25):
            ga = sample_to_grid(random_grid_step(rng, n), n)
            gb = sample_to_grid(random_grid_step(rng, n), n)
            neg_join = grid_conv_oracle(n, "neg", grid_conv_oracle(n, "join", ga, gb))
            meet_negs = grid_conv_oracle(
                n, "meet", grid_conv_oracle(n, "neg", ga), grid_conv_oracle(n, "neg", gb)
            )
            assert neg_join == meet_negs
            assert grid_conv_oracle(n, "join", ga, gb) == grid_conv_oracle(n, "join", gb, ga)
            assert grid_conv_oracle(n, "join", ga, ga) == ga
            assert grid_conv_oracle(n, "meet", ga, ga) == ga

    def test_commutative_and_idempotent(self):
        rng = random.Random(14)
        for _ in range(30):
            a = random_step(rng)
            b = random_step(rng)
            assert t2_join(a, b) == t2_join(b, a)
            assert t2_meet(a, b) == t2_meet(b, a)
            assert t2_join(a, a) == a
            assert t2_meet(a, a) == a


class TestSampling:
    def test_zero_spike_on_grid(self):
        z, _ = t2_constants()
        assert sample_to_grid(z, 4).values == (F(1), F(0), F(0), F(0), F(0))

    def test_constant_function(self):
        c = StepFunction.make((F(0), F(1)), (F(2, 5), F(2, 5)), (F(2, 5),))
        assert sample_to_grid(c, 3).values == (F(2, 5),) * 4

    def test_thirds_on_six_grid(self):
        lower_third = StepFunction.make(
            (F(0), F(1, 3), F(1)), (F(1), F(0), F(0)), (F(1), F(0))
        )
        assert sample_to_grid(lower_third, 6).values == (F(1), F(1), F(0), F(0), F(0), F(0), F(0))

    def test_off_grid_breakpoint_rejected(self):
        lower_third = StepFunction.make(
            (F(0), F(1, 3), F(1)), (F(1), F(0), F(0)), (F(1), F(0))
        )
        with pytest.raises(ValueError):
            sample_to_grid(lower_third, 4)


class TestRepresentation:
    def test_make_merges_redundant_breakpoints(self):
        f = StepFunction.make(
            (F(0), F(1, 2), F(1)), (F(1, 3), F(1, 4), F(1)), (F(1, 4), F(1, 4))
        )
        assert f.breakpoints == (F(0), F(1))
        assert f.interval_values == (F(1, 4),)

    def test_operations_reject_non_canonical(self):
        raw = StepFunction((F(0), F(1, 2), F(1)), (F(0), F(1, 4), F(1)), (F(1, 4), F(1, 4)))
        assert not raw.is_canonical
        z, _ = t2_constants()
        with pytest.raises(ValueError):
            t2_join(raw, z)

    def test_validation_errors(self):
        with pytest.raises(ValueError):
            StepFunction((F(0), F(1)), (F(0), F(2)), (F(0),))
        with pytest.raises(ValueError):
            StepFunction((F(0), F(1, 2)), (F(0), F(0)), (F(0),))
        with pytest.raises(ValueError):
            StepFunction((F(0), F(1, 2), F(1, 2), F(1)), (F(0),) * 4, (F(0),) * 3)

    def test_evaluation_outside_domain(self):
        z, _ = t2_constants()
        with pytest.raises(ValueError):
            z(F(3, 2))

    def test_grid_function_validation(self):
        with pytest.raises(ValueError):
            GridFunction(2, (F(0), F(1)))
        with pytest.raises(ValueError):
            GridFunction(2, (F(0), F(3, 2), F(1)))
        g = GridFunction(2, (F(0), F(1, 2), F(1)))
        with pytest.raises(ValueError):
            g(F(1, 3))

    def test_oracle_input_validation(self):
        g2 = GridFunction(2, (F(0), F(1, 2), F(1)))
        g3 = GridFunction(3, (F(0), F(0), F(1), F(1)))
        with pytest.raises(ValueError):
            grid_conv_oracle(2, "join", g2, g3)
        with pytest.raises(ValueError):
            grid_conv_oracle(2, "flip", g2)
