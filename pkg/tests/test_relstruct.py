from fractions import Fraction
from itertools import product

import pytest

from convalg import (
    RelationalStructure,
    Signature,
    interval_structure,
    relation_from_operation,
    validate_structure,
)


class TestRelationFromOperation:
    def test_binary_join_on_two_elements(self):
        rel = relation_from_operation(
            (0, 1), {(x, y): max(x, y) for x in (0, 1) for y in (0, 1)}
        )
        assert rel == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)}

    def test_nullary_constant(self):
        assert relation_from_operation((0, 1), {(): 0}) == {(0,)}

    def test_unary_negation_on_three_chain(self):
        elems = (Fraction(0), Fraction(1, 2), Fraction(1))
        rel = relation_from_operation(elems, {(x,): 1 - x for x in elems})
        assert rel == {
            (Fraction(0), Fraction(1)),
            (Fraction(1, 2), Fraction(1, 2)),
            (Fraction(1), Fraction(0)),
        }

    def test_partial_table_rejected(self):
        with pytest.raises(ValueError):
            relation_from_operation((0, 1), {(0,): 0})

    def test_unknown_value_rejected(self):
        with pytest.raises(ValueError):
            relation_from_operation((0, 1), {(0,): 2, (1,): 0})

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_graph_size_is_carrier_power(self, n):
        carrier = ("a", "b", "c")
        table = {k: "a" for k in product(carrier, repeat=n)}
        rel = relation_from_operation(carrier, table)
        assert len(rel) == len(carrier) ** n


class TestIntervalStructure:
    def test_relation_counts_for_two_elements(self):
        s = interval_structure(1)
        sizes = [len(s.relations[name]) for name in s.signature.names]
        assert sizes == [4, 4, 2, 1, 1]

    def test_negation_fixpoint(self):
        s = interval_structure(2)
        assert (Fraction(1, 2), Fraction(1, 2)) in s.relations["neg"]

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_join_relation_is_total_binary(self, n):
        s = interval_structure(n)
        assert len(s.relations["join"]) == (n + 1) ** 2

    @pytest.mark.parametrize("n", [1, 3])
    def test_relations_are_functional_graphs(self, n):
        s = interval_structure(n)
        for name in s.signature.names:
            arity = s.signature.arity(name)
            prefixes = [t[:-1] for t in s.relations[name]]
            assert len(set(prefixes)) == len(prefixes)
            assert set(prefixes) == set(product(s.carrier, repeat=arity))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            interval_structure(0)


class TestValidateStructure:
    def test_worked_example_is_valid(self, four_point_structure):
        assert validate_structure(four_point_structure).ok

    def test_wrong_length_reported(self):
        s = RelationalStructure(
            ("a", "b"), Signature((("f", 1),)), {"f": {("a", "b", "b")}}
        )
        report = validate_structure(s)
        assert not report.ok
        assert any("length" in v for v in report.violations)

    def test_unknown_label_reported(self):
        s = RelationalStructure(("a", "b"), Signature((("f", 1),)), {"f": {("a", "z")}})
        report = validate_structure(s)
        assert not report.ok
        assert any("unknown" in v for v in report.violations)


class TestConstruction:
    def test_duplicate_symbol_names_rejected(self):
        with pytest.raises(ValueError):
            Signature((("f", 1), ("f", 2)))

    def test_negative_arity_rejected(self):
        with pytest.raises(ValueError):
            Signature((("f", -1),))

    def test_relations_must_match_signature(self):
        with pytest.raises(ValueError):
            RelationalStructure(("a",), Signature((("f", 1),)), {"g": set()})

    def test_unknown_symbol_lookup(self):
        with pytest.raises(ValueError):
            Signature((("f", 1),)).arity("g")
