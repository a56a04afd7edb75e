"""Relational structures of arbitrary finite type.

An n-ary operation is encoded as its graph, an (n+1)-ary relation with
arguments first and result last. Relations are arbitrary tuple sets and
need not be functional; constants are unary relations, possibly empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Signature:
    """Ordered operation symbols with their arities."""

    symbols: tuple

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names")
        for name, arity in self.symbols:
            if arity < 0:
                raise ValueError(f"negative arity for {name}")

    @property
    def names(self):
        return tuple(name for name, _ in self.symbols)

    def arity(self, name):
        for sym, arity in self.symbols:
            if sym == name:
                return arity
        raise ValueError(f"unknown symbol {name!r}")


@dataclass(frozen=True)
class RelationalStructure:
    """A finite carrier with one relation per signature symbol."""

    carrier: tuple
    signature: Signature
    relations: dict = field(compare=True)

    def __post_init__(self):
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("duplicate carrier elements")
        if set(self.relations) != set(self.signature.names):
            raise ValueError("relations must cover exactly the signature symbols")
        normalized = {
            name: frozenset(tuple(t) for t in rel) for name, rel in self.relations.items()
        }
        object.__setattr__(self, "relations", normalized)


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "structure valid"
        return "; ".join(self.violations)


def validate_structure(s):
    """Check tuple arities and carrier membership, reporting all violations."""
    violations = []
    carrier = set(s.carrier)
    for name in s.signature.names:
        want = s.signature.arity(name) + 1
        for t in sorted(s.relations[name]):
            if len(t) != want:
                violations.append(f"{name}: tuple {t!r} has length {len(t)}, expected {want}")
                continue
            for entry in t:
                if entry not in carrier:
                    violations.append(f"{name}: tuple {t!r} mentions unknown element {entry!r}")
    return StructureReport(not violations, tuple(violations))


def relation_from_operation(carrier, table):
    """Graph of a total n-ary operation as an (n+1)-ary relation.

    ``table`` maps argument tuples to results and must be total on the
    n-fold power of the carrier; nullary operations use the empty tuple
    as their single key.
    """
    carrier = tuple(carrier)
    cset = set(carrier)
    keys = list(table)
    if not keys:
        raise ValueError("operation table is empty")
    n = len(keys[0])
    for k in keys:
        if len(k) != n:
            raise ValueError("operation table keys have mixed arities")
        for entry in k:
            if entry not in cset:
                raise ValueError(f"table key {k!r} mentions unknown element")
    for k, v in table.items():
        if v not in cset:
            raise ValueError(f"table value {v!r} is not a carrier element")
    if len(keys) != len(cset) ** n:
        raise ValueError(f"operation table is partial: {len(keys)} of {len(cset) ** n} entries")
    return frozenset(tuple(k) + (table[k],) for k in keys)


def interval_structure(n):
    """The n-step discretization of the unit-interval algebra as a relational structure.

    Carrier is the chain 0, 1/n, ..., 1; the relations are the graphs of
    min, max and x -> 1 - x, plus the endpoint constants as unary
    relations. The type is 2, 2, 1, 0, 0.
    """
    if n < 1:
        raise ValueError("chain size must be a positive integer")
    elems = tuple(Fraction(k, n) for k in range(n + 1))
    sig = Signature((("meet", 2), ("join", 2), ("neg", 1), ("zero", 0), ("one", 0)))
    relations = {
        "meet": relation_from_operation(elems, {(x, y): min(x, y) for x in elems for y in elems}),
        "join": relation_from_operation(elems, {(x, y): max(x, y) for x in elems for y in elems}),
        "neg": relation_from_operation(elems, {(x,): 1 - x for x in elems}),
        "zero": frozenset({(Fraction(0),)}),
        "one": frozenset({(Fraction(1),)}),
    }
    return RelationalStructure(elems, sig, relations)
