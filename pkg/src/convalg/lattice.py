"""Finite lattices and complete Heyting algebras.

Two concrete families carry all the semantics in this package: open-set
lattices of finite topological spaces, and finite chains of exact
rationals. A generic order-presented form also exists so the law checker
can be pointed at lattices that fail to be Heyting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True)
class FiniteTopology:
    """A finite point set together with its family of open sets.

    The family must contain the empty set and the full point set and be
    closed under pairwise union and intersection; construction fails
    otherwise. Use :func:`make_topology` to close an arbitrary generator
    family.
    """

    points: frozenset
    opens: frozenset

    def __post_init__(self):
        for a in self.opens:
            if not a <= self.points:
                raise ValueError(f"open set {sorted(a)} is not a subset of the points")
        if frozenset() not in self.opens:
            raise ValueError("the empty set must be open")
        if self.points not in self.opens:
            raise ValueError("the full point set must be open")
        for a in self.opens:
            for b in self.opens:
                if a | b not in self.opens:
                    raise ValueError("opens are not closed under union")
                if a & b not in self.opens:
                    raise ValueError("opens are not closed under intersection")


def make_topology(points, generators=()):
    """Smallest topology on ``points`` containing every generator.

    Adds the empty set and the full point set and closes under pairwise
    union and intersection. Idempotent: applied to the opens of an
    existing topology it returns an equal topology.
    """
    pts = frozenset(points)
    opens = {frozenset(), pts}
    for g in generators:
        g = frozenset(g)
        unknown = g - pts
        if unknown:
            raise ValueError(f"generator mentions unknown points: {sorted(unknown)}")
        opens.add(g)
    changed = True
    while changed:
        changed = False
        for a, b in combinations(list(opens), 2):
            for c in (a | b, a & b):
                if c not in opens:
                    opens.add(c)
                    changed = True
    return FiniteTopology(pts, frozenset(opens))


def enumerate_topologies(points):
    """Yield every topology on the given point set, in a fixed order.

    Brute force over families of subsets; intended for four or fewer
    points.
    """
    pts = tuple(sorted(points))
    if len(pts) > 4:
        raise ValueError("topology enumeration is exponential; at most 4 points")
    full = frozenset(pts)
    subsets = [frozenset(c) for r in range(len(pts) + 1) for c in combinations(pts, r)]
    middles = [s for s in subsets if s and s != full]
    for mask in range(1 << len(middles)):
        family = {frozenset(), full}
        for i, s in enumerate(middles):
            if mask >> i & 1:
                family.add(s)
        if _closed_family(family):
            yield FiniteTopology(full, frozenset(family))


def _closed_family(family):
    for a in family:
        for b in family:
            if a | b not in family or a & b not in family:
                return False
    return True


class FiniteLattice:
    """A finite lattice presented by its elements and order relation.

    ``elements`` fixes the canonical enumeration order used everywhere
    for deterministic output. Joins and meets of arbitrary finite
    subsets are computed by bound enumeration; the empty join is the
    bottom element and the empty meet is the top. ``impl`` is the
    candidate relative pseudo-complement ``join{w : w meet a <= b}``;
    whether it actually satisfies the adjunction is decided by
    :func:`check_heyting_laws`, so raw non-Heyting lattices may be built
    for negative testing.
    """

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        if not self.elements:
            raise ValueError("a lattice needs at least one element")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate lattice elements")
        self._leq = leq
        self.element_set = frozenset(self.elements)
        self.bottom = self.join_all(())
        self.top = self.meet_all(())

    def leq(self, a, b):
        return self._leq(a, b)

    def join_all(self, items):
        """Least upper bound of a finite collection; bottom when empty."""
        items = tuple(items)
        uppers = [u for u in self.elements if all(self._leq(x, u) for x in items)]
        for u in uppers:
            if all(self._leq(u, v) for v in uppers):
                return u
        raise ValueError(f"no least upper bound for {items!r}")

    def meet_all(self, items):
        """Greatest lower bound of a finite collection; top when empty."""
        items = tuple(items)
        lowers = [u for u in self.elements if all(self._leq(u, x) for x in items)]
        for u in lowers:
            if all(self._leq(v, u) for v in lowers):
                return u
        raise ValueError(f"no greatest lower bound for {items!r}")

    def join(self, a, b):
        return self.join_all((a, b))

    def meet(self, a, b):
        return self.meet_all((a, b))

    def impl(self, a, b):
        return self.join_all([w for w in self.elements if self._leq(self.meet(w, a), b)])

    def neg(self, a):
        return self.impl(a, self.bottom)

    def __eq__(self, other):
        return isinstance(other, FiniteLattice) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"{type(self).__name__}({len(self.elements)} elements)"


def lattice_from_order(elements, below):
    """Finite lattice from an explicit order.

    ``below`` is a collection of (a, b) pairs meaning a <= b; reflexive
    pairs are implied. The caller supplies a transitively closed order.
    """
    rel = set(below) | {(e, e) for e in elements}
    return FiniteLattice(elements, lambda a, b: (a, b) in rel)


class OpenSetLattice(FiniteLattice):
    """Heyting algebra of the opens of a finite topological space.

    Join is union, meet is intersection, and implication of A and B is
    the union of all opens W with W & A <= B; negation is implication
    into the empty set, i.e. the interior of the complement.
    """

    def __init__(self, topology):
        self.topology = topology
        ordered = sorted(topology.opens, key=lambda a: (len(a), tuple(sorted(a))))
        super().__init__(ordered, lambda a, b: a <= b)

    def join_all(self, items):
        out = frozenset()
        for a in items:
            out = out | a
        return out

    def meet_all(self, items):
        items = tuple(items)
        if not items:
            return self.topology.points
        out = items[0]
        for a in items[1:]:
            out = out & a
        return out

    def join(self, a, b):
        return a | b

    def meet(self, a, b):
        return a & b

    def impl(self, a, b):
        return self.join_all(w for w in self.elements if w & a <= b)


def open_set_heyting(topology):
    """The complete Heyting algebra of open sets of a finite topology."""
    return OpenSetLattice(topology)


class ChainLattice(FiniteLattice):
    """Heyting algebra on the chain 0 < 1/n < ... < 1 of exact rationals.

    ``negation`` is the order-reversing involution k/n -> (n-k)/n carried
    by the chain itself; it is unrelated to the Heyting pseudo-complement.
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("chain size must be a positive integer")
        self.size = n
        super().__init__((Fraction(k, n) for k in range(n + 1)), lambda a, b: a <= b)

    def join_all(self, items):
        return max(items, default=Fraction(0))

    def meet_all(self, items):
        return min(items, default=Fraction(1))

    def join(self, a, b):
        return a if a >= b else b

    def meet(self, a, b):
        return a if a <= b else b

    def impl(self, a, b):
        return self.top if a <= b else b

    def negation(self, x):
        if x not in self.element_set:
            raise ValueError(f"{x} is not on the chain")
        return 1 - x


def chain_lattice(n):
    """The chain 0 < 1/n < ... < 1 as a Heyting algebra."""
    return ChainLattice(n)


@dataclass(frozen=True)
class LawFailure:
    law: str
    detail: str


@dataclass(frozen=True)
class LawReport:
    ok: bool
    checks: int
    failure: LawFailure | None

    def __str__(self):
        if self.ok:
            return f"all laws hold ({self.checks} checks)"
        return f"{self.failure.law} failed after {self.checks} checks: {self.failure.detail}"


def check_heyting_laws(lat, max_subset_size=2):
    """Exhaustively verify the lattice, distributivity and adjunction laws.

    Subset-quantified laws (least upper bounds, greatest lower bounds,
    the infinite distributive law) are checked over all subsets of size
    up to ``max_subset_size`` plus the full element set; order, bound,
    and adjunction checks are exhaustive over elements. Returns a report
    carrying the first counterexample instead of raising.
    """
    els = lat.elements
    checks = 0

    def fail(law, detail):
        return LawReport(False, checks, LawFailure(law, detail))

    for a in els:
        checks += 1
        if not lat.leq(a, a):
            return fail("order", f"not reflexive at {a!r}")
    for a in els:
        for b in els:
            checks += 1
            if a != b and lat.leq(a, b) and lat.leq(b, a):
                return fail("order", f"not antisymmetric at {a!r}, {b!r}")
    for a in els:
        for b in els:
            for c in els:
                checks += 1
                if lat.leq(a, b) and lat.leq(b, c) and not lat.leq(a, c):
                    return fail("order", f"not transitive at {a!r}, {b!r}, {c!r}")

    for a in els:
        checks += 1
        if not lat.leq(lat.bottom, a) or not lat.leq(a, lat.top):
            return fail("bounds", f"{a!r} not between bottom and top")
    checks += 2
    if lat.join_all(()) != lat.bottom:
        return fail("bounds", "empty join is not bottom")
    if lat.meet_all(()) != lat.top:
        return fail("bounds", "empty meet is not top")

    subsets = []
    for size in range(1, max_subset_size + 1):
        subsets.extend(combinations(els, size))
    subsets.append(els)

    for s in subsets:
        j = lat.join_all(s)
        m = lat.meet_all(s)
        checks += 1
        if not all(lat.leq(x, j) for x in s):
            return fail("lub", f"join of {s!r} is not an upper bound")
        for u in els:
            checks += 1
            if all(lat.leq(x, u) for x in s) and not lat.leq(j, u):
                return fail("lub", f"join of {s!r} is not least (witness {u!r})")
        checks += 1
        if not all(lat.leq(m, x) for x in s):
            return fail("glb", f"meet of {s!r} is not a lower bound")
        for u in els:
            checks += 1
            if all(lat.leq(u, x) for x in s) and not lat.leq(u, m):
                return fail("glb", f"meet of {s!r} is not greatest (witness {u!r})")

    for a in els:
        for s in subsets:
            checks += 1
            lhs = lat.meet(a, lat.join_all(s))
            rhs = lat.join_all([lat.meet(a, x) for x in s])
            if lhs != rhs:
                return fail("distributivity", f"{a!r} meet join{s!r}: {lhs!r} != {rhs!r}")

    for a in els:
        for b in els:
            c = lat.impl(a, b)
            checks += 1
            if c not in lat.element_set:
                return fail("adjunction", f"impl({a!r}, {b!r}) left the lattice")
            for w in els:
                checks += 1
                if lat.leq(lat.meet(w, a), b) != lat.leq(w, c):
                    return fail(
                        "adjunction",
                        f"w={w!r}, a={a!r}, b={b!r}, impl={c!r}",
                    )

    return LawReport(True, checks, None)
