"""Exact convolution operations on piecewise-constant unit-interval functions.

The carrier is the fragment of self-maps of [0, 1] that are constant
between finitely many rational breakpoints, with an independent value at
every breakpoint; single-point spikes matter, so a breakpoint's value is
not tied to its neighbouring intervals. The fragment is closed under all
three operations and everything here is exact rational arithmetic.

The closed forms rest on one fact about chains: y join z = x forces one
of y, z to equal x and the other to lie below (dually for meet), which
turns the defining suprema into running envelopes. Each closed form is
cross-validated against :func:`grid_conv_oracle`, a literal brute-force
convolution on finite grids that shares no code with them.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant function on [0, 1] with rational breakpoints.

    ``point_values[i]`` is the value at ``breakpoints[i]``;
    ``interval_values[i]`` is the value on the open interval between
    breakpoints i and i+1. 0 and 1 are always breakpoints. Canonical
    form has no interior breakpoint whose point value equals both
    neighbouring interval values; operations require canonical inputs,
    use :meth:`make` to normalize.
    """

    breakpoints: tuple
    point_values: tuple
    interval_values: tuple

    def __post_init__(self):
        bps = self.breakpoints
        if len(self.point_values) != len(bps) or len(self.interval_values) != len(bps) - 1:
            raise ValueError("value tuples do not match the breakpoint count")
        if bps[0] != _ZERO or bps[-1] != _ONE:
            raise ValueError("0 and 1 must be breakpoints")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise ValueError("breakpoints must be strictly increasing")
        for v in self.point_values + self.interval_values:
            if not (_ZERO <= v <= _ONE):
                raise ValueError(f"value {v} outside [0, 1]")

    @classmethod
    def make(cls, breakpoints, point_values, interval_values):
        """Build in canonical form, merging redundant interior breakpoints."""
        bps = [Fraction(b) for b in breakpoints]
        pvs = [Fraction(v) for v in point_values]
        ivs = [Fraction(v) for v in interval_values]
        raw = cls(tuple(bps), tuple(pvs), tuple(ivs))
        out_b = [bps[0]]
        out_p = [pvs[0]]
        out_i = []
        for i in range(1, len(bps)):
            left = ivs[i - 1]
            if i < len(bps) - 1 and left == pvs[i] == ivs[i]:
                continue
            out_i.append(left)
            out_b.append(bps[i])
            out_p.append(pvs[i])
        return cls(tuple(out_b), tuple(out_p), tuple(out_i))

    @property
    def is_canonical(self):
        for i in range(1, len(self.breakpoints) - 1):
            if self.interval_values[i - 1] == self.point_values[i] == self.interval_values[i]:
                return False
        return True

    def __call__(self, x):
        x = Fraction(x)
        if not (_ZERO <= x <= _ONE):
            raise ValueError(f"argument {x} outside [0, 1]")
        i = bisect_right(self.breakpoints, x) - 1
        if self.breakpoints[i] == x:
            return self.point_values[i]
        return self.interval_values[i]

    def sup(self):
        return max(max(self.point_values), max(self.interval_values, default=_ZERO))


def _require_canonical(f):
    if not f.is_canonical:
        raise ValueError("step function is not in canonical form")


def _spike(at):
    """The function that is 1 at a single endpoint and 0 elsewhere."""
    if at == _ZERO:
        return StepFunction((_ZERO, _ONE), (_ONE, _ZERO), (_ZERO,))
    return StepFunction((_ZERO, _ONE), (_ZERO, _ONE), (_ZERO,))


def t2_constants():
    """The two distinguished elements: the unit spikes at 0 and at 1."""
    return _spike(_ZERO), _spike(_ONE)


def sup_left(f):
    """Running-maximum envelope from the left: value at x is max of f on [0, x]."""
    _require_canonical(f)
    pvs = []
    ivs = []
    run = None
    last = len(f.interval_values)
    for i, _ in enumerate(f.breakpoints):
        p = f.point_values[i]
        run = p if run is None else max(run, p)
        pvs.append(run)
        if i < last:
            run = max(run, f.interval_values[i])
            ivs.append(run)
    return StepFunction.make(f.breakpoints, tuple(pvs), tuple(ivs))


def sup_right(f):
    """Running-maximum envelope from the right: value at x is max of f on [x, 1]."""
    _require_canonical(f)
    pvs = []
    ivs = []
    run = None
    n = len(f.breakpoints)
    for i in range(n - 1, -1, -1):
        p = f.point_values[i]
        run = p if run is None else max(run, p)
        pvs.append(run)
        if i > 0:
            run = max(run, f.interval_values[i - 1])
            ivs.append(run)
    return StepFunction.make(f.breakpoints, tuple(reversed(pvs)), tuple(reversed(ivs)))


def _zip_with(op, f, g):
    """Pointwise combination on the common breakpoint refinement.

    Open refined intervals contain no breakpoint of either input, so a
    midpoint sample reads off the constant value exactly.
    """
    bps = sorted(set(f.breakpoints) | set(g.breakpoints))
    pvs = [op(f(b), g(b)) for b in bps]
    ivs = []
    for a, b in zip(bps, bps[1:]):
        mid = (a + b) / 2
        ivs.append(op(f(mid), g(mid)))
    return StepFunction.make(tuple(bps), tuple(pvs), tuple(ivs))


def t2_join(a, b):
    """Convolution join: x maps to the supremum of min(a(y), b(z)) over
    pairs with max(y, z) = x.

    On a chain the constraint splits into y = x with z below, or z = x
    with y below, giving max(a(x) min supL(b)(x), supL(a)(x) min b(x))
    with supL the left envelope.
    """
    _require_canonical(a)
    _require_canonical(b)
    la, lb = sup_left(a), sup_left(b)
    term1 = _zip_with(min, a, lb)
    term2 = _zip_with(min, la, b)
    return _zip_with(max, term1, term2)


def t2_meet(a, b):
    """Convolution meet, dual to :func:`t2_join` with right envelopes."""
    _require_canonical(a)
    _require_canonical(b)
    ra, rb = sup_right(a), sup_right(b)
    term1 = _zip_with(min, a, rb)
    term2 = _zip_with(min, ra, b)
    return _zip_with(max, term1, term2)


def t2_neg(a):
    """Convolution negation.

    The underlying unary relation x -> 1 - x is a bijection, so the
    defining supremum collapses to the single term a(1 - x) and the
    result is the reflection of a. Non-bijective unary relations do not
    collapse this way; those go through the generic convolution
    machinery in the convolution module instead.
    """
    _require_canonical(a)
    bps = tuple(1 - b for b in reversed(a.breakpoints))
    pvs = tuple(reversed(a.point_values))
    ivs = tuple(reversed(a.interval_values))
    return StepFunction.make(bps, pvs, ivs)


@dataclass(frozen=True)
class GridFunction:
    """A function on the chain 0, 1/n, ..., 1 with exact rational values."""

    size: int
    values: tuple

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("grid size must be a positive integer")
        if len(self.values) != self.size + 1:
            raise ValueError("value count must be size + 1")
        for v in self.values:
            if not (_ZERO <= v <= _ONE):
                raise ValueError(f"value {v} outside [0, 1]")

    def __call__(self, x):
        k = Fraction(x) * self.size
        if k.denominator != 1 or not (0 <= k <= self.size):
            raise ValueError(f"{x} is not a grid point")
        return self.values[int(k)]


def grid_conv_oracle(n, op, *args):
    """Literal brute-force convolution on the chain 0, 1/n, ..., 1.

    Independent of every closed form in this module: each output point
    scans all argument tuples satisfying the defining relation, so this
    is the oracle the closed forms are validated against.
    """
    for g in args:
        if g.size != n:
            raise ValueError("grid size mismatch")
    if op in ("join", "meet"):
        if len(args) != 2:
            raise ValueError(f"{op} takes two arguments")
        a, b = args
        combine = max if op == "join" else min
        values = []
        for x in range(n + 1):
            candidates = [
                min(a.values[y], b.values[z])
                for y in range(n + 1)
                for z in range(n + 1)
                if combine(y, z) == x
            ]
            values.append(max(candidates, default=_ZERO))
        return GridFunction(n, tuple(values))
    if op == "neg":
        if len(args) != 1:
            raise ValueError("neg takes one argument")
        (a,) = args
        values = []
        for x in range(n + 1):
            candidates = [a.values[y] for y in range(n + 1) if n - y == x]
            values.append(max(candidates, default=_ZERO))
        return GridFunction(n, tuple(values))
    raise ValueError(f"unknown operation {op!r}")


def sample_to_grid(f, n):
    """Restriction of a step function to the n-grid.

    Every breakpoint of f must lie on the grid; otherwise the
    restriction would lose pieces and grid comparisons would be
    meaningless.
    """
    for b in f.breakpoints:
        if (b * n).denominator != 1:
            raise ValueError(f"breakpoint {b} is not a multiple of 1/{n}")
    return GridFunction(n, tuple(f(Fraction(k, n)) for k in range(n + 1)))


def step_from_grid(g):
    """Embed a grid function as a step function with grid-attained suprema.

    Every grid point becomes a breakpoint and each unit interval takes
    the smaller neighbouring point value, so the continuous envelopes of
    the result agree with the discrete envelopes of g on the grid.
    """
    n = g.size
    bps = tuple(Fraction(k, n) for k in range(n + 1))
    ivs = tuple(min(g.values[k], g.values[k + 1]) for k in range(n))
    return StepFunction.make(bps, g.values, ivs)


def random_grid_step(rng, n, value_denominator=12, max_interior=4):
    """Random canonical step function with breakpoints on the n-grid.

    Pieces between adjacent grid points get an interval value no larger
    than one of its endpoint values; otherwise that value would be
    invisible to grid sampling and restriction would not commute with
    the convolutions. Pieces spanning several grid cells expose their
    value at interior grid points, so theirs is unconstrained.
    """
    count = rng.randint(0, min(n - 1, max_interior))
    interior = sorted(rng.sample(range(1, n), count))
    bps = [_ZERO] + [Fraction(k, n) for k in interior] + [_ONE]

    def val():
        return Fraction(rng.randint(0, value_denominator), value_denominator)

    pvs = [val() for _ in bps]
    ivs = []
    for i in range(len(bps) - 1):
        v = val()
        if bps[i + 1] - bps[i] == Fraction(1, n):
            v = min(v, max(pvs[i], pvs[i + 1]))
        ivs.append(v)
    return StepFunction.make(tuple(bps), tuple(pvs), tuple(ivs))


def random_step(rng, max_denominator=16, max_interior=4):
    """Random canonical step function with arbitrary rational breakpoints."""
    interior = set()
    for _ in range(rng.randint(0, max_interior)):
        d = rng.randint(2, max_denominator)
        k = rng.randint(1, d - 1)
        interior.add(Fraction(k, d))
    bps = [_ZERO] + sorted(interior) + [_ONE]
    d = max_denominator

    def val():
        return Fraction(rng.randint(0, d), d)

    pvs = [val() for _ in bps]
    ivs = [val() for _ in bps[:-1]]
    return StepFunction.make(tuple(bps), tuple(pvs), tuple(ivs))


@dataclass
class CrosscheckReport:
    ok: bool
    grid: int
    trials: int
    checks: int
    failure: str | None

    def __str__(self):
        if self.ok:
            return f"closed forms match the oracle on {self.checks} checks (grid {self.grid})"
        return f"oracle mismatch: {self.failure}"


def crosscheck(n, trials, seed=0):
    """Compare the closed forms with the brute-force oracle on random pairs.

    Equality is exact; a single mismatch is a bug in one of the two
    routes. Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    checks = 0
    for trial in range(trials):
        a = random_grid_step(rng, n)
        b = random_grid_step(rng, n)
        ga, gb = sample_to_grid(a, n), sample_to_grid(b, n)
        cases = [
            ("join", sample_to_grid(t2_join(a, b), n), grid_conv_oracle(n, "join", ga, gb)),
            ("meet", sample_to_grid(t2_meet(a, b), n), grid_conv_oracle(n, "meet", ga, gb)),
            ("neg", sample_to_grid(t2_neg(a), n), grid_conv_oracle(n, "neg", ga)),
        ]
        for label, closed, oracle in cases:
            checks += 1
            if closed != oracle:
                detail = (
                    f"trial {trial}, {label}: closed {closed.values} vs oracle {oracle.values}"
                )
                return CrosscheckReport(False, n, trials, checks, detail)
    return CrosscheckReport(True, n, trials, checks, None)
