"""Powerset algebra of a relational structure, with operations by relational image.

Over the two-element lattice the convolution operations agree with
relational image under the characteristic-function bijection;
``characteristic_iso`` verifies that correspondence instance by
instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .convolution import LatticeMap, conv_op
from .lattice import chain_lattice


def rel_image(structure, name, args):
    """Relational image: last coordinates of relation tuples whose argument
    entries come from the given subsets. Nullary relations return their
    own elements as a subset."""
    n = structure.signature.arity(name)
    if len(args) != n:
        raise ValueError(f"{name} expects {n} arguments, got {len(args)}")
    carrier = frozenset(structure.carrier)
    args = [frozenset(a) for a in args]
    for a in args:
        if not a <= carrier:
            raise ValueError(f"subset {sorted(a)} is not contained in the carrier")
    out = set()
    for t in structure.relations[name]:
        if all(t[i] in args[i] for i in range(n)):
            out.add(t[-1])
    return frozenset(out)


def all_subsets(carrier):
    """Every subset of the carrier, ordered by size then lexicographically."""
    carrier = tuple(carrier)
    return [
        frozenset(c) for r in range(len(carrier) + 1) for c in combinations(carrier, r)
    ]


def char_map(two, carrier, subset):
    """Characteristic map of a subset over the two-element lattice."""
    subset = frozenset(subset)
    return LatticeMap(
        tuple(carrier),
        two,
        {x: (two.top if x in subset else two.bottom) for x in carrier},
    )


def subset_from_map(m):
    """Inverse of ``char_map``: the set of points with value top."""
    return frozenset(x for x in m.carrier if m.values[x] == m.lattice.top)


@dataclass
class IsoCheckReport:
    ok: bool
    mode: str
    checked: int
    failure: str | None

    def __str__(self):
        if self.ok:
            return f"{self.mode} check passed ({self.checked} argument tuples)"
        return f"failed after {self.checked} tuples: {self.failure}"


def characteristic_iso(structure, exhaustive=None, trials=200, seed=0):
    """Verify that relational image matches two-element convolution.

    For each relation, argument subsets are mapped through the
    characteristic bijection and pushed through both code paths; the
    results must coincide exactly. Carriers of up to 3 elements default
    to an exhaustive scan over argument tuples, carriers of up to 6 to a
    seeded random sample; ``exhaustive`` overrides the choice.
    """
    carrier = tuple(structure.carrier)
    if exhaustive is None:
        if len(carrier) <= 3:
            exhaustive = True
        elif len(carrier) <= 6:
            exhaustive = False
        else:
            raise ValueError("carrier too large; pass exhaustive explicitly")
    two = chain_lattice(1)
    subsets = all_subsets(carrier)
    rng = random.Random(seed)
    checked = 0
    for name in structure.signature.names:
        n = structure.signature.arity(name)
        if exhaustive:
            tuples = product(subsets, repeat=n)
        else:
            tuples = (
                tuple(rng.choice(subsets) for _ in range(n)) for _ in range(trials)
            )
        for args in tuples:
            image = rel_image(structure, name, args)
            conv = conv_op(two, structure, name, [char_map(two, carrier, a) for a in args])
            checked += 1
            if subset_from_map(conv) != image:
                detail = (
                    f"{name}{tuple(sorted(a) for a in args)}: "
                    f"image {sorted(image)} vs convolution {sorted(subset_from_map(conv))}"
                )
                return IsoCheckReport(False, "exhaustive" if exhaustive else "sampled", checked, detail)
    return IsoCheckReport(True, "exhaustive" if exhaustive else "sampled", checked, None)
