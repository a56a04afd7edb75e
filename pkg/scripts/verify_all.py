#!/usr/bin/env python3
"""Full verification battery over small instances, printed as a summary table.

Covers the same ground as the acceptance suite but as a standalone run:
Heyting laws on every topology with at most three points and on chains,
the section-correspondence isomorphism (exhaustive and randomized), the
two-valued characteristic isomorphism, equational agreement between the
map and powerset algebras, and the step-function oracle crosschecks.
"""

import argparse
import sys
import time
from itertools import product

from convalg import (
    ConstantRelationalEtale,
    RelationalStructure,
    Signature,
    chain_lattice,
    characteristic_iso,
    check_heyting_laws,
    conv_op,
    crosscheck,
    enumerate_maps,
    enumerate_topologies,
    fiberwise_rel_image,
    interval_structure,
    make_topology,
    open_set_heyting,
    phi,
    random_equations,
    same_equations_report,
    verify_main_iso,
)
from convalg.cli import worked_example


def run(label, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    status = "ok" if ok else "FAIL"
    print(f"{label:<46} {status:<5} {detail} ({time.perf_counter() - t0:.2f}s)")
    return ok


def heyting_everywhere():
    count = 0
    for n_points in range(4):
        for topo in enumerate_topologies([f"y{i}" for i in range(n_points)]):
            if not check_heyting_laws(open_set_heyting(topo)).ok:
                return False, f"topology {sorted(map(sorted, topo.opens))}"
            count += 1
    for n in range(1, 17):
        if not check_heyting_laws(chain_lattice(n)).ok:
            return False, f"chain {n}"
        count += 1
    return True, f"{count} lattices"


def section_iso():
    topology, lattice, structure, _ = worked_example()
    report = verify_main_iso(lattice, structure, topology, trials=500, seed=0)
    if not report.ok:
        return False, report.counterexample
    checks = report.checks
    small = RelationalStructure(
        ("u", "v"),
        Signature((("f", 2),)),
        {"f": {("u", "u", "u"), ("u", "v", "v"), ("v", "u", "v"), ("v", "v", "v")}},
    )
    for topo in enumerate_topologies(("y0", "y1", "y2")):
        lat = open_set_heyting(topo)
        rel_etale = ConstantRelationalEtale(small, topo)
        maps = list(enumerate_maps(lat, small.carrier))
        for a, b in product(maps, repeat=2):
            lhs = phi(lat, conv_op(lat, small, "f", [a, b]))
            rhs = fiberwise_rel_image(rel_etale, "f", [phi(lat, a), phi(lat, b)])
            if lhs != rhs:
                return False, "exhaustive mismatch"
            checks += 1
    return True, f"{checks} checks"


def characteristic():
    structure = worked_example()[2]
    report = characteristic_iso(structure, exhaustive=True)
    if not report.ok:
        return False, report.failure
    other = characteristic_iso(interval_structure(1))
    return other.ok, f"{report.checked + other.checked} argument tuples"


def equations():
    structure = worked_example()[2]
    eqs = random_equations(structure.signature, 20, seed=2024)
    total = compared = 0
    for lat in (chain_lattice(2), chain_lattice(3), open_set_heyting(
        make_topology({"a", "b", "c"}, [{"b"}, {"a", "b"}, {"b", "c"}])
    )):
        report = same_equations_report(lat, structure, eqs, max_assignments=10**6)
        if not report.ok:
            return False, "disagreement found"
        compared += report.compared
        total += len(eqs)
    return True, f"{compared}/{total} compared, rest capacity-skipped"


def type2_oracle():
    checks = 0
    for n in (4, 8, 16):
        report = crosscheck(n, 100, seed=n)
        if not report.ok:
            return False, report.failure
        checks += report.checks
    return True, f"{checks} checks"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args(argv)
    results = [
        run("heyting laws, all small lattices", heyting_everywhere),
        run("section correspondence isomorphism", section_iso),
        run("two-valued characteristic isomorphism", characteristic),
        run("map vs powerset equational agreement", equations),
        run("step-function closed forms vs grid oracle", type2_oracle),
    ]
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
