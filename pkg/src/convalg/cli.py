"""Batch command-line interface.

Exit status: 0 when all requested checks pass, 1 when a verification
produced a counterexample, 2 on usage or input errors. With --records,
output is line-oriented ``key=value`` pairs and byte-identical across
runs with the same inputs and seed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .complexalg import rel_image
from .convolution import CapacityError, LatticeMap, conv_op
from .etale import (
    ConstantRelationalEtale,
    fiberwise_rel_image,
    per_fiber_rel_image,
    phi,
    verify_main_iso,
)
from .formats import (
    ParseError,
    format_element,
    format_step_function,
    format_subset,
    parse_equations,
    parse_lattice_map,
    parse_step_function,
    parse_structure,
    parse_subset,
    parse_topology,
)
from .lattice import check_heyting_laws, chain_lattice, make_topology, open_set_heyting
from .relstruct import RelationalStructure, Signature
from .terms import format_equation, same_equations_report
from .type2 import crosscheck, t2_join, t2_meet, t2_neg


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _load_lattice(selector):
    """`chain:N` or a topology file path."""
    if selector.startswith("chain:"):
        try:
            n = int(selector.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad chain size in {selector!r}") from None
        return chain_lattice(n)
    return open_set_heyting(parse_topology(_read(selector), selector))


def _bool(flag):
    return "true" if flag else "false"


def cmd_lattice_check(args):
    lat = _load_lattice(args.lattice)
    report = check_heyting_laws(lat, max_subset_size=args.max_subset_size)
    if args.records:
        print("command=lattice.check")
        print(f"elements={len(lat.elements)}")
        print(f"checks={report.checks}")
        print(f"ok={_bool(report.ok)}")
        if not report.ok:
            print(f"law={report.failure.law}")
            print(f"detail={report.failure.detail}")
    else:
        print(f"lattice with {len(lat.elements)} elements: {report}")
    return 0 if report.ok else 1


def cmd_conv_eval(args):
    structure = parse_structure(_read(args.structure), args.structure)
    lattice = _load_lattice(args.lattice)
    maps = [
        parse_lattice_map(_read(p), structure.carrier, lattice, p) for p in args.arg or []
    ]
    result = conv_op(lattice, structure, args.relation, maps)
    if args.records:
        print("command=conv.eval")
        for x in result.carrier:
            print(f"result.{x}={format_element(result.values[x])}")
    else:
        for x in result.carrier:
            print(f"{x} -> {format_element(result.values[x])}")
    return 0


def cmd_complex_eval(args):
    structure = parse_structure(_read(args.structure), args.structure)
    subsets = [parse_subset(tok) for tok in args.arg or []]
    result = rel_image(structure, args.relation, subsets)
    if args.records:
        print("command=complex.eval")
        print(f"result={format_subset(result)}")
    else:
        print(format_subset(result))
    return 0


def cmd_etale_verify_iso(args):
    topology = parse_topology(_read(args.topology), args.topology)
    structure = parse_structure(_read(args.structure), args.structure)
    lattice = open_set_heyting(topology)
    report = verify_main_iso(lattice, structure, topology, trials=args.trials, seed=args.seed)
    if args.records:
        print("command=etale.verify-iso")
        print(f"seed={args.seed}")
        print(f"trials={report.trials}")
        print(f"checks={report.checks}")
        print(f"ok={_bool(report.ok)}")
        if not report.ok:
            print(f"counterexample={report.counterexample}")
    else:
        print(str(report))
    return 0 if report.ok else 1


def cmd_equations_check(args):
    lattice = _load_lattice(args.lattice)
    structure = parse_structure(_read(args.structure), args.structure)
    eqs = parse_equations(_read(args.eqs), structure.signature, args.eqs)
    report = same_equations_report(lattice, structure, eqs, max_assignments=args.max_enum)
    if args.records:
        print("command=equations.check")
        for i, out in enumerate(report.outcomes):
            text = format_equation(out.equation)
            conv = "skipped" if out.conv_holds is None else _bool(out.conv_holds)
            comp = "skipped" if out.complex_holds is None else _bool(out.complex_holds)
            agree = "skipped" if out.agree is None else _bool(out.agree)
            print(f"eq.{i}.text={text}")
            print(f"eq.{i}.conv={conv}")
            print(f"eq.{i}.complex={comp}")
            print(f"eq.{i}.agree={agree}")
        print(f"compared={report.compared}")
        print(f"skipped={report.skipped}")
        print(f"disagreements={report.disagreements}")
        print(f"ok={_bool(report.ok)}")
    else:
        for out in report.outcomes:
            conv = "skipped" if out.conv_holds is None else _bool(out.conv_holds)
            comp = "skipped" if out.complex_holds is None else _bool(out.complex_holds)
            print(f"{format_equation(out.equation)}: maps={conv} powerset={comp}")
        print(
            f"compared {report.compared}, skipped {report.skipped}, "
            f"disagreements {report.disagreements}"
        )
    return 0 if report.ok else 1


def cmd_type2_eval(args):
    a = parse_step_function(_read(args.a), args.a)
    if args.op == "neg":
        result = t2_neg(a)
    else:
        if args.b is None:
            raise ValueError(f"{args.op} needs a second operand (-b)")
        b = parse_step_function(_read(args.b), args.b)
        result = t2_join(a, b) if args.op == "join" else t2_meet(a, b)
    if args.records:
        print("command=type2.eval")
        print(f"op={args.op}")
        for line in format_step_function(result).splitlines():
            print(f"piece={line}")
    else:
        print(format_step_function(result))
    return 0


def cmd_type2_crosscheck(args):
    report = crosscheck(args.n, args.trials, seed=args.seed)
    if args.records:
        print("command=type2.crosscheck")
        print(f"grid={report.grid}")
        print(f"seed={args.seed}")
        print(f"trials={report.trials}")
        print(f"checks={report.checks}")
        print(f"ok={_bool(report.ok)}")
        if not report.ok:
            print(f"counterexample={report.failure}")
    else:
        print(str(report))
    return 0 if report.ok else 1


def worked_example():
    """The four-point structure and the thirds data over a discrete 3-point base."""
    topology = make_topology(("t1", "t2", "t3"), [{"t1"}, {"t2"}, {"t3"}])
    lattice = open_set_heyting(topology)
    carrier = ("x1", "x2", "x3", "x4")
    structure = RelationalStructure(
        carrier,
        Signature((("f", 2),)),
        {
            "f": {
                ("x1", "x1", "x1"),
                ("x2", "x2", "x3"),
                ("x1", "x3", "x4"),
                ("x3", "x2", "x4"),
            }
        },
    )
    alpha1 = LatticeMap(
        carrier,
        lattice,
        {
            "x1": frozenset({"t1", "t2"}),
            "x2": frozenset({"t1", "t2"}),
            "x3": frozenset({"t2", "t3"}),
            "x4": frozenset({"t1", "t2", "t3"}),
        },
    )
    alpha2 = LatticeMap(
        carrier,
        lattice,
        {
            "x1": frozenset({"t2", "t3"}),
            "x2": frozenset({"t3"}),
            "x3": frozenset({"t1"}),
            "x4": frozenset({"t1", "t2"}),
        },
    )
    return topology, lattice, structure, (alpha1, alpha2)


def cmd_paper_demo(args):
    topology, lattice, structure, (alpha1, alpha2) = worked_example()
    conv = conv_op(lattice, structure, "f", [alpha1, alpha2])
    rel_etale = ConstantRelationalEtale(structure, topology)
    sub_args = [phi(lattice, alpha1), phi(lattice, alpha2)]
    fiber = per_fiber_rel_image(rel_etale, "f", sub_args)
    sections = fiberwise_rel_image(rel_etale, "f", sub_args)
    routes = [
        ("conv", {x: conv.values[x] for x in conv.carrier}),
        ("fiber", {x: fiber.sections[x] for x in conv.carrier}),
        ("etale", {x: sections.sections[x] for x in conv.carrier}),
    ]
    agree = routes[0][1] == routes[1][1] == routes[2][1]
    if args.records:
        print("command=paper-demo")
        for label, values in routes:
            for x in conv.carrier:
                print(f"{label}.{x}={format_element(values[x])}")
        print(f"agree={_bool(agree)}")
    else:
        titles = {
            "conv": "convolution over the open-set lattice",
            "fiber": "relational image computed fiber by fiber",
            "etale": "sectionwise image of the lifted relation",
        }
        for label, values in routes:
            print(f"{titles[label]}:")
            for x in conv.carrier:
                print(f"  {x} -> {format_element(values[x])}")
        print("all three routes agree" if agree else "ROUTES DISAGREE")
    return 0 if agree else 1


def _build_parser():
    parser = argparse.ArgumentParser(prog="convalg", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--records", action="store_true", help="machine-parseable key=value output")
    sub = parser.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="lattice law checks").add_subparsers(
        dest="action", required=True
    )
    p = lat.add_parser("check", parents=[common])
    p.add_argument("--lattice", required=True, help="chain:N or a topology file")
    p.add_argument("--max-subset-size", type=int, default=2)
    p.set_defaults(func=cmd_lattice_check)

    conv = sub.add_parser("conv", help="convolution operations").add_subparsers(
        dest="action", required=True
    )
    p = conv.add_parser("eval", parents=[common])
    p.add_argument("--lattice", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--relation", required=True)
    p.add_argument("--arg", action="append", help="map file, once per argument")
    p.set_defaults(func=cmd_conv_eval)

    comp = sub.add_parser("complex", help="relational image on subsets").add_subparsers(
        dest="action", required=True
    )
    p = comp.add_parser("eval", parents=[common])
    p.add_argument("--structure", required=True)
    p.add_argument("--relation", required=True)
    p.add_argument("--arg", action="append", help="subset literal like '{x1 x2}'")
    p.set_defaults(func=cmd_complex_eval)

    eta = sub.add_parser("etale", help="section correspondence checks").add_subparsers(
        dest="action", required=True
    )
    p = eta.add_parser("verify-iso", parents=[common])
    p.add_argument("--structure", required=True)
    p.add_argument("--topology", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_etale_verify_iso)

    eqs = sub.add_parser("equations", help="equational cross-checks").add_subparsers(
        dest="action", required=True
    )
    p = eqs.add_parser("check", parents=[common])
    p.add_argument("--lattice", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--eqs", required=True)
    p.add_argument("--max-enum", type=int, default=10**6)
    p.set_defaults(func=cmd_equations_check)

    t2 = sub.add_parser("type2", help="step-function operations").add_subparsers(
        dest="action", required=True
    )
    p = t2.add_parser("eval", parents=[common])
    p.add_argument("--op", choices=("join", "meet", "neg"), required=True)
    p.add_argument("-a", required=True, help="step function file")
    p.add_argument("-b", help="second step function file")
    p.set_defaults(func=cmd_type2_eval)
    p = t2.add_parser("crosscheck", parents=[common])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_type2_crosscheck)

    p = sub.add_parser("paper-demo", parents=[common], help="run the worked example three ways")
    p.set_defaults(func=cmd_paper_demo)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except (ParseError, CapacityError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
