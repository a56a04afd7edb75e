"""Line-oriented text formats for topologies, structures, maps and step functions.

All formats are UTF-8 with ``#`` comments. Parse errors carry the file
path and line number so the CLI can name the offending line.
"""

from __future__ import annotations

from fractions import Fraction

from .convolution import LatticeMap
from .lattice import make_topology
from .relstruct import RelationalStructure, Signature
from .terms import App, Equation, Var
from .type2 import StepFunction, _ONE, _ZERO


class ParseError(ValueError):
    def __init__(self, message, line=None, path=None):
        where = path or "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


def _lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_topology(text, path=None):
    """`points: a b c` followed by one `open: ...` line per generator."""
    points = None
    generators = []
    for i, line in _lines(text):
        if line.startswith("points:"):
            if points is not None:
                raise ParseError("duplicate points line", i, path)
            points = line[len("points:"):].split()
        elif line.startswith("open:"):
            if points is None:
                raise ParseError("open line before points line", i, path)
            labels = line[len("open:"):].split()
            unknown = set(labels) - set(points)
            if unknown:
                raise ParseError(f"unknown points {sorted(unknown)}", i, path)
            generators.append(frozenset(labels))
        else:
            raise ParseError(f"unrecognized line {line!r}", i, path)
    if points is None:
        raise ParseError("missing points line", None, path)
    return make_topology(points, generators)


def parse_structure(text, path=None):
    """`carrier: ...` then `relation NAME arity N` blocks of tuple lines."""
    carrier = None
    symbols = []
    relations = {}
    current = None
    for i, line in _lines(text):
        if line.startswith("carrier:"):
            if carrier is not None:
                raise ParseError("duplicate carrier line", i, path)
            carrier = tuple(line[len("carrier:"):].split())
        elif line.startswith("relation"):
            parts = line.split()
            if len(parts) != 4 or parts[2] != "arity":
                raise ParseError("expected `relation NAME arity N`", i, path)
            name = parts[1]
            try:
                arity = int(parts[3])
            except ValueError:
                raise ParseError(f"bad arity {parts[3]!r}", i, path) from None
            if arity < 0:
                raise ParseError("arity must be nonnegative", i, path)
            if name in relations:
                raise ParseError(f"duplicate relation {name}", i, path)
            symbols.append((name, arity))
            relations[name] = set()
            current = name
        else:
            if carrier is None or current is None:
                raise ParseError("tuple line outside a relation block", i, path)
            entries = tuple(line.split())
            want = dict(symbols)[current] + 1
            if len(entries) != want:
                raise ParseError(
                    f"tuple has {len(entries)} entries, expected {want}", i, path
                )
            unknown = set(entries) - set(carrier)
            if unknown:
                raise ParseError(f"unknown carrier elements {sorted(unknown)}", i, path)
            relations[current].add(entries)
    if carrier is None:
        raise ParseError("missing carrier line", None, path)
    sig = Signature(tuple(symbols))
    return RelationalStructure(carrier, sig, {k: frozenset(v) for k, v in relations.items()})


def parse_subset(token):
    """Subset literal `{x1 x3}`; `{}` is the empty set."""
    token = token.strip()
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError(f"subset literal must be braced, got {token!r}")
    return frozenset(token[1:-1].split())


def _parse_value(token, lattice, i, path):
    token = token.strip()
    if token.startswith("{"):
        value = parse_subset(token)
    else:
        try:
            value = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad lattice value {token!r}", i, path) from None
    if value not in lattice.element_set:
        raise ParseError(f"{token!r} is not an element of the lattice", i, path)
    return value


def parse_lattice_map(text, carrier, lattice, path=None):
    """One `x -> value` line per carrier element; value is a subset literal
    for open-set lattices or a fraction for chains."""
    values = {}
    for i, line in _lines(text):
        if "->" not in line:
            raise ParseError("expected `element -> value`", i, path)
        left, right = line.split("->", 1)
        x = left.strip()
        if x not in carrier:
            raise ParseError(f"unknown carrier element {x!r}", i, path)
        if x in values:
            raise ParseError(f"duplicate entry for {x!r}", i, path)
        values[x] = _parse_value(right, lattice, i, path)
    missing = set(carrier) - set(values)
    if missing:
        raise ParseError(f"missing entries for {sorted(missing)}", None, path)
    return LatticeMap(tuple(carrier), lattice, values)


def _parse_fraction(token, i, path):
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {token!r}", i, path) from None
    return value


def parse_step_function(text, path=None):
    """`point X -> V` and `interval (A,B) -> V` lines; omitted pieces are 0.

    A declared interval may span several breakpoints introduced by other
    lines; overlapping declarations must not conflict.
    """
    point_decls = {}
    interval_decls = []
    for i, line in _lines(text):
        if "->" not in line:
            raise ParseError("expected `point ... -> v` or `interval ... -> v`", i, path)
        left, right = line.split("->", 1)
        value = _parse_fraction(right.strip(), i, path)
        parts = left.split(None, 1)
        if len(parts) != 2:
            raise ParseError("expected `point X` or `interval (A,B)`", i, path)
        kind, piece = parts[0], parts[1].strip()
        if kind == "point":
            x = _parse_fraction(piece, i, path)
            if not (_ZERO <= x <= _ONE):
                raise ParseError(f"point {piece} outside [0, 1]", i, path)
            if x in point_decls:
                raise ParseError(f"duplicate point {piece}", i, path)
            point_decls[x] = value
        elif kind == "interval":
            if not (piece.startswith("(") and piece.endswith(")")):
                raise ParseError("interval must be written (A,B)", i, path)
            try:
                a_tok, b_tok = piece[1:-1].split(",")
            except ValueError:
                raise ParseError("interval must be written (A,B)", i, path) from None
            a = _parse_fraction(a_tok.strip(), i, path)
            b = _parse_fraction(b_tok.strip(), i, path)
            if not (_ZERO <= a < b <= _ONE):
                raise ParseError(f"bad interval {piece}", i, path)
            interval_decls.append((a, b, value, i))
        else:
            raise ParseError(f"unrecognized piece kind {kind!r}", i, path)
    bps = {_ZERO, _ONE} | set(point_decls)
    for a, b, _, _ in interval_decls:
        bps.add(a)
        bps.add(b)
    bps = sorted(bps)
    pvs = [point_decls.get(b, _ZERO) for b in bps]
    ivs = []
    for lo, hi in zip(bps, bps[1:]):
        covering = [(a, b, v, i) for a, b, v, i in interval_decls if a <= lo and hi <= b]
        vals = {v for _, _, v, _ in covering}
        if len(vals) > 1:
            line = min(i for _, _, _, i in covering)
            raise ParseError(f"conflicting values on ({lo},{hi})", line, path)
        ivs.append(vals.pop() if vals else _ZERO)
    return StepFunction.make(tuple(bps), tuple(pvs), tuple(ivs))


def _tokenize(line):
    return line.replace("(", " ( ").replace(")", " ) ").split()


def _parse_term(tokens, pos, signature, i, path):
    if pos >= len(tokens):
        raise ParseError("unexpected end of term", i, path)
    tok = tokens[pos]
    if tok == "(":
        if pos + 1 >= len(tokens):
            raise ParseError("unexpected end of term", i, path)
        name = tokens[pos + 1]
        if name in ("(", ")"):
            raise ParseError("expected a symbol after (", i, path)
        if name not in signature.names:
            raise ParseError(f"unknown symbol {name!r}", i, path)
        arity = signature.arity(name)
        args = []
        pos += 2
        for _ in range(arity):
            term, pos = _parse_term(tokens, pos, signature, i, path)
            args.append(term)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ParseError(f"expected ) closing {name}", i, path)
        return App(name, tuple(args)), pos + 1
    if tok == ")":
        raise ParseError("unexpected )", i, path)
    if tok in signature.names:
        if signature.arity(tok) != 0:
            raise ParseError(f"symbol {tok!r} needs arguments", i, path)
        return App(tok, ()), pos + 1
    return Var(tok), pos + 1


def parse_equation(line, signature, lineno=None, path=None):
    """Prefix-notation equation, e.g. `(f v w) = (f w v)`."""
    if "=" not in line:
        raise ParseError("equation needs a top-level =", lineno, path)
    left, right = line.split("=", 1)
    lhs, pos = _parse_term(_tokenize(left), 0, signature, lineno, path)
    if pos != len(_tokenize(left)):
        raise ParseError("trailing tokens on left side", lineno, path)
    rhs, pos = _parse_term(_tokenize(right), 0, signature, lineno, path)
    if pos != len(_tokenize(right)):
        raise ParseError("trailing tokens on right side", lineno, path)
    return Equation(lhs, rhs)


def parse_equations(text, signature, path=None):
    return [parse_equation(line, signature, i, path) for i, line in _lines(text)]


def format_element(value):
    """Canonical printing: sorted braced sets for opens, plain fractions for
    chain elements."""
    if isinstance(value, frozenset):
        return "{" + " ".join(str(x) for x in sorted(value)) + "}"
    return str(value)


def format_subset(s):
    return format_element(frozenset(s))


def format_map(m):
    return "\n".join(f"{x} -> {format_element(m.values[x])}" for x in m.carrier)


def format_subobject(sub):
    return "\n".join(
        f"{x} -> {format_element(sub.sections[x])}" for x in sub.parent.fibers
    )


def format_step_function(f):
    lines = []
    for b, v in zip(f.breakpoints, f.point_values):
        if v != 0:
            lines.append(f"point {b} -> {v}")
    for (a, b), v in zip(zip(f.breakpoints, f.breakpoints[1:]), f.interval_values):
        if v != 0:
            lines.append(f"interval ({a},{b}) -> {v}")
    if not lines:
        lines.append("# identically zero")
    return "\n".join(lines)
