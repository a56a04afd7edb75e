"""Terms and equations over a signature, with exhaustive satisfaction checking.

Both the map algebra and the powerset algebra of a structure expose the
same type, so one checker decides equations in either and the two
verdicts can be compared. The equation language deliberately contains
only the signature symbols and variables, no lattice connectives.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .complexalg import all_subsets, rel_image
from .convolution import CapacityError, conv_op, enumerate_maps
from .lattice import check_heyting_laws


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    op: str
    args: tuple


@dataclass(frozen=True)
class Equation:
    lhs: object
    rhs: object

    def variables(self):
        return tuple(sorted(set(term_variables(self.lhs)) | set(term_variables(self.rhs))))


def term_variables(term):
    if isinstance(term, Var):
        return (term.name,)
    out = []
    for a in term.args:
        out.extend(term_variables(a))
    return tuple(out)


def format_term(term):
    """Prefix notation; nullary symbols print in application form."""
    if isinstance(term, Var):
        return term.name
    if not term.args:
        return f"({term.op})"
    return "(" + " ".join([term.op] + [format_term(a) for a in term.args]) + ")"


def format_equation(eq):
    return f"{format_term(eq.lhs)} = {format_term(eq.rhs)}"


class ConvolutionAlgebra:
    """The algebra of lattice-valued maps on a structure, symbols acting by
    convolution."""

    def __init__(self, lattice, structure, max_elements=10**6):
        self.lattice = lattice
        self.structure = structure
        self.max_elements = max_elements
        self._elements = None
        self._index = None
        self._tables = {}

    @property
    def signature(self):
        return self.structure.signature

    def apply(self, name, args):
        return conv_op(self.lattice, self.structure, name, list(args))

    def elements(self):
        if self._elements is None:
            self._elements = list(
                enumerate_maps(self.lattice, self.structure.carrier, self.max_elements)
            )
        return self._elements

    def element_key(self, el):
        return el.key()


class ComplexAlgebra:
    """The powerset algebra of a structure, symbols acting by relational image."""

    def __init__(self, structure, max_elements=10**6):
        self.structure = structure
        self.max_elements = max_elements
        self._elements = None
        self._index = None
        self._tables = {}

    @property
    def signature(self):
        return self.structure.signature

    def apply(self, name, args):
        return rel_image(self.structure, name, list(args))

    def elements(self):
        if self._elements is None:
            total = 2 ** len(self.structure.carrier)
            if total > self.max_elements:
                raise CapacityError(f"{total} subsets exceed the bound {self.max_elements}")
            self._elements = all_subsets(self.structure.carrier)
        return self._elements

    def element_key(self, el):
        return el


def eval_term(algebra, term, env):
    """Structural term evaluation with an explicit environment."""
    if isinstance(term, Var):
        if term.name not in env:
            raise ValueError(f"unbound variable {term.name}")
        return env[term.name]
    return algebra.apply(term.op, [eval_term(algebra, a, env) for a in term.args])


@dataclass
class EquationCheck:
    holds: bool
    witness: dict | None


def _element_index(algebra):
    if algebra._index is None:
        algebra._index = {algebra.element_key(e): i for i, e in enumerate(algebra.elements())}
    return algebra._index


def _op_table(algebra, name):
    """Operation table in element-index space, built once per algebra."""
    if name in algebra._tables:
        return algebra._tables[name]
    arity = algebra.signature.arity(name)
    els = algebra.elements()
    index = _element_index(algebra)
    key = algebra.element_key
    if arity == 0:
        table = index[key(algebra.apply(name, []))]
    elif arity == 1:
        table = [index[key(algebra.apply(name, [e]))] for e in els]
    elif arity == 2:
        table = [[index[key(algebra.apply(name, [e1, e2]))] for e2 in els] for e1 in els]
    else:
        raise ValueError("tables only cover arities up to 2")
    algebra._tables[name] = table
    return table


def _compile_indexed(term, positions, algebra):
    if isinstance(term, Var):
        i = positions[term.name]
        return lambda asg: asg[i]
    arity = algebra.signature.arity(term.op)
    table = _op_table(algebra, term.op)
    if arity == 0:
        return lambda asg: table
    if arity == 1:
        f0 = _compile_indexed(term.args[0], positions, algebra)
        return lambda asg: table[f0(asg)]
    f0 = _compile_indexed(term.args[0], positions, algebra)
    f1 = _compile_indexed(term.args[1], positions, algebra)
    return lambda asg: table[f0(asg)][f1(asg)]


def _term_ops(term):
    if isinstance(term, Var):
        return set()
    out = {term.op}
    for a in term.args:
        out |= _term_ops(a)
    return out


def holds_in(algebra, equation, max_assignments=10**6):
    """Exhaustively decide an equation over the algebra.

    Assignments run in lexicographic order over the canonical element
    enumeration, so a failing equation always yields the same witness.
    Syntactically identical sides agree without enumeration. Raises
    CapacityError when the assignment space exceeds ``max_assignments``.
    """
    if equation.lhs == equation.rhs:
        return EquationCheck(True, None)
    names = equation.variables()
    els = algebra.elements()
    n = len(els)
    total = n ** len(names)
    if total > max_assignments:
        raise CapacityError(f"{total} assignments exceed the bound {max_assignments}")
    ops = _term_ops(equation.lhs) | _term_ops(equation.rhs)
    tabulable = all(algebra.signature.arity(op) <= 2 for op in ops)
    if tabulable:
        # building a table costs one apply per entry, so only tabulate when
        # the scan is large enough to amortize it (existing tables are free)
        pending = sum(
            n ** algebra.signature.arity(op) for op in ops if op not in algebra._tables
        )
        tabulable = pending <= max(4 * total, 50_000)
    if tabulable:
        positions = {name: i for i, name in enumerate(names)}
        lhs = _compile_indexed(equation.lhs, positions, algebra)
        rhs = _compile_indexed(equation.rhs, positions, algebra)
        for asg in product(range(n), repeat=len(names)):
            if lhs(asg) != rhs(asg):
                witness = {name: els[asg[i]] for name, i in positions.items()}
                return EquationCheck(False, witness)
        return EquationCheck(True, None)
    for combo in product(els, repeat=len(names)):
        env = dict(zip(names, combo))
        if eval_term(algebra, equation.lhs, env) != eval_term(algebra, equation.rhs, env):
            return EquationCheck(False, env)
    return EquationCheck(True, None)


@dataclass
class EquationOutcome:
    equation: Equation
    conv_holds: bool | None
    complex_holds: bool | None
    conv_skipped: str | None = None
    complex_skipped: str | None = None

    @property
    def agree(self):
        if self.conv_holds is None or self.complex_holds is None:
            return None
        return self.conv_holds == self.complex_holds


@dataclass
class SameEquationsReport:
    outcomes: list
    ok: bool
    compared: int
    disagreements: int
    skipped: int


def same_equations_report(lattice, structure, equations, max_assignments=10**6, max_elements=10**6):
    """Decide each equation in the map algebra and the powerset algebra and
    compare the verdicts.

    A computed disagreement falsifies the package, not the input. Sides
    whose assignment space exceeds the capacity bound are recorded as
    skipped rather than evaluated. Requires a Heyting lattice with at
    least two elements.
    """
    if len(lattice.elements) < 2:
        raise ValueError("requires a lattice with at least two elements")
    law = check_heyting_laws(lattice)
    if not law.ok:
        raise ValueError(f"lattice is not Heyting: {law.failure.law} fails")
    conv = ConvolutionAlgebra(lattice, structure, max_elements)
    comp = ComplexAlgebra(structure, max_elements)
    outcomes = []
    disagreements = 0
    skipped = 0
    compared = 0
    for eq in equations:
        conv_holds = complex_holds = None
        conv_skip = complex_skip = None
        try:
            conv_holds = holds_in(conv, eq, max_assignments).holds
        except CapacityError as e:
            conv_skip = str(e)
        try:
            complex_holds = holds_in(comp, eq, max_assignments).holds
        except CapacityError as e:
            complex_skip = str(e)
        outcome = EquationOutcome(eq, conv_holds, complex_holds, conv_skip, complex_skip)
        outcomes.append(outcome)
        if outcome.agree is None:
            skipped += 1
        else:
            compared += 1
            if not outcome.agree:
                disagreements += 1
    return SameEquationsReport(outcomes, disagreements == 0, compared, disagreements, skipped)


def random_equations(signature, count, seed=0, max_depth=3, max_vars=3):
    """Seeded random equations: bounded depth, bounded variable pool,
    symbols drawn uniformly."""
    rng = random.Random(seed)
    var_names = ["v", "w", "u", "s", "t"][:max_vars]
    nullary = [name for name in signature.names if signature.arity(name) == 0]

    def gen(depth):
        if depth == 0:
            choice = rng.choice(var_names + nullary)
            if choice in nullary:
                return App(choice, ())
            return Var(choice)
        choice = rng.choice(var_names + list(signature.names))
        if choice in var_names:
            return Var(choice)
        arity = signature.arity(choice)
        return App(choice, tuple(gen(depth - 1) for _ in range(arity)))

    return [Equation(gen(max_depth), gen(max_depth)) for _ in range(count)]
