"""Expression trees over many-valued connectives and the three normal forms.

Any truth function f: L_d^n -> L_d can be written constructively as

* a GDNF: join over the assignments c with f(c) != 0 of M(x,c) AND f(c),
* a GCNF: meet over the assignments c with f(c) != 1 of S(x,c) OR f(c),
* a Clay form: meet over c with f(c) != 1 of M(x,c) ->L f(c),

where M(x,c) is the meet of the indicator functions j_{c_i}(x_i) (value 1
exactly when x = c) and S(x,c) the join of the h_{c_i}(x_i) (value 1
exactly when x != c).  The builders expand M and S structurally so the
printed expressions stay inspectable; `verify_expr` checks a build against
its table by exhaustive evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from . import values
from .gates import Gate, all_patterns, pattern_index

Expr = Union["Var", "Const", "Unary", "Binary", "Join", "Meet"]


@dataclass(frozen=True)
class Var:
    index: int  # 0-based position in the assignment


@dataclass(frozen=True)
class Const:
    level: int


@dataclass(frozen=True)
class Unary:
    op: str
    child: Expr
    k: int | None = None  # level parameter of J/H


@dataclass(frozen=True)
class Binary:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Join:
    items: tuple[Expr, ...]  # empty join denotes 0


@dataclass(frozen=True)
class Meet:
    items: tuple[Expr, ...]  # empty meet denotes 1


@dataclass(frozen=True)
class TruthFunction:
    """A dense table for f: L_d^n -> L_d, indexed like gate rows."""

    d: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.d**self.n:
            raise ValueError(
                f"expected {self.d ** self.n} table entries, got {len(self.values)}"
            )
        if any(not 0 <= v < self.d for v in self.values):
            raise ValueError("table entry out of range")

    def __call__(self, assignment: tuple[int, ...]) -> int:
        return self.values[pattern_index(assignment, self.d)]

    @classmethod
    def from_callable(cls, d: int, n: int, fn: Callable[..., int]) -> "TruthFunction":
        return cls(d, n, tuple(fn(*p) for p in all_patterns(d, n)))


def gate_to_truth_function(g: Gate) -> TruthFunction:
    if g.m != 1:
        raise ValueError("truth functions have a single output line")
    return TruthFunction(g.d, g.n, tuple(out[0] for out in g.table))


def evaluate(expr: Expr, assignment: tuple[int, ...], d: int) -> int:
    """Bottom-up evaluation in the level domain."""
    if isinstance(expr, Var):
        if not 0 <= expr.index < len(assignment):
            raise ValueError(f"variable x{expr.index + 1} outside assignment")
        return assignment[expr.index]
    if isinstance(expr, Const):
        if not 0 <= expr.level < d:
            raise ValueError(f"constant level {expr.level} out of range for L_{d}")
        return expr.level
    if isinstance(expr, Unary):
        return values.unary_level(expr.op, evaluate(expr.child, assignment, d), d, expr.k)
    if isinstance(expr, Binary):
        return values.binary_level(
            expr.op,
            evaluate(expr.left, assignment, d),
            evaluate(expr.right, assignment, d),
            d,
        )
    if isinstance(expr, Join):
        level = 0
        for item in expr.items:
            level = max(level, evaluate(item, assignment, d))
        return level
    if isinstance(expr, Meet):
        level = d - 1
        for item in expr.items:
            level = min(level, evaluate(item, assignment, d))
        return level
    raise TypeError(f"not an expression node: {expr!r}")


def minterm(c: tuple[int, ...]) -> Expr:
    """M(x, c): the meet of j_{c_i}(x_i); value 1 iff x = c."""
    return Meet(tuple(Unary("J", Var(i), k=ci) for i, ci in enumerate(c)))


def coterm(c: tuple[int, ...]) -> Expr:
    """S(x, c): the join of h_{c_i}(x_i); value 1 iff x != c."""
    return Join(tuple(Unary("H", Var(i), k=ci) for i, ci in enumerate(c)))


def gdnf(f: TruthFunction, simplify: bool = False) -> Expr:
    """Generalized disjunctive normal form of f.

    With simplify=True the terms are split on f(c) in {0,1}: full-level
    assignments contribute the bare minterm, intermediate levels keep the
    AND with the constant.
    """
    top = f.d - 1
    terms = []
    for c in all_patterns(f.d, f.n):
        fc = f(c)
        if fc == 0:
            continue
        if simplify and fc == top:
            terms.append(minterm(c))
        else:
            terms.append(Binary("AND", minterm(c), Const(fc)))
    return Join(tuple(terms))


def gcnf(f: TruthFunction, simplify: bool = False) -> Expr:
    """Generalized conjunctive normal form of f."""
    top = f.d - 1
    factors = []
    for c in all_patterns(f.d, f.n):
        fc = f(c)
        if fc == top:
            continue
        if simplify and fc == 0:
            factors.append(coterm(c))
        else:
            factors.append(Binary("OR", coterm(c), Const(fc)))
    return Meet(tuple(factors))


def clay(f: TruthFunction) -> Expr:
    """Clay's meet-of-implications representation of f."""
    top = f.d - 1
    factors = []
    for c in all_patterns(f.d, f.n):
        fc = f(c)
        if fc == top:
            continue
        factors.append(Binary("TO_L", minterm(c), Const(fc)))
    return Meet(tuple(factors))


def verify_expr(expr: Expr, f: TruthFunction) -> bool:
    """Exhaustive equality of the expression against the table."""
    return all(evaluate(expr, p, f.d) == f(p) for p in all_patterns(f.d, f.n))


_UNARY_NAMES = {
    "ID": "id",
    "NOT": "not",
    "SIM": "sim",
    "FLAT": "flat",
    "POSS": "poss",
    "NEC": "nec",
    "J": "j",
    "H": "h",
    "TERTIUM": "tertium",
}
_BINARY_NAMES = {
    "TO_L": "imp-l",
    "TO_G": "imp-g",
    "OR": "or",
    "AND": "and",
    "OPLUS": "oplus",
    "ODOT": "odot",
    "EQV_L": "eqv-l",
    "PR1": "pr1",
    "PR2": "pr2",
}


def format_expr(expr: Expr, d: int) -> str:
    """Canonical prefix rendering; constants print as k/(d-1)."""
    if isinstance(expr, Var):
        return f"x{expr.index + 1}"
    if isinstance(expr, Const):
        return values.format_level(expr.level, d)
    if isinstance(expr, Unary):
        name = _UNARY_NAMES[expr.op]
        if expr.k is not None:
            return f"({name} {values.format_level(expr.k, d)} {format_expr(expr.child, d)})"
        return f"({name} {format_expr(expr.child, d)})"
    if isinstance(expr, Binary):
        name = _BINARY_NAMES[expr.op]
        return f"({name} {format_expr(expr.left, d)} {format_expr(expr.right, d)})"
    if isinstance(expr, Join):
        inner = " ".join(format_expr(e, d) for e in expr.items)
        return f"(join {inner})" if inner else "(join)"
    if isinstance(expr, Meet):
        inner = " ".join(format_expr(e, d) for e in expr.items)
        return f"(meet {inner})" if inner else "(meet)"
    raise TypeError(f"not an expression node: {expr!r}")
