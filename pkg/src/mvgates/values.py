"""Exact arithmetic for truth values of the finite d-valued logics L_d.

A truth value of L_d = {0, 1/(d-1), ..., 1} is stored as an integer *level*
k in [0, d-1] over the fixed denominator d-1, never as a float.  Every
connective is computed with integer min/max/add only, so gate tables built
on top of this module compare bit-exactly.

Two calling conventions are provided:

* a `Value`-typed API (`apply_unary`, `apply_binary`, `leq`) that enforces
  matching arities, and
* plain level-domain helpers (`unary_level`, `binary_level`, `unary_table`,
  `binary_table`) used by the gate, search and synthesis machinery, where
  values are raw ints and d is passed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

UNARY_TAGS = ("ID", "NOT", "SIM", "FLAT", "POSS", "NEC", "J", "H", "TERTIUM")
BINARY_TAGS = ("TO_L", "TO_G", "OR", "AND", "OPLUS", "ODOT", "EQV_L", "PR1", "PR2")

# Tags that take a truth-value parameter k.
PARAMETRIC_TAGS = ("J", "H")


def format_level(level: int, d: int) -> str:
    """Render level/(d-1) in lowest terms, e.g. level 1 of L_3 -> "1/2"."""
    f = Fraction(level, d - 1) if level else Fraction(0)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class Value:
    """The truth value level/(d-1) of L_d."""

    level: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"logic arity must be >= 2, got d={self.d}")
        if not 0 <= self.level <= self.d - 1:
            raise ValueError(f"level {self.level} out of range for L_{self.d}")

    def as_fraction(self) -> Fraction:
        return Fraction(self.level, self.d - 1)

    def is_boolean(self) -> bool:
        return self.level in (0, self.d - 1)

    def embed(self, d: int) -> "Value":
        """Explicit embedding of an L_2 value into L_d (0 -> 0, 1 -> d-1)."""
        if self.d != 2:
            raise ValueError("embed is defined on L_2 values only")
        return Value(0 if self.level == 0 else d - 1, d)

    def __str__(self) -> str:
        return format_level(self.level, self.d)


def value_from_level(k: int, d: int) -> Value:
    return Value(k, d)


def _check_same_arity(x: Value, y: Value) -> None:
    if x.d != y.d:
        raise ValueError(f"arity mismatch: L_{x.d} vs L_{y.d}")


def unary_level(tag: str, x: int, d: int, k: int | None = None) -> int:
    """Apply a unary connective in the level domain."""
    top = d - 1
    if tag == "ID":
        return x
    if tag == "NOT":
        return top - x
    if tag == "SIM":  # impossibility / intuitionistic negation ~
        return top if x == 0 else 0
    if tag == "FLAT":  # contingency / anti-intuitionistic negation
        return 0 if x == top else top
    if tag == "POSS":
        return 0 if x == 0 else top
    if tag == "NEC":
        return top if x == top else 0
    if tag == "TERTIUM":  # Slupecki constant 1/(d-1)
        return 1
    if tag == "J":
        if k is None:
            raise ValueError("J requires a parameter k")
        return top if x == k else 0
    if tag == "H":
        if k is None:
            raise ValueError("H requires a parameter k")
        return 0 if x == k else top
    raise ValueError(f"unknown unary connective {tag!r}")


def binary_level(tag: str, x: int, y: int, d: int) -> int:
    """Apply a binary connective in the level domain."""
    top = d - 1
    if tag == "TO_L":
        return min(top, top - x + y)
    if tag == "TO_G":
        return y if y < x else top
    if tag == "OR":
        return max(x, y)
    if tag == "AND":
        return min(x, y)
    if tag == "OPLUS":
        return min(top, x + y)
    if tag == "ODOT":
        return max(0, x + y - top)
    if tag == "EQV_L":  # derived: (x ->L y) AND (y ->L x)
        return min(min(top, top - x + y), min(top, top - y + x))
    if tag == "PR1":
        return x
    if tag == "PR2":
        return y
    raise ValueError(f"unknown binary connective {tag!r}")


def unary_table(tag: str, d: int, k: int | None = None) -> tuple[int, ...]:
    """Dense table of a unary connective on L_d, indexed by level."""
    return tuple(unary_level(tag, x, d, k) for x in range(d))


def binary_table(tag: str, d: int) -> tuple[tuple[int, ...], ...]:
    """Dense table of a binary connective on L_d, indexed by (level, level)."""
    return tuple(tuple(binary_level(tag, x, y, d) for y in range(d)) for x in range(d))


@dataclass(frozen=True)
class UnaryConnective:
    """A unary connective; J and H carry their truth-value parameter."""

    tag: str
    k: Value | None = None

    def __post_init__(self) -> None:
        if self.tag not in UNARY_TAGS:
            raise ValueError(f"unknown unary connective {self.tag!r}")
        if self.tag in PARAMETRIC_TAGS and self.k is None:
            raise ValueError(f"{self.tag} requires a parameter k")
        if self.tag not in PARAMETRIC_TAGS and self.k is not None:
            raise ValueError(f"{self.tag} takes no parameter")


@dataclass(frozen=True)
class BinaryConnective:
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in BINARY_TAGS:
            raise ValueError(f"unknown binary connective {self.tag!r}")


def j_k(k: Value) -> UnaryConnective:
    return UnaryConnective("J", k)


def h_k(k: Value) -> UnaryConnective:
    return UnaryConnective("H", k)


def apply_unary(c: UnaryConnective, x: Value) -> Value:
    k = None
    if c.k is not None:
        _check_same_arity(c.k, x)
        k = c.k.level
    return Value(unary_level(c.tag, x.level, x.d, k), x.d)


def apply_binary(c: BinaryConnective, x: Value, y: Value) -> Value:
    _check_same_arity(x, y)
    return Value(binary_level(c.tag, x.level, y.level, x.d), x.d)


def leq(x: Value, y: Value) -> bool:
    """The truth order: x <= y iff x ->L y = 1."""
    _check_same_arity(x, y)
    return x.level <= y.level
