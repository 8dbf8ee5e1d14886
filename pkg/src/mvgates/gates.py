"""Finite gate tables over L_d.

A gate is a total map L_d^n -> L_d^m stored as a dense table: row index is
the input pattern encoded base-d (first line most significant), the entry is
the output pattern as a tuple of integer levels.  Lines are numbered 1..n
and 1..m in the public API, matching the x1/y1 convention of truth tables.

Besides the constructors this module holds the catalog of named gates
(Landauer's gate, EXC, CNOT, Fredkin, the small reversible/conservative
examples, and the three-valued gates F1/F2/F3), the analytic gate families
that generalize F1/F2/F3 to every d, the property predicates (reversible,
self-reversible, strictly/weakly conservative, 0/1-regular, first-line
identity, Boolean-Fredkin behavior), input pinning, conditional-control
decomposition, and the mvgate text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator

Pattern = tuple[int, ...]


def pattern_index(pattern: Pattern, d: int) -> int:
    idx = 0
    for v in pattern:
        idx = idx * d + v
    return idx


def index_pattern(idx: int, d: int, n: int) -> Pattern:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, d)
    return tuple(out)


def all_patterns(d: int, n: int) -> Iterator[Pattern]:
    """All patterns of L_d^n in ascending index (lexicographic) order."""
    return (index_pattern(i, d, n) for i in range(d**n))


def weight(pattern: Pattern) -> int:
    """Sum of levels; the quantity preserved by weakly conservative gates."""
    return sum(pattern)


@dataclass(frozen=True)
class GateReport:
    """Property flags of a gate; None marks a predicate whose shape
    precondition (n = m, or n = m = 3) the gate does not meet."""

    reversible: bool
    self_reversible: bool | None
    strictly_conservative: bool | None
    weakly_conservative: bool
    zero_regular: bool | None
    one_regular: bool | None
    conditional_control_first_line: bool | None
    boolean_fredkin: bool | None

    def as_dict(self) -> dict[str, bool | None]:
        return {
            "reversible": self.reversible,
            "self_reversible": self.self_reversible,
            "strictly_conservative": self.strictly_conservative,
            "weakly_conservative": self.weakly_conservative,
            "zero_regular": self.zero_regular,
            "one_regular": self.one_regular,
            "conditional_control_first_line": self.conditional_control_first_line,
            "boolean_fredkin": self.boolean_fredkin,
        }


@dataclass(frozen=True)
class Gate:
    """A total map L_d^n -> L_d^m as a dense output table."""

    d: int
    n: int
    m: int
    table: tuple[Pattern, ...]

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"gate arity must be >= 2, got d={self.d}")
        if self.n < 1 or self.m < 1:
            raise ValueError("gates need at least one input and one output line")
        if len(self.table) != self.d**self.n:
            raise ValueError(
                f"table has {len(self.table)} rows, expected {self.d ** self.n}"
            )
        for out in self.table:
            if len(out) != self.m or any(not 0 <= v < self.d for v in out):
                raise ValueError(f"invalid output pattern {out!r}")

    def __call__(self, pattern: Pattern) -> Pattern:
        return self.apply(pattern)

    def apply(self, pattern: Pattern) -> Pattern:
        if len(pattern) != self.n:
            raise ValueError(f"expected {self.n} inputs, got {len(pattern)}")
        if any(not 0 <= v < self.d for v in pattern):
            raise ValueError(f"pattern {pattern!r} out of range for L_{self.d}")
        return self.table[pattern_index(pattern, self.d)]

    def rows(self) -> Iterator[tuple[Pattern, Pattern]]:
        """(input, output) pairs in ascending input order."""
        for i, out in enumerate(self.table):
            yield index_pattern(i, self.d, self.n), out

    # -- property predicates ------------------------------------------------

    @cached_property
    def is_reversible(self) -> bool:
        """Injectivity; always false when outputs are fewer than inputs."""
        if self.n > self.m:
            return False
        return len(set(self.table)) == len(self.table)

    @cached_property
    def is_self_reversible(self) -> bool:
        if self.n != self.m:
            raise ValueError("self-reversibility needs n = m")
        return all(
            self.table[pattern_index(out, self.d)] == index_pattern(i, self.d, self.n)
            for i, out in enumerate(self.table)
        )

    @cached_property
    def is_strictly_conservative(self) -> bool:
        """Each output row is a rearrangement of its input row."""
        if self.n != self.m:
            raise ValueError("strict conservativeness needs n = m")
        return all(sorted(inp) == sorted(out) for inp, out in self.rows())

    @cached_property
    def is_weakly_conservative(self) -> bool:
        """Each output row has the same level sum as its input row."""
        return all(weight(inp) == weight(out) for inp, out in self.rows())

    def is_regular(self, which: int) -> bool:
        """0-regular: (0,x2,x3) -> (0,x3,x2); 1-regular: (1,x2,x3) fixed."""
        if self.n != 3 or self.m != 3:
            raise ValueError("regularity is defined for (3,d)-gates only")
        if which not in (0, 1):
            raise ValueError("which must be 0 or 1")
        top = self.d - 1
        c = 0 if which == 0 else top
        for x2 in range(self.d):
            for x3 in range(self.d):
                out = self.apply((c, x2, x3))
                expect = (c, x3, x2) if which == 0 else (c, x2, x3)
                if out != expect:
                    return False
        return True

    @cached_property
    def satisfies_f7(self) -> bool:
        """First output always equals the first input."""
        if self.n != 3 or self.m != 3:
            raise ValueError("the first-line condition is defined for (3,d)-gates")
        return all(inp[0] == out[0] for inp, out in self.rows())

    @cached_property
    def boolean_fredkin(self) -> bool:
        """On triples over {0, d-1} the gate behaves as the Fredkin gate."""
        if self.n != 3 or self.m != 3:
            raise ValueError("Boolean-Fredkin behavior is defined for (3,d)-gates")
        top = self.d - 1
        fredkin = named_gate("FREDKIN")
        for bits in all_patterns(2, 3):
            inp = tuple(top if b else 0 for b in bits)
            expect = tuple(top if b else 0 for b in fredkin.apply(bits))
            if self.apply(inp) != expect:
                return False
        return True

    def report(self) -> GateReport:
        def guarded(f: Callable[[], bool]) -> bool | None:
            try:
                return f()
            except ValueError:
                return None

        return GateReport(
            reversible=self.is_reversible,
            self_reversible=guarded(lambda: self.is_self_reversible),
            strictly_conservative=guarded(lambda: self.is_strictly_conservative),
            weakly_conservative=self.is_weakly_conservative,
            zero_regular=guarded(lambda: self.is_regular(0)),
            one_regular=guarded(lambda: self.is_regular(1)),
            conditional_control_first_line=guarded(lambda: self.satisfies_f7),
            boolean_fredkin=guarded(lambda: self.boolean_fredkin),
        )


def make_gate(d: int, n: int, m: int, rows: Iterable[tuple[Pattern, Pattern]]) -> Gate:
    """Build a gate from (input, output) rows; the rows must cover every
    input pattern exactly once."""
    size = d**n
    table: list[Pattern | None] = [None] * size
    for inp, out in rows:
        inp, out = tuple(inp), tuple(out)
        if len(inp) != n or any(not 0 <= v < d for v in inp):
            raise ValueError(f"invalid input pattern {inp!r}")
        idx = pattern_index(inp, d)
        if table[idx] is not None:
            raise ValueError(f"duplicate row for input {inp!r}")
        table[idx] = out
    missing = [index_pattern(i, d, n) for i, out in enumerate(table) if out is None]
    if missing:
        raise ValueError(f"table is not total; first missing input {missing[0]!r}")
    return Gate(d, n, m, tuple(table))  # type: ignore[arg-type]


def identity_gate(d: int, n: int) -> Gate:
    return Gate(d, n, n, tuple(all_patterns(d, n)))


# -- named gates --------------------------------------------------------------


def _parse_digit_rows(d: int, n: int, m: int, text: str) -> Gate:
    rows = []
    for line in text.split():
        inp, out = line.split(":")
        rows.append((tuple(int(c) for c in inp), tuple(int(c) for c in out)))
    return make_gate(d, n, m, rows)


_NAMED: dict[str, Gate] = {}


def _register(name: str, gate: Gate) -> Gate:
    _NAMED[name] = gate
    return gate


LANDAUER = _register(
    "LANDAUER",
    _parse_digit_rows(
        2, 3, 3,
        """
        000:000 001:110 010:000 011:110
        100:000 101:110 110:001 111:111
        """,
    ),
)

# 2-in/4-out reversible example (no information loss despite n != m).
REV24 = _register(
    "REV24",
    _parse_digit_rows(2, 2, 4, "00:0000 01:0110 10:0111 11:1001"),
)

# Reversible but non conservative: the transition 00 -> 11 creates two ones.
REV22 = _register("REV22", _parse_digit_rows(2, 2, 2, "00:11 01:10 10:01 11:00"))

# Strictly conservative but non reversible: 01 and 10 share the output 10.
CONS22 = _register("CONS22", _parse_digit_rows(2, 2, 2, "00:00 01:10 10:10 11:11"))

EXC = _register("EXC", _parse_digit_rows(2, 2, 2, "00:00 01:10 10:01 11:11"))

CNOT = _register("CNOT", _parse_digit_rows(2, 2, 2, "00:00 01:01 10:11 11:10"))

FREDKIN = _register(
    "FREDKIN",
    _parse_digit_rows(
        2, 3, 3,
        """
        000:000 001:010 010:001 011:011
        100:100 101:101 110:110 111:111
        """,
    ),
)

# The three-valued gates; levels 0, 1, 2 stand for 0, 1/2, 1.
F1 = _register(
    "F1",
    _parse_digit_rows(
        3, 3, 3,
        """
        000:000 001:010 002:020 010:001 011:011 012:021 020:002 021:012 022:022
        100:100 101:101 102:102 110:110 111:120 112:121 120:111 121:112 122:122
        200:200 201:201 202:202 210:210 211:211 212:212 220:220 221:221 222:222
        """,
    ),
)

F2 = _register(
    "F2",
    _parse_digit_rows(
        3, 3, 3,
        """
        000:000 001:010 002:020 010:001 011:101 012:021 020:002 021:012 022:022
        100:100 101:011 102:102 110:110 111:120 112:121 120:111 121:112 122:122
        200:200 201:201 202:202 210:210 211:211 212:212 220:220 221:221 222:222
        """,
    ),
)

F3 = _register(
    "F3",
    _parse_digit_rows(
        3, 3, 3,
        """
        000:000 001:010 002:020 010:001 011:011 012:021 020:002 021:012 022:022
        100:100 101:110 102:102 110:101 111:120 112:112 120:111 121:121 122:122
        200:200 201:201 202:202 210:210 211:211 212:212 220:220 221:221 222:222
        """,
    ),
)

GATE_NAMES = tuple(sorted(_NAMED))


def named_gate(name: str) -> Gate:
    """Look up a gate of the built-in catalog by its (case-insensitive) name."""
    try:
        return _NAMED[name.upper()]
    except KeyError:
        raise ValueError(f"unknown gate name {name!r}; known: {', '.join(GATE_NAMES)}")


# -- analytic gate families ----------------------------------------------------
#
# Each family is a list of (guard, producer) case rules over level triples,
# evaluated first-match in their listed order; the final rule is the identity
# fallback.  Guards of one family may overlap, but only where the producers
# agree; validate_family checks exactly that on every triple.

Rule = tuple[Callable[[int, int, int, int], bool], Callable[[int, int, int, int], Pattern]]

FAMILY_NAMES = ("F1_FAMILY", "F2_FAMILY", "M_FAMILY")


def _f1_rules() -> list[Rule]:
    return [
        (lambda a, b, c, D: a == 0 and b != c, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: 0 < a <= c < D and b == D, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: 0 < a <= b < D and c == D, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: c < a < D and b == D, lambda a, b, c, D: (a, a, D - a + c)),
        (
            lambda a, b, c, D: a < D and b == a and c + a >= D and c < D,
            lambda a, b, c, D: (a, D, c + a - D),
        ),
        (lambda a, b, c, D: 0 < a < b < D and c == 0, lambda a, b, c, D: (a, a, b - a)),
        (
            lambda a, b, c, D: 0 < a and b == a and c + a < D and c > 0,
            lambda a, b, c, D: (a, c + a, 0),
        ),
        (lambda a, b, c, D: True, lambda a, b, c, D: (a, b, c)),
    ]


def _f2_rules(lam: int) -> list[Rule]:
    return [
        (
            lambda a, b, c, D: a == 0 and 0 < b < D and c == lam,
            lambda a, b, c, D: (b, a, c),
        ),
        (
            lambda a, b, c, D: 0 < a < D and b == 0 and c == lam,
            lambda a, b, c, D: (b, a, c),
        ),
        (
            lambda a, b, c, D: a == 0 and b != lam and c != lam and b != c,
            lambda a, b, c, D: (a, c, b),
        ),
        (lambda a, b, c, D: a <= c < D and b == D, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: a <= b < D and c == D, lambda a, b, c, D: (a, c, b)),
        (lambda a, b, c, D: c < a < D and b == D, lambda a, b, c, D: (a, a, D - a + c)),
        (
            lambda a, b, c, D: a < D and b == a and c + a >= D and c < D,
            lambda a, b, c, D: (a, D, c + a - D),
        ),
        (lambda a, b, c, D: a < b < D and c == 0, lambda a, b, c, D: (a, a, b - a)),
        (
            lambda a, b, c, D: b == a and c + a < D and c > 0,
            lambda a, b, c, D: (a, c + a, 0),
        ),
        (lambda a, b, c, D: True, lambda a, b, c, D: (a, b, c)),
    ]


def _m_rules() -> list[Rule]:
    return [
        (lambda a, b, c, D: a == 0 and b != c, lambda a, b, c, D: (a, c, b)),
        (
            lambda a, b, c, D: a > 0 and b == D and a + c < D,
            lambda a, b, c, D: (a, a + c, D - a),
        ),
        (
            lambda a, b, c, D: 0 < a <= b < D and c == D - a,
            lambda a, b, c, D: (a, D, b - a),
        ),
        (
            lambda a, b, c, D: a < D and b < D and c == 0 and a + b > D,
            lambda a, b, c, D: (a, a + b - D, D - a),
        ),
        (
            lambda a, b, c, D: 0 < b < a < D and c == D - a,
            lambda a, b, c, D: (a, b + c, 0),
        ),
        (
            lambda a, b, c, D: 0 < a and b > 0 and c == 0 and a + b <= D,
            lambda a, b, c, D: (a, c, b),
        ),
        (
            lambda a, b, c, D: 0 < a and b == 0 and c > 0 and a + c <= D,
            lambda a, b, c, D: (a, c, b),
        ),
        (lambda a, b, c, D: True, lambda a, b, c, D: (a, b, c)),
    ]


def _family_rules(family: str, d: int, lam: int | None) -> list[Rule]:
    if family == "F1_FAMILY":
        if lam is not None:
            raise ValueError("F1_FAMILY takes no lambda parameter")
        return _f1_rules()
    if family == "M_FAMILY":
        if lam is not None:
            raise ValueError("M_FAMILY takes no lambda parameter")
        return _m_rules()
    if family == "F2_FAMILY":
        if lam is None:
            raise ValueError("F2_FAMILY requires a lambda level")
        if not 0 < lam < d - 1:
            raise ValueError(
                f"lambda level must lie strictly between 0 and {d - 1}, got {lam}"
            )
        return _f2_rules(lam)
    raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}")


def family_gate(family: str, d: int, lam: int | None = None) -> Gate:
    """Instantiate an analytic gate family on L_d (lam is a level, F2 only)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    rules = _family_rules(family, d, lam)
    validate_family(family, d, lam)
    D = d - 1
    table = []
    for a, b, c in all_patterns(d, 3):
        for guard, produce in rules:
            if guard(a, b, c, D):
                table.append(produce(a, b, c, D))
                break
    return Gate(d, 3, 3, tuple(table))


def validate_family(family: str, d: int, lam: int | None = None) -> None:
    """Check well-definedness of a family instance: on every triple all
    matching case rules must produce the same output."""
    _validate_rules(_family_rules(family, d, lam), d, f"{family} d={d}")


def _validate_rules(rules: list[Rule], d: int, label: str) -> None:
    D = d - 1
    for a, b, c in all_patterns(d, 3):
        fired = [
            (i + 1, produce(a, b, c, D))
            for i, (guard, produce) in enumerate(rules[:-1])
            if guard(a, b, c, D)
        ]
        outputs = {out for _, out in fired}
        if len(outputs) > 1:
            raise ValueError(
                f"{label} is ill-defined on {(a, b, c)}: rules "
                f"{[i for i, _ in fired]} disagree ({fired})"
            )


# -- structural operations -----------------------------------------------------


def invert(g: Gate) -> Gate:
    """Inverse of an injective gate; for n < m, patterns outside the image
    are sent to the all-zeros pattern."""
    if not g.is_reversible:
        raise ValueError("gate is not injective; cannot invert")
    zero = (0,) * g.n
    table: list[Pattern] = [zero] * (g.d**g.m)
    for inp, out in g.rows():
        table[pattern_index(out, g.d)] = inp
    return Gate(g.d, g.m, g.n, tuple(table))


def pin_inputs(
    g: Gate, pinning: dict[int, int], output_lines: Iterable[int]
) -> Gate:
    """Fix some input lines to constants and keep a selection of output
    lines, giving the induced truth function on the free inputs.

    `pinning` maps 1-based input lines to constant levels; `output_lines`
    are 1-based output lines, kept in the given order.  Free input lines
    keep their ascending line order.
    """
    outs = tuple(output_lines)
    for line, const in pinning.items():
        if not 1 <= line <= g.n:
            raise ValueError(f"no input line {line}")
        if not 0 <= const < g.d:
            raise ValueError(f"constant {const} out of range for L_{g.d}")
    for line in outs:
        if not 1 <= line <= g.m:
            raise ValueError(f"no output line {line}")
    free = tuple(i for i in range(1, g.n + 1) if i not in pinning)
    if not free:
        raise ValueError("pinning must leave at least one free input line")
    if not outs:
        raise ValueError("must select at least one output line")
    table = []
    for assignment in all_patterns(g.d, len(free)):
        full = [0] * g.n
        for line, const in pinning.items():
            full[line - 1] = const
        for line, v in zip(free, assignment):
            full[line - 1] = v
        out = g.apply(tuple(full))
        table.append(tuple(out[line - 1] for line in outs))
    return Gate(g.d, len(free), len(outs), tuple(table))


@dataclass(frozen=True)
class ControlDecomposition:
    """A gate split into k pass-through control lines and one target
    transformation per control pattern."""

    d: int
    k: int
    state_lines: int
    delta: tuple[Gate, ...]  # indexed by control pattern index

    def control_patterns(self) -> Iterator[Pattern]:
        return all_patterns(self.d, self.k)


def control_decompose(g: Gate, k: int) -> ControlDecomposition | None:
    """Split g into control/target units if its first k lines pass through
    unchanged; returns None otherwise."""
    if g.n != g.m:
        raise ValueError("conditional control needs n = m")
    if not 1 <= k < g.n:
        raise ValueError(f"k must be in [1, {g.n - 1}]")
    s = g.n - k
    deltas = []
    for a in all_patterns(g.d, k):
        table = []
        for state in all_patterns(g.d, s):
            out = g.apply(a + state)
            if out[:k] != a:
                return None
            table.append(out[k:])
        deltas.append(Gate(g.d, s, s, tuple(table)))
    return ControlDecomposition(g.d, k, s, tuple(deltas))


def automaton_to_gate(decomposition: ControlDecomposition) -> Gate:
    """Reassemble a controlled gate from its next-state family."""
    d, k, s = decomposition.d, decomposition.k, decomposition.state_lines
    if len(decomposition.delta) != d**k:
        raise ValueError("one next-state map per control pattern is required")
    for delta in decomposition.delta:
        if (delta.d, delta.n, delta.m) != (d, s, s):
            raise ValueError("next-state maps must share the phase-space shape")
    table = []
    for i, a in enumerate(all_patterns(d, k)):
        for state in all_patterns(d, s):
            table.append(a + decomposition.delta[i].apply(state))
    return Gate(d, k + s, k + s, tuple(table))


def orbit_lengths(g: Gate) -> set[int]:
    """Cycle lengths of a permutation gate (self-reversible iff all in {1,2})."""
    if g.n != g.m or not g.is_reversible:
        raise ValueError("orbits are defined for permutation gates")
    seen: set[int] = set()
    lengths: set[int] = set()
    for i in range(len(g.table)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = pattern_index(g.table[j], g.d)
            length += 1
        lengths.add(length)
    return lengths


# -- mvgate text format ----------------------------------------------------


def format_gate(g: Gate) -> str:
    """Serialize in the line-oriented mvgate format."""
    lines = ["mvgate 1", f"d={g.d} n={g.n} m={g.m}"]
    for inp, out in g.rows():
        lines.append(" ".join(map(str, inp)) + " -> " + " ".join(map(str, out)))
    return "\n".join(lines) + "\n"


def parse_gate(text: str) -> Gate:
    """Parse the mvgate format; rows may come in any order but must be total."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "mvgate 1":
        raise ValueError("missing 'mvgate 1' header")
    if len(lines) < 2:
        raise ValueError("missing dimension line")
    dims = {}
    for field in lines[1].split():
        key, _, value = field.partition("=")
        if key not in ("d", "n", "m") or not value.lstrip("-").isdigit():
            raise ValueError(f"bad dimension field {field!r}")
        dims[key] = int(value)
    if set(dims) != {"d", "n", "m"}:
        raise ValueError("dimension line must set d, n and m")
    rows = []
    for line in lines[2:]:
        left, sep, right = line.partition("->")
        if not sep:
            raise ValueError(f"malformed row {line!r}")
        try:
            inp = tuple(int(t) for t in left.split())
            out = tuple(int(t) for t in right.split())
        except ValueError:
            raise ValueError(f"malformed row {line!r}")
        if len(out) != dims["m"] or any(not 0 <= v < dims["d"] for v in out):
            raise ValueError(f"invalid output pattern in row {line!r}")
        rows.append((inp, out))
    return make_gate(dims["d"], dims["n"], dims["m"], rows)
