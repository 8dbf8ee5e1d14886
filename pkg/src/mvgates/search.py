"""Constrained exhaustive enumeration of n-line gates over L_d.

The structural constraints cut the raw space d^(n * d^n) down to products
of small per-cell subproblems:

* weak conservativeness + reversibility make the gate permute each class
  of equal-weight patterns, strict conservativeness each class of
  rearrangement-equivalent patterns;
* the first-line condition refines the cells by the first component;
* Boolean-Fredkin behavior, 0-regularity and 1-regularity pin individual
  rows outright;
* self-reversibility restricts each cell to involutions, enforced by
  pairing (choosing x -> y forces y -> x).

Enumeration is a depth-first assignment of output rows in ascending input
order, trying images in ascending order, so gates stream out sorted by
their flattened tables.  A feasibility estimate rejects unpruned spaces
before any work happens.

`check_no_lmv` walks the full reversible/weakly-conservative/
Boolean-Fredkin space for d = 3 (6 531 840 gates) with a factored scan:
per weight class, every class permutation is summarized by a bitmask
saying which (connective, pinned line, constant, output line)
realizations it still allows, and a gate realizes a connective exactly
when the AND of its class masks keeps one of the connective's bits alive.
This is equivalent to extracting connectives from every enumerated gate
(the test suite cross-checks the two paths) at a fraction of the cost.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Iterator

from . import values
from .gates import (
    Gate,
    all_patterns,
    index_pattern,
    named_gate,
    pattern_index,
    pin_inputs,
    weight,
)

DEFAULT_CANDIDATE_CAP = 20_000_000

# Public connective names accepted by catalogs, --require and reports.
CONNECTIVE_NAMES: dict[str, tuple[str, str | None]] = {
    "id": ("unary", "ID"),
    "not": ("unary", "NOT"),
    "sim": ("unary", "SIM"),
    "flat": ("unary", "FLAT"),
    "poss": ("unary", "POSS"),
    "nec": ("unary", "NEC"),
    "tertium": ("unary", "TERTIUM"),
    "imp_l": ("binary", "TO_L"),
    "imp_g": ("binary", "TO_G"),
    "or": ("binary", "OR"),
    "and": ("binary", "AND"),
    "oplus": ("binary", "OPLUS"),
    "odot": ("binary", "ODOT"),
    "eqv_l": ("binary", "EQV_L"),
    "pr1": ("binary", "PR1"),
    "pr2": ("binary", "PR2"),
    "fanout": ("fanout", None),
}

# The named connectives a gate configuration is matched against by default.
DEFAULT_CATALOG_NAMES = (
    "fanout", "pr1", "pr2",
    "imp_l", "imp_g", "or", "and", "oplus", "odot",
    "id", "not", "sim", "flat", "poss", "nec",
)

# The six binary connectives of the no-LMV proposition.
LMV_CONNECTIVES = ("and", "or", "imp_l", "imp_g", "oplus", "odot")


class SearchInfeasible(ValueError):
    """Raised when the requested constraints leave too many candidates."""

    def __init__(self, estimate: int, cap: int):
        super().__init__(
            f"search space holds about {estimate} candidates, cap is {cap}; "
            "add constraints or raise max_candidates"
        )
        self.estimate = estimate
        self.cap = cap


@dataclass(frozen=True)
class ConstraintSet:
    """Which gate properties the enumeration must guarantee."""

    reversible: bool = False  # F-2
    self_reversible: bool = False  # F-2'
    weakly_conservative: bool = False  # F-3
    strictly_conservative: bool = False  # F-3'
    zero_regular: bool = False  # F-5
    one_regular: bool = False  # F-6
    first_line_identity: bool = False  # F-7
    boolean_fredkin: bool = False  # F-8
    required_connectives: tuple[str, ...] = ()

    def normalized(self) -> "ConstraintSet":
        """Fold the implications F-2' => F-2 and F-3' => F-3."""
        out = self
        if out.self_reversible and not out.reversible:
            out = replace(out, reversible=True)
        if out.strictly_conservative and not out.weakly_conservative:
            out = replace(out, weakly_conservative=True)
        for name in out.required_connectives:
            if name not in CONNECTIVE_NAMES:
                raise ValueError(f"unknown connective name {name!r}")
        return out


def _involutions(k: int) -> int:
    a, b = 1, 1  # I(0), I(1)
    if k == 0:
        return 1
    for i in range(2, k + 1):
        a, b = b, b + (i - 1) * a
    return b


def _fredkin_pins(d: int, n: int) -> dict[int, int]:
    """Rows pinned by Boolean-Fredkin behavior, as index -> index."""
    if n != 3:
        raise ValueError("Boolean-Fredkin behavior needs 3 lines")
    top = d - 1
    fredkin = named_gate("FREDKIN")
    pins = {}
    for bits in all_patterns(2, 3):
        src = tuple(top if b else 0 for b in bits)
        dst = tuple(top if b else 0 for b in fredkin.apply(bits))
        pins[pattern_index(src, d)] = pattern_index(dst, d)
    return pins


def _regular_pins(d: int, n: int, which: int) -> dict[int, int]:
    if n != 3:
        raise ValueError("regularity needs 3 lines")
    top = d - 1
    c = 0 if which == 0 else top
    pins = {}
    for x2 in range(d):
        for x3 in range(d):
            src = (c, x2, x3)
            dst = (c, x3, x2) if which == 0 else src
            pins[pattern_index(src, d)] = pattern_index(dst, d)
    return pins


def _cells(d: int, n: int, cons: ConstraintSet) -> list[int]:
    """Cell id per pattern index; gates must map each cell into itself."""
    keys = []
    for p in all_patterns(d, n):
        key: tuple = ()
        if cons.strictly_conservative:
            key += (tuple(sorted(p)),)
        elif cons.weakly_conservative:
            key += (weight(p),)
        if cons.first_line_identity:
            key += (p[0],)
        keys.append(key)
    ids: dict[tuple, int] = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


def _pins(d: int, n: int, cons: ConstraintSet) -> dict[int, int] | None:
    """Merge the row pins of F-5/F-6/F-8; None marks a contradiction."""
    pins: dict[int, int] = {}
    sources = []
    if cons.boolean_fredkin:
        sources.append(_fredkin_pins(d, n))
    if cons.zero_regular:
        sources.append(_regular_pins(d, n, 0))
    if cons.one_regular:
        sources.append(_regular_pins(d, n, 1))
    for src in sources:
        for k, v in src.items():
            if pins.get(k, v) != v:
                return None
            pins[k] = v
    return pins


def estimate_candidates(d: int, constraints: ConstraintSet, n: int = 3) -> int:
    """Upper bound on the number of gates the DFS will visit."""
    cons = constraints.normalized()
    if not (cons.reversible or cons.weakly_conservative):
        return d ** (n * d**n)
    pins = _pins(d, n, cons)
    if pins is None:
        return 0
    cell_of = _cells(d, n, cons)
    total = 1
    for cell in set(cell_of):
        members = [i for i, c in enumerate(cell_of) if c == cell]
        free = [i for i in members if i not in pins]
        k = len(free)
        if cons.self_reversible:
            total *= _involutions(k)
        elif cons.reversible:
            total *= math.factorial(k)
        else:
            total *= len(members) ** k
    return total


def enumerate_gates(
    d: int,
    constraints: ConstraintSet,
    n: int = 3,
    max_candidates: int = DEFAULT_CANDIDATE_CAP,
    limit: int | None = None,
) -> Iterator[Gate]:
    """Stream every (n,d)-gate satisfying the constraints, each exactly
    once, in ascending lexicographic order of the flattened table."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    cons = constraints.normalized()
    if not (cons.reversible or cons.weakly_conservative):
        raise SearchInfeasible(d ** (n * d**n), max_candidates)
    estimate = estimate_candidates(d, cons, n)
    if estimate > max_candidates:
        raise SearchInfeasible(estimate, max_candidates)

    pins = _pins(d, n, cons)
    if pins is None:
        return
    cell_of = _cells(d, n, cons)
    size = d**n
    members: dict[int, list[int]] = {}
    for i, c in enumerate(cell_of):
        members.setdefault(c, []).append(i)

    out: list[int | None] = [None] * size
    used: set[int] = set()
    for src, dst in pins.items():
        if cell_of[src] != cell_of[dst]:
            return  # pinned row leaves its cell: no gate can satisfy this
        if cons.reversible and dst in used:
            return
        out[src] = dst
        used.add(dst)
    if cons.self_reversible:
        for src, dst in list(pins.items()):
            back = out[dst]
            if back is None:
                if cons.reversible and src in used:
                    return
                out[dst] = src
                used.add(src)
            elif back != src:
                return

    required = cons.required_connectives
    catalog = catalog_for(d, DEFAULT_CATALOG_NAMES + tuple(required)) if required else None
    emitted = 0

    def build() -> Gate:
        table = tuple(index_pattern(v, d, n) for v in out)  # type: ignore[arg-type]
        return Gate(d, n, n, table)

    def candidates(i: int) -> list[int]:
        pool = members[cell_of[i]]
        if cons.reversible:
            return [v for v in pool if v not in used]
        return pool

    def dfs(i: int) -> Iterator[Gate]:
        if i == size:
            yield build()
            return
        if out[i] is not None:
            yield from dfs(i + 1)
            return
        if cons.self_reversible:
            for v in candidates(i):
                if v == i:
                    out[i] = i
                    used.add(i)
                    yield from dfs(i + 1)
                    out[i] = None
                    used.discard(i)
                elif v > i and out[v] is None and i not in used:
                    out[i], out[v] = v, i
                    used.update((i, v))
                    yield from dfs(i + 1)
                    out[i] = out[v] = None
                    used.difference_update((i, v))
        elif cons.reversible:
            for v in candidates(i):
                out[i] = v
                used.add(v)
                yield from dfs(i + 1)
                out[i] = None
                used.discard(v)
        else:
            for v in candidates(i):
                out[i] = v
                yield from dfs(i + 1)
                out[i] = None

    for gate in dfs(0):
        if required and not all(
            realizes_connective(gate, name, catalog) for name in required
        ):
            continue
        yield gate
        emitted += 1
        if limit is not None and emitted >= limit:
            return


# -- connective extraction ---------------------------------------------------


@dataclass(frozen=True)
class RealizationRow:
    """One way a gate computes a catalog connective: which lines are held
    at constants, which carry the arguments, and where the result appears."""

    connective: str
    pinned: tuple[tuple[int, int], ...]  # (line, level), ascending lines
    inputs: tuple[int, ...]  # free input lines, ascending
    outputs: tuple[int, ...]
    garbage: tuple[int, ...]


@dataclass(frozen=True)
class Catalog:
    """Connective tables to match pinned gates against."""

    d: int
    unary: dict[str, tuple[int, ...]] = field(default_factory=dict)
    binary: dict[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)
    fanout: bool = True


def catalog_for(d: int, names: tuple[str, ...] = DEFAULT_CATALOG_NAMES) -> Catalog:
    unary: dict[str, tuple[int, ...]] = {}
    binary: dict[str, tuple[tuple[int, ...], ...]] = {}
    fanout = False
    for name in names:
        kind, tag = CONNECTIVE_NAMES[name]
        if kind == "unary":
            unary[name] = values.unary_table(tag, d)
        elif kind == "binary":
            binary[name] = values.binary_table(tag, d)
        else:
            fanout = True
    return Catalog(d, unary, binary, fanout)


def _pinnings(g: Gate, pinned_count: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(pinned lines, constants) choices, ascending and deterministic."""
    for lines in itertools.combinations(range(1, g.n + 1), pinned_count):
        for consts in all_patterns(g.d, pinned_count):
            yield lines, consts


def extract_connectives(g: Gate, catalog: Catalog | None = None) -> tuple[RealizationRow, ...]:
    """Every way the gate realizes a catalog connective by pinning input
    lines to constants.  Unary connectives and FAN-OUT leave one free
    input line, binary connectives two (taken in ascending line order)."""
    if g.n != g.m:
        raise ValueError("connective extraction works on square gates")
    if catalog is None:
        catalog = catalog_for(g.d)
    if catalog.d != g.d:
        raise ValueError(f"catalog is for L_{catalog.d}, gate is over L_{g.d}")
    rows: list[RealizationRow] = []

    if g.n >= 2 and (catalog.unary or catalog.fanout):
        for lines, consts in _pinnings(g, g.n - 1):
            free = next(i for i in range(1, g.n + 1) if i not in lines)
            pinned_gate = pin_inputs(g, dict(zip(lines, consts)), range(1, g.m + 1))
            columns = [
                tuple(pinned_gate.table[v][o] for v in range(g.d))
                for o in range(g.m)
            ]
            pinned = tuple(zip(lines, consts))
            for name, table in catalog.unary.items():
                for o, column in enumerate(columns, start=1):
                    if column == table:
                        rows.append(
                            RealizationRow(
                                name, pinned, (free,), (o,),
                                tuple(i for i in range(1, g.m + 1) if i != o),
                            )
                        )
            if catalog.fanout:
                ident = tuple(range(g.d))
                for o1, o2 in itertools.combinations(range(1, g.m + 1), 2):
                    if columns[o1 - 1] == ident and columns[o2 - 1] == ident:
                        rows.append(
                            RealizationRow(
                                "fanout", pinned, (free,), (o1, o2),
                                tuple(
                                    i for i in range(1, g.m + 1) if i not in (o1, o2)
                                ),
                            )
                        )

    if g.n >= 2 and catalog.binary:
        for lines, consts in _pinnings(g, g.n - 2):
            frees = tuple(i for i in range(1, g.n + 1) if i not in lines)
            pinned_gate = pin_inputs(g, dict(zip(lines, consts)), range(1, g.m + 1))
            pinned = tuple(zip(lines, consts))
            for name, table in catalog.binary.items():
                for o in range(1, g.m + 1):
                    if all(
                        pinned_gate.table[x * g.d + y][o - 1] == table[x][y]
                        for x in range(g.d)
                        for y in range(g.d)
                    ):
                        rows.append(
                            RealizationRow(
                                name, pinned, frees, (o,),
                                tuple(i for i in range(1, g.m + 1) if i != o),
                            )
                        )

    rows.sort(key=lambda r: (r.connective, r.pinned, r.outputs))
    return tuple(rows)


def realizes_connective(g: Gate, name: str, catalog: Catalog | None = None) -> bool:
    """True if some pinning of g computes the named connective."""
    if catalog is None:
        catalog = catalog_for(g.d, DEFAULT_CATALOG_NAMES)
    kind, tag = CONNECTIVE_NAMES[name]
    if kind == "unary" and name not in catalog.unary:
        catalog = replace(catalog, unary={**catalog.unary, name: values.unary_table(tag, g.d)})
    if kind == "binary" and name not in catalog.binary:
        catalog = replace(catalog, binary={**catalog.binary, name: values.binary_table(tag, g.d)})
    only = Catalog(
        g.d,
        {name: catalog.unary[name]} if kind == "unary" else {},
        {name: catalog.binary[name]} if kind == "binary" else {},
        fanout=kind == "fanout",
    )
    return bool(extract_connectives(g, only))


# -- the factored scan over the F-2/F-3/F-8 space ------------------------------


class _ScanSpace:
    """Per-weight-class candidate maps with realization bitmasks.

    A config is one (connective, pinned line, constant, output line)
    quadruple; bit index = ((conn*3 + p)*3 + c)*3 + o for d = 3.  A class
    candidate keeps a config bit alive iff all patterns of the class that
    the config constrains are mapped compatibly.
    """

    def __init__(self, d: int, conn_names: tuple[str, ...]):
        if d != 3:
            raise ValueError("the factored scan is tuned for d = 3")
        self.d = d
        self.conn_names = conn_names
        self.patterns = [index_pattern(i, d, 3) for i in range(d**3)]
        pins = _fredkin_pins(d, 3)

        tables = {}
        for name in conn_names:
            kind, tag = CONNECTIVE_NAMES[name]
            if kind != "binary":
                raise ValueError("the scan handles binary connectives only")
            tables[name] = values.binary_table(tag, d)

        # required[(p, c)] = [(pattern index, tuple of required outputs per conn)]
        self.configs_per_conn = 3 * d * 3
        requirement: dict[tuple[int, int], list[tuple[int, tuple[int, ...]]]] = {}
        for p in range(3):
            for c in range(d):
                entries = []
                for i, pat in enumerate(self.patterns):
                    if pat[p] != c:
                        continue
                    free = tuple(pat[j] for j in range(3) if j != p)
                    entries.append(
                        (i, tuple(tables[name][free[0]][free[1]] for name in conn_names))
                    )
                requirement[(p, c)] = entries
        self.requirement = requirement

        by_weight: dict[int, list[int]] = {}
        for i, pat in enumerate(self.patterns):
            by_weight.setdefault(weight(pat), []).append(i)

        # classes[w] = list of (mask, full class map) over all permutations
        # of the free members; pinned members are fixed by F-8.
        self.class_weights = sorted(by_weight)
        self.classes: list[list[tuple[int, dict[int, int]]]] = []
        for w in self.class_weights:
            mem = by_weight[w]
            fixed = {i: pins[i] for i in mem if i in pins}
            free = [i for i in mem if i not in pins]
            pool = [i for i in mem if i not in fixed.values()]
            entries = []
            for images in itertools.permutations(pool):
                mapping = dict(fixed)
                mapping.update(zip(free, images))
                entries.append((self._mask(mem, mapping), mapping))
            self.classes.append(entries)

    def _mask(self, mem: list[int], mapping: dict[int, int]) -> int:
        mask = 0
        bit = 0
        member_set = set(mem)
        for k in range(len(self.conn_names)):
            for p in range(3):
                for c in range(self.d):
                    entries = self.requirement[(p, c)]
                    for o in range(3):
                        ok = True
                        for i, req in entries:
                            if i in member_set and self.patterns[mapping[i]][o] != req[k]:
                                ok = False
                                break
                        if ok:
                            mask |= 1 << bit
                        bit += 1
        return mask

    def conn_mask(self, k: int) -> int:
        block = (1 << self.configs_per_conn) - 1
        return block << (self.configs_per_conn * k)

    def scan(self) -> dict[int, int] | None:
        """First class assignment realizing every connective, or None."""
        conn_masks = [self.conn_mask(k) for k in range(len(self.conn_names))]
        first, *rest = conn_masks
        big = max(range(len(self.classes)), key=lambda i: len(self.classes[i]))
        outer_classes = [c for i, c in enumerate(self.classes) if i != big]
        inner = self.classes[big]
        for combo in itertools.product(*outer_classes):
            outer_mask = -1
            for mask, _ in combo:
                outer_mask &= mask
            if not all(outer_mask & cm for cm in conn_masks):
                continue
            for mask, mapping in inner:
                m = outer_mask & mask
                if not m & first:
                    continue
                if all(m & cm for cm in rest):
                    full: dict[int, int] = dict(mapping)
                    for (_, other) in combo:
                        full.update(other)
                    return full
        return None


def find_gate_realizing(
    connectives: tuple[str, ...], d: int = 3
) -> Gate | None:
    """Search the reversible, weakly conservative, Boolean-Fredkin
    (3,d)-gates for one realizing all the given binary connectives."""
    space = _ScanSpace(d, tuple(connectives))
    mapping = space.scan()
    if mapping is None:
        return None
    table = tuple(space.patterns[mapping[i]] for i in range(d**3))
    return Gate(d, 3, 3, table)


def check_no_lmv(d: int = 3) -> bool:
    """Exhaustively confirm that no reversible, weakly conservative,
    Boolean-Fredkin (3,d)-gate realizes all six binary connectives of
    the Lukasiewicz/Goedel/MV families."""
    return find_gate_realizing(LMV_CONNECTIVES, d) is None


# -- FAN-OUT impossibility ------------------------------------------------------


@dataclass(frozen=True)
class FanoutReport:
    """Outcome of the strict-conservativeness vs FAN-OUT argument."""

    n: int
    d: int
    applicable: bool  # the multiset argument needs 0 < n <= d
    impossible: bool
    # one witness per (free line, constants): a level the constants miss,
    # which FAN-OUT would have to duplicate in a rearranged output row
    witnesses: tuple[tuple[int, tuple[int, ...], int], ...]
    enumeration_checked: bool
    enumeration_agrees: bool
    note: str


def check_no_fanout(n: int, d: int) -> FanoutReport:
    """Report that no strictly conservative (n,d)-gate with n <= d can
    realize FAN-OUT; for (2,2) the claim is re-confirmed by enumerating
    all strictly conservative gates."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if n > d:
        fredkin = named_gate("FREDKIN")
        realized = realizes_connective(fredkin, "fanout")
        return FanoutReport(
            n, d, applicable=False, impossible=False, witnesses=(),
            enumeration_checked=False, enumeration_agrees=False,
            note="not applicable; counterexample: Fredkin (n=3, d=2)"
            + (" realizes FAN-OUT" if realized and (n, d) == (3, 2) else ""),
        )
    witnesses = []
    if n > 1:
        for free_line in range(1, n + 1):
            for consts in all_patterns(d, n - 1):
                missing = min(set(range(d)) - set(consts))
                witnesses.append((free_line, consts, missing))
    enumeration_checked = enumeration_agrees = False
    if (n, d) == (2, 2):
        enumeration_checked = True
        enumeration_agrees = not any(
            realizes_connective(g, "fanout")
            for g in enumerate_gates(
                2, ConstraintSet(strictly_conservative=True), n=2
            )
        )
    note = (
        "a gate with one line cannot produce two copies"
        if n == 1
        else "every constant assignment misses a level that FAN-OUT would "
        "have to duplicate in a rearranged row"
    )
    return FanoutReport(
        n, d, applicable=True, impossible=True, witnesses=tuple(witnesses),
        enumeration_checked=enumeration_checked,
        enumeration_agrees=enumeration_agrees, note=note,
    )
