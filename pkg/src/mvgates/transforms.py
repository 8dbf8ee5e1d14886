"""Reversibilization and conservativization of Boolean gates.

An arbitrary gate G: {0,1}^n -> {0,1}^m extends to the reversible
G^r(a, s) = (a, s XOR G(a)) on n+m lines.  A reversible but non
conservative G^r extends further to a reversible AND ones-conserving
G^rc by adding ancilla lines: l lines feeding ones where a row loses
them and h lines absorbing ones where a row gains them, with
l = -min E and h = max E over the row imbalance E(x) = ones(G^r(x)) -
ones(x).  Finally the original gate is recovered as G = proj . G^rc .
encode, with the encoder pinning the ancillae to (0...0, 1...1).

The constructions count ones, so everything here is restricted to d = 2;
the level-sum analogue for d > 2 is deliberately not provided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gates import Gate, Pattern, all_patterns, pattern_index


def _require_boolean(g: Gate) -> None:
    if g.d != 2:
        raise ValueError("this construction counts ones and needs a Boolean gate (d=2)")


def reversibilize(g: Gate) -> Gate:
    """The controlled gate (a, s) -> (a, s XOR G(a)) on n+m Boolean lines."""
    _require_boolean(g)
    table = []
    for a in all_patterns(2, g.n):
        ga = g.apply(a)
        for s in all_patterns(2, g.m):
            table.append(a + tuple(x ^ y for x, y in zip(s, ga)))
    return Gate(2, g.n + g.m, g.n + g.m, tuple(table))


@dataclass(frozen=True)
class ConservativizationPlan:
    """Ancilla counts and the ones-imbalance of every input pattern."""

    n: int
    m: int
    ell: int  # lines providing ones on rows with E < 0
    h: int  # lines absorbing ones on rows with E > 0
    imbalance: tuple[int, ...]  # E(x), indexed by input pattern

    def __post_init__(self) -> None:
        lines = self.n + self.m
        if self.ell < 0 or self.h < 0:
            raise ValueError("ancilla counts cannot be negative")
        if sum(self.imbalance) != 0:
            raise ValueError("imbalances of a permutation must sum to zero")
        if any(not -lines <= e <= lines for e in self.imbalance):
            raise ValueError(f"imbalance out of the [-{lines}, {lines}] range")

    def imbalance_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for e in self.imbalance:
            hist[e] = hist.get(e, 0) + 1
        return dict(sorted(hist.items()))


def imbalance_plan(gr: Gate, n: int, m: int) -> ConservativizationPlan:
    """Compute E, l and h for a reversible Boolean gate on n+m lines."""
    _require_boolean(gr)
    if gr.n != gr.m or gr.n != n + m:
        raise ValueError(f"expected a square gate on n+m={n + m} lines")
    if not gr.is_reversible:
        raise ValueError("conservativization needs a reversible gate")
    imbalance = tuple(sum(out) - sum(inp) for inp, out in gr.rows())
    return ConservativizationPlan(
        n=n,
        m=m,
        ell=-min(imbalance),
        h=max(imbalance),
        imbalance=imbalance,
    )


def _ones_string(count: int, length: int) -> Pattern:
    """count ones padded with zeros to the given length."""
    if count > length:
        raise ValueError("plan understates the one-providing ancilla count")
    return (1,) * count + (0,) * (length - count)


def _zeros_string(count: int, length: int) -> Pattern:
    """count zeros padded with ones to the given length."""
    if count > length:
        raise ValueError("plan understates the one-absorbing ancilla count")
    return (0,) * count + (1,) * (length - count)


def _grc_table(gr: Gate, plan: ConservativizationPlan, inverse: bool) -> Gate:
    """Shared builder for the conservative extension and its stated inverse.

    The six case rules are evaluated in their listed order, first match wins;
    an audit asserts that at most one of the five explicit rules fires per
    input (rule vi is the identity fallback).  Setting `inverse` swaps
    rule iii for its converse, which by construction inverts the whole
    gate.
    """
    _require_boolean(gr)
    nm = gr.n
    ell, h = plan.ell, plan.h
    if len(plan.imbalance) != len(gr.table):
        raise ValueError("plan does not belong to this gate")
    preimage = {out: inp for inp, out in gr.rows()}
    # The case rules pair balanced rows with balanced rows; a balanced row
    # whose image is unbalanced would make two rules emit the same output.
    # XOR-reversibilized gates are involutions with E(G^r(x)) = -E(x), so
    # they can never trip this.
    for inp, out in gr.rows():
        e_in = plan.imbalance[pattern_index(inp, 2)]
        e_out = plan.imbalance[pattern_index(out, 2)]
        if e_in == 0 and e_out != 0:
            raise ValueError(
                f"cannot extend to a permutation: row {inp} is balanced but "
                f"its image {out} has imbalance {e_out}"
            )
    zeros_ell, ones_h = (0,) * ell, (1,) * h

    table = []
    for full in all_patterns(2, nm + ell + h):
        x, y, z = full[:nm], full[nm : nm + ell], full[nm + ell :]
        e_x = plan.imbalance[pattern_index(x, 2)]
        k = preimage.get(x)
        e_k = plan.imbalance[pattern_index(k, 2)] if k is not None else None

        fired: list[tuple[int, Pattern]] = []
        # i) provide -E(x) ones from the y ancillae
        if e_x < 0 and y == zeros_ell and z == ones_h:
            fired.append((1, gr.apply(x) + _ones_string(-e_x, ell) + ones_h))
        # ii) inverse of the tuples produced by rule i
        if (
            k is not None
            and e_k is not None
            and e_k < 0
            and y == _ones_string(-e_k, ell)
            and z == ones_h
        ):
            fired.append((2, k + zeros_ell + ones_h))
        # iii) balanced rows pass straight through G^r (or its inverse)
        if not inverse:
            if e_x == 0 and y == zeros_ell and z == ones_h:
                fired.append((3, gr.apply(x) + zeros_ell + ones_h))
        else:
            if (
                k is not None
                and e_k == 0
                and y == zeros_ell
                and z == ones_h
            ):
                fired.append((3, k + zeros_ell + ones_h))
        # iv) absorb E(x) ones into the z ancillae
        if e_x > 0 and y == zeros_ell and z == ones_h:
            fired.append((4, gr.apply(x) + zeros_ell + _zeros_string(e_x, h)))
        # v) inverse of the tuples produced by rule iv
        if (
            k is not None
            and e_k is not None
            and e_k > 0
            and y == zeros_ell
            and z == _zeros_string(e_k, h)
        ):
            fired.append((5, k + zeros_ell + ones_h))

        if len(fired) > 1:
            raise ValueError(
                f"case rules {[i for i, _ in fired]} collide on input {full}; "
                "refusing to patch silently"
            )
        table.append(fired[0][1] if fired else full)  # vi) identity fallback
    gate = Gate(2, nm + ell + h, nm + ell + h, tuple(table))
    assert gate.is_reversible  # guaranteed by the balanced-row check above
    return gate


def conservativize(gr: Gate, plan: ConservativizationPlan) -> Gate:
    """Extend a reversible Boolean gate to a reversible, ones-conserving
    gate on n+m+l+h lines."""
    return _grc_table(gr, plan, inverse=False)


def inverse_conservativize(gr: Gate, plan: ConservativizationPlan) -> Gate:
    """The inverse gate obtained by substituting rule iii with its converse."""
    return _grc_table(gr, plan, inverse=True)


def realize_original(grc: Gate, plan: ConservativizationPlan, a: Pattern) -> Pattern:
    """Recover G(a) through the conservative extension: encode a as
    (a, 0_m, 0_l, 1_h), apply the gate, project the m result lines."""
    if len(a) != plan.n:
        raise ValueError(f"expected {plan.n} inputs, got {len(a)}")
    encoded = tuple(a) + (0,) * plan.m + (0,) * plan.ell + (1,) * plan.h
    out = grc.apply(encoded)
    return out[plan.n : plan.n + plan.m]
