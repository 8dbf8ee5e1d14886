"""Landauer information-entropy accounting for finite gates.

All inputs are assumed equiprobable.  Entropies are reported in k-units
(natural log) with k = T = 1, so the information energy dissipation in
kT-units coincides numerically with the entropy drop:

    S_i = n ln d
    S_f = S_i - (1/d^n) * sum |M| ln |M|
    dE  = S_i - S_f

where |M| ranges over the indistinguishability degrees (eigenspace sizes)
of the gate.  The classical account covers the Boolean case d = 2; for
d > 2 the input entropy keeps the uniform distribution over all d^n
patterns, which is the convention used throughout this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gates import Gate, Pattern, index_pattern

LN2 = math.log(2.0)


@dataclass(frozen=True)
class SpectralLine:
    """One admissible output with its set of indistinguishable inputs."""

    output: Pattern
    inputs: tuple[Pattern, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.inputs)


@dataclass(frozen=True)
class SpectralDecomposition:
    d: int
    n: int
    lines: tuple[SpectralLine, ...]

    def multiplicities(self) -> dict[Pattern, int]:
        return {line.output: line.multiplicity for line in self.lines}

    def histogram(self) -> dict[int, int]:
        """multiplicity -> number of eigenvalues with that multiplicity."""
        hist: dict[int, int] = {}
        for line in self.lines:
            hist[line.multiplicity] = hist.get(line.multiplicity, 0) + 1
        return dict(sorted(hist.items()))

    def probability(self, line: SpectralLine) -> float:
        return line.multiplicity / self.d**self.n


def spectrum(g: Gate) -> SpectralDecomposition:
    """Partition the inputs into eigenspaces, one per admissible output,
    ordered by output pattern."""
    spaces: dict[Pattern, list[Pattern]] = {}
    for i, out in enumerate(g.table):
        spaces.setdefault(out, []).append(index_pattern(i, g.d, g.n))
    lines = tuple(
        SpectralLine(out, tuple(spaces[out])) for out in sorted(spaces)
    )
    return SpectralDecomposition(g.d, g.n, lines)


@dataclass(frozen=True)
class EntropyReport:
    """Entropies in k-units (nats); dissipation in kT-units."""

    input_entropy: float
    output_entropy: float
    dissipation: float


def entropy_report(g: Gate) -> EntropyReport:
    total = g.d**g.n
    s_i = g.n * math.log(g.d)
    drop = sum(
        line.multiplicity * math.log(line.multiplicity)
        for line in spectrum(g).lines
    ) / total
    return EntropyReport(s_i, s_i - drop, drop)


@dataclass(frozen=True)
class EnergyModel:
    """Energy per level; must be strictly increasing."""

    epsilon: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.epsilon) < 2:
            raise ValueError("an energy model needs at least two levels")
        if any(a >= b for a, b in zip(self.epsilon, self.epsilon[1:])):
            raise ValueError("energy levels must be strictly increasing")

    @classmethod
    def equally_spaced(cls, d: int, step: float = 1.0, base: float = 0.0) -> "EnergyModel":
        if step <= 0:
            raise ValueError("step must be positive")
        return cls(tuple(base + k * step for k in range(d)))


@dataclass(frozen=True)
class InternalEnergyReport:
    per_row: tuple[tuple[Pattern, Pattern, float], ...]
    total: float


def internal_energy(g: Gate, model: EnergyModel) -> InternalEnergyReport:
    """Per-row internal energy variation and its total over all rows."""
    if g.n != g.m:
        raise ValueError("internal energy balance needs n = m")
    if len(model.epsilon) != g.d:
        raise ValueError(f"energy model has {len(model.epsilon)} levels, gate wants {g.d}")
    rows = []
    for inp, out in g.rows():
        du = sum(model.epsilon[v] for v in out) - sum(model.epsilon[v] for v in inp)
        rows.append((inp, out, du))
    return InternalEnergyReport(tuple(rows), math.fsum(du for _, _, du in rows))
