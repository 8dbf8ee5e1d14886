#!/usr/bin/env python3
"""Survey the information-entropy dissipation of the built-in gates and
check the dissipation bounds on a sample of random Boolean gates."""

import argparse
import math
import random

from mvgates import thermo
from mvgates.gates import GATE_NAMES, Gate, named_gate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'gate':10} {'S_i/k':>8} {'S_f/k':>8} {'dE/kT':>8}  multiplicities")
    for name in GATE_NAMES:
        g = named_gate(name)
        report = thermo.entropy_report(g)
        hist = thermo.spectrum(g).histogram()
        print(
            f"{name:10} {report.input_entropy:8.4f} {report.output_entropy:8.4f} "
            f"{report.dissipation:8.4f}  {hist}"
        )

    rng = random.Random(args.seed)
    worst = 0.0
    saturating = reversible = 0
    for _ in range(args.samples):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        g = Gate(
            2, n, m,
            tuple(tuple(rng.randint(0, 1) for _ in range(m)) for _ in range(2**n)),
        )
        de = thermo.entropy_report(g).dissipation
        upper = n * math.log(2)
        assert -1e-12 <= de <= upper + 1e-12
        worst = max(worst, de / upper)
        saturating += math.isclose(de, upper)
        reversible += g.is_reversible
        assert (abs(de) < 1e-12) == g.is_reversible
        assert math.isclose(de, upper) == (len(set(g.table)) == 1)
    print(
        f"\n{args.samples} random gates: bounds hold; "
        f"{reversible} reversible (dE = 0), {saturating} constant (dE = n ln 2), "
        f"worst dissipation ratio {worst:.3f}"
    )


if __name__ == "__main__":
    main()
