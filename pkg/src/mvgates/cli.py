"""Command-line front door.

One subcommand per module: `show`, `verify`, `entropy`, `transform`,
`pin`, `search`, `synth`, `algebra`, `selftest`.  Output is line-oriented
and deterministic; `--json` emits the same fields machine-readably.  Exit
codes: 0 success, 1 domain error, 2 usage error.

Gates are addressed by name (`FREDKIN`, `F1`, ...), by family mnemonic
(`f1:d=5`, `f2:d=4,l=1`, `m:d=3`, with `l` a level integer), or by an
mvgate file via `--file`.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import IO

from . import algebra, gates, search, synthesis, thermo, transforms


def resolve_gate(spec: str) -> gates.Gate:
    """Named gate or family mnemonic -> Gate."""
    if ":" in spec:
        family, _, params = spec.partition(":")
        family_tag = {"f1": "F1_FAMILY", "f2": "F2_FAMILY", "m": "M_FAMILY"}.get(
            family.lower()
        )
        if family_tag is None:
            raise ValueError(f"unknown family {family!r}; use f1, f2 or m")
        kwargs = {}
        for item in params.split(","):
            key, _, value = item.partition("=")
            if key not in ("d", "l") or not value.lstrip("-").isdigit():
                raise ValueError(f"bad family parameter {item!r}")
            kwargs[key] = int(value)
        if "d" not in kwargs:
            raise ValueError("family mnemonics need d=<int>")
        return gates.family_gate(family_tag, kwargs["d"], kwargs.get("l"))
    return gates.named_gate(spec)


def _load_gate(args: argparse.Namespace) -> gates.Gate:
    if getattr(args, "file", None):
        return gates.parse_gate(Path(args.file).read_text())
    if getattr(args, "gate", None):
        return resolve_gate(args.gate)
    raise ValueError("specify a gate with --gate or --file")


def _emit(out: IO[str], text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _cmd_show(args: argparse.Namespace, out: IO[str]) -> int:
    _emit(out, gates.format_gate(_load_gate(args)))
    return 0


def _cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    report = _load_gate(args).report().as_dict()
    if args.json:
        _emit(out, json.dumps(report, sort_keys=True))
        return 0
    for key, value in report.items():
        shown = "n/a" if value is None else str(value).lower()
        _emit(out, f"{key}: {shown}")
    return 0


def _cmd_entropy(args: argparse.Namespace, out: IO[str]) -> int:
    g = _load_gate(args)
    report = thermo.entropy_report(g)
    hist = thermo.spectrum(g).histogram()
    scale = 1.0 / math.log(2) if args.bits else 1.0
    suffix = "bits" if args.bits else "k"
    de_key = "dE_bits" if args.bits else "dE_kT"
    if args.json:
        _emit(
            out,
            json.dumps(
                {
                    f"S_i_{suffix}": round(report.input_entropy * scale, 4),
                    f"S_f_{suffix}": round(report.output_entropy * scale, 4),
                    de_key: round(report.dissipation * scale, 4),
                    "multiplicity_histogram": {str(k): v for k, v in hist.items()},
                },
                sort_keys=True,
            ),
        )
        return 0
    _emit(out, f"S_i_{suffix}: {report.input_entropy * scale:.4f}")
    _emit(out, f"S_f_{suffix}: {report.output_entropy * scale:.4f}")
    _emit(out, f"{de_key}: {report.dissipation * scale:.4f}")
    for mult, count in hist.items():
        _emit(out, f"multiplicity {mult}: {count} eigenvalues")
    return 0


def _cmd_transform(args: argparse.Namespace, out: IO[str]) -> int:
    g = _load_gate(args)
    if args.reversibilize:
        result = transforms.reversibilize(g)
    else:
        plan = transforms.imbalance_plan(g, g.n, 0)
        _emit(out, f"l={plan.ell} h={plan.h}")
        for e, count in plan.imbalance_histogram().items():
            _emit(out, f"E={e}: {count} rows")
        result = transforms.conservativize(g, plan)
    text = gates.format_gate(result)
    if args.out:
        Path(args.out).write_text(text)
        _emit(out, f"wrote {args.out}")
    else:
        _emit(out, text)
    return 0


def _parse_pinning(spec: str) -> dict[int, int]:
    pinning = {}
    for item in spec.split(","):
        line, _, value = item.partition("=")
        if not line.strip().isdigit() or not value.strip().isdigit():
            raise ValueError(f"bad pinning {item!r}; use like 2=1,3=0")
        pinning[int(line)] = int(value)
    return pinning


def _cmd_pin(args: argparse.Namespace, out: IO[str]) -> int:
    g = _load_gate(args)
    pinning = _parse_pinning(args.set)
    outputs = [int(v) for v in args.outputs.split(",")]
    _emit(out, gates.format_gate(gates.pin_inputs(g, pinning, outputs)))
    return 0


def _cmd_search(args: argparse.Namespace, out: IO[str]) -> int:
    required = tuple(v for v in (args.require or "").split(",") if v)
    constraints = search.ConstraintSet(
        reversible=args.reversible,
        self_reversible=args.self_reversible,
        weakly_conservative=args.weak_conservative,
        strictly_conservative=args.strict_conservative,
        zero_regular=args.zero_regular,
        one_regular=args.one_regular,
        first_line_identity=args.first_line,
        boolean_fredkin=args.boolean_fredkin,
        required_connectives=required,
    )
    stream = search.enumerate_gates(
        args.d, constraints, max_candidates=args.max_candidates, limit=args.limit
    )
    count = 0
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        summary = ["gate\tconnective\tinputs\tconstants\toutputs\tgarbage"]
        for i, g in enumerate(stream):
            name = f"hit_{i:06d}"
            (directory / f"{name}.mvgate").write_text(gates.format_gate(g))
            for row in search.extract_connectives(g):
                summary.append(
                    "\t".join(
                        (
                            name,
                            row.connective,
                            ",".join(f"x{line}" for line in row.inputs),
                            ",".join(f"x{line}={v}" for line, v in row.pinned),
                            ",".join(f"y{line}" for line in row.outputs),
                            ",".join(f"y{line}" for line in row.garbage),
                        )
                    )
                )
            count += 1
        (directory / "summary.tsv").write_text("\n".join(summary) + "\n")
        _emit(out, f"hits: {count}")
        _emit(out, f"wrote {directory}/summary.tsv")
    else:
        for g in stream:
            _emit(out, gates.format_gate(g))
            count += 1
        _emit(out, f"hits: {count}")
    return 0


def _cmd_synth(args: argparse.Namespace, out: IO[str]) -> int:
    g = gates.parse_gate(Path(args.input).read_text())
    f = synthesis.gate_to_truth_function(g)
    if args.form == "gdnf":
        expr = synthesis.gdnf(f, simplify=args.simplify)
    elif args.form == "gcnf":
        expr = synthesis.gcnf(f, simplify=args.simplify)
    else:
        expr = synthesis.clay(f)
    _emit(out, synthesis.format_expr(expr, f.d))
    _emit(out, f"verified: {str(synthesis.verify_expr(expr, f)).lower()}")
    return 0


def _cmd_algebra(args: argparse.Namespace, out: IO[str]) -> int:
    if args.algebra_command != "check":
        raise ValueError("unknown algebra subcommand")
    if args.file:
        structure = algebra.parse_structure(Path(args.file).read_text())
    elif args.d:
        structure = algebra.standard_model(args.d, args.signature)
    else:
        raise ValueError("specify --d or --file")
    axiom_set = args.axioms or args.signature
    report = algebra.check_axioms(structure, axiom_set)
    if args.json:
        _emit(
            out,
            json.dumps(
                {
                    r.name: {
                        "passed": r.passed,
                        "counterexample": r.counterexample,
                    }
                    for r in report.results
                },
                sort_keys=True,
            ),
        )
    else:
        for r in report.results:
            if r.passed:
                _emit(out, f"{r.name}: pass")
            else:
                _emit(out, f"{r.name}: FAIL at {r.counterexample} ({r.detail})")
    return 0 if report.passed else 1


def _selftest_checks() -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []
    land = gates.named_gate("LANDAUER")
    checks.append(
        ("landauer dissipation 0.82 kT",
         abs(thermo.entropy_report(land).dissipation - 0.8240) < 0.005)
    )
    fredkin = gates.named_gate("FREDKIN")
    checks.append(
        ("fredkin reversible and conservative",
         fredkin.is_self_reversible and fredkin.is_strictly_conservative)
    )
    checks.append(
        ("family instances match the built-in three-valued gates",
         gates.family_gate("F1_FAMILY", 3) == gates.named_gate("F1")
         and gates.family_gate("F2_FAMILY", 3, 1) == gates.named_gate("F2")
         and gates.family_gate("M_FAMILY", 3) == gates.named_gate("F3"))
    )
    f1_rows = search.extract_connectives(gates.named_gate("F1"))
    checks.append(
        ("F1 realizes the Lukasiewicz/Goedel connectives",
         {"imp_l", "imp_g", "or", "and", "fanout"}
         <= {r.connective for r in f1_rows})
    )
    f3_rows = search.extract_connectives(gates.named_gate("F3"))
    checks.append(
        ("F3 realizes the MV connectives",
         {"oplus", "odot"} <= {r.connective for r in f3_rows})
    )
    cnot = gates.named_gate("CNOT")
    decomp = gates.control_decompose(cnot, 1)
    checks.append(
        ("CNOT decomposes into Id / NOT",
         decomp is not None
         and decomp.delta[0].table == ((0,), (1,))
         and decomp.delta[1].table == ((1,), (0,)))
    )
    and_gate = gates.make_gate(
        2, 2, 1, [((0, 0), (0,)), ((0, 1), (0,)), ((1, 0), (0,)), ((1, 1), (1,))]
    )
    gr = transforms.reversibilize(and_gate)
    plan = transforms.imbalance_plan(gr, 2, 1)
    grc = transforms.conservativize(gr, plan)
    checks.append(
        ("AND pipeline realizes AND",
         all(
             transforms.realize_original(grc, plan, a) == and_gate.apply(a)
             for a in gates.all_patterns(2, 2)
         ))
    )
    checks.append(
        ("standard models satisfy their axioms",
         all(
             algebra.check_axioms(algebra.standard_model(d, "bzw"), "bzw").passed
             and algebra.check_axioms(algebra.standard_model(d, "mv"), "mv").passed
             for d in range(2, 7)
         ))
    )
    return checks


def _cmd_selftest(args: argparse.Namespace, out: IO[str]) -> int:
    checks = _selftest_checks()
    passed = 0
    for name, ok in checks:
        _emit(out, f"{'ok' if ok else 'FAIL'} {name}")
        passed += ok
    _emit(out, f"selftest: {passed}/{len(checks)} passed")
    return 0 if passed == len(checks) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvgates",
        description="workbench for finite-valued reversible and conservative gates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gate_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--gate", help="gate name or family mnemonic (f1:d=5)")
        p.add_argument("--file", help="mvgate file to read")

    p = sub.add_parser("show", help="print a gate table in mvgate format")
    add_gate_source(p)
    p.set_defaults(func=_cmd_show)

    p = sub.add_parser("verify", help="print the gate property report")
    add_gate_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("entropy", help="information-entropy accounting")
    add_gate_source(p)
    p.add_argument("--bits", action="store_true", help="report entropies in bits")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("transform", help="reversibilize or conservativize")
    add_gate_source(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--reversibilize", action="store_true")
    group.add_argument("--conservativize", action="store_true")
    p.add_argument("--out", help="write the resulting gate to this file")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("pin", help="fix input lines and project output lines")
    add_gate_source(p)
    p.add_argument("--set", required=True, help="pinning like 2=1,3=0")
    p.add_argument("--outputs", required=True, help="output lines like 1,2")
    p.set_defaults(func=_cmd_pin)

    p = sub.add_parser("search", help="enumerate gates under constraints")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--reversible", action="store_true")
    p.add_argument("--self-reversible", action="store_true")
    p.add_argument("--weak-conservative", action="store_true")
    p.add_argument("--strict-conservative", action="store_true")
    p.add_argument("--zero-regular", action="store_true")
    p.add_argument("--one-regular", action="store_true")
    p.add_argument("--first-line", action="store_true")
    p.add_argument("--boolean-fredkin", action="store_true")
    p.add_argument("--require", help="comma-separated connective names")
    p.add_argument("--limit", type=int)
    p.add_argument("--max-candidates", type=int, default=search.DEFAULT_CANDIDATE_CAP)
    p.add_argument("--out", help="directory for hit files and summary.tsv")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("synth", help="normal forms for a single-output table")
    p.add_argument("--form", choices=("gdnf", "gcnf", "clay"), required=True)
    p.add_argument("--input", required=True, help="mvgate file with m=1")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("algebra", help="axiom checking on finite structures")
    alg_sub = p.add_subparsers(dest="algebra_command", required=True)
    pc = alg_sub.add_parser("check")
    pc.add_argument("--signature", default="bzw", choices=sorted(algebra.SIGNATURES))
    pc.add_argument("--d", type=int)
    pc.add_argument("--file", help="mvalg file to read")
    pc.add_argument("--axioms", choices=sorted(algebra.AXIOM_SETS))
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("selftest", help="run the built-in regression checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv: list[str], out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    """Entry point returning an exit code instead of raising SystemExit."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
