"""Command-line front door.

Subcommands: build, params, logicals, decode, simulate, soundness,
measure-constants. Exit codes: 0 ok, 1 usage or configuration error,
2 invalid syndrome, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from . import csscode, cube, decoder, harness, quotient
from .csscode import CodeInstance
from .cube import Chain
from .errors import HemicubeError, InvalidSyndrome, TooLarge
from .quotient import ClassicalCode, QuotientComplex


def _add_code_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--n", type=int, help="cube dimension")
    sp.add_argument("--p", type=int, help="qubit face dimension")
    sp.add_argument(
        "--code",
        default="rep",
        help="'rep', 'rep:N', or a descriptor file (line 1 'n k p', then generators)",
    )
    sp.add_argument(
        "--gens", help="comma-separated generator bit strings (overrides --code)"
    )


def _resolve_quotient(args: argparse.Namespace) -> QuotientComplex:
    if args.gens:
        if args.n is None or args.p is None:
            raise ValueError("--gens requires --n and --p")
        gens = [cube.parse_word(g) for g in args.gens.split(",")]
        for g, text in zip(gens, args.gens.split(",")):
            if len(text) != args.n:
                raise ValueError(f"generator {text!r} is not {args.n} bits")
        return QuotientComplex(ClassicalCode.from_generators(args.n, gens), args.p)
    spec = args.code
    if spec == "rep" or spec.startswith("rep:"):
        n = int(spec.split(":", 1)[1]) if ":" in spec else args.n
        if n is None or args.p is None:
            raise ValueError("repetition code needs --n (or rep:N) and --p")
        return QuotientComplex(ClassicalCode.repetition(n), args.p)
    qc = quotient.parse_descriptor(Path(spec).read_text(encoding="utf-8"))
    if args.n is not None and args.n != qc.n:
        raise ValueError(f"--n {args.n} conflicts with descriptor n={qc.n}")
    if args.p is not None and args.p != qc.p:
        raise ValueError(f"--p {args.p} conflicts with descriptor p={qc.p}")
    return qc


def _param_line(ci: CodeInstance) -> str:
    k_q = csscode.dimension(ci)
    _, _, d_min = csscode.distance_formula(ci)
    return f"N={ci.N} k={k_q} d={d_min}"


def cmd_build(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "hx").write_text(
        csscode.export_check_matrix(ci.hx_rows, ci.N), encoding="utf-8"
    )
    (out / "hz").write_text(
        csscode.export_check_matrix(ci.hz_rows, ci.N), encoding="utf-8"
    )
    (out / "qubits").write_text(csscode.export_qubit_map(ci), encoding="utf-8")
    print(_param_line(ci))
    return 0


def cmd_params(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    qc = ci.qc
    d_x, d_z, d_min = csscode.distance_formula(ci)
    print(_param_line(ci))
    print(f"d_x={d_x} d_z={d_z}")
    print(f"checks: {len(ci.xchecks)} X-type, {len(ci.zchecks)} Z-type")
    if qc.k == 1:
        print(f"guaranteed_radius={decoder.guaranteed_radius(ci)}")
    return 0


def cmd_logicals(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    basis = csscode.logical_basis(ci)
    text = csscode.export_chains(list(basis.x_logicals) + list(basis.z_logicals))
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(text, encoding="utf-8")
    print(
        f"wrote {len(basis.x_logicals)} X and {len(basis.z_logicals)} Z logicals"
        f" to {args.out}"
    )
    return 0


def _parse_chain_line(line: str, n: int, p: int) -> Chain:
    parts = [t for t in line.strip().split(",") if t]
    return cube.chain_from_literals(parts, n, p)


def cmd_decode(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    qc = ci.qc
    lines = Path(args.syndrome).read_text(encoding="utf-8").splitlines()
    lines += [""] * (2 - len(lines))
    s = decoder.Syndrome(
        _parse_chain_line(lines[0], qc.n, qc.p - 1),
        _parse_chain_line(lines[1], qc.n, qc.p + 1),
    )
    start = time.perf_counter()
    corr = decoder.decode(ci, s)
    elapsed = time.perf_counter() - start
    out_lines = [
        ",".join(cube.face_literal(f) for f in corr.e_x.sorted_faces()),
        ",".join(cube.face_literal(f) for f in corr.e_z.sorted_faces()),
        ",".join(str(ci.qubit_index[f]) for f in corr.e_x.sorted_faces()),
        ",".join(str(ci.qubit_index[f]) for f in corr.e_z.sorted_faces()),
    ]
    text = "\n".join(out_lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"decoded in {elapsed:.6f}s", file=sys.stderr)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    if args.exhaustive:
        report = harness.run_exhaustive(ci, args.weight, threads=args.threads)
    else:
        report = harness.run_trials(
            ci, args.weight, args.trials, args.seed, threads=args.threads
        )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    harness.write_csv(
        str(out / "trial_reports.csv"), harness.TRIAL_CSV_HEADER, [report.csv_row()]
    )
    print(
        f"{report.mode}: {report.successes}/{report.trials} successes,"
        f" {report.invalid_syndromes} invalid ({report.wall_time:.3f}s)"
    )
    return 0


def cmd_soundness(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    sides = [args.side] if args.side else ["X", "Z"]
    rows = []
    for side in sides:
        report = harness.soundness_scan(
            ci,
            side,
            budget=args.budget,
            exhaustive=True if args.exhaustive else None,
            seed=args.seed,
            samples=args.samples,
        )
        rows.append(report.csv_row())
        print(f"{side}: worst ratio {report.worst_ratio} over {report.scanned} errors")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    harness.write_csv(str(out / "soundness.csv"), harness.SOUNDNESS_CSV_HEADER, rows)
    return 0


def cmd_measure_constants(args: argparse.Namespace) -> int:
    ci = csscode.build(_resolve_quotient(args))
    fill_rep, cofill_rep = harness.measure_constants(
        ci, args.samples, args.seed, max_weight=args.weight or 4
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    harness.write_csv(
        str(out / "measured_constants.csv"),
        harness.CONSTANTS_CSV_HEADER,
        [fill_rep.csv_row(), cofill_rep.csv_row()],
    )
    for rep in (fill_rep, cofill_rep):
        print(
            f"{rep.side}: max ratio {rep.max_ratio} (bound {rep.bound}),"
            f" {rep.violations} violations over {rep.samples} samples"
        )
    return 1 if fill_rep.violations or cofill_rep.violations else 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hemicube")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("build", help="export parity checks and the qubit map")
    _add_code_args(sp)
    sp.add_argument("--out", default=".", help="output directory")
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("params", help="print code parameters")
    _add_code_args(sp)
    sp.set_defaults(fn=cmd_params)

    sp = sub.add_parser("logicals", help="write a logical operator basis")
    _add_code_args(sp)
    sp.add_argument("--out", default="logicals.txt")
    sp.set_defaults(fn=cmd_logicals)

    sp = sub.add_parser("decode", help="decode a syndrome file")
    _add_code_args(sp)
    sp.add_argument("--syndrome", required=True, help="two lines of face literals")
    sp.add_argument("--out", help="correction output file (default: stdout)")
    sp.set_defaults(fn=cmd_decode)

    sp = sub.add_parser("simulate", help="run decoding trials")
    _add_code_args(sp)
    sp.add_argument("--weight", type=int, default=1)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument(
        "--exhaustive", action="store_true", help="all single-side errors of --weight"
    )
    sp.add_argument("--out", default=".")
    sp.set_defaults(fn=cmd_simulate)

    sp = sub.add_parser("soundness", help="scan syndrome/error weight ratios")
    _add_code_args(sp)
    sp.add_argument("--side", choices=["X", "Z"])
    sp.add_argument("--budget", type=int, default=1 << 22)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--out", default=".")
    sp.set_defaults(fn=cmd_soundness)

    sp = sub.add_parser("measure-constants", help="measure filling size ratios")
    _add_code_args(sp)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--weight", type=int, help="max error weight drawn (default 4)")
    sp.add_argument("--out", default=".")
    sp.set_defaults(fn=cmd_measure_constants)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.fn(args)
    except InvalidSyndrome as exc:
        print(f"invalid syndrome: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (HemicubeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
