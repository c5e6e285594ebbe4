"""Command-line surface: generate, verify, aop, scan, bench.

Exit codes are stable across subcommands: 0 on success / verified,
1 when a verification fails, 2 on usage or document-format errors.

Documents are exact: only integer exponents are serialized, never complex
samples.  JSON schema:

    {"construction": ..., "params": {...}, "order": N, "length": L,
     "exponents": [...]}

CSV is two lines: "order,length" values, then the exponents one per field.
Identical invocations produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from .aop import aop_verdict
from .correlation import (
    EXACT_LENGTH_CAP,
    NUMERIC_PERFECTION_THRESHOLD,
    autocorrelation_fft,
    is_perfect_array,
    is_perfect_exact,
    max_offpeak_magnitude,
)
from .sequences import (
    ExponentSequence,
    blake_tirkel_array,
    blake_tirkel_sequence,
    chu,
    frank,
    milewski,
    phase_efficiency,
    validate_params,
)

CONSTRUCTIONS = ("blake-tirkel", "frank", "chu", "milewski")


class UsageError(Exception):
    """Bad parameters or malformed input document; maps to exit code 2."""


def build_sequence(
    construction: str, n: int | None, m: int | None, k: int | None
) -> tuple[ExponentSequence, dict[str, int]]:
    """Construct the named sequence, reporting which parameters it used."""

    def need(**given: int | None) -> dict[str, int]:
        missing = [name for name, value in given.items() if value is None]
        if missing:
            raise UsageError(
                f"construction '{construction}' requires -{' -'.join(missing)}"
            )
        return {name: value for name, value in given.items() if value is not None}

    if construction == "blake-tirkel":
        params = need(n=n, m=m, k=k)
        return blake_tirkel_sequence(validate_params(**params)), params
    if construction == "frank":
        params = need(n=n)
        return frank(params["n"]), params
    if construction == "chu":
        params = need(n=n)
        return chu(params["n"]), params
    if construction == "milewski":
        params = need(m=m, k=k)
        return milewski(params["m"], params["k"]), params
    raise UsageError(f"unknown construction '{construction}'")


def render_json(construction: str, params: dict[str, int], seq: ExponentSequence) -> str:
    doc = {
        "construction": construction,
        "params": params,
        "order": seq.order,
        "length": seq.length,
        "exponents": list(seq.exps),
    }
    return json.dumps(doc) + "\n"


def render_csv(seq: ExponentSequence) -> str:
    return f"{seq.order},{seq.length}\n" + ",".join(str(e) for e in seq.exps) + "\n"


def parse_document(text: str) -> tuple[str, dict[str, int], ExponentSequence]:
    """Parse a JSON or CSV sequence document (format detected from content)."""
    stripped = text.lstrip()
    if not stripped:
        raise UsageError("empty document")
    try:
        if stripped.startswith("{"):
            doc = json.loads(text)
            order = doc["order"]
            exponents = doc["exponents"]
            if doc["length"] != len(exponents):
                raise UsageError(
                    f"document length {doc['length']} does not match "
                    f"{len(exponents)} exponents"
                )
            construction = doc.get("construction", "unknown")
            params = doc.get("params", {})
        else:
            lines = [line for line in text.splitlines() if line.strip()]
            if len(lines) != 2:
                raise UsageError("CSV document must have a metadata line and an exponent line")
            order, length = (int(f) for f in lines[0].split(","))
            exponents = [int(f) for f in lines[1].split(",")]
            if length != len(exponents):
                raise UsageError(
                    f"document length {length} does not match {len(exponents)} exponents"
                )
            construction, params = "unknown", {}
        seq = ExponentSequence(int(order), tuple(int(e) for e in exponents))
    except UsageError:
        raise
    except (KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed document: {exc}") from exc
    return construction, params, seq


def _load_input(args: argparse.Namespace) -> tuple[str, dict[str, int], ExponentSequence]:
    if args.input is not None and args.construction is not None:
        raise UsageError("give either an input document or --construction, not both")
    if args.input is not None:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
        return parse_document(text)
    if args.construction is not None:
        seq, params = build_sequence(args.construction, args.n, args.m, args.k)
        return args.construction, params, seq
    raise UsageError("need an input document or --construction with parameters")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def cmd_generate(args: argparse.Namespace) -> int:
    seq, params = build_sequence(args.construction, args.n, args.m, args.k)
    if args.format == "json":
        text = render_json(args.construction, params, seq)
    else:
        text = render_csv(seq)
    _emit(text, args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    construction, _, seq = _load_input(args)
    print(f"construction: {construction}")
    print(f"length: {seq.length}")
    print(f"order: {seq.order}")
    exact_ok = fft_ok = True
    if args.mode in ("exact", "both"):
        verdict = is_perfect_exact(seq, max_length=args.max_length)
        exact_ok = verdict.perfect
        if verdict.perfect:
            print("exact: perfect")
        else:
            print(f"exact: imperfect (witness shift {verdict.witness})")
    if args.mode in ("fft", "both"):
        values = autocorrelation_fft(seq)
        worst = max_offpeak_magnitude(values)
        threshold = NUMERIC_PERFECTION_THRESHOLD * seq.length
        fft_ok = worst <= threshold
        label = "numerically perfect" if fft_ok else "numerically imperfect"
        print(f"fft: max off-peak {worst:.6e} (threshold {threshold:.6e}) {label}")
    # In 'both' mode the exact verdict is authoritative.
    ok = exact_ok if args.mode in ("exact", "both") else fft_ok
    return 0 if ok else 1


def cmd_aop(args: argparse.Namespace) -> int:
    construction, _, seq = _load_input(args)
    if args.divisor is None:
        raise UsageError("aop requires --divisor")
    report = aop_verdict(seq, args.divisor)
    print(f"construction: {construction}")
    print(f"length: {seq.length}  order: {seq.order}  divisor: {report.divisor}")
    c1, c2 = report.condition1, report.condition2
    if c1.holds:
        print("condition1 (column cross-correlations vanish): pass")
    else:
        j1, j2, shift = c1.witness
        print(f"condition1: fail (columns {j1},{j2} shift {shift})")
    if c2.holds:
        print("condition2 (summed column autocorrelations vanish): pass")
    else:
        print(f"condition2: fail (shift {c2.witness[0]})")
    print(f"aop: {'pass' if report.overall else 'fail'}")
    print(f"exact perfection: {'true' if report.sequence_perfect else 'false'}")
    return 0 if report.overall else 1


def cmd_scan(args: argparse.Namespace) -> int:
    if args.max_length > EXACT_LENGTH_CAP:
        raise UsageError(
            f"--max-length above the exact-path cap {EXACT_LENGTH_CAP}"
        )
    print("n,m,k,length,order,efficiency,perfect,aop,array_perfect,seconds,note")
    all_ok = True
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            for k in range(1, args.max_k + 1):
                params = validate_params(n, m, k)
                if params.length > args.max_length:
                    continue
                start = time.perf_counter()
                seq = blake_tirkel_sequence(params)
                report = aop_verdict(seq, 2)
                array_ok = is_perfect_array(blake_tirkel_array(params)).perfect
                elapsed = time.perf_counter() - start
                ok = report.sequence_perfect and report.overall and array_ok
                all_ok = all_ok and ok
                note = "empirical(n=1)" if params.degenerate_n else ""
                print(
                    f"{n},{m},{k},{params.length},{params.order},"
                    f"{phase_efficiency(seq)},"
                    f"{_pf(report.sequence_perfect)},{_pf(report.overall)},"
                    f"{_pf(array_ok)},{elapsed:.3f},{note}"
                )
    return 0 if all_ok else 1


def cmd_bench(args: argparse.Namespace) -> int:
    if args.order < 1:
        raise UsageError(f"--order must be >= 1, got {args.order}")
    if args.min_log2 < 0 or args.max_log2 > 24:
        raise UsageError("length exponents must lie in [0, 24]")
    print("kind,length,order,seconds,max_offpeak,numerically_perfect")
    rng = np.random.default_rng(args.seed)
    for log2_len in range(args.min_log2, args.max_log2 + 1):
        length = 2**log2_len
        exps = tuple(int(e) for e in rng.integers(0, args.order, size=length))
        _bench_row("random", ExponentSequence(args.order, exps))
        # Matched-length construction row: 4*1*2^(k+1) = 2^log2_len.
        if log2_len >= 4:
            seq = blake_tirkel_sequence(validate_params(2, 1, log2_len - 3))
            _bench_row("blake-tirkel", seq)
    return 0


def _bench_row(kind: str, seq: ExponentSequence) -> None:
    start = time.perf_counter()
    values = autocorrelation_fft(seq)
    elapsed = time.perf_counter() - start
    worst = max_offpeak_magnitude(values)
    flat = worst <= NUMERIC_PERFECTION_THRESHOLD * seq.length
    print(f"{kind},{seq.length},{seq.order},{elapsed:.4f},{worst:.6e},{_pf(flat)}")


def _pf(ok: bool) -> str:
    return "pass" if ok else "fail"


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-n", type=int, default=None, help="construction parameter n")
    sub.add_argument("-m", type=int, default=None, help="construction parameter m")
    sub.add_argument("-k", type=int, default=None, help="construction parameter k")


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", default=None, help="sequence document (JSON or CSV)")
    sub.add_argument("--construction", choices=CONSTRUCTIONS, default=None)
    _add_param_flags(sub)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfseq",
        description="Generate and verify perfect periodic autocorrelation sequences "
        "over roots of unity.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("generate", help="emit a sequence document")
    gen.add_argument("construction", choices=CONSTRUCTIONS)
    _add_param_flags(gen)
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument("--output", default=None, help="write to a file instead of stdout")
    gen.set_defaults(func=cmd_generate)

    ver = subparsers.add_parser("verify", help="check perfection of a sequence")
    _add_input_flags(ver)
    ver.add_argument("--mode", choices=("exact", "fft", "both"), default="both")
    ver.add_argument(
        "--max-length",
        type=int,
        default=EXACT_LENGTH_CAP,
        help="cap for the O(L^2) exact path",
    )
    ver.set_defaults(func=cmd_verify)

    aop = subparsers.add_parser("aop", help="check the array orthogonality property")
    _add_input_flags(aop)
    aop.add_argument("--divisor", type=int, default=None, help="fold divisor d")
    aop.set_defaults(func=cmd_aop)

    scan = subparsers.add_parser("scan", help="verify a (n, m, k) parameter grid")
    scan.add_argument("--max-n", type=int, default=4)
    scan.add_argument("--max-m", type=int, default=3)
    scan.add_argument("--max-k", type=int, default=2)
    scan.add_argument("--max-length", type=int, default=5000)
    scan.set_defaults(func=cmd_scan)

    bench = subparsers.add_parser("bench", help="time the FFT correlation path")
    bench.add_argument("--min-log2", type=int, default=10)
    bench.add_argument("--max-log2", type=int, default=16)
    bench.add_argument("--order", type=int, default=64, help="alphabet for random rows")
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # Bad parameters, non-divisors, out-of-cap requests, malformed
        # documents: all usage-class failures.
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
