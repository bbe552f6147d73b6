"""Command-line front end.

Subcommands: classify, screen, table, sieve, check-lemmas.  Every command
emits one OutputRecord; --format selects plain text (default), one JSON
record per line, or CSV.  The default format can also be set through the
MULTIPERFECT_FORMAT environment variable.

Exit codes: 0 success, 2 usage / invalid input, 3 outside the certified
precision range, 4 a mathematical property check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import divisor, harmonic, screener, sieve

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_VIOLATION = 4


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: dict
    warnings: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "warnings": self.warnings,
        }


def _emit(record: OutputRecord, fmt: str, plain_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(record.to_dict()))
    elif fmt == "csv":
        print(_to_csv(record), end="")
    else:
        for line in plain_lines:
            print(line)
        for w in record.warnings:
            print(f"warning: {w}")


def _flatten(prefix: str, value, out: dict) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, sub, out)
    else:
        out[prefix] = value


def _to_csv(record: OutputRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    rows = record.result.get("rows") or record.result.get("found")
    if isinstance(rows, list) and rows and isinstance(rows[0], dict):
        header = list(rows[0].keys())
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
    else:
        flat: dict = {}
        _flatten("", record.result, flat)
        writer.writerow(flat.keys())
        writer.writerow([_csv_cell(v) for v in flat.values()])
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, list):
        return json.dumps(v)
    return v


def _format_sig10(x: float) -> str:
    # the printed table keeps 10 significant digits, decimal notation
    text = f"{x:.10g}"
    if "e" in text or "E" in text:
        text = f"{x:.1f}"
    return text


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (record, plain_lines, exit_code)


def _run_classify(args) -> tuple[OutputRecord, list[str], int]:
    n = args.n
    f = divisor.factorize(n)
    t = divisor.tau(f)
    s = divisor.sigma(f)
    index = Fraction(s, n)
    cls = divisor.classify(n)
    result = {
        "n": n,
        "factorization": [[p, e] for p, e in f.factors],
        "tau": t,
        "sigma": s,
        "abundancy": f"{index.numerator}/{index.denominator}",
        "kind": cls.kind,
        "multiperfect_k": cls.multiperfect_k,
    }
    record = OutputRecord("classify", {"n": n}, result)
    plain = [
        f"n = {n}",
        f"factorization = {f}",
        f"tau = {t}",
        f"sigma = {s}",
        f"abundancy = {result['abundancy']}",
        f"kind = {cls.kind}",
        f"multiperfect_k = {cls.multiperfect_k}",
    ]
    return record, plain, EXIT_OK


def _run_screen(args) -> tuple[OutputRecord, list[str], int]:
    k = args.k
    if args.n is not None:
        verdict = screener.screen_number(args.n, k)
        inputs = {"n": args.n, "k": k}
    else:
        verdict = screener.screen_by_tau(args.tau, k)
        inputs = {"tau": args.tau, "k": k}
    warnings = []
    if k >= 2:
        min_tau = harmonic.min_tau_for_k(k)
    else:
        min_tau = None
        warnings.append(
            "min_tau_for_k is undefined at k=1 (H_1 = 1 is not strictly greater than 1)"
        )
    result = {
        "verdict": verdict.outcome,
        "k": k,
        "tau": verdict.tau_value,
        "harmonic_at_tau": {
            "value": verdict.harmonic_at_tau.value,
            "error_bound": verdict.harmonic_at_tau.error_bound,
        },
        "exp_bound": verdict.exp_bound,
        "min_tau_for_k": min_tau,
    }
    record = OutputRecord("screen", inputs, result, warnings)
    plain = [
        f"verdict = {verdict.outcome}",
        f"k = {k}",
        f"tau = {verdict.tau_value}",
        f"harmonic_at_tau = {verdict.harmonic_at_tau.value!r} "
        f"(+- {verdict.harmonic_at_tau.error_bound!r})",
        f"exp_bound = {verdict.exp_bound!r}",
        f"min_tau_for_k = {min_tau}",
    ]
    return record, plain, EXIT_OK


def _run_table(args) -> tuple[OutputRecord, list[str], int]:
    rows = harmonic.bound_table(args.k_max, include_k1=args.include_k1)
    warnings = []
    if args.include_k1:
        warnings.append(
            "k=1 row: the strict criterion H_t > 1 gives min tau 2; the"
            " traditional table prints 1 (H_1 = 1 only reaches 1 with equality)"
        )
    result = {
        "rows": [
            {"k": r.k, "exp_bound": r.exp_bound, "min_tau": r.min_tau} for r in rows
        ]
    }
    record = OutputRecord(
        "table", {"k_max": args.k_max, "include_k1": args.include_k1}, result, warnings
    )
    plain = [f"{'k':>3} {'e^(k-gamma)':>16} {'min tau':>14}"]
    for r in rows:
        plain.append(f"{r.k:>3} {_format_sig10(r.exp_bound):>16} {r.min_tau:>14}")
    return record, plain, EXIT_OK


def _run_sieve(args) -> tuple[OutputRecord, list[str], int]:
    if args.validate:
        report = sieve.validate_bound(args.limit, segment_size=args.segment_size)
    else:
        report = sieve.find_multiperfect(
            args.limit, min_k=args.min_k, segment_size=args.segment_size
        )
    if args.csv_dump:
        sieve.dump_census_csv(report, args.csv_dump)
    result = {
        "limit": report.limit,
        "min_k": 2 if args.validate else args.min_k,
        "validate": args.validate,
        "count": len(report.found),
        "found": [{"n": n, "k": k, "tau": t} for n, k, t in report.found],
        "violations": [{"n": n, "k": k, "tau": t} for n, k, t in report.violations],
        "elapsed": report.elapsed,
        "throughput": report.throughput,
    }
    record = OutputRecord(
        "sieve",
        {"limit": args.limit, "min_k": args.min_k, "validate": args.validate},
        result,
    )
    plain = [f"limit = {report.limit}", f"count = {len(report.found)}"]
    for n, k, t in report.found:
        plain.append(f"  n = {n}  k = {k}  tau = {t}")
    plain.append(f"violations = {len(report.violations)}")
    for n, k, t in report.violations:
        plain.append(f"  VIOLATION n = {n}  k = {k}  tau = {t}")
    plain.append(f"elapsed = {report.elapsed:.3f}s")
    plain.append(f"throughput = {report.throughput:.0f} numbers/s")
    code = EXIT_VIOLATION if (args.validate and report.violations) else EXIT_OK
    return record, plain, code


def _run_check_lemmas(args) -> tuple[OutputRecord, list[str], int]:
    lemma1_failures = []
    for k in range(1, args.k_max + 1):
        if not harmonic.check_lemma1(k):
            lemma1_failures.append(k)

    lemma2_failures = []
    for t, h in harmonic.harmonic_exact_iter(args.t_max):
        if t >= 2 and not harmonic.check_lemma2(t, h_exact=h):
            lemma2_failures.append(t)

    rng = random.Random(args.seed)
    domination_failures = []
    for trial in range(args.trials):
        length = rng.randint(1, 50)
        seq = sorted(rng.sample(range(1, 10**6 + 1), length))
        if not harmonic.check_reciprocal_domination(seq):
            domination_failures.append(seq)

    all_passed = not (lemma1_failures or lemma2_failures or domination_failures)
    result = {
        "lemma1": {
            "checked": args.k_max,
            "failures": len(lemma1_failures),
            "first_counterexample": lemma1_failures[0] if lemma1_failures else None,
        },
        "lemma2": {
            "checked": max(args.t_max - 1, 0),
            "failures": len(lemma2_failures),
            "first_counterexample": lemma2_failures[0] if lemma2_failures else None,
        },
        "reciprocal_domination": {
            "trials": args.trials,
            "failures": len(domination_failures),
            "first_counterexample": (
                domination_failures[0] if domination_failures else None
            ),
        },
        "all_passed": all_passed,
    }
    record = OutputRecord(
        "check-lemmas",
        {"k_max": args.k_max, "t_max": args.t_max, "trials": args.trials,
         "seed": args.seed},
        result,
    )
    plain = [
        f"lemma1: {args.k_max} checked, {len(lemma1_failures)} failures",
        f"lemma2: {max(args.t_max - 1, 0)} checked, {len(lemma2_failures)} failures",
        f"reciprocal_domination: {args.trials} trials, "
        f"{len(domination_failures)} failures",
        f"all_passed = {all_passed}",
    ]
    return record, plain, EXIT_OK if all_passed else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiperfect",
        description="Divisor-count screening for k-multiperfect numbers.",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default=os.environ.get("MULTIPERFECT_FORMAT", "plain"),
        help="output format (default: plain, or $MULTIPERFECT_FORMAT)",
    )
    # accepted after the subcommand too; SUPPRESS keeps a pre-subcommand
    # value from being clobbered by a subparser default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default=argparse.SUPPRESS,
        help=argparse.SUPPRESS,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="tau, sigma, abundancy and kind of n")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(handler=_run_classify)

    p = sub.add_parser("screen", parents=[common], help="can n (or a number with this tau) be k-multiperfect?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", type=_positive_int, help="screen from the divisor count alone")
    group.add_argument("--n", type=_positive_int, help="screen a concrete number")
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(handler=_run_screen)

    p = sub.add_parser("table", parents=[common], help="threshold table: k, e^(k-gamma), least tau")
    p.add_argument("--k-max", type=_positive_int, default=25)
    p.add_argument("--include-k1", action="store_true")
    p.set_defaults(handler=_run_table)

    p = sub.add_parser("sieve", parents=[common], help="census of multiperfect numbers up to a limit")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.add_argument("--min-k", type=_positive_int, default=2)
    p.add_argument("--validate", action="store_true",
                   help="check every hit against the tau threshold (exit 4 on violation)")
    p.add_argument("--segment-size", type=_positive_int,
                   default=sieve.DEFAULT_SEGMENT_SIZE)
    p.add_argument("--csv-dump", metavar="PATH", help="also write (n, k, tau) rows to a CSV file")
    p.set_defaults(handler=_run_sieve)

    p = sub.add_parser("check-lemmas", parents=[common], help="run the inequality suites")
    p.add_argument("--k-max", type=_positive_int, default=1000)
    p.add_argument("--t-max", type=_positive_int, default=10**4)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=20240601)
    p.set_defaults(handler=_run_check_lemmas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        record, plain, code = args.handler(args)
    except harmonic.UnsupportedRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except harmonic.CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(record, args.format, plain)
    return code


def entrypoint() -> None:  # console-script shim
    sys.exit(main())
