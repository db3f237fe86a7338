"""Command-line surface: count, list, classify, evolve, predecessor,
verify, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.  Data goes to stdout; progress and error
messages go to stderr.  Counts are printed in full decimal.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .backend import get_backend
from .core import Kind, classify_m1, classify_m2, parse_partition
from .level import Level, read_snapshot, write_snapshot
from .method1 import evolve_m1, predecessor_m1
from .method2 import evolve_m2, predecessor_m2
from .oracle import DEFAULT_CAP, CapExceededError, count_oracle, enumerate_oracle
from .series import coefficient_csv, euler_p_coeffs
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP_EXCEEDED = 3

ENV_CAP = "PARTITION_EVOLVE_CAP"


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be at least 1")
    return value


def _add_backend_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--backend", choices=("python", "compiled"),
                     help="force a specific kernel backend")


def _add_cap_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--cap", type=_nonneg_int, default=None,
                     help=f"enumeration cap (default {DEFAULT_CAP}; "
                          f"flag wins over ${ENV_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-evolve",
        description="Generate, evolve, verify, and count integer partitions.")
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser(
        "count", help="print P(n) from a chosen source")
    count.add_argument("n", type=_nonneg_int)
    count.add_argument("--source", default="series",
                       choices=("series", "oracle", "evolve1", "evolve2"))
    count.add_argument("--table", action="store_true",
                       help="print the n,P,Q coefficient table instead "
                            "(series source only)")
    _add_cap_flag(count)
    _add_backend_flag(count)
    count.set_defaults(func=cmd_count)

    list_ = commands.add_parser(
        "list", help="print all partitions of n in canonical order")
    list_.add_argument("n", type=_nonneg_int)
    list_.add_argument("--format", default="text", choices=("text", "jsonl"))
    _add_cap_flag(list_)
    _add_backend_flag(list_)
    list_.set_defaults(func=cmd_list)

    classify = commands.add_parser(
        "classify", help="split the partitions of n into the two kinds")
    classify.add_argument("n", type=_nonneg_int)
    classify.add_argument("--method", type=int, choices=(1, 2), required=True)
    _add_cap_flag(classify)
    _add_backend_flag(classify)
    classify.set_defaults(func=cmd_classify)

    evolve = commands.add_parser(
        "evolve", help="grow the complete level from one weight to another")
    evolve.add_argument("from_n", type=_nonneg_int)
    evolve.add_argument("to_n", type=_nonneg_int)
    evolve.add_argument("--method", type=int, choices=(1, 2), required=True)
    evolve.add_argument("--snapshot-in", metavar="FILE",
                        help="JSONL snapshot holding the complete start level")
    evolve.add_argument("--snapshot-out", metavar="FILE",
                        help="write the final level as JSONL instead of text")
    evolve.add_argument("--parallel", action="store_true",
                        help="expand levels across threads (same output)")
    evolve.add_argument("--check", action="store_true",
                        help="assert the no-duplicate guarantee every level")
    _add_cap_flag(evolve)
    _add_backend_flag(evolve)
    evolve.set_defaults(func=cmd_evolve)

    predecessor = commands.add_parser(
        "predecessor", help="print the unique predecessor of a partition")
    predecessor.add_argument("partition", metavar="PARTITION",
                             help="partition text such as '3+2+1', or '0'")
    predecessor.add_argument("--method", type=int, choices=(1, 2),
                             required=True)
    predecessor.set_defaults(func=cmd_predecessor)

    verify = commands.add_parser(
        "verify", help="run the full cross-check suite up to max_n")
    verify.add_argument("max_n", type=_positive_int)
    _add_cap_flag(verify)
    _add_backend_flag(verify)
    verify.set_defaults(func=cmd_verify)

    bench = commands.add_parser(
        "bench", help="time both evolutions and the enumerator, as CSV")
    bench.add_argument("max_n", type=_nonneg_int)
    bench.add_argument("reps", type=_positive_int)
    _add_cap_flag(bench)
    _add_backend_flag(bench)
    bench.set_defaults(func=cmd_bench)

    return parser


def _resolve_cap(args: argparse.Namespace) -> int:
    if args.cap is not None:
        return args.cap
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"${ENV_CAP} is not an integer: {raw!r}") from None
    if value < 0:
        raise ValueError(f"${ENV_CAP} must be nonnegative, got {raw!r}")
    return value


def _ensure_within_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"weight {n} exceeds cap {cap}; raise it with --cap or "
            f"${ENV_CAP}")


def cmd_count(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    if args.table:
        if args.source != "series":
            raise ValueError("--table requires --source series")
        sys.stdout.write(coefficient_csv(args.n))
        return EXIT_OK
    if args.source == "series":
        value = euler_p_coeffs(args.n)[args.n]
    elif args.source == "oracle":
        value = len(enumerate_oracle(args.n, cap=cap, backend=args.backend))
    else:
        _ensure_within_cap(args.n, cap)
        if args.source == "evolve1":
            level = evolve_m1(Level.seed("method1"), args.n,
                              backend=args.backend)
        else:
            level = evolve_m2(Level.seed("method2"), args.n,
                              backend=args.backend)
        value = len(level)
    print(value)
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    level = enumerate_oracle(args.n, cap=cap, backend=args.backend)
    if args.format == "jsonl":
        write_snapshot(level, sys.stdout)
    else:
        for member in level.partitions:
            print(member)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    level = enumerate_oracle(args.n, cap=cap, backend=args.backend)
    classifier = classify_m1 if args.method == 1 else classify_m2
    groups: dict[Kind, list] = {Kind.FIRST: [], Kind.SECOND: []}
    for member in level.partitions:
        groups[classifier(member)].append(member)
    for label, kind in (("Group 1", Kind.FIRST), ("Group 2", Kind.SECOND)):
        members = groups[kind]
        print(f"{label} ({kind.value}): {len(members)} partitions")
        for member in members:
            print(f"  {member}")
    return EXIT_OK


def _progress(weight: int, counts: dict[str, int]) -> None:
    total = sum(counts.values())
    breakdown = ", ".join(f"{tag}={count}" for tag, count in counts.items())
    print(f"level {weight}: {total} partitions ({breakdown})",
          file=sys.stderr)


def cmd_evolve(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    _ensure_within_cap(args.to_n, cap)
    method_tag = "method1" if args.method == 1 else "method2"
    evolve = evolve_m1 if args.method == 1 else evolve_m2

    if args.snapshot_in is not None:
        with open(args.snapshot_in, encoding="utf-8") as stream:
            start = read_snapshot(stream, method_tag=method_tag,
                                  expected_n=args.from_n)
        expected = count_oracle(args.from_n)
        if len(start) != expected:
            raise ValueError(
                f"snapshot is incomplete for weight {args.from_n}: holds "
                f"{len(start)} of {expected} partitions")
    elif args.from_n == 0:
        start = Level.seed(method_tag)
    else:
        raise ValueError(
            f"evolving from weight {args.from_n} requires --snapshot-in "
            "with the complete level")

    final = evolve(start, args.to_n, backend=args.backend,
                   parallel=args.parallel, check=args.check,
                   progress=_progress)

    if args.snapshot_out is not None:
        with open(args.snapshot_out, "w", encoding="utf-8") as stream:
            write_snapshot(final, stream)
    else:
        for member in final.partitions:
            print(member)
    return EXIT_OK


def cmd_predecessor(args: argparse.Namespace) -> int:
    partition = parse_partition(args.partition)
    predecessor = predecessor_m1 if args.method == 1 else predecessor_m2
    print(predecessor(partition))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    report = run_suite(args.max_n, cap=cap, backend=args.backend)
    print(report.format_text())
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)
    _ensure_within_cap(args.max_n, cap)
    kernel = get_backend(args.backend)
    runners = (
        ("method1", lambda n: evolve_m1(Level.seed("method1"), n,
                                        backend=kernel)),
        ("method2", lambda n: evolve_m2(Level.seed("method2"), n,
                                        backend=kernel)),
        ("oracle", lambda n: enumerate_oracle(n, cap=cap, backend=kernel)),
    )
    print("n,method,wall_time_ns,partitions_emitted")
    for n in range(args.max_n + 1):
        for method_name, run in runners:
            for _ in range(args.reps):
                started = time.perf_counter_ns()
                level = run(n)
                elapsed = time.perf_counter_ns() - started
                print(f"{n},{method_name},{elapsed},{len(level)}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    raise SystemExit(main())
