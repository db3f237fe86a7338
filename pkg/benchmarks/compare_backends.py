#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python ones.

Each row is a fresh full run to weight n: both evolutions from the empty
seed and the brute-force enumeration, on every built backend.  CSV goes
to stdout; a median-speedup summary for the largest n goes to stderr.
"""

import argparse
import statistics
import sys
import time

from partition_evolve import (Level, available_backends, enumerate_oracle,
                              evolve_m1, evolve_m2)

ENGINES = (
    ("evolve1", lambda n, backend: evolve_m1(Level.seed("method1"), n,
                                             backend=backend)),
    ("evolve2", lambda n, backend: evolve_m2(Level.seed("method2"), n,
                                             backend=backend)),
    ("oracle", lambda n, backend: enumerate_oracle(n, cap=n,
                                                   backend=backend)),
)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[10, 20, 30, 40, 50])
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args(argv)

    backends = available_backends()
    largest = max(args.sizes)
    at_largest = {}

    print("n,engine,backend,wall_time_ns,partitions_emitted")
    for n in sorted(args.sizes):
        for engine, run in ENGINES:
            for backend in backends:
                for _ in range(args.reps):
                    started = time.perf_counter_ns()
                    level = run(n, backend)
                    elapsed = time.perf_counter_ns() - started
                    print(f"{n},{engine},{backend},{elapsed},{len(level)}")
                    if n == largest:
                        at_largest.setdefault((engine, backend),
                                              []).append(elapsed)

    if "compiled" in backends and "python" in backends:
        for engine, _ in ENGINES:
            pure = statistics.median(at_largest[(engine, "python")])
            fast = statistics.median(at_largest[(engine, "compiled")])
            print(f"{engine} at n={largest}: python {pure / 1e6:.1f} ms, "
                  f"compiled {fast / 1e6:.1f} ms, {pure / fast:.1f}x",
                  file=sys.stderr)


if __name__ == "__main__":
    main()
