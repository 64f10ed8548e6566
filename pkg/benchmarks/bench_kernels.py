#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python twins.

The workload is the exhaustive flag-vector / descent-vector sweep over every
natural partial order of [n], which dominates the acceptance suite's runtime.

Usage:
    python benchmarks/bench_kernels.py [--n 6] [--repeat 3]
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from salient import _kernels  # noqa: E402
from salient.posets import all_natural_posets  # noqa: E402


def sweep(kernels, posets):
    for q in posets:
        alpha, beta = kernels.natural_flag_vectors(q.n, q.down)
        kernels.descent_vector(q.n, q.down)
        kernels.zeta_vector(beta, max(q.n - 1, 0))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6,
                        help="sweep all natural posets of [n] (default 6)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of repetitions (default 3)")
    args = parser.parse_args(argv)

    posets = all_natural_posets(args.n)
    print(f"workload: {len(posets)} natural posets of [{args.n}], "
          f"flag vectors + descent vectors + subset-sum transform")

    timings = {}
    for name, kernels in sorted(_kernels.backends().items()):
        best = min(_timed(sweep, kernels, posets) for _ in range(args.repeat))
        timings[name] = best
        rate = len(posets) / best
        print(f"  {name:>6}: {best:8.3f}s  ({rate:,.0f} posets/s)")
    if {"c", "python"} <= timings.keys():
        print(f"speedup: {timings['python'] / timings['c']:.1f}x")
    elif "c" not in timings:
        print("compiled backend not built; run "
              "`python setup.py build_ext --inplace` to compare")
    return 0


def _timed(func, *args) -> float:
    start = time.perf_counter()
    func(*args)
    return time.perf_counter() - start


if __name__ == "__main__":
    sys.exit(main())
