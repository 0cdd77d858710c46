"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Usage: python benchmarks/bench_enum.py [--max-order N]

Measures, per order, the exhaustive enumeration of commutative associative
tables and the canonical-form (isomorphism-rejection) filter on top of it.
"""

import argparse
import time

from sgclass import _enum_py

try:
    from sgclass import _enum_cy
except ImportError:
    _enum_cy = None


def run(kernel, n):
    t0 = time.perf_counter()
    tables = kernel.commutative_tables(n)
    t1 = time.perf_counter()
    reps = [t for t in tables if kernel.is_canonical(t, n)]
    t2 = time.perf_counter()
    return len(tables), len(reps), t1 - t0, t2 - t1


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=5)
    args = parser.parse_args()

    print("%5s %9s %8s | %10s %10s | %10s %10s | %8s"
          % ("order", "labeled", "classes",
             "pure enum", "pure iso", "cy enum", "cy iso", "speedup"))
    for n in range(2, args.max_order + 1):
        labeled, classes, pe, pi = run(_enum_py, n)
        if _enum_cy is not None:
            cl, cc, ce, ci = run(_enum_cy, n)
            assert (cl, cc) == (labeled, classes), "kernels disagree"
            speedup = (pe + pi) / (ce + ci) if ce + ci > 0 else float("inf")
            print("%5d %9d %8d | %9.3fs %9.3fs | %9.3fs %9.3fs | %7.1fx"
                  % (n, labeled, classes, pe, pi, ce, ci, speedup))
        else:
            print("%5d %9d %8d | %9.3fs %9.3fs | %10s %10s | %8s"
                  % (n, labeled, classes, pe, pi, "n/a", "n/a", "n/a"))
    if _enum_cy is None:
        print("compiled kernel not built; install with Cython to compare")


if __name__ == "__main__":
    main()
