"""Compare the compiled and pure rank kernels on random matrices.

Shapes follow the hot path: jacobian matrices have C(n,2) rows and d*n
columns, so the wide shapes here mirror real certify-grid workloads.
Run from the repository root:

    python3 benchmarks/bench_rank.py
"""

import argparse
import random
import time

import numpy as np

from orthoframes import _purekernels
from orthoframes._kernels import has_compiled_backend

try:
    from orthoframes import _fastkernels
except ImportError:
    _fastkernels = None


def random_rows(rng, m, n, p):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(m)]


def best_of(reps, fn):
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - t0
        if best is None or elapsed < best:
            best = elapsed
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--prime", type=int, default=998244353)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args(argv)

    shapes = [(30, 60), (60, 120), (100, 100), (90, 180), (120, 240)]
    p = args.prime
    rng = random.Random(args.seed)

    print("prime %d, best of %d reps" % (p, args.reps))
    print("compiled backend: %s" % ("yes" if has_compiled_backend() else "no"))
    header = "%10s  %12s  %12s  %8s" % ("shape", "pure (ms)", "compiled (ms)", "speedup")
    print(header)
    print("-" * len(header))
    for m, n in shapes:
        rows = random_rows(rng, m, n, p)
        t_pure = best_of(args.reps, lambda: _purekernels.rank_mod([list(r) for r in rows], p))
        if _fastkernels is not None:
            arr = np.array(rows, dtype=np.int64)
            t_fast = best_of(args.reps, lambda: _fastkernels.rank_mod(arr.copy(), p))
            print(
                "%10s  %12.2f  %12.2f  %7.1fx"
                % ("%dx%d" % (m, n), t_pure * 1000, t_fast * 1000, t_pure / t_fast)
            )
        else:
            print("%10s  %12.2f  %12s  %8s" % ("%dx%d" % (m, n), t_pure * 1000, "-", "-"))


if __name__ == "__main__":
    main()
