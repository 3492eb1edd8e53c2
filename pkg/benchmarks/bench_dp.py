"""Time the walk-counting DP on the numba kernel and on the numpy fallback.

    python benchmarks/bench_dp.py [--repeat 5]

Three variants are timed on each triangle domain: the numba int64 kernel,
the vectorized numpy kernel on int64 arrays, and the same numpy kernel on
object arrays (the exact path used when counts could overflow int64).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from trilat import _kernels
from trilat.lattice import DomainSpec, StepSet, _adjacency

CASES = [(4, 12), (8, 16), (16, 20), (32, 24), (64, 24)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if _kernels._propagate_int64 is None:
        print("numba is not installed; only the numpy timings are shown")

    print(f"{'L':>4} {'n':>4} {'points':>7} {'numba':>10} {'numpy-i64':>10} {'numpy-obj':>10} {'speedup':>8}")
    for L, n in CASES:
        dom = DomainSpec(2, L)
        nbr, tag = _adjacency(dom, StepSet.standard(2))
        start = dom.index[dom.corner()]
        ref = _kernels._propagate_numpy(nbr, tag, start, n)
        t_np = best_of(lambda: _kernels._propagate_numpy(nbr, tag, start, n, dtype=np.int64), args.repeat)
        t_obj = best_of(lambda: _kernels._propagate_numpy(nbr, tag, start, n), max(1, args.repeat // 2))
        if _kernels._propagate_int64 is not None:
            got = _kernels.propagate(nbr, tag, start, n, backend="numba")  # also compiles
            assert (got == ref.astype(np.int64)).all()
            t_nb = best_of(lambda: _kernels.propagate(nbr, tag, start, n, backend="numba"), args.repeat)
            speed = f"{t_obj / t_nb:7.1f}x"
            nb = f"{t_nb * 1e3:8.2f}ms"
        else:
            nb, speed = "-", "-"
        print(f"{L:>4} {n:>4} {len(dom):>7} {nb:>10} {t_np * 1e3:8.2f}ms {t_obj * 1e3:8.2f}ms {speed:>8}")
    print("speedup = numpy object time / numba time")


if __name__ == "__main__":
    main()
