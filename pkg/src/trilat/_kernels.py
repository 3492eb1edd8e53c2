"""Dynamic-programming kernels for walk counting.

Two interchangeable backends fill the same table ``out[n, point, p]``:

* ``numba``: an ``@njit`` int64 loop, used while every count provably fits in
  63 bits (``max_out_degree ** n_max < 2**63``);
* ``numpy``: a vectorised path over object arrays of Python ints, exact for any
  size.

Set ``TRILAT_DISABLE_NUMBA=1`` to force the numpy path everywhere.  The
backends agree entry for entry; ``tests/test_kernels.py`` checks this.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    njit = None

_INT64_LIMIT = 2**63 - 1


def numba_enabled() -> bool:
    if njit is None:
        return False
    return os.environ.get("TRILAT_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes", "on")


if njit is not None:
    @njit(cache=True)
    def _propagate_int64(nbr, tag, start, n_max, out):
        npts, kmax = nbr.shape
        out[0, start, 0] = 1
        for n in range(1, n_max + 1):
            for i in range(npts):
                for p in range(n):
                    c = out[n - 1, i, p]
                    if c == 0:
                        continue
                    for k in range(kmax):
                        j = nbr[i, k]
                        if j < 0:
                            continue
                        out[n, j, p + tag[i, k]] += c
        return out
else:  # pragma: no cover
    _propagate_int64 = None


def _propagate_numpy(nbr, tag, start, n_max, dtype=object):
    npts, kmax = nbr.shape
    out = np.zeros((n_max + 1, npts, n_max + 1), dtype=dtype)
    out[0, start, 0] = 1
    # one (src, dst) matching per step column; a step is injective so each
    # dst appears at most once per column and fancy-index += is safe
    moves = []
    for k in range(kmax):
        src = np.nonzero(nbr[:, k] >= 0)[0]
        if src.size == 0:
            continue
        dst = nbr[src, k]
        for shift in (0, 1):
            sel = tag[src, k] == shift
            if sel.any():
                moves.append((src[sel], dst[sel], shift))
    for n in range(1, n_max + 1):
        prev = out[n - 1]
        cur = out[n]
        for src, dst, shift in moves:
            if shift:
                cur[dst, 1:] += prev[src, :-1]
            else:
                cur[dst, :] += prev[src, :]
    return out


def propagate(nbr: np.ndarray, tag: np.ndarray, start: int, n_max: int, backend: str | None = None) -> np.ndarray:
    """Fill ``out[n, j, p]`` = number of n-step walks from ``start`` to ``j`` with ``p`` tag-1 steps.

    ``nbr[i, k]`` is the index reached from point ``i`` by step ``k`` (or -1),
    ``tag[i, k]`` is 1 for a tag-A step and 0 otherwise.  ``backend`` is
    ``"numba"``, ``"numpy"`` or None (automatic).
    """
    nbr = np.ascontiguousarray(nbr, dtype=np.int64)
    tag = np.ascontiguousarray(tag, dtype=np.int64)
    degree = int((nbr >= 0).sum(axis=1).max()) if nbr.size else 0
    fits = degree <= 1 or degree ** n_max <= _INT64_LIMIT
    if backend is None:
        backend = "numba" if (numba_enabled() and fits) else "numpy"
    if backend == "numba":
        if _propagate_int64 is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        if not fits:
            raise OverflowError(f"counts up to {degree}**{n_max} overflow int64; use the numpy backend")
        out = np.zeros((n_max + 1, nbr.shape[0], n_max + 1), dtype=np.int64)
        return _propagate_int64(nbr, tag, start, n_max, out)
    if backend == "numpy":
        return _propagate_numpy(nbr, tag, start, n_max)
    raise ValueError(f"unknown backend {backend!r}")
