"""Backend selection for the mod-p linear algebra kernels.

The compiled extension is preferred when it imported cleanly and the
modulus fits its 64-bit fast path (p < 2**31); otherwise the pure
Python kernels are used.  Callers pass matrices as sequences of rows of
ints reduced into [0, p) and always get plain Python lists back.
"""

from __future__ import annotations

import numpy as _np

from . import _purekernels as _pure

try:
    from . import _fastkernels as _fast
except ImportError:  # pragma: no cover - build-dependent
    _fast = None

_FAST_MODULUS_LIMIT = 1 << 31


def has_compiled_backend() -> bool:
    return _fast is not None


def backend_name(p: int) -> str:
    return "compiled" if _fast is not None and p < _FAST_MODULUS_LIMIT else "pure"


def _copy_rows(rows) -> list[list[int]]:
    return [list(r) for r in rows]


def rank_mod(rows, p: int) -> int:
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    if _fast is not None and p < _FAST_MODULUS_LIMIT:
        return _fast.rank_mod(_np.array(rows, dtype=_np.int64), p)
    return _pure.rank_mod(_copy_rows(rows), p)


def rref_mod(rows, p: int) -> tuple[list[list[int]], list[int]]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return _copy_rows(rows), []
    if _fast is not None and p < _FAST_MODULUS_LIMIT:
        arr = _np.array(rows, dtype=_np.int64)
        pivots = _fast.rref_mod(arr, p)
        return [[int(x) for x in row] for row in arr], list(pivots)
    return _pure.rref_mod(rows, p)


def gram_mod(rows, p: int) -> list[list[int]]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[0] * n for _ in range(n)]
    if _fast is not None and p < _FAST_MODULUS_LIMIT:
        g = _fast.gram_mod(_np.array(rows, dtype=_np.int64), p)
        return [[int(x) for x in row] for row in g]
    return _pure.gram_mod(rows, p)


def nullspace_mod(rows, p: int) -> list[list[int]]:
    """Basis of the right null space of the matrix over F_p."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    reduced, pivots = rref_mod(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [0] * n
        v[free] = 1
        for t, pc in enumerate(pivots):
            v[pc] = (-reduced[t][free]) % p
        basis.append(v)
    return basis
