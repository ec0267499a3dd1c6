"""Pure-Python mod-p elimination kernels.

Reference implementations used when the compiled extension is missing
or when the modulus does not fit the compiled 64-bit fast path.  Rows
are lists of Python ints already reduced into [0, p).
"""

from __future__ import annotations


def rank_mod(rows: list[list[int]], p: int) -> int:
    """Rank of the matrix over the field with p elements (destructive)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        row_r = rows[r]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                f = f * inv % p
                row_i = rows[i]
                for j in range(c, n):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        r += 1
    return r


def rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (matrix, pivot columns)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        row_r = a[r]
        for i in range(m):
            f = a[i][c]
            if i != r and f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
    return a, pivots


def gram_mod(rows: list[list[int]], p: int) -> list[list[int]]:
    """Transpose-times-self product over F_p for a d x n matrix."""
    d = len(rows)
    n = len(rows[0]) if d else 0
    out = [[0] * n for _ in range(n)]
    for j in range(n):
        for k in range(j, n):
            s = 0
            for i in range(d):
                s += rows[i][j] * rows[i][k]
            s %= p
            out[j][k] = s
            out[k][j] = s
    return out
