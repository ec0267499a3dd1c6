"""Exact linear algebra over a prime field containing a square root of -1.

All frame computations run over F_P with P prime and P = 1 (mod 4), so
that -1 is a quadratic residue and the standard form x_1^2 + ... + x_d^2
has the same maximal isotropic dimension floor(d/2) as over an
algebraically closed field.  Scalars are plain Python ints reduced into
[0, P); elimination is delegated to the kernel backends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels

DEFAULT_PRIME = 998244353

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below 3.3e24.

    Args:
        n: integer to test.

    Returns:
        True if n is prime (for n below the deterministic range) or a
        strong probable prime to all fixed bases otherwise.
    """
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a modulo the odd prime p via Tonelli-Shanks.

    Args:
        a: the residue whose root is sought.
        p: an odd prime modulus.

    Returns:
        The smaller of the two roots, or None when a is a non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # factor p - 1 as q * 2**s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class FieldContext:
    """A prime modulus P = 1 (mod 4) together with the chosen root of -1."""

    modulus: int
    sqrt_minus_one: int


def make_context(modulus: int = DEFAULT_PRIME) -> FieldContext:
    """Build the field context, validating the modulus.

    The root of -1 is computed as g**((P-1)/4) for the least quadratic
    non-residue g, then normalized to the smaller of the two roots, so
    the choice is deterministic (2 at P = 5, 5 at P = 13).
    """
    if not is_probable_prime(modulus):
        raise ValueError("modulus %d is not prime" % modulus)
    if modulus % 4 != 1:
        raise ValueError("modulus %d is not 1 mod 4" % modulus)
    g = 2
    while pow(g, (modulus - 1) // 2, modulus) != modulus - 1:
        g += 1
    nu = pow(g, (modulus - 1) // 4, modulus)
    nu = min(nu, modulus - nu)
    assert nu * nu % modulus == modulus - 1
    return FieldContext(modulus=modulus, sqrt_minus_one=nu)


def seeded_rng(seed: int, *tags: object) -> random.Random:
    """Deterministic generator derived from a seed and context tags."""
    key = ":".join([str(seed)] + [str(t) for t in tags])
    return random.Random(key)


def bilinear(ctx: FieldContext, v: Sequence[int], w: Sequence[int]) -> int:
    """Standard bilinear form sum(v_i w_i) mod P."""
    if len(v) != len(w):
        raise ValueError("vectors have different lengths %d and %d" % (len(v), len(w)))
    p = ctx.modulus
    return sum(x * y for x, y in zip(v, w)) % p


@dataclass(frozen=True)
class FrameMatrix:
    """Immutable d x n matrix over the context field, columns are frames."""

    ctx: FieldContext
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Iterable[Iterable[int]]) -> "FrameMatrix":
        p = ctx.modulus
        reduced = tuple(tuple(int(x) % p for x in row) for row in rows)
        if not reduced:
            raise ValueError("frame needs at least one row")
        widths = {len(r) for r in reduced}
        if len(widths) > 1:
            raise ValueError("ragged rows: widths %s" % sorted(widths))
        if widths == {0}:
            raise ValueError("frame needs at least one column")
        return cls(ctx, reduced)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def with_column(self, j: int, col: Sequence[int]) -> "FrameMatrix":
        p = self.ctx.modulus
        rows = [list(r) for r in self.entries]
        for i, x in enumerate(col):
            rows[i][j] = int(x) % p
        return FrameMatrix(self.ctx, tuple(tuple(r) for r in rows))


def gram(a: FrameMatrix) -> tuple[tuple[int, ...], ...]:
    """Matrix of pairwise column products, n x n over the context field."""
    g = _kernels.gram_mod([list(r) for r in a.entries], a.ctx.modulus)
    return tuple(tuple(row) for row in g)


def matrix_rank(ctx: FieldContext, rows: Sequence[Sequence[int]]) -> int:
    """Rank over F_P of an arbitrary rectangular matrix."""
    p = ctx.modulus
    reduced = [[int(x) % p for x in row] for row in rows]
    return _kernels.rank_mod(reduced, p)


def nullspace(ctx: FieldContext, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the right null space over F_P."""
    p = ctx.modulus
    reduced = [[int(x) % p for x in row] for row in rows]
    return _kernels.nullspace_mod(reduced, p)


@dataclass(frozen=True)
class FrameInvariants:
    in_variety: bool
    rank: int
    anisotropic_rank: int
    isotropic_rank: int
    anisotropic_columns: frozenset[int]


def frame_invariants(a: FrameMatrix) -> FrameInvariants:
    """Stratum invariants of a frame: membership, rank, and the (p, q) pair.

    A column is anisotropic when its self-product is nonzero; the
    isotropic rank is the dimension of the span of the remaining
    columns.  When the frame is in the variety (diagonal gram matrix),
    anisotropic rank + isotropic rank equals the rank and
    anisotropic rank + 2 * isotropic rank is at most d; both identities
    are asserted.
    """
    g = gram(a)
    n = a.n
    in_variety = all(g[j][k] == 0 for j in range(n) for k in range(n) if j != k)
    aniso = frozenset(j for j in range(n) if g[j][j] != 0)
    iso_cols = [a.column(j) for j in range(n) if j not in aniso]
    rk_iso = matrix_rank(a.ctx, list(map(list, zip(*iso_cols)))) if iso_cols else 0
    rk = matrix_rank(a.ctx, [list(r) for r in a.entries])
    rk_ani = len(aniso)
    if in_variety:
        assert rk_ani + rk_iso == rk, "rank must split as anisotropic + isotropic"
        assert rk_ani + 2 * rk_iso <= a.d, "isotropic span exceeds space budget"
    return FrameInvariants(
        in_variety=in_variety,
        rank=rk,
        anisotropic_rank=rk_ani,
        isotropic_rank=rk_iso,
        anisotropic_columns=aniso,
    )


def random_vector(ctx: FieldContext, length: int, rng: random.Random) -> list[int]:
    return [rng.randrange(ctx.modulus) for _ in range(length)]


def random_matrix(
    ctx: FieldContext, rows: int, cols: int, rng: random.Random
) -> list[list[int]]:
    return [[rng.randrange(ctx.modulus) for _ in range(cols)] for _ in range(rows)]
