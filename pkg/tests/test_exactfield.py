"""Field context, modular square roots, frames, and invariants."""

import pytest

from orthoframes.exactfield import (
    DEFAULT_PRIME,
    FrameMatrix,
    bilinear,
    frame_invariants,
    gram,
    is_probable_prime,
    make_context,
    matrix_rank,
    nullspace,
    seeded_rng,
    sqrt_mod,
)


def test_is_probable_prime():
    small = [n for n in range(2, 200) if is_probable_prime(n)]
    sieve = [n for n in range(2, 200) if all(n % k for k in range(2, n))]
    assert small == sieve
    assert is_probable_prime(998244353)
    assert is_probable_prime(2**61 - 1)
    assert not is_probable_prime(561)  # Carmichael
    assert not is_probable_prime(998244353 * 13)
    assert not is_probable_prime(1)


def test_sqrt_mod_exhaustive_small_primes():
    for p in (5, 13, 17, 29, 101):
        for a in range(p):
            root = sqrt_mod(a, p)
            is_residue = a == 0 or pow(a, (p - 1) // 2, p) == 1
            if is_residue:
                assert root is not None and root * root % p == a, (a, p)
                assert root <= p - root or root == 0  # smaller of the pair
            else:
                assert root is None, (a, p)


def test_make_context_default():
    ctx = make_context()
    assert ctx.modulus == DEFAULT_PRIME == 998244353
    nu = ctx.sqrt_minus_one
    assert (nu * nu + 1) % ctx.modulus == 0
    assert 0 < nu < ctx.modulus - nu  # canonical smaller root


def test_make_context_small_primes():
    for p in (5, 13, 17, 29):
        ctx = make_context(p)
        assert (ctx.sqrt_minus_one**2 + 1) % p == 0


def test_make_context_rejects_bad_moduli():
    with pytest.raises(ValueError):
        make_context(7)  # 3 mod 4: -1 is not a square
    with pytest.raises(ValueError):
        make_context(11)
    with pytest.raises(ValueError):
        make_context(15)  # composite
    with pytest.raises(ValueError):
        make_context(998244351)


def test_frame_matrix_construction():
    ctx = make_context(13)
    a = FrameMatrix.from_rows(ctx, [[14, -1], [0, 5]])
    assert a.entries == ((1, 12), (0, 5))  # reduced mod 13
    assert (a.d, a.n) == (2, 2)
    assert a.column(1) == (12, 5)
    b = a.with_column(0, [3, 3])
    assert b.entries == ((3, 12), (3, 5))
    assert a.entries == ((1, 12), (0, 5))  # original untouched
    with pytest.raises(ValueError):
        FrameMatrix.from_rows(ctx, [[1, 2], [3]])
    with pytest.raises(ValueError):
        FrameMatrix.from_rows(ctx, [])


def test_gram_and_bilinear_agree():
    ctx = make_context()
    rng = seeded_rng(4, "gram")
    rows = [[rng.randrange(ctx.modulus) for _ in range(4)] for _ in range(5)]
    a = FrameMatrix.from_rows(ctx, rows)
    g = gram(a)
    for i in range(4):
        for j in range(4):
            assert g[i][j] == bilinear(ctx, a.column(i), a.column(j))
            assert g[i][j] == g[j][i]


def test_frame_invariants_on_orthogonal_frame():
    ctx = make_context()
    nu = ctx.sqrt_minus_one
    # one anisotropic column, one hyperbolic column, one dependent column
    rows = [
        [1, 0, 0],
        [0, 1, 7],
        [0, nu, 7 * nu % ctx.modulus],
        [0, 0, 0],
    ]
    inv = frame_invariants(FrameMatrix.from_rows(ctx, rows))
    assert inv.in_variety
    assert inv.anisotropic_rank == 1
    assert inv.isotropic_rank == 1
    assert inv.rank == 2
    assert inv.anisotropic_columns == frozenset({0})


def test_frame_invariants_rejects_nothing_but_reports():
    ctx = make_context()
    inv = frame_invariants(FrameMatrix.from_rows(ctx, [[1, 1], [1, 2]]))
    assert not inv.in_variety  # columns not orthogonal


def test_zero_frame():
    ctx = make_context()
    inv = frame_invariants(FrameMatrix.from_rows(ctx, [[0, 0], [0, 0], [0, 0]]))
    assert inv.in_variety
    assert inv.rank == 0
    assert inv.anisotropic_rank == 0 and inv.isotropic_rank == 0


def test_matrix_rank_and_nullspace():
    ctx = make_context()
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert matrix_rank(ctx, rows) == 2
    basis = nullspace(ctx, rows)
    assert len(basis) == 1
    for v in basis:
        for row in rows:
            assert sum(r * x for r, x in zip(row, v)) % ctx.modulus == 0


def test_seeded_rng_deterministic():
    a = [seeded_rng(5, "x", 1).randrange(10**9) for _ in range(3)]
    b = [seeded_rng(5, "x", 1).randrange(10**9) for _ in range(3)]
    assert a == b
    c = seeded_rng(5, "x", 2).randrange(10**9)
    assert c != a[0]  # different tag, different stream
