"""Span of squared linear forms in the space of quadrics.

Squaring a linear form in r variables lands in the C(r+1, 2)-dimensional
space of symmetric coefficient vectors.  Generic collections of n forms
span min(C(r+1, 2), n) of it; this module computes the span exactly over
F_P and exposes the bookkeeping identity that splits the jacobian rank
target on the fully isotropic stratum into a squares-span part and a
linear part.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exactfield import FieldContext, matrix_rank, seeded_rng


def monomial_pairs(r: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (a, b), a <= b, for the monomials y_a y_b in r variables."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return tuple((a, b) for a in range(r) for b in range(a, r))


def squares_matrix(ctx: FieldContext, forms) -> list[list[int]]:
    """One row per form: the coefficient vector of its square.

    A form is a length-r sequence of coefficients alpha_a.  Its square
    has coefficient alpha_a^2 on y_a^2 and 2 alpha_a alpha_b on y_a y_b.
    """
    forms = [list(f) for f in forms]
    if not forms:
        return []
    r = len(forms[0])
    if any(len(f) != r for f in forms):
        raise ValueError("forms must all have the same number of coefficients")
    p = ctx.modulus
    pairs = monomial_pairs(r)
    rows = []
    for f in forms:
        row = []
        for a, b in pairs:
            if a == b:
                row.append(f[a] * f[a] % p)
            else:
                row.append(2 * f[a] * f[b] % p)
        rows.append(row)
    return rows


def squares_span_dimension(ctx: FieldContext, forms) -> int:
    """Dimension of the span of the squares of the given forms."""
    return matrix_rank(ctx, squares_matrix(ctx, forms))


def expected_squares_dimension(r: int, n: int) -> int:
    """Generic span of n squared forms in r variables: min(C(r+1, 2), n)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return min(comb(r + 1, 2), n)


@dataclass(frozen=True)
class SquaresSample:
    r: int
    n: int
    expected: int
    observed: tuple[int, ...]
    matches: int

    @property
    def all_match(self) -> bool:
        return self.matches == len(self.observed)


def check_generic_identity(
    ctx: FieldContext, r: int, n: int, trials: int, seed: int
) -> SquaresSample:
    """Sample random form collections and compare spans to the generic value.

    Random forms over a large field miss the generic value only on a
    proper closed locus, so every trial is expected to match.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    expected = expected_squares_dimension(r, n)
    observed = []
    for t in range(trials):
        rng = seeded_rng(seed, "squares", r, n, t)
        forms = [[rng.randrange(ctx.modulus) for _ in range(r)] for _ in range(n)]
        observed.append(squares_span_dimension(ctx, forms))
    matches = sum(1 for value in observed if value == expected)
    return SquaresSample(
        r=r, n=n, expected=expected, observed=tuple(observed), matches=matches
    )


def isotropic_rank_target(n: int, q: int) -> int:
    """Jacobian rank target min(C(n, 2), qn - C(q, 2)) on the stratum (0, q)."""
    if not 0 <= q <= n:
        raise ValueError("need 0 <= q <= n")
    return min(comb(n, 2), q * n - comb(q, 2))


def decomposed_rank_target(n: int, q: int) -> int:
    """The same target assembled from a squares-span block and a linear block.

    The jacobian at a rank-q fully isotropic frame splits into the span
    of n squared forms in r = n - q variables plus qn - C(q, 2) - n
    independent linear rows; the two expressions agree for all
    0 <= q <= n.
    """
    if not 0 <= q <= n:
        raise ValueError("need 0 <= q <= n")
    return expected_squares_dimension(n - q, n) + q * n - comb(q, 2) - n
