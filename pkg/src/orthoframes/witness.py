"""Smooth-point certificates on the frame variety over F_P.

The jacobian of the pairwise-orthogonality quadrics at a frame A has
one row per column pair (h, k) and one column per matrix coordinate
(i, j); its rank at A bounds the local codimension from below, so rank
at least min(C(n, 2), nd - dim) certifies a smooth point of any
component of that dimension through A.  This module builds witnesses on
every boundary stratum: deterministic ones where an identity submatrix
is available, randomized ones (with retries) where only generic
constructions are known, plus the extension and perturbation moves that
transport witnesses between parameter pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exactfield import (
    FieldContext,
    FrameInvariants,
    FrameMatrix,
    bilinear,
    frame_invariants,
    matrix_rank,
    nullspace,
    seeded_rng,
    sqrt_mod,
)
from .strata import (
    FrameSpaceParams,
    StratumIndex,
    boundary_set,
    in_domain,
    stratum_dimension,
)


class SearchExhaustedError(RuntimeError):
    """A randomized search failed within its retry budget."""


@dataclass(frozen=True)
class JacobianTemplate:
    """Symbolic jacobian: C(n, 2) rows by d*n columns.

    Row t corresponds to the pair row_pairs[t] = (h, k) with h < k;
    column j*d + i corresponds to matrix coordinate (i, j).  The entry
    there is A[i][k] if j = h, A[i][h] if j = k, and zero otherwise.
    Indices are 0-based internally, 1-based in rendered symbols.
    """

    d: int
    n: int
    row_pairs: tuple[tuple[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_pairs), self.d * self.n

    def entry_origin(self, t: int, c: int) -> tuple[int, int] | None:
        """Coordinate of A copied into entry (t, c), or None for zero."""
        h, k = self.row_pairs[t]
        j, i = divmod(c, self.d)
        if j == h:
            return (i, k)
        if j == k:
            return (i, h)
        return None

    def entry_symbol(self, t: int, c: int) -> str:
        origin = self.entry_origin(t, c)
        if origin is None:
            return "0"
        return "x[%d,%d]" % (origin[0] + 1, origin[1] + 1)

    def evaluate(self, entries) -> list[list[int]]:
        """Numeric jacobian rows at the given d x n entry table."""
        d, n = self.d, self.n
        out = []
        for h, k in self.row_pairs:
            row = [0] * (d * n)
            for i in range(d):
                row[h * d + i] = entries[i][k]
                row[k * d + i] = entries[i][h]
            out.append(row)
        return out


def _template(d: int, n: int) -> JacobianTemplate:
    pairs = tuple((h, k) for h in range(n) for k in range(h + 1, n))
    return JacobianTemplate(d=d, n=n, row_pairs=pairs)


def build_jacobian(params: FrameSpaceParams) -> JacobianTemplate:
    """Symbolic jacobian template for the given parameters."""
    return _template(params.d, params.n)


def jacobian_rank(params: FrameSpaceParams, a: FrameMatrix) -> int:
    """Rank over F_P of the jacobian evaluated at the frame a."""
    if (a.d, a.n) != (params.d, params.n):
        raise ValueError(
            "frame shape (%d, %d) does not match params (%d, %d)"
            % (a.d, a.n, params.d, params.n)
        )
    rows = _template(params.d, params.n).evaluate(a.entries)
    return matrix_rank(a.ctx, rows)


def required_rank_bound(params: FrameSpaceParams, s: StratumIndex) -> int:
    """Certificate target min(C(n, 2), nd - stratum dimension)."""
    return min(comb(params.n, 2), params.n * params.d - stratum_dimension(params, s))


@dataclass(frozen=True)
class JacobianCertificate:
    params: FrameSpaceParams
    point: FrameMatrix
    stratum: StratumIndex
    jacobian_rank: int
    required_bound: int
    passed: bool
    trials_used: int = 1


def sample_stratum_point(
    params: FrameSpaceParams, s: StratumIndex, ctx: FieldContext, seed: int
) -> FrameMatrix:
    """Canonical point with invariants s = (p, q).

    Columns 1..p are the first p standard basis vectors; the next q
    columns are the hyperbolic pairs e_{p+2k-1} + nu * e_{p+2k}; the
    remaining columns are seeded random combinations of those isotropic
    columns (zero columns when q = 0).
    """
    if not in_domain(params, s[0], s[1]):
        raise ValueError(
            "stratum (%d, %d) outside the domain for d=%d, n=%d"
            % (s[0], s[1], params.d, params.n)
        )
    p, q = s
    d, n = params.d, params.n
    nu = ctx.sqrt_minus_one
    cols: list[list[int]] = []
    for j in range(p):
        col = [0] * d
        col[j] = 1
        cols.append(col)
    iso: list[list[int]] = []
    for k in range(q):
        col = [0] * d
        col[p + 2 * k] = 1
        col[p + 2 * k + 1] = nu
        iso.append(col)
    cols.extend(iso)
    rng = seeded_rng(seed, "sample", d, n, p, q)
    for _ in range(n - p - q):
        coeffs = [rng.randrange(ctx.modulus) for _ in range(q)]
        col = [0] * d
        for c, u in zip(coeffs, iso):
            for i in range(d):
                col[i] = (col[i] + c * u[i]) % ctx.modulus
        cols.append(col)
    rows = [[cols[j][i] for j in range(n)] for i in range(d)]
    return FrameMatrix.from_rows(ctx, rows)


def certify_smooth(params: FrameSpaceParams, a: FrameMatrix) -> JacobianCertificate:
    """Evaluate the jacobian bound at a boundary-stratum point.

    The frame must lie in the variety and its invariants must index a
    componentwise-maximal (boundary) stratum; only there does the
    min(C(n, 2), nd - dim) target certify smoothness on the component
    closures.  Off-boundary points are rejected.
    """
    inv = frame_invariants(a)
    if not inv.in_variety:
        raise ValueError("frame is not in the variety (gram matrix not diagonal)")
    s = StratumIndex(inv.anisotropic_rank, inv.isotropic_rank)
    if s not in boundary_set(params):
        raise ValueError(
            "stratum (%d, %d) is not componentwise-maximal for d=%d, n=%d"
            % (s.p, s.q, params.d, params.n)
        )
    rank = jacobian_rank(params, a)
    bound = required_rank_bound(params, s)
    return JacobianCertificate(
        params=params,
        point=a,
        stratum=s,
        jacobian_rank=rank,
        required_bound=bound,
        passed=rank >= bound,
    )


def _half_pair_rows(
    ctx: FieldContext, b_rows: list[list[int]]
) -> list[list[int]]:
    nu = ctx.sqrt_minus_one
    p = ctx.modulus
    return [list(r) for r in b_rows] + [[nu * x % p for x in r] for r in b_rows]


def certify_smooth_isotropic(
    params: FrameSpaceParams, q: int, ctx: FieldContext, seed: int, trials: int = 8
) -> JacobianCertificate:
    """Randomized certificate on the fully isotropic stratum (0, q), d = 2q.

    Draws a random q x n matrix B, stacks [B; nu * B] (automatically in
    the variety, with isotropic rank = rank B), and checks the jacobian
    bound.  Retries draws whose B is rank-deficient or whose rank falls
    short; returns the first passing certificate, else the last failure.
    """
    d, n = params.d, params.n
    if d != 2 * q or q < 1:
        raise ValueError("stratum (0, %d) needs d = 2q, got d=%d" % (q, d))
    if q > n:
        raise ValueError("q=%d exceeds the column count n=%d" % (q, n))
    last: JacobianCertificate | None = None
    for t in range(trials):
        rng = seeded_rng(seed, "iso", d, n, q, t)
        b_rows = [[rng.randrange(ctx.modulus) for _ in range(n)] for _ in range(q)]
        if matrix_rank(ctx, b_rows) < q:
            continue
        a = FrameMatrix.from_rows(ctx, _half_pair_rows(ctx, b_rows))
        cert = certify_smooth(params, a)
        cert = JacobianCertificate(
            params=cert.params,
            point=cert.point,
            stratum=cert.stratum,
            jacobian_rank=cert.jacobian_rank,
            required_bound=cert.required_bound,
            passed=cert.passed,
            trials_used=t + 1,
        )
        if cert.passed:
            return cert
        last = cert
    if last is None:
        raise SearchExhaustedError(
            "no full-rank B found in %d trials for q=%d, n=%d" % (trials, q, n)
        )
    return last


def _extend_rows(rows: list[list[int]]) -> list[list[int]]:
    """Block extension [[A, 0], [0, 1]]: one new row and one new column."""
    n = len(rows[0]) if rows else 0
    out = [list(r) + [0] for r in rows]
    out.append([0] * n + [1])
    return out


def extend_witness(params: FrameSpaceParams, a: FrameMatrix) -> FrameMatrix:
    """Extension to (d+1, n+1): appends a unit column on a fresh row.

    Sends the stratum (p, q) to (p+1, q) and raises the jacobian rank
    by exactly n.
    """
    if (a.d, a.n) != (params.d, params.n):
        raise ValueError("frame shape does not match params")
    return FrameMatrix.from_rows(a.ctx, _extend_rows([list(r) for r in a.entries]))


def boundary_smooth_witness(
    params: FrameSpaceParams,
    s: StratumIndex,
    ctx: FieldContext,
    seed: int,
    trials: int = 8,
) -> JacobianCertificate:
    """Constructive smooth-point certificate on any boundary stratum.

    Strata (p, 0) get the direct basis-column witness.  For q > 0 the
    anisotropic part is stripped, a base witness is built on the fully
    isotropic stratum (0, q) of the reduced parameters (deterministic
    hyperbolic columns when the reduced frame is square, a random half
    pair otherwise), and p block extensions lift it back up.
    """
    s = StratumIndex(*s)
    if s not in boundary_set(params):
        raise ValueError(
            "stratum (%d, %d) is not componentwise-maximal for d=%d, n=%d"
            % (s.p, s.q, params.d, params.n)
        )
    p, q = s
    d, n = params.d, params.n
    if q == 0:
        a = sample_stratum_point(params, s, ctx, seed)
        return certify_smooth(params, a)

    d0, n0 = d - p, n - p
    trials_used = 1
    if q == n0:
        # hyperbolic columns e_{2k-1} + nu e_{2k}, one per column
        nu = ctx.sqrt_minus_one
        base = [[0] * n0 for _ in range(d0)]
        for k in range(n0):
            base[2 * k][k] = 1
            base[2 * k + 1][k] = nu
    elif d0 == 2 * q:
        base = None
        bound0 = min(comb(n0, 2), n0 * q - comb(q, 2))
        for t in range(trials):
            rng = seeded_rng(seed, "chain", d, n, p, q, t)
            b_rows = [[rng.randrange(ctx.modulus) for _ in range(n0)] for _ in range(q)]
            if matrix_rank(ctx, b_rows) < q:
                continue
            cand = _half_pair_rows(ctx, b_rows)
            r0 = matrix_rank(ctx, _template(d0, n0).evaluate(cand))
            trials_used = t + 1
            if r0 >= bound0:
                base = cand
                break
            base = cand  # keep the last candidate for an honest failure
        if base is None:
            raise SearchExhaustedError(
                "no full-rank base found in %d trials at (%d, %d)" % (trials, p, q)
            )
    else:  # pragma: no cover - excluded by the boundary membership check
        raise AssertionError("boundary stratum with q > 0 must satisfy q = n-p or p+2q = d")

    rows = base
    for _ in range(p):
        rows = _extend_rows(rows)
    a = FrameMatrix.from_rows(ctx, rows)
    cert = certify_smooth(params, a)
    return JacobianCertificate(
        params=cert.params,
        point=cert.point,
        stratum=cert.stratum,
        jacobian_rank=cert.jacobian_rank,
        required_bound=cert.required_bound,
        passed=cert.passed,
        trials_used=trials_used,
    )


@dataclass(frozen=True)
class PerturbationWitness:
    base: FrameMatrix
    column: int
    direction: tuple[int, ...]
    epsilon: int
    perturbed: FrameMatrix
    source: StratumIndex
    target: StratumIndex

    def with_epsilon(self, epsilon: int) -> FrameMatrix:
        """The same perturbation at another scale; 0 recovers the base."""
        p = self.base.ctx.modulus
        v = self.base.column(self.column)
        col = [(x + epsilon * w) % p for x, w in zip(v, self.direction)]
        return self.base.with_column(self.column, col)


def _invariants_for_perturbation(
    params: FrameSpaceParams, a: FrameMatrix
) -> tuple[FrameInvariants, int]:
    """Common validation: returns invariants and a dependent isotropic column."""
    if (a.d, a.n) != (params.d, params.n):
        raise ValueError("frame shape does not match params")
    inv = frame_invariants(a)
    if not inv.in_variety:
        raise ValueError("frame is not in the variety")
    iso_cols = [j for j in range(a.n) if j not in inv.anisotropic_columns]
    for j in reversed(iso_cols):
        others = [a.column(k) for k in iso_cols if k != j]
        stacked = list(map(list, zip(*others))) if others else []
        if matrix_rank(a.ctx, stacked) == inv.isotropic_rank:
            return inv, j
    raise ValueError(
        "no dependent isotropic column: the frame already has full column rank"
    )


def _orthogonal_complement_basis(a: FrameMatrix) -> list[list[int]]:
    transpose = [list(a.column(j)) for j in range(a.n)]
    return nullspace(a.ctx, transpose)


def _combine(ctx: FieldContext, basis: list[list[int]], coeffs: list[int]) -> list[int]:
    p = ctx.modulus
    d = len(basis[0])
    out = [0] * d
    for c, vec in zip(coeffs, basis):
        if c:
            for i in range(d):
                out[i] = (out[i] + c * vec[i]) % p
    return out


def perturb_increase_anisotropic(
    params: FrameSpaceParams,
    a: FrameMatrix,
    seed: int,
    epsilon: int = 1,
    trials: int = 64,
) -> PerturbationWitness:
    """Move a frame from stratum (p, q) into (p + 1, q).

    Adds epsilon times an anisotropic vector orthogonal to every column
    to a dependent isotropic column.  Requires (p+1, q) admissible and
    a dependent isotropic column (guaranteed when p + q < n).
    """
    ctx = a.ctx
    if epsilon % ctx.modulus == 0:
        raise ValueError("epsilon must be nonzero in the field")
    inv, col_idx = _invariants_for_perturbation(params, a)
    source = StratumIndex(inv.anisotropic_rank, inv.isotropic_rank)
    target = StratumIndex(source.p + 1, source.q)
    if not in_domain(params, target.p, target.q):
        raise ValueError(
            "target stratum (%d, %d) outside the domain" % (target.p, target.q)
        )
    basis = _orthogonal_complement_basis(a)
    if not basis:
        raise ValueError("columns span the whole space, no orthogonal direction left")
    rng = seeded_rng(seed, "perturb-aniso", params.d, params.n, source.p, source.q)
    for _ in range(trials):
        w = _combine(ctx, basis, [rng.randrange(ctx.modulus) for _ in basis])
        if bilinear(ctx, w, w) != 0:
            break
    else:
        raise SearchExhaustedError(
            "no anisotropic direction found in %d draws" % trials
        )
    eps = epsilon % ctx.modulus
    v = a.column(col_idx)
    perturbed = a.with_column(
        col_idx, [(x + eps * y) % ctx.modulus for x, y in zip(v, w)]
    )
    witness = PerturbationWitness(
        base=a,
        column=col_idx,
        direction=tuple(w),
        epsilon=eps,
        perturbed=perturbed,
        source=source,
        target=target,
    )
    check = frame_invariants(perturbed)
    assert check.in_variety, "perturbed frame left the variety"
    assert (check.anisotropic_rank, check.isotropic_rank) == target, (
        "perturbation landed in (%d, %d) instead of (%d, %d)"
        % (check.anisotropic_rank, check.isotropic_rank, target.p, target.q)
    )
    return witness


def perturb_increase_isotropic(
    params: FrameSpaceParams,
    a: FrameMatrix,
    seed: int,
    epsilon: int = 1,
    trials: int = 64,
) -> PerturbationWitness:
    """Move a frame from stratum (p, q) into (p, q + 1).

    Adds epsilon times an isotropic vector that is orthogonal to every
    column yet outside the current isotropic span to a dependent
    isotropic column.  Requires (p, q+1) admissible and a dependent
    isotropic column.  The isotropic direction is found by solving a
    quadratic along random lines in the orthogonal complement, so the
    search is randomized and may exhaust its budget on thin fields.
    """
    ctx = a.ctx
    p_mod = ctx.modulus
    if epsilon % p_mod == 0:
        raise ValueError("epsilon must be nonzero in the field")
    inv, col_idx = _invariants_for_perturbation(params, a)
    source = StratumIndex(inv.anisotropic_rank, inv.isotropic_rank)
    target = StratumIndex(source.p, source.q + 1)
    if not in_domain(params, target.p, target.q):
        raise ValueError(
            "target stratum (%d, %d) outside the domain" % (target.p, target.q)
        )
    basis = _orthogonal_complement_basis(a)
    if not basis:
        raise ValueError("columns span the whole space, no orthogonal direction left")
    iso_cols = [
        list(a.column(j)) for j in range(a.n) if j not in inv.anisotropic_columns
    ]
    iso_stack = list(map(list, zip(*iso_cols))) if iso_cols else [[] for _ in range(a.d)]

    def is_new_direction(w: list[int]) -> bool:
        if all(x == 0 for x in w):
            return False
        stacked = [row + [w[i]] for i, row in enumerate(iso_stack)]
        return matrix_rank(ctx, stacked) == inv.isotropic_rank + 1

    rng = seeded_rng(seed, "perturb-iso", params.d, params.n, source.p, source.q)

    def candidate_roots(w1: list[int], w2: list[int]) -> list[list[int]]:
        q1 = bilinear(ctx, w1, w1)
        q2 = bilinear(ctx, w2, w2)
        b = bilinear(ctx, w1, w2)
        found = []
        if q1 == 0:
            found.append(w1)
        if q2 == 0:
            found.append(w2)
            if b != 0:
                t = -q1 * pow(2 * b, -1, p_mod) % p_mod
                found.append([(x + t * y) % p_mod for x, y in zip(w1, w2)])
        else:
            disc = (b * b - q1 * q2) % p_mod
            root = sqrt_mod(disc, p_mod)
            if root is not None:
                inv_q2 = pow(q2, -1, p_mod)
                for sgn in (root, -root):
                    t = (-b + sgn) * inv_q2 % p_mod
                    found.append([(x + t * y) % p_mod for x, y in zip(w1, w2)])
        return found

    direction: list[int] | None = None
    for _ in range(trials):
        w1 = _combine(ctx, basis, [rng.randrange(p_mod) for _ in basis])
        w2 = _combine(ctx, basis, [rng.randrange(p_mod) for _ in basis])
        for w in candidate_roots(w1, w2):
            if is_new_direction(w):
                direction = w
                break
        if direction is not None:
            break
    if direction is None:
        raise SearchExhaustedError(
            "no new isotropic direction found in %d draws" % trials
        )
    eps = epsilon % p_mod
    v = a.column(col_idx)
    perturbed = a.with_column(
        col_idx, [(x + eps * y) % p_mod for x, y in zip(v, direction)]
    )
    witness = PerturbationWitness(
        base=a,
        column=col_idx,
        direction=tuple(direction),
        epsilon=eps,
        perturbed=perturbed,
        source=source,
        target=target,
    )
    check = frame_invariants(perturbed)
    assert check.in_variety, "perturbed frame left the variety"
    assert (check.anisotropic_rank, check.isotropic_rank) == target, (
        "perturbation landed in (%d, %d) instead of (%d, %d)"
        % (check.anisotropic_rank, check.isotropic_rank, target.p, target.q)
    )
    return witness
