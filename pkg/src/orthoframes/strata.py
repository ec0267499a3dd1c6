"""Stratification of the variety of orthogonal n-frames in d-space.

A frame is a d x n matrix whose columns are pairwise orthogonal for the
standard symmetric bilinear form.  Frames are stratified by the pair
(p, q) where p counts anisotropic columns and q is the dimension of the
span of the isotropic columns.  This module handles the discrete side:
the parameter domain, the dimension function on strata, the upper
boundary of the domain, dimension maximization, the degeneration order,
and the resulting component census.

All arithmetic is on Python integers, so values are exact for any d, n
(in particular for d, n up to 10**6 and beyond).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import NamedTuple


class StratumIndex(NamedTuple):
    """Invariant pair of a stratum: anisotropic rank p, isotropic rank q."""

    p: int
    q: int


@dataclass(frozen=True)
class FrameSpaceParams:
    """Ambient parameters: frames have n columns in d-dimensional space."""

    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("d must be >= 1, got %d" % self.d)
        if self.n < 2:
            raise ValueError("n must be >= 2, got %d" % self.n)


def dimension_polynomial(d: int, n: int, p: int, q: int) -> int:
    """Evaluate the stratum dimension polynomial, with no domain check.

    The value is (2pd + 2qd + 2qn - p^2 - 4qp - 3q^2 + p - q) / 2; the
    numerator is even for all integer p, q, which is asserted.
    """
    num = 2 * p * d + 2 * q * d + 2 * q * n - p * p - 4 * q * p - 3 * q * q + p - q
    assert num % 2 == 0, "dimension numerator must be even"
    return num // 2


def in_domain(params: FrameSpaceParams, p: int, q: int) -> bool:
    """Whether (p, q) is an admissible invariant pair for these params."""
    return p >= 0 and q >= 0 and p + q <= params.n and p + 2 * q <= params.d


def _require_in_domain(params: FrameSpaceParams, s: StratumIndex) -> None:
    if not in_domain(params, s[0], s[1]):
        raise ValueError(
            "stratum (%d, %d) outside the domain for d=%d, n=%d"
            % (s[0], s[1], params.d, params.n)
        )


def enumerate_domain(params: FrameSpaceParams) -> list[StratumIndex]:
    """All admissible (p, q), sorted lexicographically."""
    d, n = params.d, params.n
    out = []
    for p in range(min(d, n) + 1):
        q_hi = min(n - p, (d - p) // 2)
        for q in range(q_hi + 1):
            out.append(StratumIndex(p, q))
    return out


def stratum_dimension(params: FrameSpaceParams, s: StratumIndex) -> int:
    """Dimension of the stratum with invariants s = (p, q)."""
    _require_in_domain(params, s)
    return dimension_polynomial(params.d, params.n, s[0], s[1])


def principal_dimension(params: FrameSpaceParams) -> int:
    """Dimension nd - C(n, 2) of the closure of the dense-rank stratum."""
    return params.n * params.d - comb(params.n, 2)


class BoundaryKind(Enum):
    """Which constraint is tight along a boundary segment."""

    RANK_CAP = "rank-cap"  # p + q = n
    DIM_CAP = "dim-cap"  # p + 2q = d


@dataclass(frozen=True)
class BoundarySegment:
    kind: BoundaryKind
    points: tuple[StratumIndex, ...]  # ordered by increasing q


def boundary(params: FrameSpaceParams) -> tuple[BoundarySegment, BoundarySegment]:
    """The componentwise-maximal strata, split by which cap binds.

    The rank-cap segment is {(n-q, q) : 0 <= q <= min(d-n, n)} and the
    dim-cap segment is {(d-2q, q) : max(d-n+1, 0) <= q <= floor(d/2)}.
    Either may be empty; together they are disjoint and their union is
    exactly the set of componentwise-maximal elements of the domain.
    """
    d, n = params.d, params.n
    seg1 = tuple(StratumIndex(n - q, q) for q in range(min(d - n, n) + 1))
    seg2 = tuple(
        StratumIndex(d - 2 * q, q) for q in range(max(d - n + 1, 0), d // 2 + 1)
    )
    return (
        BoundarySegment(BoundaryKind.RANK_CAP, seg1),
        BoundarySegment(BoundaryKind.DIM_CAP, seg2),
    )


def boundary_set(params: FrameSpaceParams) -> frozenset[StratumIndex]:
    seg1, seg2 = boundary(params)
    return frozenset(seg1.points) | frozenset(seg2.points)


def endpoints(params: FrameSpaceParams) -> tuple[StratumIndex, StratumIndex]:
    """The two distinguished corners (min(d, n), 0) and (d mod 2, floor(d/2)).

    The first is always in the domain; the second lies in the domain iff
    ceil(d/2) <= n.  They coincide exactly when d = 1.
    """
    d, n = params.d, params.n
    return StratumIndex(min(d, n), 0), StratumIndex(d % 2, d // 2)


@dataclass(frozen=True)
class MaximizationResult:
    max_value: int
    argmax: frozenset[StratumIndex]


def maximize_dimension(
    params: FrameSpaceParams, exhaustive: bool = False
) -> MaximizationResult:
    """Maximum stratum dimension over the whole domain, with argmax set.

    The maximum is attained at one or both of the corners returned by
    endpoints() (the second corner competes only when it is admissible).
    With exhaustive=True the result is re-checked against a full scan of
    the domain; this is a debug mode, quadratic in min(d, n).
    """
    d, n = params.d, params.n
    first, second = endpoints(params)
    candidates = [first]
    if in_domain(params, second[0], second[1]) and second != first:
        candidates.append(second)
    values = [dimension_polynomial(d, n, p, q) for (p, q) in candidates]
    best = max(values)
    argmax = frozenset(c for c, v in zip(candidates, values) if v == best)
    if exhaustive:
        scan_best = None
        scan_argmax = set()
        for s in enumerate_domain(params):
            v = dimension_polynomial(d, n, s[0], s[1])
            if scan_best is None or v > scan_best:
                scan_best, scan_argmax = v, {s}
            elif v == scan_best:
                scan_argmax.add(s)
        assert scan_best == best and scan_argmax == set(argmax), (
            "corner maximization disagrees with exhaustive scan at d=%d, n=%d"
            % (d, n)
        )
    return MaximizationResult(best, argmax)


def maximal_strata(params: FrameSpaceParams) -> list[StratumIndex]:
    """Boundary strata whose dimension reaches the principal bound.

    These index the irreducible components of the frame variety.  The
    result is the (n, 0) corner when admissible, plus a final run of the
    dim-cap segment; points are listed in increasing q.
    """
    bound = principal_dimension(params)
    seg1, seg2 = boundary(params)
    out = [
        s
        for s in seg1.points + seg2.points
        if dimension_polynomial(params.d, params.n, s[0], s[1]) >= bound
    ]
    out.sort(key=lambda s: s.q)
    return out


def component_count(params: FrameSpaceParams, s: StratumIndex) -> int:
    """Number of irreducible components of the stratum with invariants s.

    C(n, p) components in general; doubled when the isotropic columns
    fill a maximal isotropic subspace (p + 2q = d with q > 0), because
    the two rulings of the quadric are swapped by no isometry fixing the
    flag.
    """
    _require_in_domain(params, s)
    p, q = s
    base = comb(params.n, p)
    if p + 2 * q == params.d and q > 0:
        return 2 * base
    return base


@dataclass(frozen=True)
class ComponentRecord:
    stratum: StratumIndex
    dimension: int
    count: int


@dataclass(frozen=True)
class ComponentReport:
    params: FrameSpaceParams
    components: tuple[ComponentRecord, ...]
    total_count: int
    variety_dimension: int
    is_irreducible: bool
    principal_dimension: int | None


def component_report(params: FrameSpaceParams) -> ComponentReport:
    """Census of irreducible components of the frame variety."""
    records = tuple(
        ComponentRecord(
            s,
            dimension_polynomial(params.d, params.n, s[0], s[1]),
            component_count(params, s),
        )
        for s in maximal_strata(params)
    )
    total = sum(r.count for r in records)
    dim = max(r.dimension for r in records)
    principal = principal_dimension(params) if params.d >= params.n else None
    return ComponentReport(
        params=params,
        components=records,
        total_count=total,
        variety_dimension=dim,
        is_irreducible=(total == 1),
        principal_dimension=principal,
    )


class PosetRelation(Enum):
    BELOW = "below"
    NOT_BELOW = "not-below"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PosetVerdict:
    lower: StratumIndex
    upper: StratumIndex
    relation: PosetRelation
    reason: str


def poset_compare(
    params: FrameSpaceParams, lower: StratumIndex, upper: StratumIndex
) -> PosetVerdict:
    """Decide whether the lower stratum degenerates from the upper one.

    Below is certified two ways: a componentwise chain of single steps
    (each step adds one anisotropic or one isotropic direction), or the
    dichotomy that sends every non-maximal boundary stratum under the
    principal corner (n, 0).  NotBelow is certified when a necessary
    condition fails: the dimension must strictly increase, p cannot
    drop, and p + q cannot drop; distinct maximal strata are also
    incomparable.  Anything else is reported Unknown, since the order
    is not known in closed form.
    """
    _require_in_domain(params, lower)
    _require_in_domain(params, upper)
    lower = StratumIndex(*lower)
    upper = StratumIndex(*upper)
    d, n = params.d, params.n

    def verdict(rel: PosetRelation, reason: str) -> PosetVerdict:
        return PosetVerdict(lower, upper, rel, reason)

    if lower == upper:
        return verdict(PosetRelation.BELOW, "identical")
    if lower.p <= upper.p and lower.q <= upper.q:
        return verdict(PosetRelation.BELOW, "componentwise-chain")

    maximals = set(maximal_strata(params))
    if lower in maximals and upper in maximals:
        return verdict(PosetRelation.NOT_BELOW, "distinct-maximal-strata")

    sig_lower = dimension_polynomial(d, n, lower.p, lower.q)
    sig_upper = dimension_polynomial(d, n, upper.p, upper.q)
    if sig_lower >= sig_upper:
        return verdict(PosetRelation.NOT_BELOW, "dimension-does-not-increase")
    if lower.p > upper.p:
        return verdict(PosetRelation.NOT_BELOW, "anisotropic-rank-drops")
    if lower.p + lower.q > upper.p + upper.q:
        return verdict(PosetRelation.NOT_BELOW, "total-rank-drops")

    if (
        d >= n
        and upper == StratumIndex(n, 0)
        and lower in boundary_set(params)
        and lower not in maximals
    ):
        return verdict(PosetRelation.BELOW, "principal-dichotomy")

    return verdict(PosetRelation.UNKNOWN, "undetermined")
