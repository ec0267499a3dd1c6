"""Dimension thresholds and ring-theoretic classification.

For n pairwise-orthogonality quadrics on d x n matrices, the ring
properties of the coordinate ring flip from false to true as d grows
past closed-form thresholds in n.  Each threshold is the least d
satisfying a parity-split inequality of the form

    d even:  d >= (or >) 2n + 1 - sqrt(even radicand)
    d odd:   d >= (or >) 2n     - sqrt(odd radicand)

and is computed exactly with integer square roots; no floats appear
anywhere.  The cutoffs themselves are irrational in general, so the
closed forms take the least even and least odd integer beyond the
respective cutoff and keep the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exactcmp import ceil_half, ceil_minus_sqrt, compare_minus_sqrt, floor_half, floor_minus_sqrt
from .strata import FrameSpaceParams


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2, got %d" % n)


def compare_even_cutoff(d: int, n: int) -> int:
    """Sign of d - (2n + 1 - sqrt(8n + 1)), exactly."""
    return compare_minus_sqrt(d, 2 * n + 1, 8 * n + 1)


def compare_odd_cutoff(d: int, n: int) -> int:
    """Sign of d - (2n - sqrt(8n - 7)), exactly."""
    return compare_minus_sqrt(d, 2 * n, 8 * n - 7)


def meets_ci_cutoff(d: int, n: int) -> bool:
    """Parity-split test: d at or beyond the cutoff of its parity."""
    if d % 2 == 0:
        return compare_even_cutoff(d, n) >= 0
    return compare_odd_cutoff(d, n) >= 0


def meets_prime_cutoff(d: int, n: int) -> bool:
    """Parity-split test: d strictly beyond the cutoff of its parity."""
    if d % 2 == 0:
        return compare_even_cutoff(d, n) > 0
    return compare_odd_cutoff(d, n) > 0


def ci_threshold(n: int) -> int:
    """Least d >= which the ideal is a (radical) complete intersection.

    Computed as the minimum of the least even integer >= the even
    cutoff and the least odd integer >= the odd cutoff.  Note the value
    is 1 at n = 2; the d >= 2 hypothesis of the classification is
    enforced by classify_ring, not here.
    """
    _require_n(n)
    even = 2 * ceil_half(ceil_minus_sqrt(2 * n + 1, 8 * n + 1))
    odd = 2 * ceil_half(ceil_minus_sqrt(2 * n - 1, 8 * n - 7)) + 1
    return min(even, odd)


def prime_threshold(n: int) -> int:
    """Least d >= which the ideal is prime (equivalently, normal domain).

    Minimum of the least even integer strictly beyond the even cutoff
    and the least odd integer strictly beyond the odd cutoff.
    """
    _require_n(n)
    even = 2 * floor_half(floor_minus_sqrt(2 * n + 1, 8 * n + 1)) + 2
    odd = 2 * floor_half(floor_minus_sqrt(2 * n + 1, 8 * n - 7)) + 1
    return min(even, odd)


def ufd_threshold(n: int) -> int:
    """Least d >= which the ring is known to be a unique factorization domain.

    This is a sufficient bound only (no converse is claimed).  Small n
    are special-cased: 3 at n = 2 and 4 at n = 3.  For n >= 4 both
    radicands 8n - 23 and 8n - 31 are nonnegative and the same
    even/odd bracketing applies with non-strict cutoffs.
    """
    _require_n(n)
    if n == 2:
        return 3
    if n == 3:
        return 4
    candidates = []
    if 8 * n - 23 >= 0:
        candidates.append(2 * ceil_half(ceil_minus_sqrt(2 * n + 1, 8 * n - 23)))
    if 8 * n - 31 >= 0:
        candidates.append(2 * ceil_half(ceil_minus_sqrt(2 * n - 1, 8 * n - 31)) + 1)
    return min(candidates)


@dataclass(frozen=True)
class ThresholdTriple:
    n: int
    d_ci: int
    d_prime: int
    d_ufd: int


def threshold_triple(n: int) -> ThresholdTriple:
    return ThresholdTriple(n, ci_threshold(n), prime_threshold(n), ufd_threshold(n))


def verify_parity_thresholds(n: int, d_max: int) -> bool:
    """Check the closed forms against the parity-split cutoffs.

    For every 2 <= d <= d_max, d >= ci_threshold(n) must agree with the
    non-strict parity test and d >= prime_threshold(n) with the strict
    one.  Returns True when all agree.
    """
    _require_n(n)
    ci = ci_threshold(n)
    prime = prime_threshold(n)
    for d in range(2, d_max + 1):
        if (d >= ci) != meets_ci_cutoff(d, n):
            return False
        if (d >= prime) != meets_prime_cutoff(d, n):
            return False
    return True


def prime_ufd_disagreements(n_max: int) -> list[int]:
    """Values of n <= n_max where the prime and UFD thresholds differ.

    Reported as observed data; no pattern is asserted.
    """
    return [n for n in range(2, n_max + 1) if prime_threshold(n) != ufd_threshold(n)]


class UfdStatus(Enum):
    YES = "yes"
    NOT_IMPLIED = "not-implied"


class ReducedStatus(Enum):
    YES = "yes"
    GENERIC_ONLY = "generic-only"


@dataclass(frozen=True)
class PropertyReport:
    params: FrameSpaceParams
    complete_intersection: bool
    gorenstein: bool
    cohen_macaulay: bool
    equidimensional: bool
    domain: bool
    normal_domain: bool
    ufd: UfdStatus
    reduced: ReducedStatus
    justifications: tuple[str, ...]


def classify_ring(params: FrameSpaceParams) -> PropertyReport:
    """Ring properties of the coordinate ring of the frame variety.

    For d >= 2 the properties complete intersection, Gorenstein,
    Cohen-Macaulay and equidimensional are mutually equivalent and hold
    iff d >= ci_threshold(n); in that range they imply reducedness.
    Prime, domain and normality are likewise equivalent, holding iff
    d >= prime_threshold(n).  The UFD property is one-directional: it
    is asserted only when d >= ufd_threshold(n).

    d = 1 is special: the ideal is generated by squarefree monomials,
    so the ring is always reduced, Cohen-Macaulay and equidimensional;
    it is Gorenstein (indeed a hypersurface) iff n <= 2 and is never a
    domain since n >= 2.
    """
    d, n = params.d, params.n
    notes = []
    if d == 1:
        hyper = n <= 2
        notes.append("d=1: squarefree monomial generators, always reduced and Cohen-Macaulay")
        notes.append(
            "d=1: hypersurface iff n <= 2 (single generator), so Gorenstein iff n <= 2"
        )
        notes.append("d=1: product of coordinates vanishes, never a domain for n >= 2")
        return PropertyReport(
            params=params,
            complete_intersection=hyper,
            gorenstein=hyper,
            cohen_macaulay=True,
            equidimensional=True,
            domain=False,
            normal_domain=False,
            ufd=UfdStatus.NOT_IMPLIED,
            reduced=ReducedStatus.YES,
            justifications=tuple(notes),
        )

    ci_t = ci_threshold(n)
    prime_t = prime_threshold(n)
    ufd_t = ufd_threshold(n)
    is_ci = d >= ci_t
    is_domain = d >= prime_t
    is_ufd = d >= ufd_t
    notes.append(
        "complete intersection (= Gorenstein = Cohen-Macaulay = equidimensional): "
        "d=%d %s ci threshold %d" % (d, ">=" if is_ci else "<", ci_t)
    )
    notes.append(
        "domain (= normal): d=%d %s prime threshold %d"
        % (d, ">=" if is_domain else "<", prime_t)
    )
    notes.append(
        "ufd: d=%d %s ufd threshold %d%s"
        % (d, ">=" if is_ufd else "<", ufd_t, "" if is_ufd else " (no claim either way)")
    )
    notes.append(
        "reduced: %s"
        % (
            "complete intersection with generically reduced fibers"
            if is_ci
            else "only generic reducedness is known below the ci threshold"
        )
    )
    return PropertyReport(
        params=params,
        complete_intersection=is_ci,
        gorenstein=is_ci,
        cohen_macaulay=is_ci,
        equidimensional=is_ci,
        domain=is_domain,
        normal_domain=is_domain,
        ufd=UfdStatus.YES if is_ufd else UfdStatus.NOT_IMPLIED,
        reduced=ReducedStatus.YES if is_ci else ReducedStatus.GENERIC_ONLY,
        justifications=tuple(notes),
    )


@dataclass(frozen=True)
class LssCertificate:
    vertex_count: int
    edge_count: int
    d: int
    radical_ci: bool
    normal_domain: bool
    ufd: bool
    minimal_d: ThresholdTriple


def certify_lss(
    vertex_count: int, edges: list[tuple[int, int]], d: int
) -> LssCertificate:
    """Sufficient certificates for the orthogonality ideal of a graph.

    Vertices are 1-indexed.  Edges are validated (labels in range, no
    self-loops) and deduplicated; beyond that the graph structure is
    irrelevant, because each certified property descends from the
    complete graph on vertex_count vertices.  All three booleans are
    sufficient conditions only; False means "not certified here", not
    a refutation.  The complete-graph argument for the radical complete
    intersection claim needs d >= 2, so d = 1 is never certified even
    when the n = 2 threshold evaluates to 1.
    """
    if vertex_count < 2:
        raise ValueError("vertex_count must be >= 2, got %d" % vertex_count)
    if d < 1:
        raise ValueError("d must be >= 1, got %d" % d)
    seen = set()
    for a, b in edges:
        if not (1 <= a <= vertex_count and 1 <= b <= vertex_count):
            raise ValueError(
                "edge (%d, %d) out of range for %d vertices" % (a, b, vertex_count)
            )
        if a == b:
            raise ValueError("self-loop at vertex %d is not allowed" % a)
        seen.add((min(a, b), max(a, b)))
    triple = threshold_triple(vertex_count)
    return LssCertificate(
        vertex_count=vertex_count,
        edge_count=len(seen),
        d=d,
        radical_ci=d >= 2 and d >= triple.d_ci,
        normal_domain=d >= triple.d_prime,
        ufd=d >= triple.d_ufd,
        minimal_d=triple,
    )
