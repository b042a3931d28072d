"""Quantities read off a Laplacian characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .spectral import (
    IntPolynomial,
    eigenvalues_float,
    matrix_of,
    power_sums_from_poly,
)


class NotALaplacianPolynomial(ValueError):
    pass


@dataclass(frozen=True)
class BasicInvariants:
    n: int
    m: int
    c: int
    spanning_trees: int


@dataclass(frozen=True)
class DegreeMoments:
    s1: int
    s2: int
    s3: int
    triangles: int


@dataclass(frozen=True, order=True)
class DegreeDistribution:
    """``counts[i]`` vertices of degree ``i`` (index 0 = isolated)."""

    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if i < len(self.counts) else 0

    def as_dict(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}


def _check_laplacian_poly(p: IntPolynomial) -> None:
    if p.degree < 1 or p.coeffs[-1] != 1:
        raise NotALaplacianPolynomial("polynomial must be monic of degree >= 1")
    if p.coeffs[0] != 0:
        raise NotALaplacianPolynomial("0 is not a root")


def derive_basic_invariants(p: IntPolynomial) -> BasicInvariants:
    """Order, size, components and spanning-tree count from the L-char poly.

    The spanning-tree count is 0 for disconnected graphs.
    """
    _check_laplacian_poly(p)
    n = p.degree
    trace = -p.coeffs[n - 1]
    if trace % 2:
        raise NotALaplacianPolynomial(f"odd trace {trace}")
    c = p.root_multiplicity_zero()
    tau = 0
    if c == 1:
        # coeffs[1] = (-1)^(n-1) * product of nonzero eigenvalues
        tau, r = divmod(abs(p.coeffs[1]), n)
        if r:
            raise NotALaplacianPolynomial("eigenvalue product not divisible by n")
    return BasicInvariants(n=n, m=trace // 2, c=c, spanning_trees=tau)


def degree_moment_sums(p: IntPolynomial, triangles: int) -> DegreeMoments:
    """Sums of degrees, squared degrees and cubed degrees.

    ``tr L^2 = s2 + 2m`` and ``tr L^3 = s3 + 3 s2 - 6 * triangles``.
    """
    _check_laplacian_poly(p)
    if triangles < 0:
        raise ValueError("negative triangle count")
    _, t1, t2, t3 = power_sums_from_poly(p, 3)
    s2 = t2 - t1
    s3 = t3 + 6 * triangles - 3 * s2
    if s2 < 0 or s3 < 0:
        raise ValueError(f"inconsistent moments s2={s2}, s3={s3}")
    return DegreeMoments(s1=t1, s2=s2, s3=s3, triangles=triangles)


def solve_degree_distribution(
    n: int, m: int, s2: int, s3: int, dmax: int = 5, allow_isolated: bool = False
) -> set[DegreeDistribution]:
    """All nonnegative ``(n_0.., n_dmax)`` matching the four degree moments.

    Bounded exhaustive search: pick ``n_dmax, ..., n_2`` and read ``n_1``
    (and ``n_0``) off the first two equations.
    """
    if min(n, m, s2, s3) < 0:
        raise ValueError("inputs must be nonnegative")
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    out: set[DegreeDistribution] = set()
    s1 = 2 * m
    high = range(dmax, 1, -1)

    def rec(i: int, chosen: list[int], left_n: int, left1: int, left2: int, left3: int) -> None:
        if i == len(high):
            n1 = left1
            n0 = left_n - n1
            if n1 < 0 or n0 < 0 or (n0 and not allow_isolated):
                return
            if left2 == n1 and left3 == n1:
                counts = [n0, n1] + list(reversed(chosen))
                out.add(DegreeDistribution(tuple(counts)))
            return
        d = high[i]
        cap = min(left_n, left1 // d, left2 // (d * d), left3 // (d ** 3))
        for k in range(cap + 1):
            rec(i + 1, chosen + [k], left_n - k, left1 - k * d,
                left2 - k * d * d, left3 - k * d ** 3)

    rec(0, [], n, s1, s2, s3)
    return out


def degree_distribution_of(g: Graph) -> DegreeDistribution:
    degs = g.degrees()
    counts = [0] * (max(degs, default=0) + 1)
    for d in degs:
        counts[d] += 1
    return DegreeDistribution(tuple(counts))


@dataclass(frozen=True)
class BoundReport:
    mu1: float
    lower: int
    upper: int
    ok: bool


def check_spectral_bounds(g: Graph, tol: float = 1e-9) -> BoundReport:
    """Largest Laplacian eigenvalue against max degree and max edge degree-sum."""
    if g.m == 0:
        raise ValueError("bound check needs at least one edge")
    mu1 = eigenvalues_float(matrix_of(g, "laplacian")).values[0]
    lower = max(g.degrees())
    upper = max(g.degree(u) + g.degree(v) for u, v in g.edges())
    ok = lower < mu1 + tol and mu1 <= upper + tol
    return BoundReport(mu1=mu1, lower=lower, upper=upper, ok=ok)


def complement_spectrum(p: IntPolynomial, n: int | None = None) -> IntPolynomial:
    """L-char poly of the complement: ``x * (-1)^(n-1) * q(n - x)`` for ``p = x q``."""
    if p.coeffs[0] != 0:
        raise NotALaplacianPolynomial("0 is not a root")
    if n is None:
        n = p.degree
    if n != p.degree:
        raise ValueError("n must equal the polynomial degree")
    q = IntPolynomial(p.coeffs[1:])
    r = q.compose_linear(-1, n)
    sign = -1 if (n - 1) % 2 else 1
    return IntPolynomial((0,) + tuple(sign * c for c in r.coeffs))
