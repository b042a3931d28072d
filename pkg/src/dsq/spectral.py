"""Exact integer matrices, characteristic polynomials and power traces.

Everything on the exact path uses Python ints, so nothing overflows.
:func:`eigenvalues_float` is the only floating-point routine and exists for
the largest-eigenvalue bound checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Sequence

from .graph import Graph

KINDS = ("adjacency", "degree", "laplacian")


@dataclass(frozen=True)
class IntSymMatrix:
    rows: tuple[tuple[int, ...], ...]
    kind: str = "adjacency"

    def __post_init__(self) -> None:
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if len(r) != n:
                raise ValueError("matrix is not square")
            for j in range(i):
                if r[j] != self.rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
        if self.kind == "adjacency":
            if any(self.rows[i][i] for i in range(n)) or any(
                x not in (0, 1) for r in self.rows for x in r
            ):
                raise ValueError("adjacency matrix must be 0/1 with zero diagonal")
        elif self.kind == "laplacian":
            if any(sum(r) for r in self.rows) or any(self.rows[i][i] < 0 for i in range(n)):
                raise ValueError("laplacian rows must sum to 0 with nonnegative diagonal")
        elif self.kind != "degree":
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))


def matrix_of(g: Graph, kind: str = "adjacency") -> IntSymMatrix:
    n = g.n
    rows = []
    for v in range(n):
        r = [0] * n
        if kind in ("adjacency", "laplacian"):
            sign = 1 if kind == "adjacency" else -1
            for u in g.adj[v]:
                r[u] = sign
        if kind in ("degree", "laplacian"):
            r[v] = g.degree(v)
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        rows.append(tuple(r))
    return IntSymMatrix(tuple(rows), kind)


def _matmul_sym(p: list[list[int]], m: Sequence[Sequence[int]]) -> list[list[int]]:
    # m symmetric, so its rows double as its columns
    return [[sum(map(mul, row, col)) for col in m] for row in p]


def power_traces(m: IntSymMatrix, kmax: int) -> list[int]:
    """``[tr(M^0), tr(M^1), ..., tr(M^kmax)]``."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    out = [m.n, m.trace()]
    p = [list(r) for r in m.rows]
    for _ in range(2, kmax + 1):
        p = _matmul_sym(p, m.rows)
        out.append(sum(p[i][i] for i in range(m.n)))
    return out


# -- polynomials ----------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ``coeffs[i]`` multiplying ``x**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(_padd(list(self.coeffs), list(other.coeffs))))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(_pmul(list(self.coeffs), list(other.coeffs))))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def compose_linear(self, a: int, b: int) -> "IntPolynomial":
        """``p(a*x + b)``."""
        out = [0]
        for c in reversed(self.coeffs):
            out = _pmul(out, [b, a])
            out[0] += c
        return IntPolynomial(tuple(out))

    def shift(self, b: int) -> "IntPolynomial":
        """``p(x + b)``."""
        return self.compose_linear(1, b)

    def root_multiplicity_zero(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.degree + 1

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


X = IntPolynomial((0, 1))


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def interpolate_consecutive(values: Sequence[int]) -> IntPolynomial:
    """Integer polynomial with ``p(k) = values[k]`` for ``k = 0..len-1``.

    Newton forward differences, expanded over binomial polynomials. Raises if
    the interpolant does not have integer coefficients.
    """
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    out = [Fraction(0)] * len(values)
    falling = [1]  # x (x-1) ... (x-j+1)
    for j, d in enumerate(diffs):
        scale = Fraction(d, math.factorial(j))
        for i, c in enumerate(falling):
            out[i] += scale * c
        falling = _pmul(falling, [-j, 1])
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("interpolant has non-integer coefficients")
    return IntPolynomial(tuple(int(c) for c in out))


def char_poly(m: IntSymMatrix) -> IntPolynomial:
    """``det(xI - M)`` by evaluation at ``x = 0..n`` and exact interpolation."""
    n = m.n
    if n < 1:
        raise ValueError("empty matrix")
    vals = []
    for k in range(n + 1):
        shifted = [[(k if i == j else 0) - m.rows[i][j] for j in range(n)] for i in range(n)]
        vals.append(det_bareiss(shifted))
    p = interpolate_consecutive(vals)
    assert p.degree == n and p.coeffs[-1] == 1
    return p


def power_sums_from_poly(p: IntPolynomial, kmax: int) -> list[int]:
    """``[p_0, ..., p_kmax]`` root power sums of a monic polynomial (Newton)."""
    n = p.degree
    # e_i with det(xI - M) = sum_i (-1)^i e_i x^(n-i)
    e = [(-1) ** i * p.coeffs[n - i] for i in range(n + 1)]
    sums = [n]
    for k in range(1, kmax + 1):
        acc = (-1) ** (k - 1) * k * e[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            acc += (-1) ** (i - 1) * e[i] * sums[k - i]
        sums.append(acc)
    return sums


def poly_from_power_sums(sums: Sequence[int]) -> IntPolynomial:
    """Monic degree-``n`` polynomial from ``[n, p_1, ..., p_n]`` (Newton)."""
    n = sums[0]
    e = [1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * sums[i]
        q, r = divmod(acc, k)
        if r:
            raise ArithmeticError("power sums are not those of an integer polynomial")
        e.append(q)
    return IntPolynomial(tuple((-1) ** (n - j) * e[n - j] for j in range(n + 1)))


def tree_char_poly(parent: Sequence[int], kind: str = "laplacian") -> tuple[int, ...]:
    """``det(xI - M)`` coefficients for the Laplacian or adjacency matrix of a tree.

    The tree is a parent array with ``parent[0] == -1`` and ``parent[v] < v``.
    Eliminates leaves upward: for the subtree at ``v``, ``F_v = (x - M_vv)
    prod F_c - sum_c G_c prod_{c' != c} F_c'`` with ``G_c`` the product over
    ``c``'s children (off-diagonal entries are +-1 and enter squared).
    """
    if kind not in ("laplacian", "adjacency"):
        raise ValueError(f"unknown kind {kind!r}")
    lap = kind == "laplacian"
    n = len(parent)
    deg = [0] * n
    kids: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        p = parent[v]
        kids[p].append(v)
        deg[p] += 1
        deg[v] += 1
    F: list[list[int]] = [[]] * n
    G: list[list[int]] = [[]] * n
    for v in range(n - 1, -1, -1):
        ks = kids[v]
        prod = [1]
        cross = [0]
        for c in ks:
            # cross accumulates sum_c G_c prod_{c' != c} F_c' over children seen so far
            cross = _padd(_pmul(cross, F[c]), _pmul(prod, G[c]))
            prod = _pmul(prod, F[c])
        G[v] = prod
        F[v] = _padd(_pmul(prod, [-deg[v] if lap else 0, 1]), [-x for x in cross])
    return tuple(F[0])


def _padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def tree_parents(g: Graph, root: int = 0) -> list[int]:
    """Relabel a tree in BFS order; returns the parent array."""
    order, par = [root], {root: -1}
    for v in order:
        for u in g.adj[v]:
            if u not in par:
                par[u] = v
                order.append(u)
    if len(order) != g.n or g.m != g.n - 1:
        raise ValueError("not a tree")
    idx = {v: i for i, v in enumerate(order)}
    return [-1] + [idx[par[v]] for v in order[1:]]


# -- floating point -------------------------------------------------------

@dataclass(frozen=True)
class SpectrumFloat:
    values: tuple[float, ...]
    tol: float


def eigenvalues_float(m: IntSymMatrix, tol: float = 1e-12, max_sweeps: int = 100) -> SpectrumFloat:
    """Cyclic Jacobi eigenvalues, sorted descending."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = m.n
    a = [[float(x) for x in r] for r in m.rows]
    for _ in range(max_sweeps):
        off = max((abs(a[i][j]) for i in range(n) for j in range(i + 1, n)), default=0.0)
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[p], a[q]
                for k in range(n):
                    akp, akq = ap[k], aq[k]
                    ap[k] = c * akp - s * akq
                    aq[k] = s * akp + c * akq
                for k in range(n):
                    rk = a[k]
                    akp, akq = rk[p], rk[q]
                    rk[p] = c * akp - s * akq
                    rk[q] = s * akp + c * akq
                a[p][q] = a[q][p] = 0.0
    else:
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")
    vals = tuple(sorted((a[i][i] for i in range(n)), reverse=True))
    return SpectrumFloat(vals, tol)
