"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import networkx as nx
import numpy as np

from dsq.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), ((idx[u], idx[v]) for u, v in h.edges()))


def faddeev_leverrier(rows) -> list[int]:
    """det(xI - M) coefficients, low to high, over exact rationals."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = m
        m = [[sum(a[i][l] * prev[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def matrix_power_trace(rows, k: int) -> int:
    a = np.array(rows, dtype=object)
    p = np.identity(len(rows), dtype=object)
    for _ in range(k):
        p = p.dot(a)
    return int(sum(p[i, i] for i in range(len(rows))))


def numpy_eigenvalues(rows) -> list[float]:
    return sorted(np.linalg.eigvalsh(np.array(rows, dtype=float)), reverse=True)


def spanning_trees_deletion_contraction(n: int, edges: list[tuple[int, int]]) -> int:
    """tau(G) = tau(G - e) + tau(G / e) on multigraphs; loops dropped."""
    edges = [(u, v) for u, v in edges if u != v]
    if n == 1:
        return 1
    if not edges:
        return 0
    # connectivity shortcut keeps the recursion small
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    if not nx.is_connected(g):
        return 0
    (u, v), rest = edges[0], edges[1:]
    deleted = spanning_trees_deletion_contraction(n, rest)
    # contract v into u, renumber so vertices stay 0..n-2
    ren = {}
    for w in range(n):
        if w == v:
            continue
        ren[w] = len(ren)
    ren[v] = ren[u]
    contracted = [(ren[a], ren[b]) for a, b in rest]
    return deleted + spanning_trees_deletion_contraction(n - 1, contracted)


def brute_force_subgraph_count(host: Graph, pattern: Graph) -> int:
    """Edge subsets of the host's size |E(pattern)| that form a copy of pattern."""
    pn = to_nx(pattern)
    count = 0
    for es in combinations(host.edges(), pattern.m):
        verts = {x for e in es for x in e}
        if len(verts) != pattern.n:
            continue
        h = nx.Graph()
        h.add_edges_from(es)
        if nx.is_isomorphic(h, pn):
            count += 1
    return count


def naive_covering_walks(g: Graph, k: int) -> int:
    """Enumerate every closed k-walk by DFS and keep those covering all edges."""
    full = set(g.edges())
    total = 0

    def dfs(start: int, v: int, steps: int, used: frozenset) -> None:
        nonlocal total
        if steps == k:
            if v == start and used == full:
                total += 1
            return
        for u in g.adj[v]:
            dfs(start, u, steps + 1, used | {(min(u, v), max(u, v))})

    for s in range(g.n):
        dfs(s, s, 0, frozenset())
    return total


def all_labelled_trees(n: int):
    """Every labelled tree on n vertices via Pruefer sequences."""
    from dsq.trees import prufer_to_tree

    if n == 1:
        yield Graph.from_edges(1, [])
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(list(seq))


def free_tree_count_by_growth(nmax: int) -> dict[int, int]:
    """Free tree counts by adding a leaf everywhere and deduplicating with networkx."""
    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, nmax + 1):
        reps: list[nx.Graph] = []
        buckets: dict[tuple, list[nx.Graph]] = {}
        for t in levels[n - 1]:
            for v in list(t.nodes()):
                h = t.copy()
                h.add_edge(v, n - 1)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, r) for r in bucket):
                    bucket.append(h)
                    reps.append(h)
        levels[n] = reps
    return {n: len(v) for n, v in levels.items()}


def fraction_det(rows) -> int:
    """Determinant by plain Gaussian elimination over exact rationals."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    assert det.denominator == 1
    return int(det)


def cofactor_spanning_trees(g: Graph) -> int:
    """Matrix-tree theorem: any Laplacian cofactor, here the last one."""
    if g.n == 1:
        return 1
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        lap[u][v] = lap[v][u] = -1
        lap[u][u] += 1
        lap[v][v] += 1
    return fraction_det([r[:-1] for r in lap[:-1]])
