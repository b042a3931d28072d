"""Covering closed walks, motif censuses of triangle chains, and the 7-walk formula.

Walks are counted per (start vertex, step sequence), the same convention as
``tr(A^k)``, so ``tr(A^k) = sum_M w_k(M) |M(G)|`` holds term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .canon import canonical_label
from .graph import Graph
from .motifs import MOTIFS, Motif, count_subgraphs
from .spectral import matrix_of, power_traces
from .trees import TriangleChainProfile, profile_of

MAX_K = 12
MAX_EDGES = 12


def covering_walk_count(motif: Motif | Graph, k: int) -> int:
    """Closed k-walks of the graph that traverse every edge at least once."""
    g = motif.graph if isinstance(motif, Motif) else motif
    if k > MAX_K or g.m > MAX_EDGES:
        raise ValueError(f"state space too large (k <= {MAX_K}, |E| <= {MAX_EDGES})")
    if g.m == 0 or k < g.m:
        return 0
    if not g.is_connected():
        raise ValueError("graph must be connected")
    eid = {e: i for i, e in enumerate(g.edges())}
    step = [[(u, 1 << eid[(min(u, v), max(u, v))]) for u in g.adj[v]] for v in range(g.n)]
    full = (1 << g.m) - 1
    total = 0
    for s in range(g.n):
        states = {(s, 0): 1}
        for _ in range(k):
            nxt: dict[tuple[int, int], int] = {}
            for (v, mask), c in states.items():
                for u, bit in step[v]:
                    key = (u, mask | bit)
                    nxt[key] = nxt.get(key, 0) + c
            states = nxt
        total += states.get((s, full), 0)
    return total


@dataclass(frozen=True)
class MotifCensus:
    """Subgraph counts of T, T1, T2, T3, T4 (in that order)."""

    counts: tuple[int, int, int, int, int]
    predicted: tuple[int, int, int, int, int]
    profile: TriangleChainProfile


def predicted_census(profile: TriangleChainProfile) -> tuple[int, int, int, int, int]:
    """Closed-form motif counts for a triangle chain with this profile."""
    t, t2, t3 = profile.t, profile.t2, profile.t3
    if t == 1:
        return (1, 0, 0, 0, 0)
    return (t, 2 * (2 * t - 2), 2 * t - 2, 4 * t2 + 12 * t3, 4 * (2 * t - 3 + t3))


def census_of(g: Graph) -> MotifCensus:
    prof = profile_of(g)
    counts = tuple(count_subgraphs(g, m) for m in MOTIFS)
    pred = predicted_census(prof)
    if counts != pred:
        raise AssertionError(f"census {counts} disagrees with closed form {pred}")
    return MotifCensus(counts=counts, predicted=pred, profile=prof)


def walk_decomposition_residual(g: Graph, k: int, motifs: Iterable[Motif | Graph] = MOTIFS) -> int:
    """``tr(A^k) - sum_M w_k(M) |M(G)|``; zero certifies the decomposition."""
    closed = power_traces(matrix_of(g, "adjacency"), k)[k]
    return closed - sum(covering_walk_count(m, k) * count_subgraphs(g, m) for m in motifs)


def lemma7_value(t: int, t3: int) -> int:
    """Number of closed 7-walks in a triangle chain with ``t >= 2`` triangles."""
    if t < 2:
        raise ValueError("formula holds for chains of at least two triangles")
    if not 0 <= t3 <= (t - 2) // 2:
        raise ValueError(f"t3={t3} not admissible for t={t}")
    return 686 * t - 672 + 112 * t3


def connected_edge_subgraphs(g: Graph, max_edges: int) -> list[Graph]:
    """Every connected subgraph (given by its edge set) with 1..max_edges edges."""
    edges = g.edges()
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    seen: set[frozenset[int]] = set()
    frontier = [frozenset([i]) for i in range(len(edges))]
    seen.update(frontier)
    while frontier:
        nxt = []
        for es in frontier:
            if len(es) >= max_edges:
                continue
            verts = {x for i in es for x in edges[i]}
            for v in verts:
                for j in inc[v]:
                    if j not in es:
                        grown = es | {j}
                        if grown not in seen:
                            seen.add(grown)
                            nxt.append(grown)
        frontier = nxt
    out = []
    for es in sorted(seen, key=lambda s: (len(s), sorted(s))):
        verts = sorted({x for i in es for x in edges[i]})
        idx = {v: i for i, v in enumerate(verts)}
        out.append(Graph.from_edges(len(verts), ((idx[edges[i][0]], idx[edges[i][1]]) for i in es)))
    return out


def covering_support(g: Graph, k: int) -> dict[bytes, Graph]:
    """Isomorphism types of subgraphs of ``g`` admitting a covering closed k-walk."""
    found: dict[bytes, Graph] = {}
    checked: set[bytes] = set()
    for sub in connected_edge_subgraphs(g, k):
        lab = canonical_label(sub)
        if lab in checked:
            continue
        checked.add(lab)
        if covering_walk_count(sub, k) > 0:
            found[lab] = sub
    return found
