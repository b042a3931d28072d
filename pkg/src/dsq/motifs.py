"""The five triangle motifs and (non-induced) subgraph counting."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Motif:
    name: str
    graph: Graph


_TRI = [(0, 1), (0, 2), (1, 2)]

T = Motif("T", Graph.from_edges(3, _TRI))
# triangle plus one pendant edge (paw)
T1 = Motif("T1", Graph.from_edges(4, _TRI + [(2, 3)]))
# two pendants on the same triangle vertex (cricket)
T2 = Motif("T2", Graph.from_edges(5, _TRI + [(0, 3), (0, 4)]))
# pendants on two distinct triangle vertices (bull)
T3 = Motif("T3", Graph.from_edges(5, _TRI + [(0, 3), (1, 4)]))
# two-edge tail (tadpole)
T4 = Motif("T4", Graph.from_edges(5, _TRI + [(0, 3), (3, 4)]))

MOTIFS = (T, T1, T2, T3, T4)


def _as_graph(m: Motif | Graph) -> Graph:
    return m.graph if isinstance(m, Motif) else m


def _search_order(pattern: Graph) -> list[int]:
    """BFS from a max-degree vertex so every later vertex has an earlier neighbour."""
    start = max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))
    order, seen = [start], {start}
    for v in order:
        for u in sorted(pattern.adj[v], key=lambda u: -pattern.degree(u)):
            if u not in seen:
                seen.add(u)
                order.append(u)
    if len(order) != pattern.n:
        raise ValueError("pattern must be connected")
    return order


def count_embeddings(pattern: Graph, host: Graph) -> int:
    """Injective maps V(pattern) -> V(host) sending edges to edges."""
    if pattern.n == 0:
        return 1
    if pattern.n > host.n or pattern.m > host.m:
        return 0
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in pattern.adj[v] if pos[u] < i] for i, v in enumerate(order)]
    deg = [pattern.degree(v) for v in order]
    host_nbrs = [set(a) for a in host.adj]
    img = [0] * len(order)
    used = [False] * host.n

    def extend(i: int) -> int:
        if i == len(order):
            return 1
        if back[i]:
            cand = host.adj[img[back[i][0]]]
        else:
            cand = range(host.n)
        total = 0
        for x in cand:
            if used[x] or host.degree(x) < deg[i]:
                continue
            if all(img[j] in host_nbrs[x] for j in back[i][1:]):
                img[i] = x
                used[x] = True
                total += extend(i + 1)
                used[x] = False
        return total

    return extend(0)


def automorphism_count(g: Graph) -> int:
    return count_embeddings(g, g)


def count_subgraphs(host: Graph, motif: Motif | Graph) -> int:
    """Number of distinct subgraphs of ``host`` isomorphic to ``motif``."""
    p = _as_graph(motif)
    emb = count_embeddings(p, host)
    aut = automorphism_count(p)
    q, r = divmod(emb, aut)
    assert r == 0, "embedding count not divisible by |Aut|"
    return q
