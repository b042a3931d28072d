"""Free trees, triangle chains and the clique-graph bijection between them."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_label
from .graph import Graph, centipede, clique_graph

MAX_TREE_ORDER = 22


# -- free tree enumeration --------------------------------------------------
#
# Level sequences (preorder depths) of rooted trees, stepped with the
# Beyer-Hedetniemi successor and filtered to the centre-rooted canonical
# representative of each free tree (Wright, Richmond, Odlyzko, McKay).

def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Leftmost root subtree (re-based to depth 0) and the remainder."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    hl, hr = max(left), max(rest)
    valid = hr > hl or (hr == hl and (len(left) < len(rest)
                                      or (len(left) == len(rest) and left <= rest)))
    if valid:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _levels_to_parents(levels: list[int]) -> list[int]:
    parent = [-1] * len(levels)
    last_at = [0] * (max(levels) + 1)
    for i, d in enumerate(levels):
        if d:
            parent[i] = last_at[d - 1]
        last_at[d] = i
    return parent


def free_tree_parents(n: int) -> Iterator[list[int]]:
    """Parent arrays (preorder, ``parent[0] == -1``) of all free trees on n vertices."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}")
    if n <= 3:
        yield [-1] + list(range(n - 1))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            return
        yield _levels_to_parents(levels)
        levels = _next_rooted(levels)


def parents_to_graph(parent: list[int]) -> Graph:
    return Graph.from_edges(len(parent), ((parent[v], v) for v in range(1, len(parent))))


def enumerate_trees(n: int, dmax: int | None = None) -> Iterator[Graph]:
    """Pairwise non-isomorphic trees on ``n`` vertices, optionally degree-capped."""
    if dmax is not None and dmax < 2:
        raise ValueError("dmax must be at least 2")
    for par in free_tree_parents(n):
        if dmax is not None:
            deg = [0] * n
            for v in range(1, n):
                deg[v] += 1
                deg[par[v]] += 1
            if max(deg) > dmax:
                continue
        yield parents_to_graph(par)


def random_tree(rng, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a random Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_to_tree(seq)


def prufer_to_tree(seq: list[int]) -> Graph:
    n = len(seq) + 2
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


# -- triangle chains --------------------------------------------------------

class NotATriangleChain(ValueError):
    pass


@dataclass(frozen=True)
class TriangleChainProfile:
    t: int
    t1: int
    t2: int
    t3: int


@dataclass(frozen=True)
class TriangleChain:
    graph: Graph
    profile: TriangleChainProfile
    tree: Graph


def triangle_chain_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """The triangles of ``g`` if ``g`` is a triangle chain, else raise.

    Checks: connected, every edge in exactly one triangle, every vertex in at
    most two triangles, and ``n = 2t + 1`` (so the block tree has no cycles).
    """
    tris = g.triangles()
    t = len(tris)
    if t == 0 or not g.is_connected():
        raise NotATriangleChain("not a connected graph with triangles")
    if g.m != 3 * t or g.n != 2 * t + 1:
        raise NotATriangleChain(f"n={g.n}, m={g.m} inconsistent with {t} triangles")
    per_edge: dict[tuple[int, int], int] = {}
    per_vertex = [0] * g.n
    for a, b, c in tris:
        for e in ((a, b), (a, c), (b, c)):
            per_edge[e] = per_edge.get(e, 0) + 1
        for v in (a, b, c):
            per_vertex[v] += 1
    if len(per_edge) != g.m or any(k != 1 for k in per_edge.values()):
        raise NotATriangleChain("some edge is not in exactly one triangle")
    if max(per_vertex) > 2:
        raise NotATriangleChain("a vertex lies in three or more triangles")
    return tris


def K_map(g: Graph) -> Graph:
    """Clique graph of a triangle chain; a tree of max degree 3."""
    triangle_chain_triangles(g)
    k, cliques = clique_graph(g)
    assert all(len(c) == 3 for c in cliques)
    return k


def profile_of(g: Graph) -> TriangleChainProfile:
    k = K_map(g)
    counts = [0] * 4
    for d in k.degrees():
        counts[d] += 1
    return TriangleChainProfile(t=k.n, t1=counts[1], t2=counts[2], t3=counts[3])


def K_inverse(tree: Graph) -> TriangleChain:
    """Triangle chain whose clique graph is ``tree``.

    Tree vertex ``a`` owns triangle slots ``3a, 3a+1, 3a+2``; its incident
    edges (in sorted neighbour order) consume slots 1 and 2 and then 0, and
    each edge glues one slot of each end.
    """
    if not tree.is_tree():
        raise ValueError("K_inverse needs a tree")
    if max(tree.degrees(), default=0) > 3:
        raise ValueError("K_inverse needs max degree <= 3")
    t = tree.n
    rep = list(range(3 * t))

    def find(x: int) -> int:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    slot_order = (1, 2, 0)
    used = [0] * t
    slot_of: dict[tuple[int, int], int] = {}
    for a in range(t):
        for b in tree.adj[a]:
            slot_of[(a, b)] = 3 * a + slot_order[used[a]]
            used[a] += 1
    for a, b in tree.edges():
        x, y = find(slot_of[(a, b)]), find(slot_of[(b, a)])
        rep[max(x, y)] = min(x, y)
    label: dict[int, int] = {}
    for s in range(3 * t):
        label.setdefault(find(s), len(label))
    edges = []
    for a in range(t):
        x, y, z = (label[find(3 * a + i)] for i in range(3))
        edges += [(x, y), (x, z), (y, z)]
    g = Graph.from_edges(len(label), edges)
    counts = [0] * 4
    for d in tree.degrees():
        counts[d] += 1
    prof = TriangleChainProfile(t=t, t1=counts[1], t2=counts[2], t3=counts[3])
    return TriangleChain(graph=g, profile=prof, tree=tree)


def enumerate_triangle_chains(t: int) -> Iterator[TriangleChain]:
    """All of T_t, one per tree in A_t."""
    for tree in enumerate_trees(t, dmax=3):
        yield K_inverse(tree)


def triangle_path(k: int) -> Graph:
    """``K^{-1}(P_k)``: a chain of ``k`` triangles glued end to end."""
    from .graph import path
    return K_inverse(path(k)).graph


# -- centipedes -------------------------------------------------------------

def is_centipede(g: Graph) -> bool:
    n = g.n
    if n < 2 or n % 2 or not g.is_tree():
        return False
    return canonical_label(g) == canonical_label(centipede(n))


def contains_obstruction_H(g: Graph) -> bool:
    """Whether the tree contains the spider S(2,2,2).

    In a tree this is the same as some vertex having three non-leaf neighbours.
    """
    if not g.is_tree():
        raise ValueError("obstruction test needs a tree")
    for v in range(g.n):
        if sum(1 for u in g.adj[v] if g.degree(u) >= 2) >= 3:
            return True
    return False


def spider(*legs: int) -> Graph:
    """Centre 0 with one path of each given length."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph.from_edges(nxt, edges)
