"""Immutable simple graphs, named builders and derived graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Use
    :meth:`from_edges` rather than the raw constructor.
    """

    adj: tuple[tuple[int, ...], ...]
    _edges: tuple[tuple[int, int], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.adj)
        edges = []
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if u <= prev:
                    raise ValueError(f"neighbours of {v} not strictly sorted")
                prev = u
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
                if v < u:
                    edges.append((v, u))
        object.__setattr__(self, "_edges", tuple(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"multi-edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for u, v in self._edges:
            for w in self.adj[v]:
                if w > v and u in self.adj[w]:
                    out.append((u, v, w))
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


# -- builders ---------------------------------------------------------------

FAMILIES = ("path", "cycle", "star", "triangle", "centipede", "empty", "complete")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise ValueError("star needs at least 2 vertices")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative order")
    return Graph(tuple(() for _ in range(n)))


def centipede(n: int) -> Graph:
    """Path on ``n/2 + 1`` vertices with a pendant on each internal vertex.

    Spine vertices are ``0..n/2``; the pendant of spine vertex ``i`` is
    ``n/2 + i``. ``centipede(2)`` is ``P_2``.
    """
    if n < 2 or n % 2:
        raise ValueError(f"centipede needs an even order >= 2, got {n}")
    k = n // 2 + 1
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(i, k - 1 + i) for i in range(1, k - 1)]
    return Graph.from_edges(n, edges)


def build(kind: str, size: int) -> Graph:
    if kind == "triangle":
        if size not in (3, 0):
            raise ValueError("triangle has exactly 3 vertices")
        return complete(3)
    builders = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "centipede": centipede,
        "empty": empty,
        "complete": complete,
    }
    try:
        fn = builders[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}") from None
    return fn(size)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph.from_edges(off, edges)


# -- derived graphs ---------------------------------------------------------

def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(tuple(
        tuple(u for u in range(n) if u != v and u not in g.adj[v]) for v in range(n)
    ))


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is ``g.edges()[i]``."""
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        pairs.update(combinations(inc, 2))
    return Graph.from_edges(len(edges), sorted(pairs))


def maximal_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting; cliques come out sorted."""
    nbrs = [set(a) for a in g.adj]

    def expand(r: list[int], p: set[int], x: set[int]) -> Iterator[tuple[int, ...]]:
        if not p and not x:
            yield tuple(sorted(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & nbrs[u]), -u))
        for v in sorted(p - nbrs[pivot]):
            yield from expand(r + [v], p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    yield from expand([], set(range(g.n)), set())


def clique_graph(g: Graph) -> tuple[Graph, list[tuple[int, ...]]]:
    """Clique graph K(g) and the maximal cliques indexing its vertices.

    Isolated vertices are singleton cliques. Vertex order is discovery order.
    """
    cliques = list(maximal_cliques(g))
    sets = [set(c) for c in cliques]
    edges = [(i, j) for i, j in combinations(range(len(cliques)), 2) if sets[i] & sets[j]]
    return Graph.from_edges(len(cliques), edges), cliques
