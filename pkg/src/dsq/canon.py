"""Canonical labels: AHU codes for forests, individualization-refinement otherwise.

Two graphs get equal labels iff they are isomorphic. Labels are plain bytes
and stable across runs and Python versions.
"""

from __future__ import annotations

from .graph import Graph


def _centers(g: Graph, comp: list[int]) -> list[int]:
    if len(comp) <= 2:
        return list(comp)
    deg = {v: g.degree(v) for v in comp}
    leaves = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for u in g.adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return leaves


def _rooted_code(g: Graph, root: int) -> str:
    # iterative post-order; deep paths would overflow the recursion limit
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in g.adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    codes: dict[int, list[str]] = {v: [] for v in order}
    for v in reversed(order):
        code = "(" + "".join(sorted(codes[v])) + ")"
        if parent[v] >= 0:
            codes[parent[v]].append(code)
        else:
            return code
    raise AssertionError("unreachable")


def forest_code(g: Graph) -> str:
    """AHU encoding of a forest, minimised over centres of each component."""
    comps = []
    for comp in g.components():
        comps.append(min(_rooted_code(g, c) for c in _centers(g, comp)))
    return "".join(sorted(comps))


# -- general graphs -------------------------------------------------------

def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order depends only on invariants."""
    while True:
        where = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                cnt = [0] * k
                for u in g.adj[v]:
                    cnt[where[u]] += 1
                sig.setdefault(tuple(cnt), []).append(v)
            for key in sorted(sig):
                out.append(sig[key])
        if len(out) == k:
            return out
        cells = out


def _certificate(g: Graph, order: list[int]) -> int:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    n = g.n
    bits = 0
    for u, v in g.edges():
        i, j = sorted((pos[u], pos[v]))
        # column-major upper triangle, so (0,1) is the most significant bit
        bits |= 1 << (n * n - (j * (j - 1) // 2 + i) - 1)
    return bits


def _orbit_rep(gens: list[list[int]], fixed: list[int], n: int) -> list[int]:
    """Union-find representatives under generators fixing ``fixed`` pointwise."""
    rep = list(range(n))

    def find(x: int) -> int:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for gamma in gens:
        if any(gamma[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                rep[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best: int | None = None
        self.best_order: list[int] = []
        self.first: int | None = None
        self.first_order: list[int] = []
        self.gens: list[list[int]] = []

    def _leaf(self, order: list[int]) -> None:
        cert = _certificate(self.g, order)
        if self.first is None:
            self.first, self.first_order = cert, order
            self.best, self.best_order = cert, order
            return
        for ref_cert, ref_order in ((self.first, self.first_order), (self.best, self.best_order)):
            if cert == ref_cert:
                gamma = [0] * self.g.n
                for a, b in zip(ref_order, order):
                    gamma[a] = b
                self.gens.append(gamma)
                return
        if cert < self.best:
            self.best, self.best_order = cert, order

    def run(self, cells: list[list[int]], path: list[int]) -> None:
        cells = _refine(self.g, cells)
        if len(cells) == self.g.n:
            self._leaf([c[0] for c in cells])
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if tried:
                reps = _orbit_rep(self.gens, path, self.g.n)
                if any(reps[v] == reps[w] for w in tried):
                    continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            self.run(cells[:idx] + [[v], rest] + cells[idx + 1:], path + [v])


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose induced labelling is canonical (general route)."""
    if g.n == 0:
        return []
    s = _Search(g)
    s.run([list(range(g.n))], [])
    return s.best_order


def canonical_label(g: Graph) -> bytes:
    if g.is_forest():
        return b"F" + forest_code(g).encode("ascii")
    order = canonical_order(g)
    cert = _certificate(g, order)
    nbytes = (g.n * g.n + 7) // 8
    return b"G" + g.n.to_bytes(2, "big") + cert.to_bytes(nbytes, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_label(g) == canonical_label(h)
