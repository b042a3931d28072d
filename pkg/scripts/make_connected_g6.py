#!/usr/bin/env python3
"""Write every connected graph on 1..N vertices to a graph6 file.

Graphs on k+1 vertices come from graphs on k vertices plus one new vertex
joined to every possible neighbour subset, deduplicated by canonical label.
Slow but simple; N=8 takes well under a minute, N=9 about six minutes.
Compress the output with gzip if you like; the reader handles ``.gz``.

    python scripts/make_connected_g6.py 8 tests/data/connected_le8.g6
    python scripts/make_connected_g6.py 9 /tmp/le9.g6 && gzip -9 -c /tmp/le9.g6 > tests/data/connected_le9.g6.gz
"""

from __future__ import annotations

import argparse
import time
from itertools import combinations

from dsq.canon import canonical_label
from dsq.graph import Graph
from dsq.graph6 import HEADER, encode_str

# all graphs / connected graphs on n vertices, n = 1..10
ALL_GRAPHS = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571]


def grow(graphs: list[Graph]) -> list[Graph]:
    k = graphs[0].n
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        base = list(g.edges())
        for r in range(k + 1):
            for nbrs in combinations(range(k), r):
                h = Graph.from_edges(k + 1, base + [(v, k) for v in nbrs])
                seen.setdefault(canonical_label(h), h)
    return list(seen.values())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("nmax", type=int)
    ap.add_argument("out")
    args = ap.parse_args()

    level = [Graph.from_edges(1, [])]
    with open(args.out, "w") as fh:
        fh.write(HEADER.decode() + "\n")
        for n in range(1, args.nmax + 1):
            start = time.perf_counter()
            if n > 1:
                level = grow(level)
            conn = sorted(encode_str(g) for g in level if g.is_connected())
            assert len(level) == ALL_GRAPHS[n - 1], (n, len(level))
            assert len(conn) == CONNECTED[n - 1], (n, len(conn))
            fh.writelines(s + "\n" for s in conn)
            print(f"n={n}: {len(level)} graphs, {len(conn)} connected "
                  f"({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
