#!/usr/bin/env python3
"""Look for Laplacian mates of the centipede among all trees of given orders.

The test suite covers even n up to 18; this script is for the longer runs.

    python scripts/centipede_search.py 20 --workers 4 --json /tmp/n20.json
"""

from __future__ import annotations

import argparse
import json
import time

from dsq.graph import centipede
from dsq.search import run_cospectral_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("orders", type=int, nargs="+", help="even tree orders")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", help="write one summary record per order here")
    args = ap.parse_args()

    rows = []
    for n in args.orders:
        if n % 2 or n < 2:
            ap.error(f"centipedes need an even order, got {n}")
        start = time.perf_counter()
        rep = run_cospectral_search("trees", [n], "laplacian", target=centipede(n),
                                    workers=args.workers)
        row = {
            "n": n,
            "trees": rep.scanned,
            "classes": len(rep.classes),
            "nontrivial_classes": len(rep.nontrivial()),
            "centipede_class_size": rep.target.class_size,
            "mates": [m for m in rep.target.members if m != rep.target.graph6],
            "seconds": round(time.perf_counter() - start, 1),
        }
        rows.append(row)
        verdict = "alone" if row["centipede_class_size"] == 1 else "HAS MATES"
        print(f"n={n}: {row['trees']} trees, {row['classes']} classes, "
              f"centipede {verdict} ({row['seconds']}s)", flush=True)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
