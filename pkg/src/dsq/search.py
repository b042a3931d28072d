"""Cospectral-class searches over tree streams, triangle chains and graph6 files."""

from __future__ import annotations

import json
import multiprocessing as mp
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, Sequence

from . import __version__
from .graph import Graph
from .graph6 import Graph6Error, decode, encode_str, iter_records
from .spectral import char_poly, matrix_of, tree_char_poly, tree_parents
from .trees import (
    MAX_TREE_ORDER,
    K_inverse,
    enumerate_trees,
    free_tree_parents,
    parents_to_graph,
)

MAX_TCHAIN_T = 10
MAX_WITNESSES = 2


@dataclass
class CospectralClass:
    fingerprint: list[int]
    size: int
    witnesses: list[str]


@dataclass
class TargetResult:
    graph6: str
    fingerprint: list[int]
    class_size: int
    members: list[str]


@dataclass
class SearchReport:
    graph_class: str
    orders: list[int] | None
    matrix: str
    scanned: int
    classes: list[CospectralClass]
    target: TargetResult | None = None
    errors: list[str] = field(default_factory=list)
    timing: float = 0.0
    version: str = __version__
    search_id: str = "search"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        d = dict(d)
        d["classes"] = [CospectralClass(**c) for c in d["classes"]]
        if d.get("target") is not None:
            d["target"] = TargetResult(**d["target"])
        return cls(**d)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, s: str) -> "SearchReport":
        return cls.from_dict(json.loads(s))

    def nontrivial(self) -> list[CospectralClass]:
        return [c for c in self.classes if c.size > 1]


def fingerprint(g: Graph, matrix: str = "laplacian") -> tuple[int, ...]:
    return char_poly(matrix_of(g, matrix)).coeffs


# -- streams ----------------------------------------------------------------
#
# Each item is (index, fingerprint, graph6-thunk). Workers keep the items whose
# index is congruent to their shard number, so every worker sees the same
# global numbering and the merge is independent of the worker count.

def _tree_items(orders: Sequence[int], matrix: str, shard: int, nshards: int):
    idx = 0
    for n in orders:
        for par in free_tree_parents(n):
            if idx % nshards == shard:
                yield idx, tree_char_poly(par, matrix), (lambda p=par: encode_str(parents_to_graph(p)))
            idx += 1


def _tchain_items(orders: Sequence[int], matrix: str, shard: int, nshards: int):
    idx = 0
    for t in orders:
        for tree in enumerate_trees(t, dmax=3):
            if idx % nshards == shard:
                g = K_inverse(tree).graph
                yield idx, fingerprint(g, matrix), (lambda g=g: encode_str(g))
            idx += 1


def _g6_items(path: str, orders: Sequence[int] | None, matrix: str, shard: int,
              nshards: int, errors: list[tuple[int, int, str]]):
    wanted = set(orders) if orders else None
    for idx, (lineno, rec) in enumerate(iter_records(path)):
        if idx % nshards != shard:
            continue
        try:
            g = decode(rec)
        except Graph6Error as exc:
            errors.append((lineno, exc.offset, exc.msg))
            continue
        if wanted is not None and g.n not in wanted:
            continue
        yield idx, fingerprint(g, matrix), (lambda r=rec: r.decode("ascii"))


def _scan(job: tuple) -> dict:
    graph_class, orders, matrix, target_fp, shard, nshards, skip_bad, keep_all = job
    errors: list[tuple[int, int, str]] = []
    if graph_class == "trees":
        items: Iterator = _tree_items(orders, matrix, shard, nshards)
    elif graph_class == "tchains":
        items = _tchain_items(orders, matrix, shard, nshards)
    else:
        items = _g6_items(graph_class[3:], orders, matrix, shard, nshards, errors)
    classes: dict[tuple[int, ...], list] = {}
    target_members: list[tuple[int, str]] = []
    scanned = 0
    for idx, fp, g6 in items:
        if errors and not skip_bad:
            break
        scanned += 1
        entry = classes.get(fp)
        if entry is None:
            entry = classes[fp] = [0, []]
        entry[0] += 1
        if keep_all or len(entry[1]) < MAX_WITNESSES:
            entry[1].append((idx, g6()))
        if fp == target_fp:
            target_members.append((idx, g6()))
    return {"classes": classes, "target": target_members, "scanned": scanned, "errors": errors}


def _merge(parts: list[dict], keep_all: bool) -> dict:
    classes: dict[tuple[int, ...], list] = {}
    target: list[tuple[int, str]] = []
    errors: list[tuple[int, int, str]] = []
    scanned = 0
    for part in parts:
        scanned += part["scanned"]
        target += part["target"]
        errors += part["errors"]
        for fp, (size, wit) in part["classes"].items():
            entry = classes.setdefault(fp, [0, []])
            entry[0] += size
            entry[1] += wit
    for entry in classes.values():
        entry[1].sort()
        if not keep_all:
            del entry[1][MAX_WITNESSES:]
    return {"classes": classes, "target": sorted(target), "scanned": scanned,
            "errors": sorted(errors)}


def run_cospectral_search(
    graph_class: str,
    orders: Sequence[int] | None,
    matrix: str = "laplacian",
    target: Graph | None = None,
    workers: int = 1,
    skip_bad: bool = False,
    keep_all: bool = False,
) -> SearchReport:
    """Group a graph stream by exact characteristic polynomial.

    ``graph_class`` is ``"trees"``, ``"tchains"`` (orders are triangle counts)
    or ``"g6:<path>"``. With a target, its class is reported in full.
    """
    if matrix not in ("laplacian", "adjacency"):
        raise ValueError(f"unknown matrix {matrix!r}")
    if graph_class == "trees":
        if not orders or max(orders) > MAX_TREE_ORDER:
            raise ValueError(f"tree orders must be given and <= {MAX_TREE_ORDER}")
    elif graph_class == "tchains":
        if not orders or max(orders) > MAX_TCHAIN_T:
            raise ValueError(f"triangle counts must be given and <= {MAX_TCHAIN_T}")
    elif graph_class.startswith("g6:"):
        with open(graph_class[3:], "rb"):
            pass
    else:
        raise ValueError(f"unknown graph class {graph_class!r}")
    orders = sorted(orders) if orders else None

    start = time.perf_counter()
    target_fp = fingerprint(target, matrix) if target is not None else None
    jobs = [(graph_class, orders, matrix, target_fp, w, workers, skip_bad, keep_all)
            for w in range(workers)]
    if workers == 1:
        parts = [_scan(jobs[0])]
    else:
        with mp.get_context("fork").Pool(workers) as pool:
            parts = pool.map(_scan, jobs)
    merged = _merge(parts, keep_all)
    if merged["errors"] and not skip_bad:
        line, offset, msg = merged["errors"][0]
        raise Graph6Error(msg, offset, line)

    classes = [
        CospectralClass(fingerprint=list(fp), size=size, witnesses=[w for _, w in wit])
        for fp, (size, wit) in sorted(merged["classes"].items())
    ]
    tres = None
    if target is not None:
        tres = TargetResult(
            graph6=encode_str(target),
            fingerprint=list(target_fp),
            class_size=len(merged["target"]),
            members=[w for _, w in merged["target"]],
        )
    return SearchReport(
        graph_class=graph_class,
        orders=list(orders) if orders else None,
        matrix=matrix,
        scanned=merged["scanned"],
        classes=classes,
        target=tres,
        errors=[str(Graph6Error(msg, off, line)) for line, off, msg in merged["errors"]],
        timing=time.perf_counter() - start,
    )


def tree_fingerprint(g: Graph, matrix: str = "laplacian") -> tuple[int, ...]:
    """Fast-route fingerprint for a tree; equals :func:`fingerprint`."""
    return tree_char_poly(tree_parents(g), matrix)
