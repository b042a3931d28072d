"""Named verification suites; each check yields one :class:`SuiteResult`."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from typing import Callable, Iterator

from .canon import canonical_label
from .graph import Graph, centipede, complement, line_graph
from .graph6 import decode, encode_str
from .invariants import (
    check_spectral_bounds,
    complement_spectrum,
    degree_moment_sums,
    derive_basic_invariants,
    solve_degree_distribution,
)
from .motifs import MOTIFS
from .search import run_cospectral_search
from .spectral import X, char_poly, det_bareiss, matrix_of, power_traces
from .trees import (
    contains_obstruction_H,
    enumerate_triangle_chains,
    enumerate_trees,
    is_centipede,
    random_tree,
    triangle_path,
)
from .walks import covering_walk_count, lemma7_value, walk_decomposition_residual

W7_EXPECTED = {"T": 126, "T1": 84, "T2": 28, "T3": 14, "T4": 14}


@dataclass
class SuiteResult:
    check: str
    status: str
    expected: object = None
    actual: object = None
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _result(check: str, expected, actual, witness: Graph | None = None) -> SuiteResult:
    ok = expected == actual
    return SuiteResult(check, "pass" if ok else "fail", expected, actual,
                       None if ok or witness is None else encode_str(witness))


def results_to_json(results: list[SuiteResult]) -> str:
    return json.dumps([asdict(r) for r in results])


def results_from_json(s: str) -> list[SuiteResult]:
    return [SuiteResult(**d) for d in json.loads(s)]


# -- corpora ----------------------------------------------------------------

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_corpus(count: int, nmax: int = 8, seed: int = 0) -> list[Graph]:
    """``count`` graphs G(n, p) with n uniform on 1..nmax and p uniform on (0, 1)."""
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, nmax), rng.random()) for _ in range(count)]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem via a principal cofactor of L."""
    if g.n == 1:
        return 1
    if not g.is_connected():
        return 0
    lap = matrix_of(g, "laplacian").rows
    return det_bareiss([r[1:] for r in lap[1:]])


def direct_invariants(g: Graph) -> dict:
    degs = g.degrees()
    return {
        "n": g.n,
        "m": g.m,
        "c": len(g.components()),
        "tau": spanning_tree_count(g),
        "s2": sum(d * d for d in degs),
        "s3": sum(d ** 3 for d in degs),
    }


def spectral_invariants(g: Graph) -> dict:
    p = char_poly(matrix_of(g, "laplacian"))
    basic = derive_basic_invariants(p)
    # triangle count from tr(A^3) / 6
    triangles = power_traces(matrix_of(g, "adjacency"), 3)[3] // 6
    mom = degree_moment_sums(p, triangles)
    return {"n": basic.n, "m": basic.m, "c": basic.c, "tau": basic.spanning_trees,
            "s2": mom.s2, "s3": mom.s3}


def centipede_degree_pipeline(n: int) -> set:
    """Centipede spectrum -> invariants -> moments (tree, so no triangles) -> degrees."""
    p = char_poly(matrix_of(centipede(n), "laplacian"))
    basic = derive_basic_invariants(p)
    if not (basic.c == 1 and basic.m == basic.n - 1):
        raise ValueError("spectrum is not that of a tree")
    mom = degree_moment_sums(p, 0)
    return solve_degree_distribution(basic.n, basic.m, mom.s2, mom.s3, dmax=5)


def line_shift_holds(tree: Graph) -> bool:
    lhs = char_poly(matrix_of(tree, "laplacian"))
    if tree.n == 1:
        return lhs == X
    rhs = X * char_poly(matrix_of(line_graph(tree), "adjacency")).shift(-2)
    return lhs == rhs


# -- suites -----------------------------------------------------------------

def _w7_table() -> Iterator[SuiteResult]:
    for m in MOTIFS:
        yield _result(f"w7/{m.name}", W7_EXPECTED[m.name], covering_walk_count(m, 7), m.graph)


def _traces() -> Iterator[SuiteResult]:
    w = W7_EXPECTED
    combos = {
        "T": w["T"],
        "T1": w["T"] + w["T1"],
        "T2": w["T"] + 2 * w["T1"] + w["T2"],
        "T3": w["T"] + 2 * w["T1"] + w["T3"],
        "T4": w["T"] + w["T1"] + w["T4"],
    }
    for m in MOTIFS:
        tr7 = power_traces(matrix_of(m.graph, "adjacency"), 7)[7]
        yield _result(f"trace7/{m.name}", combos[m.name], tr7, m.graph)


def _lemma7(tmax: int = 8) -> Iterator[SuiteResult]:
    for t in range(2, tmax + 1):
        for tc in enumerate_triangle_chains(t):
            tr7 = power_traces(matrix_of(tc.graph, "adjacency"), 7)[7]
            yield _result(f"lemma7/t={t}/{encode_str(tc.tree)}",
                          lemma7_value(t, tc.profile.t3), tr7, tc.graph)


def _eq1(tmax: int = 6) -> Iterator[SuiteResult]:
    for t in range(2, tmax + 1):
        for tc in enumerate_triangle_chains(t):
            yield _result(f"eq1/t={t}/{encode_str(tc.tree)}", 0,
                          walk_decomposition_residual(tc.graph, 7, MOTIFS), tc.graph)


def _mate(rep, target: Graph) -> Graph | None:
    """A class member of the target that is not the target itself."""
    own = canonical_label(target)
    for g6 in rep.target.members:
        g = decode(g6)
        if canonical_label(g) != own:
            return g
    return None


def _iso(tmax: int = 10) -> Iterator[SuiteResult]:
    for t in range(2, tmax + 1):
        target = triangle_path(t)
        rep = run_cospectral_search("tchains", [t], "adjacency", target=target)
        yield _result(f"iso/t={t}", 1, rep.target.class_size, _mate(rep, target))


def _line_shift(nmax: int = 10, random_count: int = 200, random_nmax: int = 14,
                seed: int = 0) -> Iterator[SuiteResult]:
    for n in range(1, nmax + 1):
        bad = next((t for t in enumerate_trees(n) if not line_shift_holds(t)), None)
        yield _result(f"line-shift/all-trees/n={n}", True, bad is None, bad)
    rng = random.Random(seed)
    for i in range(random_count):
        tree = random_tree(rng, rng.randint(2, random_nmax))
        yield _result(f"line-shift/random/{i}", True, line_shift_holds(tree), tree)


def _bounds(nmax: int = 12, corpus: int = 1000, seed: int = 0,
            centipede_nmax: int = 20, tol: float = 1e-9) -> Iterator[SuiteResult]:
    for n in range(2, nmax + 1):
        bad = next((t for t in enumerate_trees(n) if not check_spectral_bounds(t, tol).ok), None)
        yield _result(f"bounds/all-trees/n={n}", True, bad is None, bad)
    graphs = [g for g in random_corpus(corpus, seed=seed) if g.m > 0]
    bad = next((g for g in graphs if not check_spectral_bounds(g, tol).ok), None)
    yield _result(f"bounds/random-corpus/{len(graphs)}", True, bad is None, bad)
    for n in range(8, centipede_nmax + 1, 2):
        r = check_spectral_bounds(centipede(n), tol)
        yield _result(f"bounds/centipede/n={n}", [3, 6, True], [r.lower, r.upper, r.ok],
                      centipede(n))


def _invariants(corpus: int = 1000, seed: int = 0) -> Iterator[SuiteResult]:
    for i, g in enumerate(random_corpus(corpus, seed=seed)):
        if g.is_connected():
            yield _result(f"invariants/{i}", direct_invariants(g), spectral_invariants(g), g)


def _degrees(nmax: int = 20) -> Iterator[SuiteResult]:
    for n in range(4, nmax + 1, 2):
        sols = centipede_degree_pipeline(n)
        got = [sorted([d, c] for d, c in s.as_dict().items()) for s in sorted(sols)]
        yield _result(f"degrees/n={n}", [[[1, (n + 2) // 2], [3, (n - 2) // 2]]], got, centipede(n))


def _obstruction(nmax: int = 16) -> Iterator[SuiteResult]:
    for n in range(4, nmax + 1, 2):
        chain = canonical_label(triangle_path((n - 2) // 2))
        for tree in enumerate_trees(n, dmax=3):
            if set(tree.degrees()) != {1, 3}:
                continue
            cent = is_centipede(tree)
            xor = cent != contains_obstruction_H(tree)
            line_match = canonical_label(line_graph(tree)) == chain
            yield _result(f"obstruction/n={n}/{encode_str(tree)}", [True, cent],
                          [xor, line_match], tree)


def _complement(nmax: int = 14, corpus: int = 1000, seed: int = 0) -> Iterator[SuiteResult]:
    for n in range(2, nmax + 1, 2):
        g = centipede(n)
        lhs = complement_spectrum(char_poly(matrix_of(g, "laplacian")), n)
        rhs = char_poly(matrix_of(complement(g), "laplacian"))
        yield _result(f"complement/centipede/n={n}", list(rhs.coeffs), list(lhs.coeffs), g)
    for i, g in enumerate(random_corpus(corpus, seed=seed)):
        lhs = complement_spectrum(char_poly(matrix_of(g, "laplacian")), g.n)
        rhs = char_poly(matrix_of(complement(g), "laplacian"))
        yield _result(f"complement/random/{i}", list(rhs.coeffs), list(lhs.coeffs), g)


def _main(nmax: int = 14, workers: int = 1) -> Iterator[SuiteResult]:
    for n in range(4, nmax + 1, 2):
        target = centipede(n)
        rep = run_cospectral_search("trees", [n], "laplacian", target=target, workers=workers)
        yield _result(f"main/n={n}", 1, rep.target.class_size, _mate(rep, target))


SUITES: dict[str, Callable[..., Iterator[SuiteResult]]] = {
    "w7-table": _w7_table,
    "traces": _traces,
    "lemma7": _lemma7,
    "eq1": _eq1,
    "iso": _iso,
    "line-shift": _line_shift,
    "bounds": _bounds,
    "invariants": _invariants,
    "degrees": _degrees,
    "obstruction": _obstruction,
    "complement": _complement,
    "main": _main,
}

CAPS = {
    "tmax": 10,
    "nmax": 20,
    "random_nmax": 16,
    "centipede_nmax": 40,
    "corpus": 100_000,
    "random_count": 10_000,
}


def run_verification_suite(suite: str, **params) -> list[SuiteResult]:
    try:
        fn = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}") from None
    for key, val in params.items():
        if key in CAPS and val > CAPS[key]:
            raise ValueError(f"{key}={val} exceeds the cap {CAPS[key]}")
    return list(fn(**params))
