import pytest
from hypothesis import given

from conftest import graphs
from oracles import matrix_power_trace, naive_covering_walks
from dsq.canon import canonical_label
from dsq.graph import Graph, complete, cycle, path, star
from dsq.motifs import MOTIFS, T, T1, T2, T3, T4
from dsq.spectral import matrix_of, power_traces
from dsq.trees import K_inverse, enumerate_triangle_chains, profile_of, triangle_path
from dsq.walks import (
    census_of,
    connected_edge_subgraphs,
    covering_support,
    covering_walk_count,
    lemma7_value,
    predicted_census,
    walk_decomposition_residual,
)

BOWTIE = triangle_path(2)


@pytest.mark.parametrize("motif,expected", [(T, 126), (T1, 84), (T2, 28), (T3, 14), (T4, 14)])
def test_w7_table(motif, expected):
    assert covering_walk_count(motif, 7) == expected


def test_small_walk_counts():
    assert covering_walk_count(path(2), 2) == 2
    assert covering_walk_count(T, 3) == 6
    assert covering_walk_count(T1, 3) == 0
    # 0-1-2-1-0, 2-1-0-1-2 and two from the middle
    assert covering_walk_count(path(3), 4) == 4


def test_walk_count_limits():
    with pytest.raises(ValueError):
        covering_walk_count(T, 13)
    with pytest.raises(ValueError):
        covering_walk_count(Graph.from_edges(4, [(0, 1), (2, 3)]), 4)
    assert covering_walk_count(Graph.from_edges(3, []), 4) == 0


@pytest.mark.parametrize("motif", MOTIFS, ids=lambda m: m.name)
def test_dp_matches_naive_enumeration(motif):
    for k in range(1, 9):
        assert covering_walk_count(motif, k) == naive_covering_walks(motif.graph, k)


@given(graphs(min_n=2, max_n=6, connected=True))
def test_dp_matches_naive_on_random_graphs(g):
    if g.m > 6:
        return
    for k in range(g.m, 7):
        assert covering_walk_count(g, k) == naive_covering_walks(g, k)


def _proper_subgraphs_support_walks(g, k):
    for sub in connected_edge_subgraphs(g, g.m):
        if sub.m < g.m and covering_walk_count(sub, k) > 0:
            return True
    return False


@given(graphs(min_n=2, max_n=7, connected=True))
def test_covering_bounded_by_trace(g):
    if g.m > 6:
        return
    for k in range(3, 9):
        w = covering_walk_count(g, k)
        tr = power_traces(matrix_of(g), k)[k]
        assert w <= tr
        assert (w == tr) == (not _proper_subgraphs_support_walks(g, k))


def test_trace_equations():
    w = {m.name: covering_walk_count(m, 7) for m in MOTIFS}
    tr = {m.name: power_traces(matrix_of(m.graph), 7)[7] for m in MOTIFS}
    assert tr["T"] == w["T"]
    assert tr["T1"] == w["T"] + w["T1"]
    assert tr["T2"] == w["T"] + 2 * w["T1"] + w["T2"]
    assert tr["T3"] == w["T"] + 2 * w["T1"] + w["T3"]
    assert tr["T4"] == w["T"] + w["T1"] + w["T4"]


def test_census_examples():
    assert census_of(BOWTIE).counts == (2, 4, 2, 0, 4)
    assert census_of(triangle_path(3)).counts == (3, 8, 4, 4, 12)
    assert census_of(complete(3)).counts == (1, 0, 0, 0, 0)


def test_census_rejects_non_chains():
    from dsq.trees import NotATriangleChain
    for g in (complete(4), cycle(5), path(3), star(5)):
        with pytest.raises(NotATriangleChain):
            census_of(g)


@pytest.mark.parametrize("t", range(1, 8))
def test_census_closed_forms(t):
    for tc in enumerate_triangle_chains(t):
        c = census_of(tc.graph)
        assert c.counts == predicted_census(tc.profile)
        assert c.profile == tc.profile


def test_residual_examples():
    assert walk_decomposition_residual(BOWTIE, 7) == 0
    assert power_traces(matrix_of(BOWTIE), 7)[7] == 700 == 126 * 2 + 84 * 4 + 28 * 2 + 14 * 4
    assert walk_decomposition_residual(complete(3), 7, [T]) == 0
    assert walk_decomposition_residual(complete(3), 3, [T]) == 0


@pytest.mark.parametrize("t", range(2, 7))
def test_residual_zero_on_chains(t):
    for tc in enumerate_triangle_chains(t):
        assert walk_decomposition_residual(tc.graph, 7) == 0


def test_residual_nonzero_without_full_support():
    # dropping T4 leaves the tadpoles' walks unaccounted for
    assert walk_decomposition_residual(BOWTIE, 7, [T, T1, T2, T3]) == 14 * 4


def test_lemma_examples():
    assert lemma7_value(2, 0) == 700
    assert lemma7_value(3, 0) == 1386 == power_traces(matrix_of(triangle_path(3)), 7)[7]
    claw_chain = K_inverse(star(4)).graph
    assert lemma7_value(4, 1) == 2184 == matrix_power_trace(matrix_of(claw_chain).rows, 7)
    for bad in ((1, 0), (4, 2), (3, -1)):
        with pytest.raises(ValueError):
            lemma7_value(*bad)


@pytest.mark.parametrize("t", range(2, 9))
def test_lemma_on_all_chains(t):
    for tc in enumerate_triangle_chains(t):
        tr7 = power_traces(matrix_of(tc.graph), 7)[7]
        assert tr7 == lemma7_value(t, profile_of(tc.graph).t3)


@pytest.mark.parametrize("t", range(1, 6))
def test_support_of_7_walks_is_the_five_motifs(t):
    labels = {m.name: canonical_label(m.graph) for m in MOTIFS}
    if t == 1:
        expected = {labels["T"]}
    elif t == 2:
        # the bowtie has no bull
        expected = set(labels.values()) - {labels["T3"]}
    else:
        expected = set(labels.values())
    for tc in enumerate_triangle_chains(t):
        assert set(covering_support(tc.graph, 7)) == expected


def test_connected_edge_subgraphs_of_triangle():
    subs = connected_edge_subgraphs(complete(3), 3)
    assert [s.m for s in subs] == [1, 1, 1, 2, 2, 2, 3]
    assert all(s.is_connected() for s in subs)
