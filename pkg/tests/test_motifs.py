import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_force_subgraph_count
from dsq.graph import Graph, complete, path
from dsq.motifs import MOTIFS, T, T1, T2, T3, T4, automorphism_count, count_subgraphs
from dsq.trees import triangle_path

BOWTIE = triangle_path(2)


def test_motif_shapes():
    for m in MOTIFS:
        assert len(m.graph.triangles()) == 1
        assert m.graph.m <= 5 and m.graph.is_connected()
    assert sorted(T2.graph.degrees()) == [1, 1, 2, 2, 4]
    assert sorted(T3.graph.degrees()) == [1, 1, 2, 3, 3]
    assert sorted(T4.graph.degrees()) == [1, 2, 2, 2, 3]


def test_bowtie_counts():
    assert count_subgraphs(BOWTIE, T) == 2
    assert count_subgraphs(BOWTIE, T1) == 4


def test_three_chain_bulls():
    assert count_subgraphs(triangle_path(3), T3) == 4


@pytest.mark.parametrize("g,expected", [(complete(3), 6), (path(4), 2), (T2.graph, 4),
                                        (T3.graph, 2), (T4.graph, 2), (complete(4), 24)])
def test_automorphisms(g, expected):
    assert automorphism_count(g) == expected


@given(graphs(max_n=7))
def test_motif_counts_match_brute_force(g):
    if g.m > 8:
        return
    for m in MOTIFS:
        assert count_subgraphs(g, m) == brute_force_subgraph_count(g, m.graph)


@given(graphs(max_n=6))
def test_path_counts_match_brute_force(g):
    for pat in (path(2), path(3), path(4), complete(4)):
        assert count_subgraphs(g, pat) == brute_force_subgraph_count(g, pat)


def test_disconnected_pattern_rejected():
    with pytest.raises(ValueError):
        count_subgraphs(complete(4), Graph.from_edges(4, [(0, 1), (2, 3)]))
