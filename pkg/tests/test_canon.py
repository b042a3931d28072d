import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, trees
from oracles import all_labelled_trees, to_nx
from dsq.canon import canonical_label, is_isomorphic
from dsq.graph import complete, cycle, empty, path, star
from dsq.suites import random_graph


def test_path_vs_star():
    assert canonical_label(path(4)) != canonical_label(star(4))


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_label_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_label(g.relabel(perm)) == canonical_label(g)


@given(trees(max_n=16), st.randoms(use_true_random=False))
def test_forest_label_invariant(t, rnd):
    perm = list(range(t.n))
    rnd.shuffle(perm)
    assert canonical_label(t.relabel(perm)) == canonical_label(t)


def test_four_vertex_trees_have_two_labels():
    labels = {canonical_label(t) for t in all_labelled_trees(4)}
    assert len(labels) == 2


def test_agrees_with_networkx_on_random_pairs():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(1, 8)
        p = rng.random()
        g, h = random_graph(rng, n, p), random_graph(rng, n, p)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_graph_atlas_labels_are_distinct():
    # the atlas lists every graph on up to 7 vertices exactly once
    from oracles import from_nx
    labels = [canonical_label(from_nx(h)) for h in nx.graph_atlas_g()[1:]]
    assert len(labels) == len(set(labels)) == 1252


@pytest.mark.parametrize("g", [complete(9), empty(12), cycle(10)])
def test_symmetric_graphs_terminate(g):
    perm = list(range(g.n))[::-1]
    assert canonical_label(g) == canonical_label(g.relabel(perm))


def test_strongly_regular_petersen():
    pet = nx.petersen_graph()
    from oracles import from_nx
    g = from_nx(pet)
    for perm in itertools.islice(itertools.permutations(range(10)), 0, 5000, 997):
        assert canonical_label(g.relabel(list(perm))) == canonical_label(g)
