import itertools

import networkx as nx
import pytest

from oracles import brute_switching_equivalent, nx_graph
from sginertia.constructors import make_cycle, make_path, make_theta
from sginertia.enumeration import (
    EnumerationSpec,
    LimitError,
    count_underlying,
    cotree_edges,
    enumerate_signed,
    enumerate_switching_classes,
    enumerate_underlying,
)
from sginertia.graph import SignedGraph
from sginertia.invariants import certificate, girth_length, switching_equivalent


def atlas_connected(n):
    return [G for G in nx.graph_atlas_g() if G.number_of_nodes() == n and nx.is_connected(G)]


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_connected_counts(n, expected):
    assert count_underlying(n) == expected == len(atlas_connected(n))


def test_underlying_graphs_are_pairwise_non_isomorphic():
    graphs = [nx_graph(g) for g in enumerate_underlying(6)]
    for a, b in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)


def test_brute_force_dedup_at_n4():
    # all 2^6 edge sets on 4 labeled vertices, connected ones, up to isomorphism
    pairs = list(itertools.combinations(range(4), 2))
    reps = []
    for mask in range(1 << 6):
        G = nx.Graph()
        G.add_nodes_from(range(4))
        G.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if nx.is_connected(G) and not any(nx.is_isomorphic(G, R) for R in reps):
            reps.append(G)
    assert len(reps) == 6 == count_underlying(4)


def test_girth_and_cap_filters_against_atlas():
    for n in range(4, 8):
        ref = sum(
            1
            for G in atlas_connected(n)
            if nx.girth(G) >= 5 and nx.girth(G) != float("inf")
            and G.number_of_edges() - n + 1 <= 2
        )
        spec = EnumerationSpec(max_n=n, min_girth=5, cyclomatic_cap=2)
        assert count_underlying(n, spec) == ref


def test_spec_accepts_and_acyclic():
    spec = EnumerationSpec(max_n=5)
    assert all(girth_length(g) is not None for g in enumerate_underlying(5, spec))
    with_trees = EnumerationSpec(max_n=5, include_acyclic=True)
    assert count_underlying(5, with_trees) == 21
    assert EnumerationSpec(max_n=5, min_girth=4, max_girth=4).accepts(4)
    assert not EnumerationSpec(max_n=5, min_girth=5).accepts(4)


def test_limits():
    with pytest.raises(LimitError):
        EnumerationSpec(max_n=9).check()
    with pytest.raises(LimitError):
        EnumerationSpec(max_n=11, cyclomatic_cap=1).check()
    EnumerationSpec(max_n=10, cyclomatic_cap=2).check()
    EnumerationSpec(max_n=10, min_girth=5, cyclomatic_cap=3).check()
    with pytest.raises(LimitError):
        EnumerationSpec(max_n=10, min_girth=4, cyclomatic_cap=3).check()
    with pytest.raises(LimitError):
        EnumerationSpec(max_n=5, connected=False).check()


def test_sg_max_n_env(monkeypatch):
    monkeypatch.setenv("SG_MAX_N", "5")
    with pytest.raises(LimitError):
        EnumerationSpec(max_n=6).check()
    EnumerationSpec(max_n=5).check()


def test_switching_class_examples():
    assert len(list(enumerate_switching_classes(make_path(5)))) == 1
    assert len(list(enumerate_switching_classes(make_cycle(6)))) == 2
    assert len(list(enumerate_switching_classes(make_theta(4, 3, 4)))) == 4


def test_switching_class_count_formula_n6():
    for g in enumerate_underlying(6, EnumerationSpec(max_n=6, include_acyclic=True)):
        classes = list(enumerate_switching_classes(g))
        assert len(classes) == 2 ** (g.m - g.n + 1) == 2 ** len(cotree_edges(g))
        assert len({certificate(c) for c in classes}) == len(classes)


def test_switching_classes_against_pairwise_dedup_n5():
    for g in enumerate_underlying(5):
        if g.m > 7:
            continue  # 2^m sign vectors, keep the brute force small
        reps = []
        for signs in itertools.product((1, -1), repeat=g.m):
            h = SignedGraph(g.n, tuple((u, v, s) for (u, v, _), s in zip(g.edges, signs)))
            if not any(brute_switching_equivalent(h, r) for r in reps):
                reps.append(h)
        classes = list(enumerate_switching_classes(g))
        assert len(reps) == len(classes)
        for r in reps:
            assert sum(switching_equivalent(r, c) for c in classes) == 1


def test_total_universe_n6_against_atlas():
    expected = sum(
        2 ** (G.number_of_edges() - 6 + 1) for G in atlas_connected(6) if G.number_of_edges() >= 6
    )
    expected += sum(
        2 ** (G.number_of_edges() - n + 1)
        for n in range(3, 6)
        for G in atlas_connected(n)
        if G.number_of_edges() >= n
    )
    got = sum(1 for _ in enumerate_signed(EnumerationSpec(max_n=6)))
    assert got == expected == 4518


def test_reverse_order_same_set():
    spec = EnumerationSpec(max_n=5)
    fwd = list(enumerate_signed(spec))
    rev = list(enumerate_signed(spec, reverse=True))
    assert fwd != rev and sorted(fwd, key=repr) == sorted(rev, key=repr)

