import itertools

import networkx as nx
import pytest

from oracles import all_cycles, cycle_product, nx_graph
from sginertia.constructors import (
    make_canonical_unicyclic,
    make_complete_bipartite,
    make_complete_multipartite,
    make_cycle,
    make_cycle_star_join,
    make_path,
    make_theta,
)
from sginertia.graph import GraphError
from sginertia.inertia import inertia_exact
from sginertia.invariants import cycle_sign, girth_length, is_balanced, is_canonical_unicyclic, pendant_star_decomposition


def test_cycle_and_path():
    c4u = make_cycle(4, balanced=False)
    assert c4u.sign(3, 0) == -1 and sum(s for _, _, s in c4u.edges) == 2
    assert all(s == 1 for _, _, s in make_cycle(5).edges)
    p3 = make_path(3)
    assert p3.edges == ((0, 1, 1), (1, 2, 1))
    with pytest.raises(GraphError):
        make_cycle(2)
    with pytest.raises(GraphError):
        make_path(3, ["+"])


def test_multipartite_examples():
    k23 = make_complete_multipartite((2, 3))
    assert inertia_exact(k23).neg == 1
    assert nx.is_isomorphic(nx_graph(k23), nx.complete_bipartite_graph(2, 3))
    tri = make_complete_multipartite((1, 1, 1), "all-triangles-unbalanced")
    assert not is_balanced(tri).balanced and inertia_exact(tri).neg == 1
    k222 = make_complete_multipartite((2, 2, 2), "all-triangles-unbalanced")
    assert inertia_exact(k222).neg == 1
    for c in all_cycles(k222):
        if len(c) == 3:
            assert cycle_sign(k222, c) == -1
    assert make_complete_bipartite(2, 3) == k23


def test_multipartite_rejects():
    with pytest.raises(GraphError):
        make_complete_multipartite((3,))
    with pytest.raises(GraphError):
        make_complete_multipartite((2, 2), "all-triangles-unbalanced")
    with pytest.raises(GraphError):
        make_complete_multipartite((2, 2), "nope")


@pytest.mark.parametrize(
    "abc, girth, cycles",
    [((4, 3, 4), 5, [5, 5, 6]), ((5, 2, 5), 5, [5, 5, 8]), ((4, 4, 4), 6, [6, 6, 6])],
)
def test_theta_shapes(abc, girth, cycles):
    g = make_theta(*abc)
    a, b, c = abc
    assert g.n == a + b + c - 4
    assert g.m == a + b + c - 3
    assert girth_length(g) == girth
    assert sorted(len(x) for x in all_cycles(g)) == cycles


def test_theta_cotree_signs_set_cycle_signs():
    for s1, s2 in itertools.product((1, -1), repeat=2):
        g = make_theta(4, 3, 5, (s1, s2))
        signs = sorted(cycle_product(g, c) for c in all_cycles(g))
        assert signs == sorted([s1, s2, s1 * s2])


def test_theta_rejects_two_single_edges():
    with pytest.raises(GraphError):
        make_theta(2, 2, 4)


def test_cycle_star_join_examples():
    g = make_cycle_star_join(5, True, 1)
    # five cycle vertices, the star centre and one leaf
    assert g.n == 7 and inertia_exact(g).neg == 3
    assert inertia_exact(make_cycle_star_join(6, True, 2)).neg == 4
    assert inertia_exact(make_cycle_star_join(6, False, 3)).neg == 3


def test_canonical_unicyclic_examples():
    k1 = make_canonical_unicyclic(7, True, [2, 0, 0, 0, 0, 0, 0])
    assert girth_length(k1) == 7 and inertia_exact(k1).neg == 4
    assert pendant_star_decomposition(k1).arcs == (6,)
    k2 = make_canonical_unicyclic(8, False, {0: 2, 4: 2})
    assert girth_length(k2) == 8 and inertia_exact(k2).neg == 4
    assert pendant_star_decomposition(k2).arcs == (3, 3)
    bare = make_canonical_unicyclic(5, True)
    assert bare == make_cycle(5) and inertia_exact(bare).neg == 2
    assert is_canonical_unicyclic(k1) and is_canonical_unicyclic(k2)


def test_canonical_unicyclic_short_counts_pad():
    assert make_canonical_unicyclic(5, True, [1]) == make_canonical_unicyclic(5, True, {0: 1})


def test_canonical_unicyclic_rejects_bad_counts():
    with pytest.raises(GraphError):
        make_canonical_unicyclic(5, True, [1] * 6)
    with pytest.raises(GraphError):
        make_canonical_unicyclic(5, True, [1, -1])
    with pytest.raises(GraphError):
        make_canonical_unicyclic(5, True, {7: 1})
