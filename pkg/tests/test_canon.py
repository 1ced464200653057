import itertools
import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_signed_graph, signed_graphs
from oracles import brute_switching_isomorphic, nx_graph
from sginertia.canon import (
    automorphisms,
    canonical_certificate,
    canonical_form,
    canonical_graph6,
    canonical_relabel,
    graph6_decode,
    graph6_encode,
    switching_isomorphic,
    switching_isomorphisms,
    to_networkx,
)
from sginertia.constructors import make_cycle, make_theta
from sginertia.graph import negate, relabel, switch


@given(signed_graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ref = nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()
    assert graph6_encode(g.n, g.pairs()) == ref
    n, pairs = graph6_decode(ref)
    assert n == g.n and set(pairs) == set(g.pairs())


def test_graph6_large_order_prefix():
    g = nx.path_graph(70)
    ref = nx.to_graph6_bytes(g, header=False).decode().strip()
    assert graph6_encode(70, g.edges()) == ref
    assert graph6_decode(ref)[0] == 70


def _random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return p


@given(signed_graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_form_is_relabel_invariant(g, rng):
    h = relabel(g, _random_perm(rng, g.n))
    assert canonical_graph6(h) == canonical_graph6(g)
    assert canonical_form(g.n, g.rows) == canonical_form(h.n, h.rows)


def test_canonical_form_separates_atlas():
    # every graph of the networkx atlas (n <= 7) gets a distinct code
    seen = {}
    for G in nx.graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        rows = [0] * n
        for u, v in G.edges():
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        code = (n, canonical_form(n, rows))
        assert code not in seen
        seen[code] = G
    assert len(seen) == 1252


def test_canonical_relabel_isomorphic():
    g = make_theta(5, 2, 5, (-1, 1))
    h = canonical_relabel(g)
    assert nx.is_isomorphic(nx_graph(g), nx_graph(h))
    assert canonical_relabel(relabel(g, list(reversed(range(g.n))))) == h


def test_automorphisms_of_cycle():
    autos = list(automorphisms(make_cycle(5)))
    assert len(autos) == 10
    assert list(automorphisms(make_theta(4, 3, 4)))  # identity at least


def test_to_networkx_keeps_signs():
    h = to_networkx(make_cycle(4, balanced=False))
    assert h[3][0]["sign"] == -1


@given(signed_graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_certificate_invariant_under_relabel_and_switch(g, rng):
    theta = [rng.choice((1, -1)) for _ in range(g.n)]
    h = switch(relabel(g, _random_perm(rng, g.n)), theta)
    assert canonical_certificate(g) == canonical_certificate(h)


@settings(max_examples=150)
@given(signed_graphs(min_n=1, max_n=6), st.data())
def test_switching_isomorphic_matches_brute_force(g, data):
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m))
    perm = data.draw(st.permutations(range(g.n)))
    h = relabel(g.with_signs({(u, v): s for (u, v, _), s in zip(g.edges, signs)}), perm)
    expected = brute_switching_isomorphic(g, h)
    assert switching_isomorphic(g, h) == expected
    assert (canonical_certificate(g) == canonical_certificate(h)) == expected


def test_switching_isomorphisms_are_valid():
    g = make_theta(4, 3, 4, (-1, 1))
    h = relabel(switch(g, [1, -1, 1, 1, -1, 1, 1]), [6, 5, 4, 3, 2, 1, 0])
    maps = list(switching_isomorphisms(g, h))
    assert maps
    for m in maps:
        assert {(min(m[u], m[v]), max(m[u], m[v])) for u, v, _ in g.edges} == h.pairs()


def test_negative_c5_classes():
    a = make_cycle(5, balanced=False)
    assert switching_isomorphic(negate(make_cycle(5)), a)
    assert not switching_isomorphic(make_cycle(5), a)


def test_certificate_pairwise_random():
    rng = random.Random(5)
    graphs = [random_signed_graph(rng, 5, 0.6, connected=True) for _ in range(40)]
    for a, b in itertools.combinations(graphs, 2):
        same = canonical_certificate(a) == canonical_certificate(b)
        assert same == brute_switching_isomorphic(a, b)
