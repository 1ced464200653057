"""Constructors for the standard signed graph families."""

from __future__ import annotations

from typing import Mapping, Optional, Sequence, Union

from .graph import GraphError, SignLike, SignedGraph, build, parse_sign


def _cycle_edges(n: int, balanced: bool) -> list[tuple[int, int, int]]:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1, 1) for i in range(n - 1)]
    edges.append((n - 1, 0, 1 if balanced else -1))
    return edges


def make_cycle(n: int, balanced: bool = True) -> SignedGraph:
    """C_n with vertices in cyclic order; unbalanced puts the only - on edge (n-1, 0)."""
    return build(n, _cycle_edges(n, balanced))


def make_path(n: int, signs: Optional[Sequence[SignLike]] = None) -> SignedGraph:
    if n < 1:
        raise GraphError(f"a path needs at least 1 vertex, got {n}")
    if signs is None:
        signs = [1] * (n - 1)
    if len(signs) != n - 1:
        raise GraphError(f"P_{n} has {n - 1} edges, got {len(signs)} signs")
    return build(n, [(i, i + 1, s) for i, s in enumerate(signs)])


def make_complete_multipartite(parts: Sequence[int], variant: str = "all-positive") -> SignedGraph:
    """K_{n1,...,nl}; ``variant`` is ``all-positive`` or ``all-triangles-unbalanced``.

    The second variant is realized with every edge negative, which makes
    each triangle negative.
    """
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError(f"invalid part sizes {tuple(parts)}")
    if variant == "all-positive":
        sign = 1
    elif variant == "all-triangles-unbalanced":
        if len(parts) < 3:
            raise GraphError("all-triangles-unbalanced needs at least 3 parts")
        sign = -1
    else:
        raise GraphError(f"unknown multipartite variant {variant!r}")
    start = []
    n = 0
    for p in parts:
        start.append(n)
        n += p
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    edges = [(u, v, sign) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]]
    return build(n, edges)


def make_complete_bipartite(a: int, b: int) -> SignedGraph:
    return make_complete_multipartite((a, b))


def make_theta(a: int, b: int, c: int, cotree_signs: Sequence[SignLike] = (1, 1)) -> SignedGraph:
    """B(a, b, c): branch vertices 0 and 1 joined by paths with a, b, c vertices.

    Path orders count both branch vertices, so the path lengths are a-1,
    b-1, c-1. Internal vertices of the three paths follow in order.
    ``cotree_signs`` gives the signs of the cycles P_a ∪ P_b and P_a ∪ P_c;
    they sit on the last edge (into vertex 1) of paths b and c, every other
    edge being positive.
    """
    orders = (a, b, c)
    if any(x < 2 for x in orders):
        raise GraphError(f"theta path orders must be >= 2, got {orders}")
    if sum(1 for x in orders if x == 2) > 1:
        raise GraphError(f"B{orders} would need parallel edges")
    s_b, s_c = (parse_sign(x) for x in cotree_signs)
    n = 2
    edges = []
    for order, last in ((a, 1), (b, s_b), (c, s_c)):
        inner = list(range(n, n + order - 2))
        n += order - 2
        seq = [0, *inner, 1]
        for i in range(len(seq) - 1):
            sign = last if i == len(seq) - 2 else 1
            edges.append((seq[i], seq[i + 1], sign))
    return build(n, edges)


def make_cycle_star_join(g_len: int, balanced: bool, r: int) -> SignedGraph:
    """C_g (as in :func:`make_cycle`) with vertex 0 joined to the center of K_{1,r}."""
    if r < 1:
        raise GraphError("the star needs r >= 1 leaves")
    cyc = make_cycle(g_len, balanced)
    center = g_len
    edges = list(cyc.edges) + [(0, center, 1)]
    edges += [(center, center + 1 + i, 1) for i in range(r)]
    return build(g_len + 1 + r, edges)


def make_canonical_unicyclic(
    g_len: int,
    balanced: bool,
    leaf_counts: Union[Sequence[int], Mapping[int, int]] = (),
) -> SignedGraph:
    """C_g with ``leaf_counts[i]`` pendant leaves on cycle vertex i (all new edges +)."""
    edges = _cycle_edges(g_len, balanced)
    if isinstance(leaf_counts, Mapping):
        if any(not 0 <= k < g_len for k in leaf_counts):
            raise GraphError(f"leaf-count keys {sorted(leaf_counts)} outside 0..{g_len - 1}")
        counts = [leaf_counts.get(i, 0) for i in range(g_len)]
    else:
        counts = list(leaf_counts) + [0] * (g_len - len(leaf_counts))
    if len(counts) > g_len or any(c < 0 for c in counts):
        raise GraphError(f"invalid leaf counts {tuple(counts)} for C_{g_len}")
    n = g_len
    for v, cnt in enumerate(counts):
        for _ in range(cnt):
            edges.append((v, n, 1))
            n += 1
    return build(n, edges)
