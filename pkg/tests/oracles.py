"""Independent reference computations used only by the tests.

None of these share code with the package: inertia comes from the exact
characteristic polynomial (Faddeev-LeVerrier) plus Descartes' rule of
signs, which is exact for real-rooted polynomials; determinants from the
Leibniz formula; cycles and isomorphism from networkx.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def charpoly(a: list[list[int]]) -> list[int]:
    """Coefficients c[0..n] of det(xI - A), highest degree first."""
    n = len(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prod = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[-1]
        m = prod
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _sign_changes(seq: list[int]) -> int:
    nz = [c for c in seq if c]
    return sum(1 for x, y in zip(nz, nz[1:]) if (x > 0) != (y > 0))


def inertia_descartes(a: list[list[int]]) -> tuple[int, int, int]:
    """(i+, i-, eta) of a symmetric integer matrix via Descartes' rule."""
    n = len(a)
    if n == 0:
        return (0, 0, 0)
    c = charpoly(a)  # c[k] multiplies x^(n-k)
    nul = 0
    while c[n - nul] == 0:
        nul += 1
    pos = _sign_changes(c)
    neg = _sign_changes([ck * (-1) ** (n - k) for k, ck in enumerate(c)])
    assert pos + neg + nul == n
    return (pos, neg, nul)


def leibniz_det(a: list[list[int]]) -> int:
    n = len(a)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        p = 1
        for i in range(n):
            p *= a[i][perm[i]]
            if not p:
                break
        total += -p if inv % 2 else p
    return total


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v, s in g.edges:
        h.add_edge(u, v, sign=s)
    return h


def all_cycles(g) -> list[list[int]]:
    return [c for c in nx.simple_cycles(nx_graph(g)) if len(c) >= 3]


def cycle_product(g, cyc) -> int:
    p = 1
    for i in range(len(cyc)):
        p *= g.sign(cyc[i], cyc[(i + 1) % len(cyc)])
    return p


def brute_switching_equivalent(g1, g2) -> bool:
    if g1.n != g2.n or g1.pairs() != g2.pairs():
        return False
    target = g2.signature()
    for theta in itertools.product((1, -1), repeat=g1.n):
        if all(theta[u] * s * theta[v] == target[(u, v)] for u, v, s in g1.edges):
            return True
    return False


def brute_switching_isomorphic(g1, g2) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    for perm in itertools.permutations(range(g1.n)):
        edges = {(min(perm[u], perm[v]), max(perm[u], perm[v])): s for u, v, s in g1.edges}
        if set(edges) != set(g2.pairs()):
            continue
        for theta in itertools.product((1, -1), repeat=g1.n):
            if theta[0] == -1:
                continue
            if all(theta[u] * s * theta[v] == g2.sign(u, v) for (u, v), s in edges.items()):
                return True
    return False
