"""Exact inertia, closed forms for signed paths and cycles, and determinants.

The engine diagonalizes A(Γ) by symmetric congruence over the rationals.
Each elimination step is carried out on an integer matrix scaled by a
positive factor (which does not change the inertia), so no rounding and no
fraction objects are involved. The pendant reduction and the closed forms
are independent routes to the same numbers and are used as oracles.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .graph import GraphError, Inertia, SignedGraph, delete_vertices


class RationalSymMatrix:
    """A symmetric matrix of exact rationals."""

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[Fraction(x) for x in row] for row in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
        self.n = n
        self.entries = rows

    def scaled_integers(self) -> list[list[int]]:
        """Positive integer multiple of the matrix (same inertia)."""
        den = 1
        for row in self.entries:
            for x in row:
                den = lcm(den, x.denominator)
        return [[int(x * den) for x in row] for row in self.entries]

    def inertia(self, materialize_hyperbolic: bool = False) -> Inertia:
        return integer_inertia(self.scaled_integers(), materialize_hyperbolic)


def _content_reduce(a: list[list[int]], active: list[int]) -> None:
    g = 0
    for i in active:
        row = a[i]
        for j in active:
            if row[j]:
                g = gcd(g, row[j])
                if g == 1:
                    return
    if g > 1:
        for i in active:
            row = a[i]
            for j in active:
                row[j] //= g


def integer_inertia(a: list[list[int]], materialize_hyperbolic: bool = False) -> Inertia:
    """Inertia of a symmetric integer matrix (``a`` is left untouched).

    Pivoting: the first active index with a nonzero diagonal entry; failing
    that, the first nonzero active off-diagonal entry in row-major order,
    which is eliminated as a 2x2 block [[0, b], [b, 0]] worth one positive
    and one negative. With ``materialize_hyperbolic`` the block is instead
    turned into a diagonal pivot by the congruence row_i += row_j,
    col_i += col_j, which gives the same counts by a longer route.
    """
    a = [list(row) for row in a]
    n = len(a)
    active = list(range(n))
    pos = neg = 0
    while active:
        p = next((i for i in active if a[i][i]), None)
        if p is None:
            pair = None
            for i in active:
                row = a[i]
                for j in active:
                    if j > i and row[j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                break
            i, j = pair
            if materialize_hyperbolic:
                for k in active:
                    a[i][k] += a[j][k]
                for k in active:
                    a[k][i] = a[i][k]
                a[i][i] += a[j][i]
                continue
            b = a[i][j]
            pos += 1
            neg += 1
            active = [k for k in active if k != i and k != j]
            ai, aj = a[i], a[j]
            sb = 1 if b > 0 else -1
            if b in (1, -1):
                # |b| = 1: no rescaling, only rows meeting i or j change
                hit = [k for k in active if ai[k] or aj[k]]
                for r in hit:
                    row = a[r]
                    for t in hit:
                        row[t] -= sb * (ai[r] * aj[t] + aj[r] * ai[t])
            else:
                for r in active:
                    row = a[r]
                    for t in active:
                        row[t] = sb * (b * row[t] - (ai[r] * aj[t] + aj[r] * ai[t]))
                _content_reduce(a, active)
            continue
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active = [k for k in active if k != p]
        ap = a[p]
        if d in (1, -1):
            hit = [k for k in active if ap[k]]
            for r in hit:
                row = a[r]
                for t in hit:
                    row[t] -= d * ap[r] * ap[t]
        else:
            sd = 1 if d > 0 else -1
            for r in active:
                row = a[r]
                for t in active:
                    row[t] = sd * (d * row[t] - ap[r] * ap[t])
            _content_reduce(a, active)
    return Inertia(pos, neg, n - pos - neg)


def inertia_exact(g: SignedGraph, materialize_hyperbolic: bool = False) -> Inertia:
    """(i+, i-, η) of A(Γ), exact."""
    return integer_inertia(g.matrix(), materialize_hyperbolic)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def cycle_negative_index(n: int, balanced: bool) -> int:
    c = _ceil_half(n)
    low = (n % 4 in (0, 1)) if balanced else (n % 4 in (2, 3))
    return c - 1 if low else c


def cycle_positive_index(n: int, balanced: bool) -> int:
    c = _ceil_half(n)
    low = (n % 4 in (0, 3)) if balanced else (n % 4 in (1, 2))
    return c - 1 if low else c


def inertia_cycle_closed_form(n: int, balanced: bool) -> Inertia:
    """Inertia of a signed cycle of order n from its balance and n mod 4."""
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    neg = cycle_negative_index(n, balanced)
    pos = cycle_positive_index(n, balanced)
    return Inertia(pos, neg, n - pos - neg)


def inertia_path_closed_form(n: int) -> Inertia:
    """Any signed path on n vertices: (⌊n/2⌋, ⌊n/2⌋, n mod 2)."""
    if n < 0:
        raise GraphError(f"negative path order {n}")
    return Inertia(n // 2, n // 2, n % 2)


def inertia_by_pendant_reduction(g: SignedGraph) -> Inertia:
    """Peel pendant vertices with their neighbors, then finish exactly.

    Each removed pendant edge contributes (1, 1, 0) and each isolated vertex
    (0, 0, 1); the pendant-free residue goes to :func:`inertia_exact`.
    """
    alive = set(range(g.n))
    nbrs = [set(g.adj[v]) for v in range(g.n)]
    acc = Inertia(0, 0, 0)

    def remove(v):
        alive.discard(v)
        for w in nbrs[v]:
            nbrs[w].discard(v)
        nbrs[v] = set()

    while True:
        iso = next((v for v in sorted(alive) if not nbrs[v]), None)
        if iso is not None:
            remove(iso)
            acc = acc + Inertia(0, 0, 1)
            continue
        leaf = next((v for v in sorted(alive) if len(nbrs[v]) == 1), None)
        if leaf is None:
            break
        (w,) = nbrs[leaf]
        remove(leaf)
        remove(w)
        acc = acc + Inertia(1, 1, 0)
    residue, _ = delete_vertices(g, set(range(g.n)) - alive)
    return acc + inertia_exact(residue)


def integer_determinant(a: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant."""
    a = [list(row) for row in a]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (akk * ai[j] - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def determinant_exact(g: SignedGraph) -> int:
    return integer_determinant(g.matrix())


def inertia_float(g: SignedGraph, tol: float = 1e-9) -> Inertia:
    """Eigenvalue sign counts from a floating solver; diagnostic only."""
    import numpy as np

    if g.n == 0:
        return Inertia(0, 0, 0)
    ev = np.linalg.eigvalsh(g.to_numpy())
    pos = int((ev > tol).sum())
    neg = int((ev < -tol).sum())
    return Inertia(pos, neg, g.n - pos - neg)
