"""Enumeration of small connected graphs and of their switching classes.

Connected graphs on n vertices come from connected graphs on n-1 vertices
by adding a vertex with a nonempty neighborhood (every connected graph has
a non-cut vertex), deduplicated by canonical form. Both filters are
hereditary for connected induced subgraphs, so they prune the search:
removing a vertex never lowers the girth, and never raises m - n + 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional

from .canon import canonical_form
from .graph import SignedGraph
from .invariants import bfs_distances, girth_length, spanning_forest

DENSE_MAX_N = 8
SPARSE_MAX_N = 10


class LimitError(ValueError):
    """Raised when an enumeration request exceeds the supported limits."""


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: orders ``min_n..max_n`` with optional filters.

    ``girth`` bounds apply to graphs with a cycle; trees are kept only when
    ``include_acyclic`` is set. Limits: ``max_n <= 8`` for dense sweeps,
    ``max_n <= 10`` when ``cyclomatic_cap <= 2``, or when the cap is 3 and
    the girth is at least 5 (those classes stay small).
    """

    max_n: int
    min_n: int = 1
    min_girth: Optional[int] = None
    max_girth: Optional[int] = None
    cyclomatic_cap: Optional[int] = None
    connected: bool = True
    include_acyclic: bool = False

    def check(self) -> None:
        cap_env = os.environ.get("SG_MAX_N")
        if cap_env is not None and self.max_n > int(cap_env):
            raise LimitError(f"max_n={self.max_n} exceeds SG_MAX_N={cap_env}")
        if not self.connected:
            raise LimitError("only connected enumeration is supported")
        if self.max_n > SPARSE_MAX_N:
            raise LimitError(f"max_n={self.max_n} exceeds {SPARSE_MAX_N}")
        if self.max_n > DENSE_MAX_N:
            cap = self.cyclomatic_cap
            sparse_ok = cap is not None and (
                cap <= 2 or (cap <= 3 and (self.min_girth or 0) >= 5)
            )
            if not sparse_ok:
                raise LimitError(
                    f"max_n={self.max_n} needs cyclomatic cap <= 2 "
                    "(or cap 3 with girth >= 5)"
                )

    def accepts(self, girth: Optional[int]) -> bool:
        if girth is None:
            return self.include_acyclic
        if self.min_girth is not None and girth < self.min_girth:
            return False
        if self.max_girth is not None and girth > self.max_girth:
            return False
        return True


def _graph_from_rows(n: int, rows) -> SignedGraph:
    edges = tuple(
        (u, v, 1) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
    )
    return SignedGraph(n, edges)


@lru_cache(maxsize=None)
def _level(n: int, min_girth: Optional[int], cap: Optional[int]) -> tuple[tuple[int, ...], ...]:
    """Canonical codes of connected graphs of order n satisfying the filters."""
    if n == 1:
        return ((0,),)
    seen = set()
    parent_order = n - 1
    for code in _level(parent_order, min_girth, cap):
        m = sum(r.bit_count() for r in code) // 2
        cyc = m - parent_order + 1
        max_deg = parent_order if cap is None else min(parent_order, cap - cyc + 1)
        if max_deg < 1:
            continue
        dist = None
        if min_girth is not None and min_girth > 3:
            g = _graph_from_rows(parent_order, code)
            dist = [bfs_distances(g, [v]) for v in range(parent_order)]
        for k in range(1, max_deg + 1):
            for nbrs in combinations(range(parent_order), k):
                if dist is not None and k > 1:
                    ok = True
                    for a, b in combinations(nbrs, 2):
                        d = dist[a][b]
                        if d is not None and d + 2 < min_girth:
                            ok = False
                            break
                    if not ok:
                        continue
                mask = 0
                rows = list(code)
                for w in nbrs:
                    mask |= 1 << w
                    rows[w] |= 1 << parent_order
                rows.append(mask)
                seen.add(canonical_form(n, rows))
    return tuple(sorted(seen))


def enumerate_underlying(n: int, spec: Optional[EnumerationSpec] = None) -> Iterator[SignedGraph]:
    """Connected graphs of order n, one per isomorphism class, as (G, +).

    Deterministic order (sorted canonical codes). Graphs outside the girth
    window of ``spec`` are skipped; trees only with ``include_acyclic``.
    """
    spec = spec or EnumerationSpec(max_n=n, include_acyclic=True)
    spec.check()
    if n > spec.max_n:
        raise LimitError(f"n={n} exceeds spec max_n={spec.max_n}")
    min_g = spec.min_girth if spec.min_girth and spec.min_girth > 3 else None
    for code in _level(n, min_g, spec.cyclomatic_cap):
        g = _graph_from_rows(n, code)
        if spec.accepts(girth_length(g)):
            yield g


def count_underlying(n: int, spec: Optional[EnumerationSpec] = None) -> int:
    return sum(1 for _ in enumerate_underlying(n, spec))


def cotree_edges(g: SignedGraph) -> list[tuple[int, int]]:
    parent, _ = spanning_forest(g)
    return [(u, v) for u, v, _ in g.edges if parent[v] != u and parent[u] != v]


def enumerate_switching_classes(g: SignedGraph) -> Iterator[SignedGraph]:
    """One signed graph per labeled switching class on the underlying graph of ``g``.

    Tree edges of the deterministic spanning forest are +; the cotree edges
    run over all 2^(m-n+c) sign vectors, all-positive first.
    """
    co = cotree_edges(g)
    for signs in product((1, -1), repeat=len(co)):
        sign_of = dict(zip(co, signs))
        yield SignedGraph(g.n, tuple((u, v, sign_of.get((u, v), 1)) for u, v, _ in g.edges))


def enumerate_signed(spec: EnumerationSpec, reverse: bool = False) -> Iterator[SignedGraph]:
    """Every connected signed graph admitted by ``spec``, one per labeled switching class."""
    spec.check()
    orders = range(spec.min_n, spec.max_n + 1)
    if reverse:
        orders = reversed(orders)
    for n in orders:
        graphs = list(enumerate_underlying(n, spec))
        if reverse:
            graphs.reverse()
        for g in graphs:
            classes = list(enumerate_switching_classes(g))
            if reverse:
                classes.reverse()
            yield from classes
