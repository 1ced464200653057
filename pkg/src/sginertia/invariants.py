"""Connectivity, girth, balance, switching classes and the cycle-layer structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .graph import GraphError, SignedGraph


def components(g: SignedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    """K1 is connected; the empty graph is treated as connected too."""
    if g.n == 0:
        return True
    rows = g.rows
    reach = frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << g.n) - 1


def cyclomatic_number(g: SignedGraph) -> int:
    """m - n + c."""
    return g.m - g.n + len(components(g))


def bfs_distances(g: SignedGraph, sources, allowed: Optional[int] = None) -> list[Optional[int]]:
    """Distances from a vertex set; ``allowed`` optionally restricts the walk to a bit set."""
    dist: list[Optional[int]] = [None] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if dist[w] is None and (allowed is None or allowed >> w & 1):
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


class Girth(NamedTuple):
    """Shortest-cycle length and a witness; ``length is None`` means acyclic."""

    length: Optional[int]
    cycle: tuple[int, ...]

    @property
    def acyclic(self) -> bool:
        return self.length is None

    def __str__(self) -> str:
        return "acyclic" if self.length is None else str(self.length)


def girth_length(g: SignedGraph) -> Optional[int]:
    if g.m <= g.n and g.n and is_connected(g):
        return None if g.m < g.n else len(_peel_to_cycle(g))
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    L = dist[v] + dist[w] + 1
                    if best is None or L < best:
                        best = L
    return best


def _cycles_of_length(g: SignedGraph, length: int, first_only: bool = False) -> list[tuple[int, ...]]:
    """Cycles of the given length as normalized sequences, in lexicographic order.

    Normalized: starts at its least vertex, and the second vertex is less
    than the last.
    """
    out = []
    full = (1 << g.n) - 1
    for s in range(g.n):
        allowed = full & ~((1 << s) - 1)
        dist = bfs_distances(g, [s], allowed)
        path = [s]
        on_path = 1 << s

        def extend(v):
            nonlocal on_path
            k = len(path)
            if k == length:
                if g.has_edge(v, s) and path[1] < path[-1]:
                    out.append(tuple(path))
                    return first_only
                return False
            for w in g.adj[v]:
                if w <= s or on_path >> w & 1:
                    continue
                d = dist[w]
                if d is None or d > length - k:
                    continue
                path.append(w)
                on_path |= 1 << w
                stop = extend(w)
                path.pop()
                on_path &= ~(1 << w)
                if stop:
                    return True
            return False

        if extend(s) and first_only:
            return out
    return out


@lru_cache(maxsize=4096)
def girth(g: SignedGraph) -> Girth:
    """Girth with the lexicographically least normalized shortest cycle as witness."""
    L = girth_length(g)
    if L is None:
        return Girth(None, ())
    return Girth(L, _cycles_of_length(g, L, first_only=True)[0])


def shortest_cycles(g: SignedGraph) -> list[tuple[int, ...]]:
    """Every cycle whose length equals the girth (one normalized sequence each)."""
    L = girth_length(g)
    return [] if L is None else _cycles_of_length(g, L)


def cycles_of_length(g: SignedGraph, length: int) -> list[tuple[int, ...]]:
    return _cycles_of_length(g, length)


def _check_cycle(g: SignedGraph, cycle: Sequence[int]) -> None:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise GraphError(f"{tuple(cycle)} is not a cycle (needs >= 3 distinct vertices)")
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"{tuple(cycle)} is not a cycle: {u} and {v} are not adjacent")


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of the edge signs along a closed vertex sequence."""
    _check_cycle(g, cycle)
    prod = 1
    k = len(cycle)
    for i in range(k):
        prod *= g.sign(cycle[i], cycle[(i + 1) % k])
    return prod


def spanning_forest(g: SignedGraph) -> tuple[list[int], list[int]]:
    """Deterministic BFS forest: ``(parent, order)``; roots have parent -1.

    Each component is rooted at its least vertex; neighbors are visited in
    increasing order.
    """
    parent = [-2] * g.n
    order = []
    for s in range(g.n):
        if parent[s] != -2:
            continue
        parent[s] = -1
        order.append(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if parent[w] == -2:
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
    return parent, order


def _potentials(g: SignedGraph, parent: list[int], order: list[int]) -> list[int]:
    theta = [1] * g.n
    for v in order:
        p = parent[v]
        if p >= 0:
            theta[v] = theta[p] * g.sign(p, v)
    return theta


@dataclass(frozen=True)
class Balance:
    """Balance verdict with a witness.

    ``theta`` switches Γ to all-positive when balanced; otherwise
    ``negative_cycle`` is a cycle of sign -1.
    """

    balanced: bool
    theta: Optional[tuple[int, ...]] = None
    negative_cycle: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.balanced


def _tree_path(parent: list[int], u: int, v: int) -> list[int]:
    anc_u = [u]
    while parent[anc_u[-1]] >= 0:
        anc_u.append(parent[anc_u[-1]])
    pos = {x: i for i, x in enumerate(anc_u)}
    path_v = [v]
    while path_v[-1] not in pos:
        path_v.append(parent[path_v[-1]])
    meet = path_v[-1]
    return anc_u[: pos[meet] + 1] + path_v[-2::-1]


def is_balanced(g: SignedGraph) -> Balance:
    parent, order = spanning_forest(g)
    theta = _potentials(g, parent, order)
    for u, v, s in g.edges:
        if parent[v] == u or parent[u] == v:
            continue
        if theta[u] * s * theta[v] < 0:
            return Balance(False, None, tuple(_tree_path(parent, u, v)))
    return Balance(True, tuple(theta))


def same_underlying(g1: SignedGraph, g2: SignedGraph) -> bool:
    return g1.n == g2.n and g1.pairs() == g2.pairs()


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Γ1 ~ Γ2 on the same labeled underlying graph (False if the graphs differ)."""
    if not same_underlying(g1, g2):
        return False
    prod = SignedGraph(g1.n, tuple((u, v, s * g2.sign(u, v)) for u, v, s in g1.edges))
    return is_balanced(prod).balanced


@dataclass(frozen=True)
class SwitchingClassCertificate:
    """Normal form of a labeled switching class.

    ``underlying`` is the graph6 string of the (labeled) underlying graph,
    ``tree_edges`` the deterministic BFS spanning forest, and
    ``cotree_signs`` the signs of the remaining edges once every tree edge
    has been switched to +.
    """

    underlying: str
    tree_edges: tuple[tuple[int, int], ...]
    cotree_edges: tuple[tuple[int, int], ...]
    cotree_signs: tuple[int, ...]

    @property
    def bits(self) -> str:
        return "".join("1" if s < 0 else "0" for s in self.cotree_signs)

    def to_graph(self) -> SignedGraph:
        from .canon import graph6_decode

        n, pairs = graph6_decode(self.underlying)
        signs = dict(zip(self.cotree_edges, self.cotree_signs))
        return SignedGraph(n, tuple(sorted((u, v, signs.get((u, v), 1)) for u, v in pairs)))


def tree_normalize(g: SignedGraph) -> tuple[list[int], list[tuple[int, int]], list[tuple[int, int]], list[int]]:
    """(theta, tree edges, cotree edges, cotree signs after switching by theta)."""
    parent, order = spanning_forest(g)
    theta = _potentials(g, parent, order)
    tree, cotree, signs = [], [], []
    for u, v, s in g.edges:
        if parent[v] == u or parent[u] == v:
            tree.append((u, v))
        else:
            cotree.append((u, v))
            signs.append(theta[u] * s * theta[v])
    return theta, tree, cotree, signs


def certificate(g: SignedGraph) -> SwitchingClassCertificate:
    from .canon import graph6_encode

    _, tree, cotree, signs = tree_normalize(g)
    return SwitchingClassCertificate(
        graph6_encode(g.n, g.pairs()), tuple(tree), tuple(cotree), tuple(signs)
    )


def distance_layers(g: SignedGraph, cycle: Sequence[int]) -> tuple[frozenset[int], ...]:
    """(N_1, N_2, ...): vertices off the cycle grouped by distance to it.

    Vertices in other components belong to no layer.
    """
    _check_cycle(g, cycle)
    dist = bfs_distances(g, cycle)
    layers: dict[int, set[int]] = {}
    for v, d in enumerate(dist):
        if d:
            layers.setdefault(d, set()).add(v)
    top = max(layers, default=0)
    return tuple(frozenset(layers.get(r, ())) for r in range(1, top + 1))


def _peel_to_cycle(g: SignedGraph) -> tuple[int, ...]:
    """Strip leaves repeatedly; for a unicyclic graph the rest is its cycle."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    left = [v for v in range(g.n) if alive[v]]
    s = left[0]
    nxt = min(w for w in g.adj[s] if alive[w])
    cyc = [s]
    prev, v = s, nxt
    while v != s:
        cyc.append(v)
        prev, v = v, next(w for w in g.adj[v] if alive[w] and w != prev)
    return tuple(cyc)


def _canonical_cycle(g: SignedGraph) -> Optional[tuple[int, ...]]:
    """The cycle of a canonical unicyclic graph, or None if ``g`` is not one."""
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    cyc = _peel_to_cycle(g)
    on = set(cyc)
    for v in range(g.n):
        if v not in on:
            if g.degree(v) != 1 or g.adj[v][0] not in on:
                return None
    return cyc


def is_canonical_unicyclic(g: SignedGraph) -> bool:
    """Unicyclic, every off-cycle vertex a leaf hanging from the cycle."""
    return _canonical_cycle(g) is not None


def unique_cycle(g: SignedGraph) -> tuple[int, ...]:
    """The cycle of a unicyclic graph, in traversal order from its least vertex."""
    if g.m != g.n or not is_connected(g):
        raise GraphError("graph is not unicyclic")
    return _peel_to_cycle(g)


class PendantStars(NamedTuple):
    """Pendant-star structure of a canonical unicyclic graph.

    ``arcs[i]`` counts the cycle vertices strictly between ``majors[i]`` and
    ``majors[i+1]`` (cyclically, following ``cycle``).
    """

    k: int
    majors: tuple[int, ...]
    arcs: tuple[int, ...]
    cycle: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]


def pendant_star_decomposition(g: SignedGraph) -> PendantStars:
    cyc = _canonical_cycle(g)
    if cyc is None:
        raise GraphError("pendant-star decomposition needs a canonical unicyclic graph")
    if len(cyc) == g.n:
        raise GraphError("a bare cycle has no pendant stars")
    on = set(cyc)
    pos = [i for i, v in enumerate(cyc) if any(w not in on for w in g.adj[v])]
    L = len(cyc)
    arcs = tuple(
        (pos[(i + 1) % len(pos)] - pos[i] - 1) % L if len(pos) > 1 else L - 1
        for i in range(len(pos))
    )
    majors = tuple(cyc[i] for i in pos)
    leaves = tuple(tuple(w for w in g.adj[v] if w not in on) for v in majors)
    return PendantStars(len(majors), majors, arcs, cyc, leaves)


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    girth: Optional[int]
    shortest_cycle: tuple[int, ...]
    balanced: bool
    layers: tuple[frozenset[int], ...] = field(default=())
    canonical_unicyclic: bool = False
    stars: Optional[PendantStars] = None


def structure_report(g: SignedGraph) -> StructureReport:
    gi = girth(g)
    layers = distance_layers(g, gi.cycle) if gi.cycle else ()
    canon = is_canonical_unicyclic(g)
    stars = pendant_star_decomposition(g) if canon and g.n > len(gi.cycle) else None
    return StructureReport(
        connected=is_connected(g),
        girth=gi.length,
        shortest_cycle=gi.cycle,
        balanced=is_balanced(g).balanced,
        layers=layers,
        canonical_unicyclic=canon,
        stars=stars,
    )
