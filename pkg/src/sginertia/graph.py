"""Signed graph data model and elementary transformations.

Vertices are the dense indices ``0..n-1``. A :class:`SignedGraph` is
immutable; every transformation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

MAX_ORDER = 64

SignLike = Union[int, str]


class GraphError(ValueError):
    """Raised for malformed signed-graph input."""


class Inertia(NamedTuple):
    """Counts of positive, negative and zero eigenvalues."""

    pos: int
    neg: int
    nul: int

    @property
    def order(self) -> int:
        return self.pos + self.neg + self.nul

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def __add__(self, other):  # type: ignore[override]
        return Inertia(self.pos + other.pos, self.neg + other.neg, self.nul + other.nul)


def parse_sign(s: SignLike) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise GraphError(f"invalid sign {s!r}; expected +1/-1 or '+'/'-'")


@dataclass(frozen=True)
class SignedGraph:
    """A simple graph on ``0..n-1`` with a sign on every edge.

    ``edges`` is kept normalized: each entry is ``(u, v, sign)`` with
    ``u < v``, sorted, so equality is equality of labeled signed graphs.
    Use :func:`build` for unsorted or string-signed input.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        seen = set()
        for u, v, s in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a loop")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized; use build()")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            if s not in (1, -1):
                raise GraphError(f"edge ({u}, {v}) has sign {s!r}")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _signs(self) -> dict[tuple[int, int], int]:
        d = {}
        for u, v, s in self.edges:
            d[u, v] = s
            d[v, u] = s
        return d

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency rows as bit sets (bit ``w`` of ``rows[v]`` set iff ``v ~ w``)."""
        r = [0] * self.n
        for u, v, _ in self.edges:
            r[u] |= 1 << v
            r[v] |= 1 << u
        return tuple(r)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._signs

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv``, or 0 if ``u`` and ``v`` are not adjacent."""
        return self._signs.get((u, v), 0)

    def signature(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    def pairs(self) -> frozenset[tuple[int, int]]:
        """The underlying (unsigned) edge set."""
        return frozenset((u, v) for u, v, _ in self.edges)

    def matrix(self) -> list[list[int]]:
        """The adjacency matrix A(Γ) with entries in {-1, 0, 1}."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v, s in self.edges:
            a[u][v] = a[v][u] = s
        return a

    def to_numpy(self):
        import numpy as np

        return np.array(self.matrix(), dtype=float).reshape(self.n, self.n)

    def underlying(self) -> "SignedGraph":
        """The all-positive graph on the same edges, (G, +)."""
        return SignedGraph(self.n, tuple((u, v, 1) for u, v, _ in self.edges))

    def with_signs(self, signs: Mapping[tuple[int, int], int]) -> "SignedGraph":
        """Same underlying graph; signs looked up by normalized pair, default kept."""
        return SignedGraph(
            self.n, tuple((u, v, signs.get((u, v), s)) for u, v, s in self.edges)
        )

    def __repr__(self) -> str:
        es = " ".join(f"{u}{'+' if s > 0 else '-'}{v}" for u, v, s in self.edges)
        return f"SignedGraph(n={self.n}, [{es}])"


def build(n: int, signed_edges: Iterable[Sequence] = ()) -> SignedGraph:
    """Build a signed graph from ``(u, v, sign)`` triples in any order.

    ``sign`` may be ``±1`` or ``'+'``/``'-'``; a pair given without a sign
    is positive. Loops, duplicate pairs and out-of-range vertices raise
    :class:`GraphError` naming the edge.
    """
    out = []
    seen = set()
    for e in signed_edges:
        if len(e) == 2:
            u, v, s = e[0], e[1], 1
        elif len(e) == 3:
            u, v, s = e
        else:
            raise GraphError(f"edge {tuple(e)!r} must be (u, v) or (u, v, sign)")
        try:
            s = parse_sign(s)
        except GraphError as exc:
            raise GraphError(f"edge ({u}, {v}): {exc}") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphError(f"edge ({u!r}, {v!r}) has non-integer endpoints")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        out.append((key[0], key[1], s))
    return SignedGraph(n, tuple(sorted(out)))


def _theta_vector(g: SignedGraph, theta) -> list[int]:
    if isinstance(theta, Mapping):
        missing = [v for v in range(g.n) if v not in theta]
        if missing:
            raise GraphError(f"switching function undefined at vertices {missing}")
        vals = [theta[v] for v in range(g.n)]
    else:
        vals = list(theta)
        if len(vals) != g.n:
            raise GraphError(f"switching function has {len(vals)} values for {g.n} vertices")
    return [parse_sign(x) for x in vals]


def switch(g: SignedGraph, theta) -> SignedGraph:
    """Apply σ^θ(uv) = θ(u)σ(uv)θ(v); ``theta`` is a sequence or mapping of ±1."""
    t = _theta_vector(g, theta)
    return SignedGraph(g.n, tuple((u, v, t[u] * s * t[v]) for u, v, s in g.edges))


def switch_set(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Switch at a vertex subset (negate every edge with exactly one end in it)."""
    t = [1] * g.n
    for v in vertices:
        t[v] = -1
    return switch(g, t)


def negate(g: SignedGraph) -> SignedGraph:
    """-Γ: flip every edge sign."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def induced_subgraph(g: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    """Γ[S], reindexed to ``0..|S|-1`` in increasing order of the old labels.

    Returns the subgraph and the map old label -> new label.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (index[u], index[v], s) for u, v, s in g.edges if u in index and v in index
    )
    return SignedGraph(len(keep), edges), index


def delete_vertices(g: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Rename vertex ``v`` to ``perm[v]``; ``perm`` must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertex set")
    return build(g.n, ((perm[u], perm[v], s) for u, v, s in g.edges))


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    edges = []
    off = 0
    for h in graphs:
        edges.extend((u + off, v + off, s) for u, v, s in h.edges)
        off += h.n
    return SignedGraph(off, tuple(sorted(edges)))


def add_vertex(g: SignedGraph, attachments: Iterable[tuple[int, SignLike]] = ()) -> SignedGraph:
    """Append vertex ``n`` adjacent to each ``(w, sign)`` in ``attachments``."""
    new = g.n
    return build(new + 1, [*g.edges, *((w, new, s) for w, s in attachments)])


def add_twin(g: SignedGraph, v: int) -> SignedGraph:
    """Append a twin of ``v``: same neighbors, identical signs, not adjacent to ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return add_vertex(g, ((w, g.sign(v, w)) for w in g.adj[v]))


def _twin_pair(g: SignedGraph, u: int, v: int) -> bool:
    if g.rows[u] != g.rows[v]:
        return False
    nbrs = g.adj[u]
    if not nbrs:
        return True
    ratio = g.sign(u, nbrs[0]) * g.sign(v, nbrs[0])
    return all(g.sign(u, w) * g.sign(v, w) == ratio for w in nbrs[1:])


def find_twins(g: SignedGraph) -> list[tuple[int, int]]:
    """All pairs ``u < v`` of twin vertices.

    ``u`` and ``v`` are twins when N(u) = N(v) and the sign patterns on the
    common neighborhood agree up to one global flip (the only freedom a
    switching leaves once θ(w) is factored out).
    """
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if _twin_pair(g, u, v)
    ]


def is_reduced(g: SignedGraph) -> bool:
    return not find_twins(g)


def twin_classes(g: SignedGraph) -> list[list[int]]:
    """Partition of the vertices into twin classes (twinning is an equivalence)."""
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            if _twin_pair(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes
