"""graph6 encoding, canonical labeling, and isomorphism up to switching.

The canonical labeling is an individualization-refinement search: colour
refinement to an equitable ordered partition, then branching on the first
non-singleton cell. Branches on vertices that are twins (N(u)-v = N(v)-u)
are skipped because the transposition is an automorphism fixing the
partition. That keeps complete (multi)partite graphs and stars cheap, which
is where plain search blows up at these orders.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import networkx as nx

from .graph import SignedGraph, relabel
from .invariants import SwitchingClassCertificate, certificate, switching_equivalent


def _graph6_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n < 1 << 18:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 order {n} too large")


def graph6_encode(n: int, pairs: Iterable[tuple[int, int]]) -> str:
    edges = {(min(u, v), max(u, v)) for u, v in pairs}
    bits = [1 if (i, j) in edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [_graph6_order(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(s: str) -> tuple[int, list[tuple[int, int]]]:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or not 63 <= ord(s[0]) <= 126:
        raise ValueError(f"bad graph6 string {s!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ValueError(f"unsupported graph6 order prefix in {s!r}")
        n = sum((ord(c) - 63) << sh for c, sh in zip(s[1:4], (12, 6, 0)))
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend(val >> (5 - k) & 1 for k in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ValueError(f"graph6 string too short for n={n}")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return n, pairs


def rows_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    r = [0] * n
    for u, v in pairs:
        r[u] |= 1 << v
        r[v] |= 1 << u
    return tuple(r)


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (label-invariant order)."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    new.append(groups[key])
            else:
                new.append(c)
        cells = new
        if not changed:
            return cells


def _leaf_code(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    code = []
    for v in order:
        r = rows[v]
        x = 0
        while r:
            low = r & -r
            x |= 1 << pos[low.bit_length() - 1]
            r ^= low
        code.append(x)
    return tuple(code)


def canonical_order(n: int, rows: Sequence[int]) -> list[int]:
    """Vertex order (new index -> old vertex) giving the canonical form."""
    if n == 0:
        return []
    deg = {}
    for v in range(n):
        deg.setdefault(rows[v].bit_count(), []).append(v)
    start = [deg[d] for d in sorted(deg)]
    best: list = [None, None]

    def search(cells: list[list[int]]):
        cells = _refine(rows, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            code = _leaf_code(rows, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[idx]
        reps = []
        for v in cell:
            if not any(
                (rows[v] & ~(1 << u)) == (rows[u] & ~(1 << v)) for u in reps
            ):
                reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search(start)
    return best[1]


def canonical_form(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    """Isomorphism-invariant code of an unsigned graph (adjacency bit rows)."""
    return _leaf_code(rows, canonical_order(n, rows))


def canonical_graph6(g: SignedGraph) -> str:
    order = canonical_order(g.n, g.rows)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return graph6_encode(g.n, ((perm[u], perm[v]) for u, v, _ in g.edges))


def canonical_relabel(g: SignedGraph) -> SignedGraph:
    """Γ relabeled so its underlying graph is in canonical form."""
    order = canonical_order(g.n, g.rows)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(g, perm)


def to_networkx(g: SignedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v, {"sign": s}) for u, v, s in g.edges)
    return h


def automorphisms(g: SignedGraph) -> Iterator[dict[int, int]]:
    h = to_networkx(g)
    yield from nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter()


def canonical_certificate(g: SignedGraph) -> SwitchingClassCertificate:
    """Certificate invariant under isomorphism and switching.

    Relabel canonically, then take the least cotree sign vector over all
    automorphisms of the canonical underlying graph. The cost is linear in
    the automorphism group order, which is small for the sparse girth >= 4
    graphs the catalog deals in, but reaches n! for complete graphs.
    """
    c = canonical_relabel(g)
    best = None
    for auto in automorphisms(c):
        cert = certificate(relabel(c, [auto[v] for v in range(c.n)]))
        if best is None or cert.cotree_signs < best.cotree_signs:
            best = cert
    return best


def switching_isomorphisms(g1: SignedGraph, g2: SignedGraph) -> Iterator[dict[int, int]]:
    """Isomorphisms φ of the underlying graphs with Γ1 ~ φ^{-1}(Γ2)."""
    if g1.n != g2.n or g1.m != g2.m:
        return
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_networkx(g1), to_networkx(g2))
    for phi in matcher.isomorphisms_iter():
        mapped = relabel(g1, [phi[v] for v in range(g1.n)])
        if switching_equivalent(mapped, g2):
            yield phi


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    return next(switching_isomorphisms(g1, g2), None) is not None
