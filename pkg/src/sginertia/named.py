"""Named small signed graphs from the girth/inertia characterizations.

Vertex labels follow the text: y1..y5 are 0..4 and x1, x2, x3, ... follow.
The exceptional graphs are pinned down by the constraints stated for them
(negative edges, attachment vertices, which short cycles must be balanced)
and every stated inertia value is rechecked in the tests. G1 and G2 are
not described in words at all; they were found by enumerating connected
triangle-free reduced signed graphs with i- = 2 (see
:func:`sginertia.verify.derive_reduced_bases`) and are frozen here.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .constructors import make_canonical_unicyclic, make_complete_multipartite, make_cycle, make_path, make_theta
from .graph import SignLike, SignedGraph, add_vertex, build, parse_sign


def b434_labeled(a16: SignLike = 1, a27: SignLike = 1, a67: SignLike = 1) -> SignedGraph:
    """B(4,3,4) in the order y1..y5, x1, x2 with y1y4 negative."""
    s16, s27, s67 = (parse_sign(x) for x in (a16, a27, a67))
    return build(
        7,
        [(0, 3, -1), (0, 4, 1), (1, 2, 1), (1, 4, 1), (2, 3, 1), (0, 5, s16), (1, 6, s27), (5, 6, s67)],
    )


def b444_labeled(a17: SignLike = 1, a48: SignLike = 1, a78: SignLike = 1) -> SignedGraph:
    """B(4,4,4) in the order y1, y4, y3, y2, y5, y6, x1, x2 with an all-positive C6."""
    s17, s48, s78 = (parse_sign(x) for x in (a17, a48, a78))
    cyc = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (0, 5, 1)]
    return build(8, cyc + [(0, 6, s17), (3, 7, s48), (6, 7, s78)])


def gamma1() -> SignedGraph:
    return b434_labeled(1, 1, 1)


def gamma2(leaves: int = 1) -> SignedGraph:
    """Γ1 with ``leaves`` >= 1 pendant vertices at y5."""
    if leaves < 1:
        raise ValueError("Γ2 needs at least one leaf at y5")
    g = gamma1()
    for _ in range(leaves):
        g = add_vertex(g, [(4, 1)])
    return g


def gamma3() -> SignedGraph:
    """Γ1 plus x3 adjacent to x2 and y4, both edges positive."""
    return add_vertex(gamma1(), [(6, 1), (3, 1)])


def gamma4() -> SignedGraph:
    """(B(4,3,4), +) plus x3 adjacent to x2 and y4; every cycle positive."""
    base = b434_labeled(1, 1, 1).with_signs({(0, 3): 1})
    return add_vertex(base, [(6, 1), (3, 1)])


def h1() -> SignedGraph:
    """Γ3 plus x4 adjacent to x3 and y5 (positive); the text gives i- = 4."""
    return add_vertex(gamma3(), [(7, 1), (4, 1)])


def _c5_with_hub(positions: Sequence[int], balanced: bool = True) -> SignedGraph:
    """C5 with one pendant x_i at each listed cycle position and x' joined to all x_i."""
    g = make_cycle(5, balanced)
    xs = []
    for p in positions:
        xs.append(g.n)
        g = add_vertex(g, [(p, 1)])
    return add_vertex(g, [(x, 1) for x in xs])


def h2() -> SignedGraph:
    """Balanced C5, four x's at distinct cycle vertices, x' adjacent to all four.

    Four of five cycle vertices are always consecutive, and "no unbalanced
    5-cycle" leaves a single switching class, the all-positive one. Its
    exact i- is 5; the stated 4 is recorded in OBSTRUCTIONS as stated.
    """
    return _c5_with_hub((0, 1, 2, 3))


def h3() -> SignedGraph:
    """(H3, +): x's at three consecutive cycle vertices of C5."""
    return _c5_with_hub((0, 1, 2))


def h4(sigma: int = 2) -> SignedGraph:
    """H4 with x's at positions 0, 1, 3 of a balanced C5.

    Both 5-cycles through x' are positive. The 6-cycle x1 y1 y5 y4 x3 x'
    is free; ``sigma=2`` makes it negative and ``sigma=1`` positive,
    matching the stated values i-(H4^σ1) = 4 and i-(H4^σ2) = 3.
    """
    if sigma not in (1, 2):
        raise ValueError("sigma must be 1 or 2")
    g = _c5_with_hub((0, 1, 3))
    if sigma == 2:
        # x3 is vertex 7 and x' is vertex 8
        g = g.with_signs({(7, 8): -1})
    return g


def h5() -> SignedGraph:
    """Unbalanced C6 with x's at alternate vertices 0, 2, 4 and x' adjacent to all.

    The signs make every 6-cycle negative, the only choice compatible
    with the absence of a balanced girth cycle.
    """
    g = make_cycle(6, balanced=False)
    for p in (0, 2, 4):
        g = add_vertex(g, [(p, 1)])
    return add_vertex(g, [(6, 1), (7, -1), (8, 1)])


def b435(sigma: int = 2) -> SignedGraph:
    """B(4,3,5) with positive 5-cycle; σ2 has i- = 3, σ1 has i- = 4."""
    if sigma not in (1, 2):
        raise ValueError("sigma must be 1 or 2")
    return make_theta(4, 3, 5, (1, -1 if sigma == 2 else 1))


def b445(sigma: int = 1) -> SignedGraph:
    """B(4,4,5) with negative 6-cycle; both classes have i- = 4."""
    if sigma not in (1, 2):
        raise ValueError("sigma must be 1 or 2")
    return make_theta(4, 4, 5, (-1, 1 if sigma == 1 else -1))


def b434_positive() -> SignedGraph:
    return make_theta(4, 3, 4)


def b525_positive() -> SignedGraph:
    return make_theta(5, 2, 5)


def b555_positive() -> SignedGraph:
    return make_theta(5, 5, 5)


def b535_sigma() -> SignedGraph:
    """Both 6-cycles negative."""
    return make_theta(5, 3, 5, (-1, 1))


def b545_sigma() -> SignedGraph:
    """Both 7-cycles negative."""
    return make_theta(5, 4, 5, (-1, 1))


def g1() -> SignedGraph:
    """Unbalanced C4 with a leaf at vertex 0."""
    return add_vertex(make_cycle(4, balanced=False), [(0, 1)])


def g2() -> SignedGraph:
    """Unbalanced C4 with leaves at the opposite vertices 0 and 2."""
    return add_vertex(g1(), [(2, 1)])


# Reduced bases of the girth-4 twin families.
BASES_UNBALANCED_C4: dict[str, Callable[[], SignedGraph]] = {
    "C4-unbalanced": lambda: make_cycle(4, balanced=False),
    "G1": g1,
    "G2": g2,
}
BASES_NO_UNBALANCED_C4: dict[str, Callable[[], SignedGraph]] = {
    "P4": lambda: make_path(4),
    "P5": lambda: make_path(5),
    "C5-balanced": lambda: make_cycle(5, balanced=True),
    "C6-unbalanced": lambda: make_cycle(6, balanced=False),
}

# Fixed-size exceptional graphs of girth >= 5 with i- = ceil(g/2).
EXCEPTIONAL_WITH_CYCLE: dict[str, Callable[[], SignedGraph]] = {
    "Gamma1": gamma1,
    "Gamma3": gamma3,
}
EXCEPTIONAL_WITHOUT_CYCLE: dict[str, Callable[[], SignedGraph]] = {
    "B434+": b434_positive,
    "Gamma4": gamma4,
    "H4-sigma2": lambda: h4(2),
    "H5": h5,
    "B435-sigma2": lambda: b435(2),
    "B525+": b525_positive,
    "B555+": b555_positive,
    "B535-sigma": b535_sigma,
    "B545-sigma": b545_sigma,
}

# Graphs quoted as obstructions, with the i- the text states for them.
OBSTRUCTIONS: dict[str, tuple[Callable[[], SignedGraph], int]] = {
    "H1": (h1, 4),
    "H2": (h2, 4),
    "H3+": (h3, 4),
    "H4-sigma1": (lambda: h4(1), 4),
    "B435-sigma1": (lambda: b435(1), 4),
    "B445-sigma1": (lambda: b445(1), 4),
    "B445-sigma2": (lambda: b445(2), 4),
}


def fig2_k1() -> SignedGraph:
    """Canonical unicyclic, girth 7, one pendant star with two leaves."""
    return make_canonical_unicyclic(7, True, [2])


def fig2_k2() -> SignedGraph:
    """Canonical unicyclic, girth 8, stars at antipodal vertices (arcs 3, 3)."""
    return make_canonical_unicyclic(8, True, {0: 2, 4: 2})


def k_bipartite(a: int, b: int) -> SignedGraph:
    return make_complete_multipartite((a, b))
