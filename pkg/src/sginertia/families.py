"""Family membership predicates and the inertia/nullity classifiers.

Every theorem is represented by a predicate that recognizes its equality
families from structure alone (cycle shape, balance, twin reduction,
switching isomorphism with a named graph). The classifiers compute the
actual index exactly and compare: a family tag never depends on the
inertia, so a mismatch is a genuine disagreement with the theorem and is
reported as a finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Optional, Sequence

from . import named
from .canon import switching_isomorphic
from .graph import GraphError, Inertia, SignedGraph, delete_vertices, negate, twin_classes
from .inertia import cycle_negative_index, inertia_exact
from .invariants import (
    cycle_sign,
    girth,
    is_balanced,
    is_canonical_unicyclic,
    is_connected,
    pendant_star_decomposition,
    shortest_cycles,
)


@dataclass(frozen=True)
class FamilyTag:
    """A certified membership: ``theorem`` id, ``family`` name, parameters."""

    theorem: str
    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return f"{self.theorem}:{self.family}"
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.theorem}:{self.family}[{inner}]"

    def param(self, key, default=None):
        return dict(self.params).get(key, default)


@dataclass(frozen=True)
class Classification:
    """Where one index of Γ sits relative to the girth bounds.

    ``relation`` is one of ``=ceil(g/2)-1``, ``=ceil(g/2)``,
    ``>ceil(g/2)``, ``<ceil(g/2)-1`` for the inertia indices and
    ``=n-g+2``, ``=n-g+1``, ``=n-g``, ``<n-g``, ``>n-g+2`` for the
    nullity. ``scope`` names the theorems whose hypotheses Γ satisfies.
    """

    quantity: str
    value: int
    girth: int
    relation: str
    tags: tuple[FamilyTag, ...] = ()
    scope: tuple[str, ...] = ()
    findings: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "value": self.value,
            "girth": self.girth,
            "relation": self.relation,
            "tags": [str(t) for t in self.tags],
            "scope": list(self.scope),
            "findings": list(self.findings),
        }


def twin_peel(g: SignedGraph) -> tuple[SignedGraph, int]:
    """Delete all but the least vertex of every twin class.

    Deleting a twin never creates a new twin pair, so one pass reaches the
    reduced graph. Returns (reduced graph, number of deleted vertices).
    """
    drop = {v for cls in twin_classes(g) for v in cls[1:]}
    if not drop:
        return g, 0
    reduced, _ = delete_vertices(g, drop)
    return reduced, len(drop)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def cycle_extremal_low(g_len: int, balanced: bool) -> bool:
    """i-(C_g) = ceil(g/2) - 1."""
    return cycle_negative_index(g_len, balanced) == _ceil_half(g_len) - 1


def _star_join_params(g: SignedGraph) -> Optional[tuple[int, bool, int]]:
    """(g, cycle balanced, r) if Γ is a cycle with a bridge to the center of K_{1,r}."""
    if g.m != g.n or not is_connected(g):
        return None
    gi = girth(g)
    if len(gi.cycle) == g.n:
        return None
    on = set(gi.cycle)
    off = [v for v in range(g.n) if v not in on]
    centers = [v for v in off if any(w in on for w in g.adj[v])]
    if len(centers) != 1:
        return None
    (c,) = centers
    if sum(1 for w in g.adj[c] if w in on) != 1:
        return None
    leaves = [v for v in off if v != c]
    if not leaves or any(g.adj[v] != (c,) for v in leaves):
        return None
    return gi.length, is_balanced(g).balanced, len(leaves)


class GraphContext:
    """Lazily computed facts about one connected signed graph with a cycle."""

    def __init__(self, g: SignedGraph):
        if not is_connected(g):
            raise GraphError("classification needs a connected signed graph")
        gi = girth(g)
        if gi.length is None:
            raise GraphError("classification needs a graph with a cycle (girth undefined)")
        self.g = g
        self.girth = gi.length
        self.cycle = gi.cycle
        self.c = _ceil_half(gi.length)

    @cached_property
    def inertia(self) -> Inertia:
        return inertia_exact(self.g)

    @cached_property
    def balanced(self) -> bool:
        return is_balanced(self.g).balanced

    @cached_property
    def is_cycle(self) -> bool:
        return self.g.m == self.g.n == self.girth

    @cached_property
    def canonical_unicyclic(self) -> bool:
        # m == n rules out everything else before any traversal
        return self.g.m == self.g.n and is_canonical_unicyclic(self.g)

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        return pendant_star_decomposition(self.g).arcs

    @cached_property
    def multipartite_parts(self) -> Optional[tuple[int, ...]]:
        """Part sizes if the underlying graph is complete multipartite."""
        g = self.g
        groups: dict[int, int] = {}
        for v in range(g.n):
            groups[g.rows[v]] = groups.get(g.rows[v], 0) + 1
        full = (1 << g.n) - 1
        for row in groups:
            part = full & ~row
            # the part of v is exactly its non-neighbors (including itself)
            if groups[row] != part.bit_count():
                return None
            if any(g.rows[u] != row for u in range(g.n) if part >> u & 1):
                return None
        return tuple(sorted(groups.values()))

    @cached_property
    def all_triangles_negative(self) -> bool:
        g = self.g
        for u in range(g.n):
            for v in g.adj[u]:
                if v <= u:
                    continue
                common = g.rows[u] & g.rows[v] & ~((1 << (v + 1)) - 1)
                while common:
                    w = (common & -common).bit_length() - 1
                    common &= common - 1
                    if g.sign(u, v) * g.sign(v, w) * g.sign(u, w) != -1:
                        return False
        return True

    @cached_property
    def girth_cycle_hits_ceiling(self) -> bool:
        """Some shortest cycle C has i-(C) = ceil(g/2) (decided per cycle by its sign)."""
        return any(
            not cycle_extremal_low(self.girth, cycle_sign(self.g, cyc) == 1)
            for cyc in shortest_cycles(self.g)
        )

    @cached_property
    def star_join(self) -> Optional[tuple[int, bool, int]]:
        return _star_join_params(self.g)

    @cached_property
    def twin_base(self) -> SignedGraph:
        return twin_peel(self.g)[0]

    def matches(self, builder: Callable[[], SignedGraph]) -> bool:
        return switching_isomorphic(self.g, _cached_build(builder))

    def matches_gamma2(self) -> bool:
        t = self.g.n - 7
        return t >= 1 and self.girth == 5 and switching_isomorphic(self.g, named.gamma2(t))


@lru_cache(maxsize=None)
def _cached_build(builder: Callable[[], SignedGraph]) -> SignedGraph:
    return builder()


def _balance_word(b: bool) -> str:
    return "balanced" if b else "unbalanced"


def _cycle_tag(theorem: str, ctx: GraphContext) -> FamilyTag:
    return FamilyTag(theorem, "extremal-cycle", (("g", ctx.girth), ("balance", _balance_word(ctx.balanced))))


def canonical_arcs(arcs: Sequence[int]) -> tuple[int, ...]:
    """Least rotation or reflection of a cyclic arc sequence (label independent)."""
    arcs = tuple(arcs)
    # reflecting the cycle reverses the order of the arcs between majors
    return min(
        seq[i:] + seq[:i] for seq in (arcs, arcs[::-1]) for i in range(len(arcs))
    )


def _parity_tag(theorem: str, ctx: GraphContext) -> FamilyTag:
    return FamilyTag(
        theorem, "canonical-unicyclic-parity", (("g", ctx.girth), ("arcs", canonical_arcs(ctx.arcs)))
    )


def _twin_tags(theorem: str, ctx: GraphContext, bases: dict) -> list[FamilyTag]:
    if ctx.girth != 4:
        return []
    base = ctx.twin_base
    for name, builder in bases.items():
        if switching_isomorphic(base, _cached_build(builder)):
            peeled = ctx.g.n - base.n
            return [FamilyTag(theorem, f"twin-extension-of({name})", (("twins", peeled),))]
    return []


def _star_tag(theorem: str, ctx: GraphContext, ok: Callable[[int, bool], bool]) -> list[FamilyTag]:
    sj = ctx.star_join
    if sj is None:
        return []
    g_len, bal, r = sj
    if not ok(g_len, bal):
        return []
    return [FamilyTag(theorem, "cycle-star-join", (("g", g_len), ("balance", _balance_word(bal)), ("r", r)))]


def _catalog_tags(theorem: str, ctx: GraphContext, names: dict, gamma2: bool = False) -> list[FamilyTag]:
    tags = []
    if gamma2 and ctx.matches_gamma2():
        tags.append(FamilyTag(theorem, "catalog(Gamma2)", (("leaves", ctx.g.n - 7),)))
    for name, builder in names.items():
        b = _cached_build(builder)
        if b.n == ctx.g.n and ctx.matches(builder):
            tags.append(FamilyTag(theorem, f"catalog({name})"))
    return tags


def _mod(g_len: int, balanced: bool, when_bal: tuple, when_unbal: tuple) -> bool:
    return g_len % 4 in (when_bal if balanced else when_unbal)


# -- negative inertia ---------------------------------------------------------

def tags_31(ctx: GraphContext) -> list[FamilyTag]:
    tags = []
    if ctx.is_cycle and _mod(ctx.girth, ctx.balanced, (0, 1), (2, 3)):
        tags.append(_cycle_tag("3.1", ctx))
    parts = ctx.multipartite_parts
    if parts is not None:
        if len(parts) == 2 and ctx.balanced:
            tags.append(FamilyTag("3.1", "complete-bipartite-positive", (("parts", parts),)))
        if len(parts) >= 3 and ctx.all_triangles_negative:
            tags.append(FamilyTag("3.1", "multipartite-unbalanced-triangles", (("parts", parts),)))
    return tags


def _unicyclic_parity(ctx: GraphContext) -> bool:
    arcs = ctx.arcs
    if ctx.girth % 2:
        return sum(1 for a in arcs if a % 2 == 0) == 1
    return all(a % 2 == 1 for a in arcs)


def tags_32(ctx: GraphContext) -> list[FamilyTag]:
    if not ctx.canonical_unicyclic:
        return []
    if ctx.is_cycle:
        ok = _mod(ctx.girth, ctx.balanced, (2, 3), (0, 1))
        return [_cycle_tag("3.2", ctx)] if ok else []
    return [_parity_tag("3.2", ctx)] if _unicyclic_parity(ctx) else []


def in_scope_34x(ctx: GraphContext) -> bool:
    return ctx.girth >= 4 and not ctx.canonical_unicyclic


def tags_33(ctx: GraphContext) -> list[FamilyTag]:
    if not (in_scope_34x(ctx) and ctx.girth_cycle_hits_ceiling):
        return []
    tags = _twin_tags("3.3", ctx, named.BASES_UNBALANCED_C4)
    if ctx.girth == 5:
        tags += _catalog_tags("3.3", ctx, named.EXCEPTIONAL_WITH_CYCLE, gamma2=True)
    return tags


def tags_34(ctx: GraphContext) -> list[FamilyTag]:
    if not in_scope_34x(ctx) or ctx.girth_cycle_hits_ceiling:
        return []
    tags = _twin_tags("3.4", ctx, named.BASES_NO_UNBALANCED_C4)
    tags += _star_tag("3.4", ctx, lambda gl, b: _mod(gl, b, (0, 1), (2, 3)))
    tags += _catalog_tags("3.4", ctx, named.EXCEPTIONAL_WITHOUT_CYCLE)
    return tags


# -- positive inertia, read directly off the statements -------------------------

BASES_43 = {
    "P4": named.BASES_NO_UNBALANCED_C4["P4"],
    "P5": named.BASES_NO_UNBALANCED_C4["P5"],
    "C5-unbalanced": lambda: named.make_cycle(5, balanced=False),
    "C6-unbalanced": named.BASES_NO_UNBALANCED_C4["C6-unbalanced"],
    **named.BASES_UNBALANCED_C4,
}

CATALOG_43 = {
    "Gamma1": named.gamma1,
    "Gamma3": named.gamma3,
    "-B434+": lambda: negate(named.b434_positive()),
    "-Gamma4": lambda: negate(named.gamma4()),
    "-H4-sigma2": lambda: negate(named.h4(2)),
    "H5": named.h5,
    "-B435-sigma2": lambda: negate(named.b435(2)),
    "-B525+": lambda: negate(named.b525_positive()),
    "B535-sigma": named.b535_sigma,
    "-B545-sigma": lambda: negate(named.b545_sigma()),
    "B555+": named.b555_positive,
}


def tags_41(ctx: GraphContext) -> list[FamilyTag]:
    tags = []
    if ctx.is_cycle and _mod(ctx.girth, ctx.balanced, (0, 3), (1, 2)):
        tags.append(_cycle_tag("4.1", ctx))
    parts = ctx.multipartite_parts
    if parts is not None and ctx.balanced:
        tags.append(FamilyTag("4.1", "complete-multipartite-positive", (("parts", parts),)))
    return tags


def tags_42(ctx: GraphContext) -> list[FamilyTag]:
    if not ctx.canonical_unicyclic:
        return []
    if ctx.is_cycle:
        ok = _mod(ctx.girth, ctx.balanced, (1, 2), (0, 3))
        return [_cycle_tag("4.2", ctx)] if ok else []
    return [_parity_tag("4.2", ctx)] if _unicyclic_parity(ctx) else []


def tags_43(ctx: GraphContext) -> list[FamilyTag]:
    if not in_scope_34x(ctx):
        return []
    tags = _twin_tags("4.3", ctx, BASES_43)
    tags += _star_tag("4.3", ctx, lambda gl, b: _mod(gl, b, (0, 3), (1, 2)))
    tags += _catalog_tags("4.3", ctx, CATALOG_43, gamma2=True)
    return tags


# -- nullity ----------------------------------------------------------------

def tags_51(ctx: GraphContext) -> list[FamilyTag]:
    tags = []
    if ctx.is_cycle and _mod(ctx.girth, ctx.balanced, (0,), (2,)):
        tags.append(_cycle_tag("5.1", ctx))
    parts = ctx.multipartite_parts
    if parts is not None and len(parts) == 2 and ctx.balanced:
        tags.append(FamilyTag("5.1", "complete-bipartite-positive", (("parts", parts),)))
    return tags


def tags_52(ctx: GraphContext) -> list[FamilyTag]:
    if not ctx.canonical_unicyclic:
        return []
    if ctx.is_cycle:
        ok = ctx.girth % 2 == 1 or _mod(ctx.girth, ctx.balanced, (2,), (0,))
        return [_cycle_tag("5.2", ctx)] if ok else []
    ok = ctx.girth % 2 == 0 and all(a % 2 == 1 for a in ctx.arcs)
    return [_parity_tag("5.2", ctx)] if ok else []


BASES_53 = {k: v for k, v in BASES_43.items() if k != "C5-unbalanced"}
CATALOG_53 = {"H5": named.h5, "B535-sigma": named.b535_sigma, "B555+": named.b555_positive}


def tags_53(ctx: GraphContext) -> list[FamilyTag]:
    if not in_scope_34x(ctx):
        return []
    tags = _twin_tags("5.3", ctx, BASES_53)
    tags += _star_tag("5.3", ctx, lambda gl, b: _mod(gl, b, (0,), (2,)))
    tags += _catalog_tags("5.3", ctx, CATALOG_53)
    return tags


@dataclass(frozen=True)
class TheoremSpec:
    """How one theorem is checked: which index, when it applies, its target."""

    theorem: str
    quantity: str
    tags: Callable[[GraphContext], list[FamilyTag]]
    applies: Callable[[GraphContext], bool]
    target: Callable[[GraphContext], int]
    bound: Optional[str] = None  # "lower" or "upper": the target is also a bound


def _low(ctx):
    return ctx.c - 1


def _high(ctx):
    return ctx.c


def _always(ctx):
    return True


def _canon(ctx):
    return ctx.canonical_unicyclic


THEOREMS: dict[str, TheoremSpec] = {
    "3.1": TheoremSpec("3.1", "neg", tags_31, _always, _low, "lower"),
    "3.2": TheoremSpec("3.2", "neg", tags_32, _canon, _high),
    "3.3": TheoremSpec("3.3", "neg", tags_33, lambda c: in_scope_34x(c) and c.girth_cycle_hits_ceiling, _high),
    "3.4": TheoremSpec("3.4", "neg", tags_34, lambda c: in_scope_34x(c) and not c.girth_cycle_hits_ceiling, _high),
    "4.1": TheoremSpec("4.1", "pos", tags_41, _always, _low, "lower"),
    "4.2": TheoremSpec("4.2", "pos", tags_42, _canon, _high),
    "4.3": TheoremSpec("4.3", "pos", tags_43, in_scope_34x, _high),
    "5.1": TheoremSpec("5.1", "nul", tags_51, _always, lambda c: c.g.n - c.girth + 2, "upper"),
    "5.2": TheoremSpec("5.2", "nul", tags_52, _canon, lambda c: c.g.n - c.girth),
    "5.3": TheoremSpec("5.3", "nul", tags_53, in_scope_34x, lambda c: c.g.n - c.girth),
}


@dataclass
class TheoremCheck:
    """Outcome of one theorem on one graph."""

    theorem: str
    applies: bool
    value: int = 0
    target: int = 0
    equality: bool = False
    predicted: bool = False
    tags: list[FamilyTag] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)


def check_theorem(theorem: str, ctx: GraphContext) -> TheoremCheck:
    """Test one theorem on one graph: the bound, and equality ⇔ family membership."""
    spec = THEOREMS[theorem]
    if not spec.applies(ctx):
        return TheoremCheck(theorem, False)
    value = getattr(ctx.inertia, spec.quantity)
    target = spec.target(ctx)
    tags = spec.tags(ctx)
    out = TheoremCheck(theorem, True, value, target, value == target, bool(tags), tags)
    if spec.bound == "lower" and value < target:
        out.problems.append(f"bound: {spec.quantity}={value} < {target}")
    if spec.bound == "upper" and value > target:
        out.problems.append(f"bound: {spec.quantity}={value} > {target}")
    if theorem == "5.1" and value == target - 1:
        out.problems.append(f"gap: eta={value} = n-g+1 should be impossible")
    if out.equality != out.predicted:
        if out.equality:
            out.problems.append(f"equality {spec.quantity}={value} outside the listed families")
        else:
            listed = ", ".join(map(str, tags))
            out.problems.append(f"listed family ({listed}) but {spec.quantity}={value} != {target}")
    return out


def _inertia_relation(value: int, c: int) -> str:
    if value < c - 1:
        return "<ceil(g/2)-1"
    if value == c - 1:
        return "=ceil(g/2)-1"
    if value == c:
        return "=ceil(g/2)"
    return ">ceil(g/2)"


def _nullity_relation(value: int, n: int, g_len: int) -> str:
    d = value - (n - g_len)
    if d > 2:
        return ">n-g+2"
    if d < 0:
        return "<n-g"
    return {0: "=n-g", 1: "=n-g+1", 2: "=n-g+2"}[d]


def _classify(ctx: GraphContext, theorems: tuple[str, ...], quantity: str) -> Classification:
    checks = [check_theorem(t, ctx) for t in theorems]
    value = getattr(ctx.inertia, quantity)
    if quantity == "nul":
        relation = _nullity_relation(value, ctx.g.n, ctx.girth)
    else:
        relation = _inertia_relation(value, ctx.c)
    tags = tuple(t for ch in checks for t in ch.tags)
    scope = tuple(ch.theorem for ch in checks if ch.applies)
    findings = tuple(f"{ch.theorem}: {p}" for ch in checks for p in ch.problems)
    return Classification(quantity, value, ctx.girth, relation, tags, scope, findings)


def classify_negative_inertia(g: SignedGraph) -> Classification:
    """i- of Γ against ceil(g/2)-1 and ceil(g/2), with the certified family tags."""
    return _classify(GraphContext(g), ("3.1", "3.2", "3.3", "3.4"), "neg")


# tag translation for the duality i+(Γ) = i-(-Γ)

_DUAL = {"3.1": "4.1", "3.2": "4.2", "3.3": "4.3", "3.4": "4.3"}

_POSITIVE_FAMILY = {
    "complete-bipartite-positive": "complete-multipartite-positive",
    "multipartite-unbalanced-triangles": "complete-multipartite-positive",
}

_NAME_REGISTRY: dict[str, Callable[[], SignedGraph]] = {
    **named.BASES_UNBALANCED_C4,
    **named.BASES_NO_UNBALANCED_C4,
    "C5-unbalanced": lambda: named.make_cycle(5, balanced=False),
    **named.EXCEPTIONAL_WITH_CYCLE,
    **named.EXCEPTIONAL_WITHOUT_CYCLE,
    "Gamma2": named.gamma2,
}


@lru_cache(maxsize=None)
def negated_name(name: str) -> str:
    """Name of -X: X itself, another registered graph, or ``-X``."""
    x = _cached_build(_NAME_REGISTRY[name])
    neg = negate(x)
    if switching_isomorphic(neg, x):
        return name
    for other, builder in _NAME_REGISTRY.items():
        if other != name and switching_isomorphic(neg, _cached_build(builder)):
            return other
    return "-" + name


def _rename(family: str) -> str:
    for prefix in ("twin-extension-of(", "catalog("):
        if family.startswith(prefix):
            inner = family[len(prefix) : -1]
            return f"{prefix}{negated_name(inner)})"
    return _POSITIVE_FAMILY.get(family, family)


def transpose_tag(tag: FamilyTag, girth_len: int) -> FamilyTag:
    """Map a tag of -Γ from the i- theorems to the matching tag of Γ."""
    theorem = _DUAL[tag.theorem]
    params = []
    for k, v in tag.params:
        if k == "balance" and girth_len % 2 == 1:
            v = "unbalanced" if v == "balanced" else "balanced"
        params.append((k, v))
    return FamilyTag(theorem, _rename(tag.family), tuple(params))


def classify_positive_inertia(g: SignedGraph) -> Classification:
    """i+ of Γ, derived as the i- classification of -Γ with tags transposed."""
    dual = classify_negative_inertia(negate(g))
    tags = tuple(transpose_tag(t, dual.girth) for t in dual.tags)
    scope = tuple(dict.fromkeys(_DUAL[s] for s in dual.scope))
    findings = tuple(f"{_DUAL[f[:3]]}: on the negation, {f[5:]}" for f in dual.findings)
    return Classification("pos", dual.value, dual.girth, dual.relation, tags, scope, findings)


def classify_positive_inertia_direct(g: SignedGraph) -> Classification:
    """i+ of Γ checked against the positive-index statements as written."""
    return _classify(GraphContext(g), ("4.1", "4.2", "4.3"), "pos")


def classify_nullity(g: SignedGraph) -> Classification:
    """η of Γ against n-g+2 and n-g; η = n-g+1 is flagged as impossible."""
    return _classify(GraphContext(g), ("5.1", "5.2", "5.3"), "nul")


def star_join_params(g: SignedGraph) -> Optional[tuple[int, bool, int]]:
    return _star_join_params(g)


def unicyclic_star_arithmetic(g: SignedGraph) -> int:
    """k + Σ floor(l_i / 2): i- of a canonical unicyclic graph with stars."""
    stars = pendant_star_decomposition(g)
    return stars.k + sum(a // 2 for a in stars.arcs)




# list items each theorem names explicitly, for annotation only
LIST_ITEMS: tuple[tuple[str, bool, dict], ...] = (
    ("3.3(1)", True, named.BASES_UNBALANCED_C4),
    ("3.3(2)", False, named.EXCEPTIONAL_WITH_CYCLE),
    ("3.4(1)", True, named.BASES_NO_UNBALANCED_C4),
    ("3.4(3)", False, named.EXCEPTIONAL_WITHOUT_CYCLE),
    ("4.3(1)", True, BASES_43),
    ("4.3(3)", False, CATALOG_43),
    ("5.3(1)", True, BASES_53),
    ("5.3(3)", False, CATALOG_53),
)


def list_memberships(g: SignedGraph) -> list[str]:
    """Named list items that ``g`` is, or is a twin extension of.

    Unlike the classifier tags this ignores the theorem hypotheses: a bare
    unbalanced C4 is canonical unicyclic and so falls under 3.2, yet it is
    still the first base graph of the 3.3(1) list.
    """
    reduced, peeled = twin_peel(g)
    out = []
    for item, by_twins, registry in LIST_ITEMS:
        target = reduced if by_twins else g
        for name, builder in registry.items():
            if switching_isomorphic(target, _cached_build(builder)):
                out.append(f"{item}:{name}" + (f"[twins={peeled}]" if by_twins else ""))
    return out


__all__ = [
    "FamilyTag",
    "Classification",
    "GraphContext",
    "TheoremCheck",
    "THEOREMS",
    "check_theorem",
    "classify_negative_inertia",
    "classify_positive_inertia",
    "classify_positive_inertia_direct",
    "classify_nullity",
    "negated_name",
    "transpose_tag",
    "twin_peel",
    "star_join_params",
    "unicyclic_star_arithmetic",
    "LIST_ITEMS",
    "canonical_arcs",
    "list_memberships",
]
