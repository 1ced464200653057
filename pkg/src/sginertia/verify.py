"""Exhaustive verification of the girth theorems, and catalog derivation.

The universe is every connected signed graph with a cycle in an
:class:`EnumerationSpec`, one representative per labeled switching class.
Work is split by underlying graph so it can go to a process pool; partial
results are merged in enumeration order, so reports do not depend on the
number of workers.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from . import named
from .canon import canonical_certificate, graph6_encode, switching_isomorphic
from .catalog import CatalogEntry, ExtremalCatalog
from .constructors import make_canonical_unicyclic
from .enumeration import (
    EnumerationSpec,
    enumerate_switching_classes,
    enumerate_underlying,
)
from .families import THEOREMS, GraphContext, check_theorem, classify_negative_inertia
from .graph import SignedGraph, is_reduced
from .inertia import cycle_negative_index, inertia_by_pendant_reduction, inertia_exact
from .invariants import (
    cycle_sign,
    distance_layers,
    girth_length,
    shortest_cycles,
)

THEOREM_IDS = tuple(THEOREMS)
UNICYCLIC_THEOREMS = ("3.2", "4.2", "5.2")
DEFAULT_SPEC = EnumerationSpec(max_n=6)


@dataclass
class Counterexample:
    theorem: str
    graph6: str
    bits: str
    n: int
    girth: int
    inertia: tuple[int, int, int]
    problems: list[str]
    reverified: bool = True

    def to_record(self) -> dict:
        return {
            "type": "counterexample",
            "theorem": self.theorem,
            "graph6": self.graph6,
            "cotree_bits": self.bits,
            "n": self.n,
            "girth": self.girth,
            "inertia": list(self.inertia),
            "problems": self.problems,
            "reverified": self.reverified,
        }


@dataclass
class VerificationReport:
    """Summary of one theorem over one universe.

    ``instances`` counts graphs inside the theorem's hypotheses,
    ``equalities`` those attaining the target value, and ``matches`` those
    where attaining it coincides with family membership. ``table`` maps
    (girth, value) to a count for the summary matrix.
    """

    theorem: str
    universe: str
    checked: int = 0
    instances: int = 0
    equalities: int = 0
    matches: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    table: Counter = field(default_factory=Counter)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.instances += other.instances
        self.equalities += other.equalities
        self.matches += other.matches
        self.counterexamples.extend(other.counterexamples)
        self.table.update(other.table)

    def summary_record(self) -> dict:
        return {
            "type": "summary",
            "theorem": self.theorem,
            "universe": self.universe,
            "checked": self.checked,
            "instances": self.instances,
            "equalities": self.equalities,
            "matches": self.matches,
            "counterexamples": len(self.counterexamples),
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
        }

    def records(self) -> list[dict]:
        return [self.summary_record(), *(c.to_record() for c in self.counterexamples)]

    def table_text(self) -> str:
        """Girth x value count matrix for the theorem's index."""
        quantity = THEOREMS[self.theorem].quantity if self.theorem in THEOREMS else "value"
        girths = sorted({g for g, _ in self.table})
        values = sorted({v for _, v in self.table})
        if not girths:
            return f"{self.theorem}: no instances\n"
        head = [f"g\\{quantity}"] + [str(v) for v in values]
        rows = [head] + [[str(g)] + [str(self.table.get((g, v), 0)) for v in values] for g in girths]
        width = max(len(c) for r in rows for c in r)
        return "".join(" ".join(c.rjust(width) for c in r) + "\n" for r in rows)


def _recheck(theorem: str, g: SignedGraph, problems: list[str]) -> bool:
    """Confirm a counterexample with the other inertia routes before reporting it."""
    exact = inertia_exact(g)
    if inertia_exact(g, materialize_hyperbolic=True) != exact:
        return False
    if inertia_by_pendant_reduction(g) != exact:
        return False
    again = check_theorem(theorem, GraphContext(g))
    return again.problems == problems


def _check_one(theorem: str, g: SignedGraph, report: VerificationReport) -> None:
    report.checked += 1
    ctx = GraphContext(g)
    res = check_theorem(theorem, ctx)
    if not res.applies:
        return
    report.instances += 1
    report.equalities += res.equality
    report.matches += res.equality == res.predicted
    report.table[(ctx.girth, res.value)] += 1
    if res.problems:
        cert = canonical_certificate(g)
        report.counterexamples.append(
            Counterexample(
                theorem,
                cert.underlying,
                cert.bits,
                g.n,
                ctx.girth,
                tuple(ctx.inertia),
                list(res.problems),
                _recheck(theorem, g, list(res.problems)),
            )
        )


def _work_underlying(args: tuple[str, str, int, tuple]) -> VerificationReport:
    theorem, g6, n, edges = args
    part = VerificationReport(theorem, "")
    base = SignedGraph(n, edges)
    for sg in enumerate_switching_classes(base):
        _check_one(theorem, sg, part)
    return part


def _underlying_jobs(theorem: str, spec: EnumerationSpec) -> Iterator[tuple]:
    for n in range(max(spec.min_n, 3), spec.max_n + 1):
        for g in enumerate_underlying(n, spec):
            if girth_length(g) is None:
                continue
            yield (theorem, graph6_encode(g.n, g.pairs()), g.n, g.edges)


def _describe(spec: EnumerationSpec) -> str:
    bits = [f"n<={spec.max_n}"]
    if spec.min_girth or spec.max_girth:
        bits.append(f"girth {spec.min_girth or 3}..{spec.max_girth or 'inf'}")
    if spec.cyclomatic_cap is not None:
        bits.append(f"cyclomatic<={spec.cyclomatic_cap}")
    return "exhaustive " + ", ".join(bits)


def verify_theorem(
    theorem: str,
    spec: Optional[EnumerationSpec] = None,
    jobs: int = 1,
    max_girth: Optional[int] = None,
) -> VerificationReport:
    """Check one theorem (bound, and equality ⇔ family) across a universe.

    For the canonical-unicyclic theorems, ``max_girth`` selects the
    constructive sweep instead: every girth 3..max_girth, both balance
    classes, every nonempty set of major vertices, 1 or 2 leaves each.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")
    start = time.perf_counter()
    if max_girth is not None:
        if theorem not in UNICYCLIC_THEOREMS:
            raise ValueError(f"the constructive sweep applies to {', '.join(UNICYCLIC_THEOREMS)} only")
        report = VerificationReport(theorem, f"constructive unicyclic sweep g<={max_girth}, leaves in {{1,2}}")
        for g in unicyclic_sweep(max_girth):
            _check_one(theorem, g, report)
        report.seconds = time.perf_counter() - start
        return report
    spec = spec or DEFAULT_SPEC
    spec.check()
    report = VerificationReport(theorem, _describe(spec))
    work = _underlying_jobs(theorem, spec)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_work_underlying, work, chunksize=16):
                report.merge(part)
    else:
        for item in work:
            report.merge(_work_underlying(item))
    report.seconds = time.perf_counter() - start
    return report


def unicyclic_sweep(
    max_girth: int = 9, min_girth: int = 3, leaf_choices: Sequence[int] = (1, 2), include_cycles: bool = True
) -> Iterator[SignedGraph]:
    """Canonical unicyclic graphs: every major-vertex set and per-vertex leaf count."""
    for g_len in range(min_girth, max_girth + 1):
        for balanced in (True, False):
            if include_cycles:
                yield make_canonical_unicyclic(g_len, balanced)
            for k in range(1, g_len + 1):
                for majors in itertools.combinations(range(g_len), k):
                    for counts in itertools.product(leaf_choices, repeat=k):
                        lc = [0] * g_len
                        for v, c in zip(majors, counts):
                            lc[v] = c
                        yield make_canonical_unicyclic(g_len, balanced, lc)


# -- catalog ---------------------------------------------------------------

CATALOG_DEFAULT = EnumerationSpec(max_n=9, min_girth=5, max_girth=5, cyclomatic_cap=2)


def anchor_name(g: SignedGraph) -> str:
    """Human-readable name of a derived class: the matching family tag, if any."""
    tags = [t for t in classify_negative_inertia(g).tags if t.theorem in ("3.3", "3.4")]
    if not tags:
        return "-"
    t = tags[0]
    name = t.family
    if t.params:
        name += "[" + ",".join(f"{k}={v}" for k, v in t.params) + "]"
    return name.replace(" ", "")


def matches_gamma1_anchor(g: SignedGraph) -> bool:
    """B(4,3,4) with y1y4 negative and a16·a27·a67 = +1, up to switching isomorphism."""
    return any(
        switching_isomorphic(g, named.b434_labeled(*a))
        for a in itertools.product((1, -1), repeat=3)
        if a[0] * a[1] * a[2] == 1
    )


def derive_catalog(
    min_girth: int = 5,
    max_girth: Optional[int] = None,
    spec: Optional[EnumerationSpec] = None,
    reverse: bool = False,
    names: bool = True,
) -> ExtremalCatalog:
    """Non-canonical-unicyclic classes with i- = ceil(g/2), split by branch.

    Branch ``3.3`` holds graphs with a shortest cycle C for which
    i-(C) = ceil(g/2); branch ``3.4`` the rest. Classes are deduplicated
    up to switching isomorphism by canonical certificate.
    """
    if min_girth < 4:
        raise ValueError("the catalog covers girth >= 4")
    max_girth = min_girth if max_girth is None else max_girth
    base = spec or CATALOG_DEFAULT
    spec = EnumerationSpec(
        max_n=base.max_n,
        min_n=base.min_n,
        min_girth=min_girth,
        max_girth=max_girth,
        cyclomatic_cap=base.cyclomatic_cap,
    )
    spec.check()
    found: dict[tuple[str, str], CatalogEntry] = {}
    orders = range(spec.min_n, spec.max_n + 1)
    for n in reversed(orders) if reverse else orders:
        graphs = list(enumerate_underlying(n, spec))
        if reverse:
            graphs.reverse()
        for u in graphs:
            classes = list(enumerate_switching_classes(u))
            if reverse:
                classes.reverse()
            for g in classes:
                ctx = GraphContext(g)
                if ctx.canonical_unicyclic or ctx.inertia.neg != ctx.c:
                    continue
                cert = canonical_certificate(g)
                key = (cert.underlying, cert.bits)
                if key in found:
                    continue
                branch = "3.3" if ctx.girth_cycle_hits_ceiling else "3.4"
                name = anchor_name(g) if names else "-"
                found[key] = CatalogEntry(cert, ctx.girth, ctx.inertia, g.n, branch, name)
    cap = "" if spec.cyclomatic_cap is None else f", cyclomatic<={spec.cyclomatic_cap}"
    prov = f"derived at order <= {spec.max_n} by exhaustive search, girth {min_girth}..{max_girth}{cap}"
    return ExtremalCatalog.from_entries(found.values(), prov)


def derive_reduced_bases(max_n: int = 8) -> list[SignedGraph]:
    """Connected triangle-free reduced signed graphs with i- = 2, one per class."""
    spec = EnumerationSpec(max_n=max_n, min_girth=4, include_acyclic=True)
    found: dict[tuple[str, str], SignedGraph] = {}
    for n in range(1, max_n + 1):
        for u in enumerate_underlying(n, spec):
            for g in enumerate_switching_classes(u):
                if inertia_exact(g).neg != 2 or not is_reduced(g):
                    continue
                c = canonical_certificate(g)
                found.setdefault((c.underlying, c.bits), g)
    return list(found.values())


# -- structure lemmas ---------------------------------------------------------

def verify_structure_lemmas(spec: Optional[EnumerationSpec] = None) -> VerificationReport:
    """Distance-layer lemmas over a universe.

    Layers: if i-(Γ) = i-(C) for a shortest cycle C then no vertex is at
    distance >= 2 from C. Attachments: for girth >= 5, no outside vertex
    has two neighbors on a shortest cycle.
    """
    spec = spec or DEFAULT_SPEC
    spec.check()
    start = time.perf_counter()
    report = VerificationReport("lemmas", _describe(spec))
    for item in _underlying_jobs("lemmas", spec):
        _, _, n, edges = item
        for g in enumerate_switching_classes(SignedGraph(n, edges)):
            report.checked += 1
            problems = structure_lemma_problems(g)
            report.instances += 1
            if problems:
                cert = canonical_certificate(g)
                report.counterexamples.append(
                    Counterexample("lemmas", cert.underlying, cert.bits, g.n, girth_length(g), tuple(inertia_exact(g)), problems)
                )
            else:
                report.matches += 1
    report.seconds = time.perf_counter() - start
    return report


def structure_lemma_problems(g: SignedGraph) -> list[str]:
    problems = []
    g_len = girth_length(g)
    neg = inertia_exact(g).neg
    for cyc in shortest_cycles(g):
        on = set(cyc)
        balanced = cycle_sign(g, cyc) == 1
        if neg == cycle_negative_index(g_len, balanced):
            layers = distance_layers(g, cyc)
            if len(layers) >= 2 and any(layers[1:]):
                problems.append(f"layers: i- = i-(C) for C={cyc} but N_2 is nonempty")
        if g_len >= 5:
            for v in range(g.n):
                if v not in on and sum(1 for w in g.adj[v] if w in on) > 1:
                    problems.append(f"attachment: vertex {v} has two neighbors on C={cyc}")
    return problems


def run_all(theorems: Iterable[str] = THEOREM_IDS, spec: Optional[EnumerationSpec] = None, jobs: int = 1) -> list[VerificationReport]:
    return [verify_theorem(t, spec, jobs) for t in theorems]
