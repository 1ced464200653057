import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sginertia.graph import SignedGraph
from sginertia.invariants import components, is_connected

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

LONG = bool(os.environ.get("SG_LONG"))
long_only = pytest.mark.skipif(not LONG, reason="opt-in long run, set SG_LONG=1")


@st.composite
def signed_graphs(draw, min_n=1, max_n=8, connected=False, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    density = p if p is not None else draw(st.floats(0.15, 0.9))
    edges = []
    for u, v in pairs:
        if draw(st.floats(0, 1)) < density:
            edges.append((u, v, draw(st.sampled_from((1, -1)))))
    g = SignedGraph(n, tuple(edges))
    if connected and not is_connected(g):
        # chain the components together with positive edges
        comps = components(g)
        extra = [(min(a[0], b[0]), max(a[0], b[0]), 1) for a, b in zip(comps, comps[1:])]
        g = SignedGraph(n, tuple(sorted(edges + extra)))
    return g


def random_signed_graph(rng: random.Random, n: int, p: float, connected: bool = False) -> SignedGraph:
    edges = [
        (u, v, rng.choice((1, -1)))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    g = SignedGraph(n, tuple(edges))
    if connected and not is_connected(g):
        # join consecutive components through random members
        comps = components(g)
        for a, b in zip(comps, comps[1:]):
            u, v = rng.choice(a), rng.choice(b)
            edges.append((min(u, v), max(u, v), rng.choice((1, -1))))
        g = SignedGraph(n, tuple(sorted(edges)))
    return g


def thetas(n):
    return st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
