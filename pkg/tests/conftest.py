import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from spex1p.graph import Graph, norm_edge

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def permuted(draw, g):
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(perm)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    return Graph(n, frozenset(norm_edge(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None:
        return
    ran = {
        int(rep.nodeid.split("test_criterion_")[1][:2]): rep.outcome
        for key in ("passed", "failed", "error")
        for rep in terminalreporter.stats.get(key, [])
        if "test_criterion_" in rep.nodeid and rep.when == "call"
    }
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    recorded = dict(mod.RESULTS)
    for k in sorted(ran):
        if k in recorded:
            ok, detail = recorded[k]
            terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"criterion {k:2d}: FAIL  raised before its check completed")
