import random
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from mimicnet.dblexp import generate_dblexp
from mimicnet.graph import TerminalGraph
from mimicnet.planar import generate_planar_dual


def random_graph(rng: random.Random, max_n=10, max_k=4) -> TerminalGraph:
    """Connected graph: random spanning tree plus extra edges, small rational weights."""
    n = rng.randint(2, max_n)
    k = rng.randint(2, min(max_k, n))
    labels = [f"v{i}" for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for i in range(1, n):
        edges.append((order[i], order[rng.randrange(i)]))
    for _ in range(rng.randint(0, n * (n - 1) // 2)):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    weighted = [
        (labels[a], labels[b], Fraction(rng.randint(1, 9), rng.randint(1, 4))) for a, b in edges
    ]
    terms = rng.sample(labels, k)
    return TerminalGraph.from_edges(weighted, terms, vertices=labels)


@st.composite
def terminal_graphs(draw, max_n=8, max_k=4):
    return random_graph(random.Random(draw(st.integers(0, 2**32 - 1))), max_n, max_k)


@lru_cache(maxsize=None)
def planar(k):
    return generate_planar_dual(k)


@lru_cache(maxsize=None)
def dblexp2():
    return generate_dblexp(2)


@pytest.fixture
def triangle():
    return TerminalGraph.from_edges(
        [("a", "b", Fraction(1)), ("b", "c", Fraction(2)), ("a", "c", Fraction(3, 2))],
        ["a", "b"],
    )


@pytest.fixture
def path_graph():
    # a - x - y - b with a weak middle link
    return TerminalGraph.from_edges(
        [("a", "x", Fraction(3)), ("x", "y", Fraction(1)), ("y", "b", Fraction(3)), ("x", "c", Fraction(2))],
        ["a", "b", "c"],
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
