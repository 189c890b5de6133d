import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from ccsdim.ccs import generate_ccs, unit_cube_labeling
from ccsdim.graph import UNREACHABLE, all_pairs, build_graph


def floyd_warshall(g):
    """Reference all-pairs distances, independent of the BFS code path."""
    n = g.vertex_count
    inf = 10**9
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    d[d >= inf] = UNREACHABLE
    return d


@st.composite
def connected_graphs(draw, min_vertices=1, max_vertices=12):
    n = draw(st.integers(min_vertices, max_vertices))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return build_graph(n, edges)


@st.composite
def any_graphs(draw, max_vertices=10):
    n = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return build_graph(n, edges)


@pytest.fixture(scope="session")
def labeling():
    return unit_cube_labeling()


@pytest.fixture(scope="session")
def ccs1():
    return generate_ccs(1)


@pytest.fixture(scope="session")
def ccs1_oracle(ccs1):
    return all_pairs(ccs1.graph)


@pytest.fixture(scope="session")
def ccs2():
    return generate_ccs(2)


@pytest.fixture(scope="session")
def ccs2_oracle(ccs2):
    return all_pairs(ccs2.graph)


@pytest.fixture(scope="session")
def ccs3():
    return generate_ccs(3)


@pytest.fixture(scope="session")
def ccs3_oracle(ccs3):
    return all_pairs(ccs3.graph)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])
