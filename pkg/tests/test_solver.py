import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccsdim.graph import (
    all_pairs,
    build_graph,
    complete_graph,
    cycle_graph,
    hypercube,
    path_graph,
    random_connected_graph,
    star_graph,
)
from ccsdim.resolve import is_edge_resolving, is_vertex_resolving
from ccsdim.solver import (
    EDGE,
    VARIANTS,
    VERTEX,
    DistinguishingMatrix,
    GuardError,
    UnresolvablePairError,
    brute_force_min,
    build_matrix,
    solve_exact,
    solve_greedy,
    verify,
)

from .conftest import connected_graphs


def _setup(g, variant):
    oracle = all_pairs(g)
    return oracle, build_matrix(oracle, g, variant)


def test_k2_vertex_matrix():
    g = build_graph(2, [(0, 1)])
    _, m = _setup(g, VERTEX)
    assert m.pairs == ((0, 1),)
    assert m.rows == (0b11,)
    assert solve_greedy(m) == [0]


def test_p3_edge_matrix():
    _, m = _setup(path_graph(3), EDGE)
    assert m.item_pair(0) == ((0, 1), (1, 2))
    assert m.rows == (0b101,)


def test_q3_edge_matrix(labeling):
    _, m = _setup(hypercube(3), EDGE)
    assert len(m.rows) == 66 and m.columns == 8
    k = next(k for k in range(66) if set(m.item_pair(k)) == {labeling.e(4), labeling.e(5)})
    row = m.rows[k]
    r3 = labeling.r(3)
    assert not row >> r3 & 1
    assert not row >> labeling.antipode(r3) & 1


def test_dimacs_export():
    _, m = _setup(path_graph(3), EDGE)
    assert m.to_dimacs() == "p hittingset 1 3\n0 2\n"


def test_greedy_q3():
    oracle, m = _setup(hypercube(3), EDGE)
    K = solve_greedy(m)
    assert is_edge_resolving(oracle, hypercube(3).edges, K).resolving
    assert len(K) <= 4


def test_greedy_star():
    _, m = _setup(star_graph(3), VERTEX)
    assert solve_greedy(m) == [1, 2]


def test_zero_row_rejected():
    m = DistinguishingMatrix(VERTEX, (0, 1, 2), ((0, 1), (1, 2)), (0b100, 0), 3)
    with pytest.raises(UnresolvablePairError) as info:
        solve_greedy(m)
    assert info.value.pair == (1, 2)
    with pytest.raises(UnresolvablePairError):
        solve_exact(m)


@pytest.mark.parametrize("variant", VARIANTS)
def test_ccs1_exact(ccs1, ccs1_oracle, variant):
    res = solve_exact(build_matrix(ccs1_oracle, ccs1.graph, variant))
    assert res.optimal and res.size == 3
    assert res.variant == variant


# Minima below were frozen from brute_force_min runs.
@pytest.mark.parametrize(
    "g, variant, size",
    [
        (cycle_graph(6), EDGE, 2),
        (cycle_graph(6), VERTEX, 2),
        (complete_graph(4), VERTEX, 3),
        (complete_graph(4), EDGE, 3),
        (star_graph(3), VERTEX, 2),
        (hypercube(3), EDGE, 3),
        (path_graph(4), EDGE, 1),
    ],
)
def test_known_minima(g, variant, size):
    oracle, m = _setup(g, variant)
    brute = brute_force_min(oracle, g, variant)
    assert len(brute) == size
    res = solve_exact(m)
    assert res.optimal and res.size == size
    assert res.landmarks == brute


def test_path_brute_force_is_an_endpoint():
    g = path_graph(4)
    assert brute_force_min(all_pairs(g), g, EDGE) == [0]


def test_guards(ccs2, ccs2_oracle):
    with pytest.raises(GuardError):
        brute_force_min(ccs2_oracle, ccs2.graph, EDGE)
    with pytest.raises(GuardError):
        solve_exact(build_matrix(ccs2_oracle, ccs2.graph, EDGE))


def test_node_budget_returns_best_found():
    g = random_connected_graph(12, 0.2, seed=5)
    oracle, m = _setup(g, EDGE)
    res = solve_exact(m, node_budget=1)
    assert not res.optimal
    assert verify(oracle, g, EDGE, res.landmarks).resolving
    full = solve_exact(m)
    assert full.optimal and full.size <= res.size


def test_time_budget_is_accepted():
    g = random_connected_graph(10, 0.3, seed=2)
    _, m = _setup(g, VERTEX)
    assert solve_exact(m, time_budget=30.0).optimal


def test_single_edge_needs_one_landmark():
    g = path_graph(2)
    oracle, m = _setup(g, EDGE)
    assert solve_exact(m).landmarks == [0]
    assert brute_force_min(oracle, g, EDGE) == [0]


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_vertices=2, max_vertices=9), st.sampled_from(VARIANTS))
def test_exact_matches_brute_force(g, variant):
    oracle, m = _setup(g, variant)
    res = solve_exact(m)
    assert res.optimal
    assert res.landmarks == brute_force_min(oracle, g, variant)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_vertices=2, max_vertices=10), st.sampled_from(VARIANTS))
def test_greedy_is_feasible(g, variant):
    oracle, m = _setup(g, variant)
    assert verify(oracle, g, variant, solve_greedy(m)).resolving


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_vertices=2, max_vertices=10), st.data())
def test_matrix_soundness(g, data):
    K = data.draw(st.lists(st.integers(0, g.vertex_count - 1), unique=True))
    oracle = all_pairs(g)
    assert build_matrix(oracle, g, VERTEX).hits_all(K) == is_vertex_resolving(oracle, K).resolving
    assert build_matrix(oracle, g, EDGE).hits_all(K) == is_edge_resolving(oracle, g.edges, K).resolving


def test_deterministic_results():
    g = random_connected_graph(11, 0.3, seed=9)
    _, m = _setup(g, EDGE)
    runs = {tuple(solve_exact(m).landmarks) for _ in range(3)}
    assert len(runs) == 1
