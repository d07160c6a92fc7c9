import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from precolor.graph import (
    Graph,
    GraphError,
    PrecoloringError,
    bfs_distances,
    complete_graph,
    empty_graph,
    extends,
    find_conflict,
    greedy_extend,
    is_proper,
    pairs_within,
    path_graph,
    precoloring_violation,
    validate_precoloring,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def star(leaves=3):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_bfs_path():
    assert bfs_distances(path_graph(4), 0) == {0: 0, 1: 1, 2: 2, 3: 3}


def test_bfs_disconnected():
    assert bfs_distances(empty_graph(2), 0) == {0: 0, 1: None}


def test_bfs_complete():
    dist = bfs_distances(complete_graph(4), 2)
    assert dist[2] == 0 and all(dist[v] == 1 for v in (0, 1, 3))


def test_bfs_bad_source():
    with pytest.raises(GraphError):
        bfs_distances(path_graph(3), 3)


def test_pairs_within_examples():
    assert pairs_within(path_graph(5), {0, 4}, 3) == frozenset()
    assert pairs_within(path_graph(4), {0, 3}, 3) == {(0, 3)}
    assert pairs_within(path_graph(4), {0, 3}, 2) == frozenset()
    assert pairs_within(star(), {1, 2, 3}, 2) == {(1, 2), (1, 3), (2, 3)}


def test_pairs_within_invalid():
    with pytest.raises(GraphError):
        pairs_within(path_graph(3), {0, 7}, 2)


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_is_proper_examples():
    assert is_proper(complete_graph(3), {0: 1, 1: 2, 2: 3})
    assert find_conflict(path_graph(2), {0: 2, 1: 2}) == (0, 1)
    assert is_proper(empty_graph(5), dict.fromkeys(range(5), 1))
    with pytest.raises(GraphError):
        find_conflict(path_graph(2), {0: 1})


def test_extends_examples():
    f = {0: 1, 1: 2}
    assert extends(f, {0: 1})
    assert not extends(f, {1: 3})
    assert extends(f, {})


def test_validate_precoloring_examples():
    g = path_graph(2)
    with pytest.raises(PrecoloringError) as err:
        validate_precoloring(g, {0: 1, 1: 1})
    assert err.value.pair == (0, 1)
    validate_precoloring(g, {0: 1, 1: 2})
    validate_precoloring(path_graph(4), {0: 5, 3: 5})
    with pytest.raises(GraphError):
        validate_precoloring(g, {4: 1})


def test_greedy_extend_is_proper():
    g = complete_graph(4)
    f = greedy_extend(g, {0: 7})
    assert is_proper(g, f) and f[0] == 7


@given(graphs(), st.integers(1, 4), st.data())
def test_pairs_within_monotone_in_k(g, k, data):
    p = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert pairs_within(g, p, k) <= pairs_within(g, p, k + 1)


@given(graphs(), st.data())
def test_pairs_within_one_is_induced_edges(g, data):
    p = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert pairs_within(g, p, 1) == frozenset(g.induced_edges(p))


@settings(max_examples=60)
@given(graphs())
def test_bfs_triangle_inequality(g):
    dist = [bfs_distances(g, v) for v in range(g.n)]
    for a in range(g.n):
        for b in range(g.n):
            for c in range(g.n):
                ab, bc, ac = dist[a][b], dist[b][c], dist[a][c]
                if ab is not None and bc is not None:
                    assert ac is not None and ac <= ab + bc


def test_precoloring_violation_random():
    rng = random.Random(3)
    g = Graph.from_edges(8, [(u, v) for u in range(8) for v in range(u + 1, 8) if rng.random() < 0.4])
    for _ in range(50):
        d = {v: rng.randint(1, 3) for v in rng.sample(range(8), 4)}
        bad = precoloring_violation(g, d)
        expected = any(g.has_edge(u, v) and d[u] == d[v] for u in d for v in d if u < v)
        assert (bad is not None) == expected
