import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import gonlab.rank as rank
from conftest import hf_graphs
from gonlab import (
    IncidenceGraph, Part, base_delta, cycle_graph, delta, delta_relative, fano, gamma_k, is_n_strong,
    minimal_zero_decomposition, random_bipartite, strength_value,
)
from gonlab.rank import PreconditionError
from oracles import strong_by_subsets


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_delta_of_paths(n):
    for k in range(1, 12):
        assert delta(gamma_k(n, k)) == n + k - 1


def test_delta_small_cases():
    assert delta(fano()) == 7
    assert delta(cycle_graph(3, 6)) == 6
    assert delta(cycle_graph(4, 8)) == 8
    assert delta(IncidenceGraph.empty(3)) == 0


def test_relative_delta_matches_difference():
    g = cycle_graph(3, 8)
    base = ["x0", "x1", "x2"]
    assert delta_relative(g, base) == delta(g) - delta(g.induced(base))
    assert base_delta(g, base) == delta(g.induced(base))


def _sample(seed, n, nverts):
    rng = random.Random(seed)
    g = random_bipartite(rng, n, nverts, rng.choice((0.2, 0.3, 0.45)))
    k = rng.randint(0, len(g))
    base = rng.sample(g.vertices, k)
    return base, g


@given(st.integers(0, 10**7), st.sampled_from([3, 4]), st.integers(2, 9))
def test_strength_matches_subset_oracle(seed, n, nverts):
    base, g = _sample(seed, n, nverts)
    rep = is_n_strong(base, g)
    assert rep.strong == strong_by_subsets(base, g)
    if not rep.strong:
        assert strength_value(base, g, rep.witness) == rep.witness_value < 0


@given(st.integers(0, 10**7), st.sampled_from([3, 4]), st.integers(2, 9))
def test_min_cut_path_matches_oracle(seed, n, nverts):
    base, g = _sample(seed, n, nverts)
    saved = rank.EXHAUSTIVE_LIMIT
    rank.EXHAUSTIVE_LIMIT = -1
    try:
        rep = is_n_strong(base, g)
    finally:
        rank.EXHAUSTIVE_LIMIT = saved
    assert rep.method == "min-cut"
    assert rep.strong == strong_by_subsets(base, g)
    if not rep.strong:
        assert strength_value(base, g, rep.witness) < 0


@given(hf_graphs(max_vertices=10))
def test_open_graphs_are_strong_over_nothing(g):
    assert is_n_strong([], g).strong


def test_hexagon_minus_edge_is_not_strong():
    g = cycle_graph(3, 6)
    base = g.without_edges([("x0", "x1")])
    # the empty extension already loses the missing edge
    rep = is_n_strong(base, g)
    assert not rep.strong and rep.witness_value == -1


def test_closing_a_hexagon_is_a_zero_extension():
    g = cycle_graph(3, 6)
    path = ["x0", "x1", "x2", "x3", "x4"]
    assert is_n_strong(path, g).strong
    assert delta_relative(g, path) == 0


def test_zero_decomposition_of_clean_arc():
    g = cycle_graph(3, 6)
    steps = minimal_zero_decomposition([v for v in g.vertices if v != "x1"], g)
    assert [(set(s.added), s.kind) for s in steps] == [({"x1"}, "CLEAN_ARC")]


def test_zero_decomposition_needs_strong_base():
    g = fano()
    with pytest.raises(PreconditionError):
        minimal_zero_decomposition(["p1", "p2", "p3", "p4", "p5", "p6", "p7", "l1", "l2", "l3", "l4", "l5"], g)


@given(hf_graphs(max_vertices=10))
def test_zero_steps_add_up(g):
    base = [v for v in g.vertices if g.degree(v) != 2]
    if not is_n_strong(base, g).strong or delta_relative(g, base) != 0:
        return
    steps = minimal_zero_decomposition(base, g)
    covered = set().union(*(s.added for s in steps)) if steps else set()
    assert covered == set(g.vertices) - set(base)
    cur = set(base)
    for s in steps:
        assert strength_value(cur, g, cur | set(s.added)) == 0
        cur |= set(s.added)


def test_parts_do_not_enter_delta():
    g = IncidenceGraph(4, {"a": Part.LINE, "b": Part.POINT}, [("a", "b")])
    assert delta(g) == 3 * 2 - 2
