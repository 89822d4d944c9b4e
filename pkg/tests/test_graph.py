import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hf_graphs
from gonlab import (
    INFINITY, GraphError, IncidenceGraph, Part, cycle_graph, distance, fano, find_embedding, geodesics, girth,
    is_embedding, isomorphic, path_graph, random_bipartite, shortest_cycle, shortest_path,
)
from gonlab.graph import (
    bfs_distances, connected_components, is_connected, is_forest, long_cycle_exists, two_core,
)
from gonlab.graph import Verdict
from oracles import bfs, girth_brute, isomorphic_brute, longest_cycle_brute


def test_rejects_same_part_edge():
    with pytest.raises(GraphError):
        IncidenceGraph(3, {"a": Part.POINT, "b": Part.POINT}, [("a", "b")])


def test_rejects_bad_ids_and_n():
    with pytest.raises(GraphError):
        IncidenceGraph(2, {})
    with pytest.raises(GraphError):
        IncidenceGraph(3, {"a b": Part.POINT})
    with pytest.raises(GraphError):
        IncidenceGraph(3, {"a": Part.POINT, "b": Part.LINE}, [("a", "b"), ("b", "a")])


def test_fano_basics():
    g = fano()
    assert len(g) == 14 and g.num_edges == 21
    assert girth(g) == 6
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert is_connected(g)


def test_path_and_cycle_distances():
    p = path_graph(3, 6)
    assert distance(p, "x0", "x6") == 6
    c = cycle_graph(3, 8)
    assert distance(c, "x0", "x4") == 4
    geo = geodesics(c, "x0", "x4")
    assert geo.count == 2 and not geo.unique
    assert geodesics(c, "x0", "x3").unique


def test_disconnected_distance_is_infinite():
    g = IncidenceGraph(3, {"a": Part.POINT, "b": Part.LINE})
    assert distance(g, "a", "b") == INFINITY
    with pytest.raises(GraphError):
        shortest_path(g, "a", "b")
    assert len(connected_components(g)) == 2


def test_forest_has_infinite_girth():
    assert girth(path_graph(3, 5)) == INFINITY
    assert shortest_cycle(path_graph(3, 5)) is None
    assert is_forest(path_graph(3, 5))


def test_two_core_of_lollipop():
    c = cycle_graph(3, 6)
    g = c.extend({"t": Part.LINE, "u": Part.POINT}, [("x0", "t"), ("t", "u")])
    assert two_core(g) == set(c.vertices)


def test_long_cycle_in_fano_and_budget():
    g = fano()
    assert long_cycle_exists(g, 14).verdict is Verdict.YES
    assert long_cycle_exists(cycle_graph(3, 6), 8).verdict is Verdict.NO
    assert long_cycle_exists(g, 14, budget=1).verdict is Verdict.UNKNOWN


def _random_graph(seed, nverts=9, p=0.35):
    return random_bipartite(random.Random(seed), 3, nverts, p)


@given(st.integers(0, 10**6))
def test_bfs_matches_oracle(seed):
    g = _random_graph(seed)
    src = g.vertices[0]
    assert bfs_distances(g, src) == bfs(g, src)


@given(st.integers(0, 10**6))
def test_girth_matches_oracle(seed):
    g = _random_graph(seed)
    brute = girth_brute(g)
    assert girth(g) == (INFINITY if brute is None else brute)


@given(st.integers(0, 10**6))
def test_long_cycle_matches_oracle(seed):
    g = _random_graph(seed, 8, 0.4)
    longest = longest_cycle_brute(g)
    for L in (4, 6, 8):
        assert (long_cycle_exists(g, L).verdict is Verdict.YES) == (longest >= L)


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_isomorphism_matches_brute(s1, s2):
    g1 = _random_graph(s1, 7, 0.4)
    g2 = _random_graph(s2, 7, 0.4)
    assert (isomorphic(g1, g2) is not None) == isomorphic_brute(g1, g2)


@given(st.integers(0, 10**6))
def test_relabelled_copy_is_isomorphic(seed):
    g = _random_graph(seed)
    rng = random.Random(seed)
    names = [f"w{i}" for i in range(len(g))]
    rng.shuffle(names)
    h = g.relabel(dict(zip(g.vertices, names)))
    m = isomorphic(g, h)
    assert m is not None and is_embedding(m, g, h)


def test_fano_iso_part_swap():
    g = fano()
    dual = g.relabel({v: ("q" if v[0] == "l" else "m") + v[1:] for v in g.vertices})
    # flipping every part label gives the dual plane, which is isomorphic again
    flipped = IncidenceGraph(3, {v: dual.part(v).other for v in dual.vertices}, dual.edges)
    assert isomorphic(g, flipped) is not None
    assert isomorphic(g, cycle_graph(3, 14)) is None


def test_embedding_fixed_and_induced():
    c = cycle_graph(3, 8)
    p = path_graph(3, 3)
    m = find_embedding(p, c, fixed={"x0": "x2"}, induced=True)
    assert m is not None and m["x0"] == "x2" and is_embedding(m, p, c)
    # a path on all 8 cycle vertices embeds, but not induced
    long = path_graph(3, 7)
    assert find_embedding(long, c) is not None
    assert find_embedding(long, c, induced=True) is None


@given(hf_graphs())
def test_induced_and_without_are_consistent(g):
    vs = g.vertices[: len(g) // 2]
    a = g.induced(vs)
    b = g.without(set(g.vertices) - set(vs))
    assert a == b
    assert set(a.edges) == {e for e in g.edges if e[0] in vs and e[1] in vs}
