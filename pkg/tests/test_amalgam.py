import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hf_graphs
from gonlab import (
    AmalgamError, AmalgamSpec, IncidenceGraph, amalgam_images, canonical_amalgam, cycle_graph, delta, fano,
    free_amalgam, girth, is_free_amalgam_inside, is_open, is_open_over,
)


def _hexagons_over_edge():
    h = cycle_graph(3, 6)
    A = h.induced(["x0", "x1"])
    return AmalgamSpec.identity(A, h, h)


def test_two_hexagons_over_an_edge():
    spec = _hexagons_over_edge()
    g = free_amalgam(spec)
    assert (len(g), g.num_edges, girth(g), delta(g)) == (10, 11, 6, 9)
    res = canonical_amalgam(spec, stages=2)
    assert [len(s) for s in res.trace.snapshots] == [10, 16, 24]
    assert all(delta(s) == 9 for s in res.trace.snapshots)
    assert res.flags["OPEN_OVER_B"] and res.flags["OPEN_OVER_C"] and res.flags["GIRTH_OK"]
    assert not res.flags["DISCONNECTED"]


def test_images_and_freeness():
    spec = _hexagons_over_edge()
    g = free_amalgam(spec)
    a, b, c = amalgam_images(spec)
    assert a == b & c and b | c == set(g.vertices)
    assert is_free_amalgam_inside(g, a, b, c)
    glued = g.extend({}, [("b.x3", "c.x2")])
    assert not is_free_amalgam_inside(glued, a, b, c)


def test_empty_base_gives_disjoint_union():
    h = cycle_graph(3, 6)
    spec = AmalgamSpec.identity(IncidenceGraph.empty(3), h, h)
    res = canonical_amalgam(spec, stages=1)
    assert res.flags["DISCONNECTED"] and len(res.graph) == 12


def test_errors():
    h = cycle_graph(3, 6)
    A = h.induced(["x0", "x1"])
    with pytest.raises(AmalgamError) as e:
        free_amalgam(AmalgamSpec(A, h, h, {"x0": "x0", "x1": "x2"}, {"x0": "x0", "x1": "x1"}))
    assert e.value.code == "NOT_EMBEDDING"
    with pytest.raises(AmalgamError) as e:
        free_amalgam(AmalgamSpec.identity(A, h, cycle_graph(4, 8).induced(["x0", "x1"]).with_n(4)))
    assert e.value.code == "GONALITY_MISMATCH"
    f = fano()
    flag = f.induced(["p1", "l1"])
    with pytest.raises(AmalgamError) as e:
        canonical_amalgam(AmalgamSpec.identity(flag, f, f))
    assert e.value.code == "NOT_OPEN_OVER" and "B" in str(e.value)


def _grow(A, rng, prefix, steps):
    """Extend A by random loose ends, so the result is open over A."""
    g = A
    for i in range(steps):
        attach = rng.choice(g.vertices)
        v = f"{prefix}{i}"
        g = g.extend({v: g.part(attach).other}, [(attach, v)])
    return g


@given(hf_graphs(max_vertices=8), st.integers(0, 10**6))
def test_amalgam_over_random_base(A, seed):
    rng = random.Random(seed)
    B = _grow(A, rng, "u", rng.randint(0, 4))
    C = _grow(A, rng, "w", rng.randint(0, 4))
    spec = AmalgamSpec.identity(A, B, C)
    g = free_amalgam(spec)
    assert delta(g) == delta(B) + delta(C) - delta(A)
    a, b, c = amalgam_images(spec)
    assert is_open_over(frozenset(g.vertices) - b, b, g).open
    assert is_open(g).open
    res = canonical_amalgam(spec, stages=1)
    assert all(delta(s) == delta(g) for s in res.trace.snapshots)
