import pytest
from hypothesis import given

from conftest import hf_graphs
from gonlab import (
    GonParseError, fano, parse_gon, parse_map, parse_vertex_set, serialize_gon, serialize_map,
    serialize_vertex_set, to_dot,
)


@given(hf_graphs())
def test_round_trip(g):
    h = parse_gon(serialize_gon(g))
    assert h == g
    assert serialize_gon(h) == serialize_gon(g)


def test_comments_and_blank_lines():
    g = parse_gon("# a comment\n\ngon 4\nv a P  # point\nv b L\n\ne a b\n")
    assert g.n == 4 and g.num_edges == 1


@pytest.mark.parametrize("text, code", [
    ("v a P\n", "BAD_HEADER"),
    ("gon 2\n", "BAD_HEADER"),
    ("", "BAD_HEADER"),
    ("gon 3\nv a P\nv a L\n", "DUPLICATE_VERTEX"),
    ("gon 3\nv a P\nv b P\ne a b\n", "CROSS_PART"),
    ("gon 3\nv a P\ne a z\n", "UNKNOWN_ENDPOINT"),
    ("gon 3\nv a P\nv b L\ne a b\ne b a\n", "DUPLICATE_EDGE"),
    ("gon 3\nv a P\ne a a\n", "SELF_LOOP"),
    ("gon 3\nv a Q\n", "MALFORMED_LINE"),
    ("gon 3\nx a\n", "MALFORMED_LINE"),
])
def test_parse_errors(text, code):
    with pytest.raises(GonParseError) as e:
        parse_gon(text)
    assert e.value.code == code


def test_error_carries_line_number():
    with pytest.raises(GonParseError) as e:
        parse_gon("gon 3\nv a P\nv b P\ne a b\n")
    assert e.value.line == 4


def test_sets_and_maps():
    assert parse_vertex_set("a\nb\n# c\n") == {"a", "b"}
    assert parse_vertex_set(serialize_vertex_set({"x", "y"})) == {"x", "y"}
    m = {"a": "b", "c": "d"}
    assert parse_map(serialize_map(m)) == m
    with pytest.raises(GonParseError):
        parse_map("m a\n")
    with pytest.raises(GonParseError):
        parse_map("m a b\nm a c\n")


def test_dot_export():
    text = to_dot(fano())
    assert text.startswith("graph gon {") and text.count("--") == 21
