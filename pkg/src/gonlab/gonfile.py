"""Plain-text formats: GON graphs, vertex-set files, map files and DOT export.

A GON file looks like::

    gon 3
    v a P
    v b L
    e a b

``#`` starts a comment and blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .graph import GraphError, IncidenceGraph, Part


class GonParseError(ValueError):
    def __init__(self, code: str, line: int, message: str):
        super().__init__(f"line {line}: {code}: {message}")
        self.code = code
        self.line = line


def _lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def parse_gon(text: str) -> IncidenceGraph:
    n = None
    parts = {}
    edges = []
    seen_edges = set()
    for lineno, tok in _lines(text):
        if n is None:
            if tok[0] != "gon" or len(tok) != 2 or not tok[1].isdigit() or int(tok[1]) < 3:
                raise GonParseError("BAD_HEADER", lineno, "expected 'gon <n>' with n >= 3")
            n = int(tok[1])
            continue
        kind = tok[0]
        if kind == "v":
            if len(tok) != 3 or tok[2] not in ("P", "L") or not tok[1].isascii():
                raise GonParseError("MALFORMED_LINE", lineno, "expected 'v <id> <P|L>'")
            if edges:
                raise GonParseError("MALFORMED_LINE", lineno, "vertex lines must precede edge lines")
            if tok[1] in parts:
                raise GonParseError("DUPLICATE_VERTEX", lineno, f"vertex {tok[1]} declared twice")
            parts[tok[1]] = Part(tok[2])
        elif kind == "e":
            if len(tok) != 3:
                raise GonParseError("MALFORMED_LINE", lineno, "expected 'e <id> <id>'")
            a, b = tok[1], tok[2]
            if a == b:
                raise GonParseError("SELF_LOOP", lineno, f"edge {a} {a}")
            for v in (a, b):
                if v not in parts:
                    raise GonParseError("UNKNOWN_ENDPOINT", lineno, f"vertex {v} not declared")
            if parts[a] is parts[b]:
                raise GonParseError("CROSS_PART", lineno, f"{a} and {b} are both {parts[a].value}")
            key = (min(a, b), max(a, b))
            if key in seen_edges:
                raise GonParseError("DUPLICATE_EDGE", lineno, f"edge {a} {b} repeated")
            seen_edges.add(key)
            edges.append(key)
        else:
            raise GonParseError("MALFORMED_LINE", lineno, f"unknown record {kind!r}")
    if n is None:
        raise GonParseError("BAD_HEADER", 1, "missing 'gon <n>' header")
    return IncidenceGraph(n, parts, edges)


def serialize_gon(g: IncidenceGraph) -> str:
    out = [f"gon {g.n}"]
    out += [f"v {v} {g.part(v).value}" for v in g.vertices]
    out += [f"e {a} {b}" for a, b in g.edges]
    return "\n".join(out) + "\n"


def read_gon(path) -> IncidenceGraph:
    return parse_gon(Path(path).read_text(encoding="utf-8"))


def write_gon(g: IncidenceGraph, path) -> None:
    Path(path).write_text(serialize_gon(g), encoding="utf-8")


def parse_vertex_set(text: str) -> frozenset:
    return frozenset(tok[0] for _, tok in _lines(text))


def serialize_vertex_set(vs) -> str:
    return "".join(f"{v}\n" for v in sorted(vs))


def parse_map(text: str) -> dict:
    m = {}
    for lineno, tok in _lines(text):
        if len(tok) != 3 or tok[0] != "m":
            raise GonParseError("MALFORMED_LINE", lineno, "expected 'm <src> <dst>'")
        if tok[1] in m:
            raise GonParseError("DUPLICATE_VERTEX", lineno, f"{tok[1]} mapped twice")
        m[tok[1]] = tok[2]
    return m


def serialize_map(m) -> str:
    return "".join(f"m {a} {b}\n" for a, b in sorted(m.items()))


def to_dot(g: IncidenceGraph, name: str = "gon") -> str:
    out = [f"graph {name} {{"]
    for v in g.vertices:
        shape = "circle" if g.part(v) is Part.POINT else "box"
        out.append(f'  "{v}" [shape={shape}];')
    out += [f'  "{a}" -- "{b}";' for a, b in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "GonParseError", "GraphError", "parse_gon", "serialize_gon", "read_gon", "write_gon",
    "parse_vertex_set", "serialize_vertex_set", "parse_map", "serialize_map", "to_dot",
]
