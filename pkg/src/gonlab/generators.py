"""Small named graphs and random generators used by tests and demos."""
from __future__ import annotations

import random

from .graph import IncidenceGraph, Part, distance

FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def path_graph(n: int, length: int, prefix: str = "x", first: Part = Part.POINT) -> IncidenceGraph:
    ids = [f"{prefix}{i}" for i in range(length + 1)]
    parts = {v: first if i % 2 == 0 else first.other for i, v in enumerate(ids)}
    return IncidenceGraph(n, parts, zip(ids, ids[1:]))


def cycle_graph(n: int, length: int, prefix: str = "x") -> IncidenceGraph:
    if length % 2 or length < 4:
        raise ValueError("a bipartite cycle needs even length >= 4")
    ids = [f"{prefix}{i}" for i in range(length)]
    parts = {v: Part.POINT if i % 2 == 0 else Part.LINE for i, v in enumerate(ids)}
    return IncidenceGraph(n, parts, [(ids[i], ids[(i + 1) % length]) for i in range(length)])


def fano(n: int = 3) -> IncidenceGraph:
    """Point-line incidence graph of the Fano plane: points p1..p7, lines l1..l7."""
    parts = {f"p{i}": Part.POINT for i in range(1, 8)}
    parts.update({f"l{j}": Part.LINE for j in range(1, 8)})
    edges = [(f"p{p}", f"l{j}") for j, line in enumerate(FANO_LINES, start=1) for p in line]
    return IncidenceGraph(n, parts, edges)


def single_edge(n: int = 3) -> IncidenceGraph:
    return IncidenceGraph(n, {"a": Part.POINT, "b": Part.LINE}, [("a", "b")])


def random_bipartite(rng: random.Random, n: int, nverts: int, p: float) -> IncidenceGraph:
    parts = {f"v{i}": rng.choice((Part.POINT, Part.LINE)) for i in range(nverts)}
    ids = sorted(parts)
    edges = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]
             if parts[a] is not parts[b] and rng.random() < p]
    return IncidenceGraph(n, parts, edges)


def random_hf_graph(rng: random.Random, n: int, max_vertices: int, arc_bias: float = 0.5,
                    relative_arcs: bool = False) -> IncidenceGraph:
    """Grow a connected open graph by random loose ends and clean arcs.

    Arcs join pairs at distance n+1 (or, with ``relative_arcs``, any pair at
    distance >= n+1), so the result is a partial n-gon built by hyper-free
    steps.
    """
    g = IncidenceGraph(n, {"v0": rng.choice((Part.POINT, Part.LINE))})
    counter = 1
    while len(g) < max_vertices:
        room = max_vertices - len(g)
        pairs = []
        if room >= n - 2 and rng.random() < arc_bias:
            vs = g.vertices
            for i, a in enumerate(vs):
                for b in vs[i + 1:]:
                    d = distance(g, a, b)
                    if d == n + 1 or (relative_arcs and d != float("inf") and d > n + 1 and (d - n - 1) % 2 == 0):
                        pairs.append((a, b))
        if pairs:
            a, b = rng.choice(pairs)
            ids = [f"v{counter + j}" for j in range(n - 2)]
            counter += n - 2
            part = g.part(a).other
            verts = {}
            for v in ids:
                verts[v] = part
                part = part.other
            chain = [a] + ids + [b]
            g = g.extend(verts, zip(chain, chain[1:]))
        else:
            attach = rng.choice(g.vertices)
            v = f"v{counter}"
            counter += 1
            g = g.extend({v: g.part(attach).other}, [(attach, v)])
    return g
