"""Finite witness configurations, each shipped with the checks that make it a witness.

acl_dcl_witness(n)
    odd n: a (2n+2)-cycle, the clean arcs joining antipodal vertices and their
    midpoints; the half turn of the cycle fixes every midpoint and moves every
    cycle vertex, while the whole configuration is closed over the midpoints.
    even n: a 2n-cycle with pendants y_i on x_1..x_n, the arcs from y_i to
    x_{i+n} and their middle vertices; the half turn composed with the flip of
    each arc swaps y_i with z_i (the arc vertex next to x_{i+n}).

ladder_prefix(n, rungs)
    a truncated completion of the path of length n+3 with, per stage i, a deep
    vertex y_i, a fresh neighbour z_i and a path joining z_{i-1} to z_i.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

from .completion import complete, complete_stage
from .gonfile import parse_map, read_gon, serialize_map, write_gon
from .graph import (
    IncidenceGraph, Part, distance, girth, is_connected,
)
from .polygon import is_closed_over, is_open, is_open_over
from .rank import delta

# even n: which of the two middle vertices of a path with n vertices is "the" middle
EVEN_MIDDLE = "nearer y_i: position n/2 - 1 counted from y_i"


@dataclass
class WitnessBundle:
    kind: str
    n: int
    graph: IncidenceGraph
    sets: dict = field(default_factory=dict)  # name -> frozenset of vertex ids
    maps: dict = field(default_factory=dict)  # name -> vertex map
    params: dict = field(default_factory=dict)
    assertions: list = field(default_factory=list)  # (name, bool)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.assertions)

    def recheck(self) -> list:
        return CHECKERS[self.kind](self)

    def write(self, directory) -> None:
        """bundle.gon, sets.txt, asserts.txt and one <name>.map per vertex map."""
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        write_gon(self.graph, d / "bundle.gon")
        lines = [f"# kind {self.kind}"] + [f"# param {k} {v}" for k, v in sorted(self.params.items())]
        lines += [" ".join(["set", name, *sorted(vs)]) for name, vs in sorted(self.sets.items())]
        (d / "sets.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        (d / "asserts.txt").write_text(
            "".join(f"{name} {'true' if v else 'false'}\n" for name, v in self.assertions), encoding="utf-8")
        for name, m in self.maps.items():
            (d / f"{name}.map").write_text(serialize_map(m), encoding="utf-8")

    @classmethod
    def read(cls, directory) -> "WitnessBundle":
        d = Path(directory)
        g = read_gon(d / "bundle.gon")
        kind, params, sets = None, {}, {}
        for ln in (d / "sets.txt").read_text(encoding="utf-8").splitlines():
            tok = ln.split()
            if tok[:2] == ["#", "kind"]:
                kind = tok[2]
            elif tok[:2] == ["#", "param"]:
                params[tok[2]] = tok[3]
            elif tok and tok[0] == "set":
                sets[tok[1]] = frozenset(tok[2:])
        asserts = []
        for ln in (d / "asserts.txt").read_text(encoding="utf-8").splitlines():
            if ln.strip():
                name, v = ln.split()
                asserts.append((name, v == "true"))
        maps = {p.stem: parse_map(p.read_text(encoding="utf-8")) for p in sorted(d.glob("*.map"))}
        return cls(kind, g.n, g, sets, maps, params, asserts)


def _is_automorphism(m: dict, g: IncidenceGraph) -> bool:
    if set(m) != set(g.vertices) or set(m.values()) != set(g.vertices):
        return False
    if any(g.part(v) is not g.part(w) for v, w in m.items()):
        return False
    return all(g.has_edge(m[a], m[b]) for a, b in g.edges)


def _finish(bundle: WitnessBundle) -> WitnessBundle:
    bundle.assertions = bundle.recheck()
    bad = [name for name, v in bundle.assertions if not v]
    if bad:
        raise AssertionError(f"{bundle.kind} bundle fails: {bad}")
    return bundle


# ---------------------------------------------------------------------------
# acl != dcl

def _cycle(n: int, length: int) -> tuple:
    ids = [f"x{i}" for i in range(length)]
    parts = {v: Part.POINT if i % 2 == 0 else Part.LINE for i, v in enumerate(ids)}
    return ids, parts, [(ids[i], ids[(i + 1) % length]) for i in range(length)]


def _add_path(parts, edges, start, end, names):
    """Join start to end through the fresh vertices ``names``."""
    part = parts[start].other
    for v in names:
        parts[v] = part
        part = part.other
    chain = [start, *names, end]
    edges.extend(zip(chain, chain[1:]))


def acl_dcl_witness(n: int) -> WitnessBundle:
    if n < 3:
        raise ValueError("n must be at least 3")
    return _acl_dcl_odd(n) if n % 2 else _acl_dcl_even(n)


def _acl_dcl_odd(n: int) -> WitnessBundle:
    L = 2 * n + 2
    xs, parts, edges = _cycle(n, L)
    mids = []
    auto = {xs[j]: xs[(j + n + 1) % L] for j in range(L)}
    mid = (n - 1) // 2  # position of the midpoint among the n-2 interior vertices, from x_i
    for i in range(n + 1):
        inner = [f"a{i}.{p}" for p in range(1, n - 1)]
        _add_path(parts, edges, xs[i], xs[i + n + 1], inner)
        mids.append(inner[mid - 1] if mid >= 1 else inner[0])
        for p in range(1, n - 1):
            auto[f"a{i}.{p}"] = f"a{i}.{n - 1 - p}"
    g = IncidenceGraph(n, parts, edges)
    b = WitnessBundle("acl-dcl", n, g, {"A": frozenset(xs), "midpoints": frozenset(mids)},
                      {"automorphism": auto}, {"n": n, "case": "odd"})
    return _finish(b)


def _acl_dcl_even(n: int) -> WitnessBundle:
    L = 2 * n
    xs, parts, edges = _cycle(n, L)
    ys, zs, mids = [], [], []
    auto = {xs[j]: xs[(j + n) % L] for j in range(L)}
    for i in range(1, n + 1):
        y = f"y{i}"
        parts[y] = parts[xs[i]].other
        edges.append((xs[i], y))
        inner = [f"g{i}.{p}" for p in range(1, n - 1)]
        _add_path(parts, edges, y, xs[(i + n) % L], inner)
        path = [y, *inner]  # v_0 .. v_{n-2}; v_{n-1} is x_{i+n}
        for p, v in enumerate(path):
            auto[v] = path[n - 2 - p]
        ys.append(y)
        zs.append(inner[-1])
        mids.append(path[n // 2 - 1])
    g = IncidenceGraph(n, parts, edges)
    sets = {"A": frozenset(xs), "y": frozenset(ys), "z": frozenset(zs), "midpoints": frozenset(mids)}
    b = WitnessBundle("acl-dcl", n, g, sets, {"automorphism": auto},
                      {"n": n, "case": "even", "middle": EVEN_MIDDLE.replace(" ", "_")})
    return _finish(b)


def _check_acl_dcl(b: WitnessBundle) -> list:
    g, n = b.graph, b.n
    A, M = b.sets["A"], b.sets["midpoints"]
    auto = b.maps["automorphism"]
    out = [
        ("girth_at_least_2n", girth(g) >= 2 * n),
        ("automorphism", _is_automorphism(auto, g)),
        ("fixes_midpoints", all(auto.get(m) == m for m in M)),
        ("moves_every_vertex_of_A", all(auto.get(x) != x for x in A)),
        ("A_invariant", {auto.get(x) for x in A} == set(A)),
        ("closed_over_midpoints", is_closed_over(frozenset(g.vertices) - M, M, g)),
    ]
    if n % 2:
        # the configuration is exactly one completion stage of the cycle
        cyc = g.induced(A)
        g1, arcs = complete_stage(cyc, 1)
        out.append(("one_completion_stage_of_A", len(arcs) == n + 1 and len(g1) == len(g)
                    and g1.num_edges == g.num_edges))
        out.append(("midpoints_central", len(M) == n + 1 and all(
            min(distance(g, m, x) for x in A) == (n - 1) // 2 for m in M)))
    else:
        Y, Z = b.sets["y"], b.sets["z"]
        D = g.induced(A | Y)
        D2 = g.induced(A | Z)
        out.append(("D_open", is_open(D).open))
        out.append(("D_prime_open", is_open(D2).open))
        out.append(("swaps_y_and_z", {auto[y] for y in Y} == set(Z)))
        out.append(("z_at_distance_n_minus_2", all(
            any(distance(g, y, z) == n - 2 for z in Z) for y in Y)))
        # each arc joins y_i to the vertex opposite x_i: a first-stage arc of D
        ends = {y: [x for x in A if x in g.neighbors(y)][0] for y in Y}
        out.append(("arcs_are_first_stage", len(g) - len(D) == n * (n - 2) and all(
            distance(D, y, b.maps["automorphism"][ends[y]]) == n + 1 for y in Y)))
        out.append(("midpoints_distinct", len(M) == n))
    return out


# ---------------------------------------------------------------------------
# ladder

def ladder_prefix(n: int, rungs: int, stage_budget=None) -> WitnessBundle:
    if rungs < 0:
        raise ValueError("rungs must be >= 0")
    stages = rungs if stage_budget is None else stage_budget
    if stages < rungs:
        raise ValueError(f"stage budget {stages} cannot host {rungs} rungs")
    seed = _gamma(n)
    trace = complete(seed, stages)
    if trace.stages < rungs:
        raise ValueError("the completion stopped before all rungs found a stage")
    need = math.ceil(n / 2) - 1
    g = trace.last
    parts = g.parts()
    edges = list(g.edges)
    ys, zs, rails = [], [], []
    z0 = "z0"
    parts[z0] = g.part(f"x{n + 3}").other
    edges.append((f"x{n + 3}", z0))
    zs.append(z0)
    for i in range(1, rungs + 1):
        prev = set(trace.snapshots[i - 1].vertices)
        snap = trace.snapshots[i]
        depth = _depth(snap, prev)
        cands = sorted((v for v in snap.vertices if v not in prev and depth[v] >= need),
                       key=lambda v: (-depth[v], v))
        if not cands:
            raise ValueError(f"stage {i} has no vertex at depth {need}")
        y = cands[0]
        z = f"z{i}"
        parts[z] = parts[y].other
        edges.append((y, z))
        ys.append(y)
        zs.append(z)
        cur = IncidenceGraph(n, parts, edges)
        d = distance(cur, zs[-2], z)
        L = max(n - 1, 2 * n - d)
        if (L - d) % 2:
            L += 1
        inner = [f"l{i}.{p}" for p in range(1, L)]
        _add_path(parts, edges, zs[-2], z, inner)
        rails.append((zs[-2], z, L))
    bundle = IncidenceGraph(n, parts, edges)
    sets = {"Gamma0": frozenset(seed.vertices), "y": frozenset(ys), "z": frozenset(zs)}
    for i, (a, b, L) in enumerate(rails, start=1):
        sets[f"lambda{i}"] = frozenset([a, b] + [f"l{i}.{p}" for p in range(1, L)])
    params = {"n": n, "rungs": rungs, "stages": stages, "depth": need}
    return _finish(WitnessBundle("ladder", n, bundle, sets, {}, params))


def _gamma(n):
    ids = [f"x{i}" for i in range(n + 4)]
    parts = {v: Part.POINT if i % 2 == 0 else Part.LINE for i, v in enumerate(ids)}
    return IncidenceGraph(n, parts, zip(ids, ids[1:]))


def _depth(g: IncidenceGraph, base: set) -> dict:
    from collections import deque

    dist = {v: 0 for v in base}
    q = deque(base)
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _check_ladder(b: WitnessBundle) -> list:
    g, n = b.graph, b.n
    G0 = b.sets["Gamma0"]
    rungs = int(b.params["rungs"])
    out = [
        ("connected", is_connected(g)),
        ("girth_at_least_2n", girth(g) >= 2 * n),
        ("open", is_open(g).open),
        ("Gamma0_relatively_open", is_open_over(frozenset(g.vertices) - G0, G0, g).open),
        ("delta_invariant", True),
    ]
    for i in range(1, rungs + 1):
        lam = b.sets[f"lambda{i}"]
        ends = {f"z{i - 1}", f"z{i}"}
        inner = lam - ends
        L = len(inner) + 1
        rest = g.without(inner)
        out.append((f"lambda{i}_ends", ends <= lam and all(g.degree(v) == 2 for v in inner)))
        out.append((f"lambda{i}_length", L >= n - 1 and (L - distance(rest, *sorted(ends))) % 2 == 0))
        out.append((f"lambda{i}_removal_keeps_girth", girth(rest) >= 2 * n))
    # completion stages add nothing, each pendant z adds one, a rail of length L adds L - n + 1
    rails = sum(len(b.sets[f"lambda{i}"]) - 1 - n + 1 for i in range(1, rungs + 1))
    out[4] = ("delta_invariant", delta(g) == delta(g.induced(G0)) + 1 + rungs + rails)
    return out


# ---------------------------------------------------------------------------
# minimality surrogate

def extend_along_provenance(g: IncidenceGraph, seed, A0) -> frozenset:
    """Close A0 under taking whole arcs by provenance and add the seed.

    Inside a completion trace every edge belongs to the seed or to exactly one
    arc, so the result has the delta of the seed.
    """
    seed = frozenset(seed)
    X = set(A0) | seed
    arcs = {}
    for v in g.vertices:
        p = g.provenance(v)
        if p.kind == "ARC":
            arcs.setdefault((p.stage, p.endpoints), []).append(v)
    stack = list(X)
    while stack:
        v = stack.pop()
        p = g.provenance(v)
        if p.kind != "ARC":
            continue
        for w in itertools.chain(arcs[(p.stage, p.endpoints)], p.endpoints):
            if w not in X:
                X.add(w)
                stack.append(w)
    return frozenset(X)


CHECKERS = {"acl-dcl": _check_acl_dcl, "ladder": _check_ladder}

__all__ = ["WitnessBundle", "acl_dcl_witness", "ladder_prefix", "extend_along_provenance", "EVEN_MIDDLE"]
