"""Free-equivalence transforms and normalization of open generators to hat-racks.

Two finite partial n-gons are free-equivalent when their free completions are
isomorphic.  That cannot be decided by looking at truncations, so every
transform here is certified instead: each step records its graph before and
after, and the evidence that each one embeds, with shared vertices fixed, in
a few completion stages of the other.  Completions never change delta_n, so
delta equality is checked as well.

Step kinds:

PENDANT_HOP     a loose end z at distance n+1 from x is replaced by the
                neighbour z' of x on the arc joining them.
ARC_INTRODUCE   a clean arc is added between two vertices at distance n+1.
ARC_REMOVE      the converse, when the arc ends are at distance n+1 without it.
CHANGE_ORDER    pendants on an arc of a 2n-cycle move to the opposite
                vertices, then the arc is dropped.
LEAF_SWAP       loose ends of a tree are traded for arc vertices of its first
                completion stage (fallback for lengthening a short spine).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .completion import CompletionTrace, complete, complete_stage, opposite_in_cycle
from .gonfile import parse_gon, parse_map, serialize_gon, serialize_map
from .graph import (
    GraphError, IncidenceGraph, Part, Verdict, bfs_distances, connected_components, distance,
    find_embedding, geodesics, is_connected, is_forest, shortest_path, two_core,
)
from .rank import delta

DEFAULT_STAGES = 2
SWAP_STAGES = 3


class NormalizeError(GraphError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


# ---------------------------------------------------------------------------
# paths, free gons, hat-racks

def gamma_k(n: int, k: int, first: Part = Part.POINT) -> IncidenceGraph:
    """The path x0 ... xk."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ids = [f"x{i}" for i in range(k + 1)]
    parts = {v: first if i % 2 == 0 else first.other for i, v in enumerate(ids)}
    return IncidenceGraph(n, parts, zip(ids, ids[1:]))


def free_gon(n: int, k: int, stages: int) -> CompletionTrace:
    if k < n + 3:
        raise NormalizeError("K_TOO_SMALL", f"k = {k} < n+3 = {n + 3}")
    return complete(gamma_k(n, k), stages)


@dataclass(frozen=True)
class HatRack:
    n: int
    k: int
    first: Part  # part of x0
    counts: tuple  # counts[i] pendants at x_i; the two ends carry none

    def __post_init__(self):
        if len(self.counts) != self.k + 1 or self.counts[0] or self.counts[-1]:
            raise ValueError("counts must have length k+1 and vanish at both ends")

    @property
    def last(self) -> Part:
        return self.first if self.k % 2 == 0 else self.first.other

    def canonical(self) -> "HatRack":
        flipped = HatRack(self.n, self.k, self.last, tuple(reversed(self.counts)))
        key = lambda h: (h.counts, h.first.value)
        return min(self, flipped, key=key)

    def to_graph(self) -> IncidenceGraph:
        g = gamma_k(self.n, self.k, self.first)
        verts, edges = {}, []
        for i, c in enumerate(self.counts):
            x = f"x{i}"
            for j in range(1, c + 1):
                v = f"p{i}_{j}"
                verts[v] = g.part(x).other
                edges.append((x, v))
        return g.extend(verts, edges)

    @property
    def delta(self) -> int:
        # a tree: |E| = |V| - 1
        return len(self.to_graph()) + self.n - 2

    def __str__(self):
        return f"hatrack n={self.n} k={self.k} x0={self.first.value} pendants={list(self.counts)}"


def _longest_path(g: IncidenceGraph) -> list:
    """Longest path of a tree; ties go to the lexicographically least vertex sequence."""
    leaves = [v for v in g.vertices if g.degree(v) <= 1]
    best = None
    for s in leaves:
        dist = bfs_distances(g, s)
        far = max(dist.values())
        for t in leaves:
            if dist.get(t) == far:
                p = shortest_path(g, s, t)
                key = (-len(p), p)
                if best is None or key < best[0]:
                    best = (key, p)
    return best[1] if best else list(g.vertices)


def hatrack_of(g: IncidenceGraph, spine: list) -> Optional[HatRack]:
    """The hat-rack read off g along ``spine``, or None if g is not one."""
    if not is_forest(g) or not is_connected(g):
        return None
    on = set(spine)
    counts = [0] * len(spine)
    pos = {v: i for i, v in enumerate(spine)}
    for v in g.vertices:
        if v in on:
            continue
        nb = g.neighbors(v)
        if len(nb) != 1:
            return None
        (x,) = nb
        i = pos.get(x)
        if i is None or i == 0 or i == len(spine) - 1:
            return None
        counts[i] += 1
    return HatRack(g.n, len(spine) - 1, g.part(spine[0]), tuple(counts))


# ---------------------------------------------------------------------------
# certificates

@dataclass
class CertStep:
    kind: str
    before: IncidenceGraph
    after: IncidenceGraph
    forward_stages: int = 0  # after embeds in this many stages of before
    backward_stages: int = 0
    forward: dict = field(default_factory=dict)  # after-vertices not in before -> completion of before
    backward: dict = field(default_factory=dict)


@dataclass
class FreeEquivalenceCertificate:
    n: int
    start: IncidenceGraph
    steps: list = field(default_factory=list)

    @property
    def end(self) -> IncidenceGraph:
        return self.steps[-1].after if self.steps else self.start

    def kinds(self) -> list:
        return [s.kind for s in self.steps]

    def to_text(self) -> str:
        out = [f"freecert {self.n} {len(self.steps)}", "start", serialize_gon(self.start).rstrip()]
        for i, s in enumerate(self.steps, start=1):
            out.append(f"step {i} {s.kind} forward {s.forward_stages} backward {s.backward_stages}")
            out += ["before", serialize_gon(s.before).rstrip(), "after", serialize_gon(s.after).rstrip()]
            out += ["map forward", serialize_map(s.forward).rstrip(), "map backward", serialize_map(s.backward).rstrip()]
            out.append("endstep")
        return "\n".join(x for x in out if x) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FreeEquivalenceCertificate":
        lines = text.splitlines()
        head = lines[0].split()
        if head[:1] != ["freecert"] or len(head) != 3:
            raise ValueError("expected header 'freecert <n> <steps>'")
        n = int(head[1])
        i = 1

        def grab(stop):
            nonlocal i
            buf = []
            while i < len(lines) and not (lines[i].split() and lines[i].split()[0] in stop):
                buf.append(lines[i])
                i += 1
            return "\n".join(buf) + "\n"

        if lines[i] != "start":
            raise ValueError("missing start block")
        i += 1
        start = parse_gon(grab(["step"]))
        steps = []
        while i < len(lines):
            tok = lines[i].split()
            if not tok:
                i += 1
                continue
            if tok[0] != "step" or len(tok) != 7:
                raise ValueError(f"line {i + 1}: expected a step header")
            kind, fs, bs = tok[2], int(tok[4]), int(tok[6])
            i += 2  # skip "before"
            before = parse_gon(grab(["after"]))
            i += 1
            after = parse_gon(grab(["map"]))
            i += 1
            fwd = parse_map(grab(["map"]))
            i += 1
            bwd = parse_map(grab(["endstep"]))
            i += 1
            steps.append(CertStep(kind, before, after, fs, bs, fwd, bwd))
        return cls(n, start, steps)


@dataclass(frozen=True)
class CertCheck:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _completion(g: IncidenceGraph, stages: int) -> IncidenceGraph:
    return complete(g, stages).last


def _anchored(small: IncidenceGraph, big: IncidenceGraph) -> Optional[dict]:
    """Induced embedding small -> big fixing every vertex the two share."""
    fixed = {v: v for v in small.vertices if v in big}
    return find_embedding(small, big, fixed=fixed, induced=True)


def _evidence(before: IncidenceGraph, after: IncidenceGraph, max_stages: int):
    """Smallest stage counts with anchored embeddings both ways; raises if none."""
    out = []
    for src, dst in ((after, before), (before, after)):
        found = None
        trace = complete(dst, 0)
        for t in range(0, max_stages + 1):
            if t:
                if trace.complete:
                    break
                g, arcs = complete_stage(trace.last, t, check=False)
                if not arcs:
                    break
                trace.snapshots.append(g)
                trace.arcs.append(arcs)
            m = _anchored(src, trace.last)
            if m is not None:
                found = (t, {v: w for v, w in m.items() if v not in dst})
                break
        if found is None:
            raise NormalizeError("NO_EVIDENCE", f"no anchored embedding within {max_stages} stages")
        out.append(found)
    return out


def make_step(kind: str, before: IncidenceGraph, after: IncidenceGraph, max_stages: int = DEFAULT_STAGES) -> CertStep:
    if delta(before) != delta(after):
        raise AssertionError(f"{kind} changed delta: {delta(before)} -> {delta(after)}")
    (ft, fwd), (bt, bwd) = _evidence(before, after, max_stages)
    return CertStep(kind, before, after, ft, bt, fwd, bwd)


def verify_step(step: CertStep) -> str:
    """Empty string when the step's evidence checks out, else a reason."""
    if delta(step.before) != delta(step.after):
        return "delta differs"
    for label, src, dst, t, m in (("forward", step.after, step.before, step.forward_stages, step.forward),
                                  ("backward", step.before, step.after, step.backward_stages, step.backward)):
        big = _completion(dst, t)
        full = {v: v for v in src.vertices if v in dst}
        full.update(m)
        if set(full) != set(src.vertices) or len(set(full.values())) != len(full):
            return f"{label} map is not a bijection onto its image"
        for v, w in full.items():
            if w not in big or big.part(w) is not src.part(v):
                return f"{label} map sends {v} to a missing or wrong-part vertex"
        img = {w: v for v, w in full.items()}
        for v, w in full.items():
            for u in big.neighbors(w):
                if u in img and not src.has_edge(v, img[u]):
                    return f"{label} image is not induced"
        if any(not big.has_edge(full[a], full[b]) for a, b in src.edges):
            return f"{label} map misses an edge"
    return ""


def verify_certificate(cert: FreeEquivalenceCertificate, start: Optional[IncidenceGraph] = None) -> CertCheck:
    if start is not None and start != cert.start:
        return CertCheck(False, None, "certificate starts from a different graph")
    prev = cert.start
    for i, s in enumerate(cert.steps):
        if s.before != prev:
            return CertCheck(False, i, "step does not start where the previous one ended")
        reason = verify_step(s)
        if reason:
            return CertCheck(False, i, reason)
        prev = s.after
    return CertCheck(True)


# ---------------------------------------------------------------------------
# elementary transforms

class _Names:
    """Fresh vertex ids h1, h2, ... never reused within one run."""

    def __init__(self, taken):
        self.taken = set(taken)
        self.counter = itertools.count(1)

    def __call__(self):
        while True:
            v = f"h{next(self.counter)}"
            if v not in self.taken:
                self.taken.add(v)
                return v


def pendant_hop(g: IncidenceGraph, z, x, names) -> IncidenceGraph:
    """Replace the loose end z by a fresh neighbour of x; needs d(z, x) = n+1."""
    if g.degree(z) != 1:
        raise NormalizeError("NOT_LOOSE_END", f"{z} has valency {g.degree(z)}")
    d = distance(g, z, x)
    if d != g.n + 1:
        raise NormalizeError("BAD_DISTANCE", f"d({z}, {x}) = {d}, expected {g.n + 1}")
    v = names()
    return g.without([z]).extend({v: g.part(x).other}, [(x, v)])


def introduce_arc(g: IncidenceGraph, a, b, names) -> tuple:
    n = g.n
    d = distance(g, a, b)
    if d != n + 1:
        raise NormalizeError("BAD_DISTANCE", f"d({a}, {b}) = {d}, expected {n + 1}")
    ids = [names() for _ in range(n - 2)]
    part = g.part(a).other
    verts = {}
    for v in ids:
        verts[v] = part
        part = part.other
    chain = [a, *ids, b]
    return g.extend(verts, zip(chain, chain[1:])), tuple(ids)


def _arc_cycle(g: IncidenceGraph, arc) -> list:
    """A 2n-cycle through the clean arc (a, interior, b), or raise."""
    a, interior, b = arc
    rest = g.without(interior)
    try:
        path = shortest_path(rest, b, a)
    except GraphError:
        path = []
    if len(path) - 1 != g.n + 1:
        raise NormalizeError("NO_CYCLE", f"arc ends {a}, {b} are not at distance n+1 without the arc")
    return [a, *interior, *path[:-1]]


def _change_order(g: IncidenceGraph, arc, names) -> IncidenceGraph:
    a, interior, b = arc
    interior = tuple(interior)
    n = g.n
    if len(interior) != n - 2:
        raise NormalizeError("NOT_CLEAN_ARC", "interior must have n-2 vertices")
    chain = [a, *interior, b]
    pendants = []
    for i, x in enumerate(interior, start=1):
        for w in g.neighbors(x):
            if w in (chain[i - 1], chain[i + 1]):
                continue
            if g.degree(w) != 1:
                raise NormalizeError("NOT_CLEAN_ARC", f"{w} on the arc interior is not a loose end")
            pendants.append((w, x))
    for i, x in enumerate(interior, start=1):
        if not (g.has_edge(chain[i - 1], x) and g.has_edge(x, chain[i + 1])):
            raise NormalizeError("NOT_CLEAN_ARC", "the arc is not a path of the graph")
    loose = [w for w, _ in pendants]
    cycle = _arc_cycle(g.without(loose), (a, interior, b))
    after = g.without(loose + list(interior))
    verts, edges = {}, []
    for w, x in sorted(pendants):
        xp = opposite_in_cycle(cycle, x, n)
        v = names()
        verts[v] = after.part(xp).other
        edges.append((xp, v))
    return after.extend(verts, edges)


def change_order_transform(g: IncidenceGraph, arc, names=None, max_stages: int = DEFAULT_STAGES):
    """Move the loose ends on a clean arc to the opposite vertices of a 2n-cycle and drop the arc.

    ``arc`` is (a, interior, b).  Every vertex outside the arc's ends that
    touches the interior must be a loose end.  Returns (new graph, CertStep).
    """
    after = _change_order(g, arc, names or _Names(g.vertices))
    return after, make_step("CHANGE_ORDER", g, after, max_stages)


# ---------------------------------------------------------------------------
# normalization
#
# The drivers below log (kind, before, after) triples; evidence is attached
# once at the end, so trial runs stay cheap.

def _hang(g: IncidenceGraph, core: set, roots) -> set:
    """Non-core vertices hanging from ``roots`` (trees reached without crossing the core)."""
    out = set()
    stack = [w for r in roots for w in g.neighbors(r) if w not in core]
    while stack:
        v = stack.pop()
        if v in out:
            continue
        out.add(v)
        stack.extend(w for w in g.neighbors(v) if w not in core and w not in out)
    return out


def _height(g: IncidenceGraph, base: set) -> dict:
    """Distance of every vertex to ``base``."""
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


def _clean_arcs(g: IncidenceGraph):
    from .polygon import clean_arcs

    return clean_arcs(g)


def _gap(g, arc):
    a, interior, b = arc
    try:
        return distance(g.without(interior), a, b)
    except GraphError:
        return float("inf")


def _eliminate_arc(g: IncidenceGraph, log: list, names, arc=None) -> IncidenceGraph:
    """Remove one clean arc of the cyclic core, moving whatever hangs from it first."""
    n = g.n
    if arc is None:
        arcs = _clean_arcs(g.induced(two_core(g)))
        if not arcs:
            raise NormalizeError("NOT_OPEN", "the cyclic core has no clean arc")
        good = [arc for arc in arcs if _gap(g, arc) == n + 1]
        arc = good[0] if good else arcs[0]
    a, interior, b = arc
    # shorten the detour between the arc ends by auxiliary arcs until it has length n+1
    while _gap(g, arc) > n + 1:
        path = shortest_path(g.without(interior), a, b)
        new, _ = introduce_arc(g, a, path[n + 1], names)
        log.append(("ARC_INTRODUCE", g, new))
        g = new
    moved = False
    # bring every loose end hanging from the arc down to a neighbour of the interior
    while True:
        hanging = _hang(g, two_core(g), interior)
        depth = _height(g.induced(set(interior) | hanging), set(interior))
        leaves = [v for v in hanging if g.degree(v) == 1 and depth[v] >= 2]
        if not leaves:
            break
        z = min(leaves, key=lambda v: (-depth[v], v))
        h = _height(g, set(g.vertices) - set(interior) - hanging)
        targets = [x for x, d in bfs_distances(g, z, limit=n + 1).items() if d == n + 1]
        x = min(targets, key=lambda x: (h[x], x))
        if h[x] + 1 >= h[z]:
            raise NormalizeError("NO_PROGRESS", f"no hop brings {z} closer")
        new = pendant_hop(g, z, x, names)
        log.append(("PENDANT_HOP", g, new))
        g = new
        moved = True
    hanging = _hang(g, two_core(g), interior)
    new = _change_order(g, (a, interior, b), names)
    log.append(("CHANGE_ORDER" if hanging else "ARC_REMOVE", g, new))
    return new


def _tree_phase(g: IncidenceGraph, log: list, names):
    n = g.n
    spine = _longest_path(g)
    if len(spine) - 1 < n + 3:
        g = _lengthen_spine(g, log, names)
        spine = _longest_path(g)
    guard = 0
    while True:
        hr = hatrack_of(g, spine)
        if hr is not None:
            return hr, g, spine
        guard += 1
        if guard > 10 * len(g) + 100:
            raise NormalizeError("NO_PROGRESS", "tree reduction did not terminate")
        k = len(spine) - 1
        h = _height(g, set(spine))
        a = min((v for v in g.vertices if v not in spine), key=lambda v: (-h[v], v))
        dist = bfs_distances(g, a, limit=n + 1)
        inner = [x for x in spine[1:-1] if dist.get(x) == n + 1]
        if inner:
            new = pendant_hop(g, a, inner[0], names)
            log.append(("PENDANT_HOP", g, new))
            g = new
            continue
        if h[a] > n + 1:
            up = min(x for x, d in dist.items() if d == n + 1 and h[x] == h[a] - n - 1)
            new = pendant_hop(g, a, up, names)
            log.append(("PENDANT_HOP", g, new))
            g = new
            continue
        for end, where in ((spine[0], 0), (spine[-1], k)):
            if dist.get(end) == n + 1:
                new = pendant_hop(g, a, end, names)
                (fresh,) = set(new.vertices) - set(g.vertices)
                log.append(("PENDANT_HOP", g, new))
                g = new
                spine = [fresh] + spine if where == 0 else spine + [fresh]
                break
        else:
            # no spine vertex at distance n+1: borrow the arc from x0 to x_{n+1}
            g2, arc_ids = introduce_arc(g, spine[0], spine[n + 1], names)
            log.append(("ARC_INTRODUCE", g, g2))
            d2 = bfs_distances(g2, a, limit=n + 1)
            ys = [y for y in arc_ids if d2.get(y) == n + 1]
            if not ys:
                raise NormalizeError("NO_PROGRESS", f"no arc vertex at distance n+1 from {a}")
            g3 = pendant_hop(g2, a, ys[0], names)
            log.append(("PENDANT_HOP", g2, g3))
            g = _change_order(g3, (spine[0], arc_ids, spine[n + 1]), names)
            log.append(("CHANGE_ORDER", g3, g))


def _tree_diameter(g: IncidenceGraph) -> int:
    return len(_longest_path(g)) - 1


def _lengthen_spine(g: IncidenceGraph, log: list, names) -> IncidenceGraph:
    """Rebuild a tree whose longest path is shorter than n+3 into one with a longer path.

    Tried in order: hop a loose end onto the end of a longest path; or add the
    arc closing a 2n-cycle through a pair at distance n+1, optionally hop one
    loose end onto the cycle, and cut a different arc of that cycle.  Each plan
    is simulated and the first that reaches length n+3 (or at least grows the
    longest path) is kept; the search repeats until n+3 is reached.
    """
    n = g.n
    for _ in range(4 * len(g) + 8):
        k = _tree_diameter(g)
        if k >= n + 3:
            return g
        best = None
        for plan in _spine_plans(g, names):
            trial = []
            try:
                out = plan(trial)
            except NormalizeError:
                continue
            if not is_forest(out) or not is_connected(out):
                continue
            d = _tree_diameter(out)
            if d > k and (best is None or d > best[0]):
                best = (d, out, trial)
                if d >= n + 3:
                    break
        if best is None:
            out = _leaf_swap(g, names)
            if out is None:
                raise NormalizeError("SHORT_SPINE", f"longest path has length {k} < n+3 = {n + 3} and no rebuild found")
            log.append(("LEAF_SWAP", g, out, SWAP_STAGES))
            g = out
            continue
        log.extend(best[2])
        g = best[1]
    raise NormalizeError("SHORT_SPINE", "spine rebuild did not terminate")


def _leaf_swap(g: IncidenceGraph, names, depth: int = 2) -> Optional[IncidenceGraph]:
    """Trade up to ``depth`` loose ends for arc vertices of one completion stage.

    Used when hops and cycle rotations cannot lengthen the spine (for even n
    they all preserve the difference between point and line counts).  The
    result must be an induced tree of the completion with a longer path and
    must regenerate g within SWAP_STAGES stages.
    """
    n = g.n
    k = _tree_diameter(g)
    big = complete(g, 1).last
    fresh = [v for v in big.vertices if v not in g]
    frontier = [(g, ())]
    for _ in range(depth):
        nxt = []
        for h, used in frontier:
            for z in [v for v in h.vertices if h.degree(v) == 1 and v in g]:
                rest = h.without([z])
                for w in fresh:
                    if w in h or w in used:
                        continue
                    nb = [y for y in big.neighbors(w) if y in rest]
                    if len(nb) != 1:
                        continue
                    cand = rest.extend({w: big.part(w)}, [(nb[0], w)])
                    nxt.append((cand, used + (w,)))
                    if _tree_diameter(cand) > k and _anchored(g, complete(cand, SWAP_STAGES).last) is not None:
                        ren = {v: names() for v in used + (w,)}
                        return cand.relabel({v: ren.get(v, v) for v in cand.vertices})
        frontier = nxt
    return None


def _spine_plans(g: IncidenceGraph, names):
    n = g.n
    leaves = [v for v in g.vertices if g.degree(v) == 1]
    k = _tree_diameter(g)
    ecc = {v: max(bfs_distances(g, v).values()) for v in g.vertices}
    for a in leaves:
        for x, d in sorted(bfs_distances(g, a, limit=n + 1).items()):
            if d == n + 1 and ecc[x] == k:
                def hop(log, a=a, x=x):
                    new = pendant_hop(g, a, x, names)
                    log.append(("PENDANT_HOP", g, new))
                    return new
                yield hop
    pairs = []
    for p in g.vertices:
        for q, d in bfs_distances(g, p, limit=n + 1).items():
            if d == n + 1 and p < q:
                pairs.append((p, q))
    for p, q in sorted(pairs):
        path = shortest_path(g, p, q)
        for a in [None] + leaves:
            for cut in range(2 * n):
                yield lambda log, p=p, q=q, path=path, a=a, cut=cut: _rotate(g, log, names, path, a, cut)


def _rotate(g, log, names, path, a, cut):
    """Close a 2n-cycle along ``path``, maybe hop ``a`` onto it, and cut the arc starting at ``cut``."""
    n = g.n
    g1, ids = introduce_arc(g, path[0], path[-1], names)
    log.append(("ARC_INTRODUCE", g, g1))
    cycle = list(path) + list(reversed(ids))
    if a is not None:
        if a in cycle:
            raise NormalizeError("NO_PLAN", "loose end on the cycle")
        dist = bfs_distances(g1, a, limit=n + 1)
        targets = [c for c in cycle if dist.get(c) == n + 1]
        if not targets:
            raise NormalizeError("NO_PLAN", "no cycle vertex at distance n+1")
        new = pendant_hop(g1, a, targets[0], names)
        log.append(("PENDANT_HOP", g1, new))
        g1 = new
    seg = [cycle[(cut + i) % (2 * n)] for i in range(n)]
    if set(seg[1:-1]) == set(ids):
        raise NormalizeError("NO_PLAN", "cutting the new arc undoes it")
    return _eliminate_arc(g1, log, names, (seg[0], tuple(seg[1:-1]), seg[-1]))


def _certify(log: list, cert: "FreeEquivalenceCertificate", max_stages: int) -> None:
    for kind, before, after, *bound in log:
        cert.steps.append(make_step(kind, before, after, max(max_stages, *bound) if bound else max_stages))


def tree_to_hatrack(A: IncidenceGraph, max_stages: int = DEFAULT_STAGES):
    """Hat-rack free-equivalent to a finite tree with a path of length >= n+3."""
    if not is_connected(A) or not is_forest(A):
        raise NormalizeError("NOT_TREE", "input must be a finite tree")
    if _tree_diameter(A) < A.n + 3:
        raise NormalizeError("SHORT_SPINE", f"no path of length n+3 = {A.n + 3}")
    cert = FreeEquivalenceCertificate(A.n, A)
    log = []
    hr, _, _ = _tree_phase(A, log, _Names(A.vertices))
    _certify(log, cert, max_stages)
    return hr, cert


def normalize_to_hatrack(A: IncidenceGraph, max_stages: int = DEFAULT_STAGES, budget: int = 10**6):
    """Certified hat-rack free-equivalent to a finite open non-degenerate partial n-gon."""
    from .polygon import check_nondegenerate, check_partial, is_open

    if not check_partial(A):
        raise NormalizeError("NOT_PARTIAL", "input must be connected with girth >= 2n")
    if not is_open(A):
        raise NormalizeError("NOT_OPEN", "input is not open")
    if check_nondegenerate(A, budget).verdict is Verdict.NO:
        raise NormalizeError("DEGENERATE", "input is degenerate")
    names = _Names(A.vertices)
    log = []
    g = A
    guard = 0
    while not is_forest(g):
        guard += 1
        if guard > 50 * len(A) + 100:
            raise NormalizeError("NO_PROGRESS", "arc elimination did not terminate")
        g = _eliminate_arc(g, log, names)
    hr, g, _ = _tree_phase(g, log, names)
    if delta(g) != delta(A):
        raise AssertionError("normalization changed delta")
    cert = FreeEquivalenceCertificate(A.n, A)
    _certify(log, cert, max_stages)
    return hr, cert


@dataclass(frozen=True)
class Classification:
    k: int
    delta: int
    statement: str
    diagnostic: bool


def classify_free(A: IncidenceGraph, budget: int = 10**6) -> Classification:
    """F(A) is Gamma^k with k = delta_n(A) - n + 1, for open non-degenerate A."""
    from .polygon import check_nondegenerate, check_partial, is_open

    if not check_partial(A):
        raise NormalizeError("NOT_PARTIAL", "input must be connected with girth >= 2n")
    if not is_open(A):
        raise NormalizeError("NOT_OPEN", "input is not open")
    if check_nondegenerate(A, budget).verdict is Verdict.NO:
        raise NormalizeError("DEGENERATE", "input is degenerate")
    d = delta(A)
    k = d - A.n + 1
    if k < A.n + 3:
        return Classification(k, d, f"DIAGNOSTIC: k = {k} < n+3 = {A.n + 3}, no free n-gon reading", True)
    return Classification(k, d, f"F(A) ≅ Γ^{k}", False)


__all__ = [
    "gamma_k", "free_gon", "HatRack", "hatrack_of", "CertStep", "FreeEquivalenceCertificate", "CertCheck",
    "make_step", "verify_step", "verify_certificate", "pendant_hop", "introduce_arc", "change_order_transform",
    "tree_to_hatrack", "normalize_to_hatrack", "classify_free", "Classification", "NormalizeError",
    "DEFAULT_STAGES",
]
