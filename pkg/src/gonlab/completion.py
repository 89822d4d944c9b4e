"""Truncated free n-completions, opposites in 2n-cycles and generated sub-n-gons.

One completion stage joins every pair of vertices at distance exactly n+1
(measured in the frozen snapshot) by a fresh clean arc of n-2 vertices.  The
fresh vertices are named ``s{stage}.{a}-{b}.{pos}`` with a < b and pos counted
from a (plus a ``~j`` suffix if the seed already uses the name), so a stage does not depend on the order pairs are visited in.
"""
from __future__ import annotations

import itertools

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .graph import (
    GraphError, IncidenceGraph, Provenance, Verdict, bfs_distances, geodesics,
    isomorphic, shortest_cycle,
)

NOT_RESOLVED = "NOT_RESOLVED"


class CompletionError(GraphError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Arc:
    stage: int
    a: str
    b: str
    interior: tuple

    def line(self) -> str:
        return " ".join([str(self.stage), self.a, self.b, *self.interior])


def arc_ids(stage: int, a: str, b: str, n: int) -> list:
    if b < a:
        a, b = b, a
    return [f"s{stage}.{a}-{b}.{p}" for p in range(1, n - 1)]


def _next_stage(g: IncidenceGraph) -> int:
    return 1 + max((g.provenance(v).stage for v in g.vertices), default=0)


def far_pairs(g: IncidenceGraph, dist: int) -> list:
    """Sorted pairs (a, b), a < b, at distance exactly ``dist``."""
    out = []
    for a in g.vertices:
        for b, d in bfs_distances(g, a, limit=dist).items():
            if d == dist and a < b:
                out.append((a, b))
    return sorted(out)


def check_partial_gon(g: IncidenceGraph) -> None:
    cyc = shortest_cycle(g)
    if cyc is not None and len(cyc) < 2 * g.n:
        raise CompletionError("GIRTH_VIOLATION", f"cycle of length {len(cyc)} < {2 * g.n}: {cyc}")


def complete_stage(g: IncidenceGraph, stage: Optional[int] = None, check: bool = True):
    """One stage of the free completion; returns (new graph, list of Arc)."""
    n = g.n
    if check:
        check_partial_gon(g)
    if stage is None:
        stage = _next_stage(g)
    arcs = []
    verts = {}
    edges = []
    for a, b in far_pairs(g, n + 1):
        ids = arc_ids(stage, a, b, n)
        part = g.part(a).other
        for pos, v in enumerate(ids, start=1):
            if v in g or v in verts:
                # the seed already uses this name (e.g. it was cut from another completion)
                v = next(f"{v}~{j}" for j in itertools.count(1) if f"{v}~{j}" not in g and f"{v}~{j}" not in verts)
                ids[pos - 1] = v
            verts[v] = (part, Provenance.arc(stage, a, b, pos))
            part = part.other
        chain = [a, *ids, b]
        edges.extend(zip(chain, chain[1:]))
        arcs.append(Arc(stage, a, b, tuple(ids)))
    if not arcs:
        return g, []
    return g.extend(verts, edges), arcs


@dataclass
class CompletionTrace:
    seed: IncidenceGraph
    snapshots: list = field(default_factory=list)  # snapshots[0] is the seed
    arcs: list = field(default_factory=list)  # arcs[i] were added to reach snapshots[i + 1]
    complete: bool = False

    @property
    def n(self) -> int:
        return self.seed.n

    @property
    def last(self) -> IncidenceGraph:
        return self.snapshots[-1]

    @property
    def stages(self) -> int:
        return len(self.snapshots) - 1

    @property
    def complete_at(self) -> Optional[int]:
        return self.stages if self.complete else None

    def all_arcs(self) -> list:
        return [a for stage in self.arcs for a in stage]

    def arcs_text(self) -> str:
        lines = [f"# complete={'yes' if self.complete else 'no'}"]
        for s, arcs in enumerate(self.arcs, start=1):
            lines.append(f"stage {s}")
            lines += [" ".join(["arc", a.a, a.b, ":", *a.interior]) for a in arcs]
        return "\n".join(lines) + "\n"

    def write(self, directory) -> None:
        """Write stage0.gon, stage1.gon, ... and arcs.txt into ``directory``."""
        from .gonfile import write_gon

        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        for i, snap in enumerate(self.snapshots):
            write_gon(snap, d / f"stage{i}.gon")
        (d / "arcs.txt").write_text(self.arcs_text(), encoding="utf-8")

    @classmethod
    def read(cls, directory) -> "CompletionTrace":
        """Rebuild a written trace; snapshots are replayed from the seed and checked."""
        from .gonfile import read_gon

        d = Path(directory)
        seed = read_gon(d / "stage0.gon")
        lines = (d / "arcs.txt").read_text(encoding="utf-8").splitlines()
        complete = bool(lines) and "complete=yes" in lines[0]
        by_stage = {}
        stage = 0
        for ln in lines:
            tok = ln.split()
            if not tok or tok[0].startswith("#"):
                continue
            if tok[0] == "stage" and len(tok) == 2:
                stage = int(tok[1])
                by_stage[stage] = []
            elif tok[0] == "arc" and len(tok) >= 4 and tok[3] == ":" and stage:
                by_stage[stage].append(Arc(stage, tok[1], tok[2], tuple(tok[4:])))
            else:
                raise CompletionError("TRACE_MISMATCH", f"bad arcs.txt line: {ln!r}")
        trace = cls(seed, [seed], [], complete)
        for s in range(1, len(by_stage) + 1):
            g, arcs = complete_stage(trace.last, s, check=False)
            if arcs != by_stage.get(s):
                raise CompletionError("TRACE_MISMATCH", f"stage {s} arcs differ from arcs.txt")
            snap = d / f"stage{s}.gon"
            if snap.exists() and read_gon(snap) != g:
                raise CompletionError("TRACE_MISMATCH", f"stage{s}.gon differs from the replay")
            trace.snapshots.append(g)
            trace.arcs.append(arcs)
        return trace


def complete(g: IncidenceGraph, stages: int) -> CompletionTrace:
    check_partial_gon(g)
    trace = CompletionTrace(g, [g], [])
    for s in range(1, stages + 1):
        nxt, arcs = complete_stage(trace.last, s, check=False)
        if not arcs:
            trace.complete = True
            return trace
        trace.snapshots.append(nxt)
        trace.arcs.append(arcs)
    # a further stage that would add nothing still counts as complete
    if not far_pairs(trace.last, g.n + 1):
        trace.complete = True
    return trace


def seed_resolved(snapshot: IncidenceGraph, seed_vertices) -> bool:
    n = snapshot.n
    seed_vertices = set(seed_vertices)
    for a in seed_vertices:
        reach = bfs_distances(snapshot, a, limit=n)
        if not seed_vertices.issubset(reach):
            return False
    return True


def complete_until_core_resolved(g: IncidenceGraph, max_stages: int, budget: int = 10**6):
    """Smallest stage at which all seed vertices are pairwise within distance n."""
    from .polygon import check_nondegenerate

    check_partial_gon(g)
    if check_nondegenerate(g, budget).verdict is not Verdict.YES:
        raise CompletionError("DEGENERATE_SEED", "seed has no long geodesic or long cycle")
    trace = CompletionTrace(g, [g], [])
    seed = g.vertices
    if seed_resolved(g, seed):
        return trace, 0
    for s in range(1, max_stages + 1):
        nxt, arcs = complete_stage(trace.last, s, check=False)
        if not arcs:
            trace.complete = True
            return trace, NOT_RESOLVED
        trace.snapshots.append(nxt)
        trace.arcs.append(arcs)
        if seed_resolved(nxt, seed):
            return trace, s
    return trace, NOT_RESOLVED


# ---------------------------------------------------------------------------
# opposites

def _as_cycle(cycle) -> list:
    cyc = list(cycle)
    if len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc = cyc[:-1]
    if len(set(cyc)) != len(cyc):
        raise GraphError("cycle repeats a vertex")
    return cyc


def opposite_in_cycle(cycle, x, n: Optional[int] = None):
    """The vertex at cycle distance n from x, for a 2n-cycle listed in order."""
    cyc = _as_cycle(cycle)
    if n is None:
        n = len(cyc) // 2
    if len(cyc) != 2 * n:
        raise GraphError(f"expected a {2 * n}-cycle, got length {len(cyc)}")
    if x not in cyc:
        raise GraphError(f"{x} is not on the cycle")
    return cyc[(cyc.index(x) + n) % len(cyc)]


def find_2n_cycle_through(g: IncidenceGraph, vertices) -> Optional[list]:
    """Some 2n-cycle of g containing all ``vertices`` (small search)."""
    n = g.n
    want = set(vertices)
    start = min(want)
    adj = g.adjacency()
    path = [start]
    on = {start}

    def rec():
        if len(path) == 2 * n:
            if start in adj[path[-1]] and want <= on:
                return list(path)
            return None
        for w in sorted(adj[path[-1]]):
            if w in on:
                continue
            # remaining steps must reach back to start
            path.append(w)
            on.add(w)
            got = rec()
            if got:
                return got
            path.pop()
            on.discard(w)
        return None

    return rec()


@dataclass(frozen=True)
class Transfer:
    y_prime: str
    opposite: str
    graph: IncidenceGraph  # the graph in which y' lives (context, possibly grown one stage)
    exchange_ok: bool


def transfer_neighbor(cycle, x, y, context: IncidenceGraph, build: bool = True,
                      check_exchange: bool = True) -> Transfer:
    """Move the pendant y of x to the neighbour y' of the opposite x' with d(y, y') = n-2.

    ``context`` must contain the cycle and y; if it lacks a path of length n-1
    from y to x', one completion stage is run when ``build`` is set.
    """
    n = context.n
    cyc = _as_cycle(cycle)
    if y in cyc:
        raise GraphError(f"{y} lies on the cycle")
    if not context.has_edge(x, y):
        raise GraphError(f"{y} is not adjacent to {x}")
    xp = opposite_in_cycle(cyc, x, n)
    g = context
    geo = geodesics(g, y, xp)
    if not (geo.count == 1 and len(geo.witness) == n):
        if not build:
            raise CompletionError("NO_ARC", f"no arc from {y} to {xp} in the context")
        g, _ = complete_stage(g, check=False)
        geo = geodesics(g, y, xp)
        if not (geo.count == 1 and len(geo.witness) == n):
            raise CompletionError("NO_ARC", f"one stage did not join {y} and {xp} by a path of length {n - 1}")
    yp = geo.witness[-2]
    d = bfs_distances(g, y, limit=n).get(yp)
    if d != n - 2:
        raise AssertionError(f"d({y}, {yp}) = {d}, expected {n - 2}")
    ok = True
    if check_exchange:
        ok = exchange_holds(cyc, y, yp, g)
        if not ok:
            raise AssertionError("one-stage completions of the two pendant graphs differ")
    return Transfer(yp, xp, g, ok)


def exchange_holds(cycle, y, yp, g: IncidenceGraph) -> bool:
    """Completing cycle + y and cycle + y' for one stage gives isomorphic graphs."""
    cyc = _as_cycle(cycle)
    g1, _ = complete_stage(g.induced(cyc + [y]), 1, check=False)
    g2, _ = complete_stage(g.induced(cyc + [yp]), 1, check=False)
    return isomorphic(g1, g2) is not None


# ---------------------------------------------------------------------------
# generated sub-n-gons

def geodesic_closure(g: IncidenceGraph, A) -> frozenset:
    """Least superset of A containing the unique geodesic between any two members closer than n."""
    n = g.n
    cur = set(A)
    queue = sorted(cur)
    while queue:
        a = queue.pop()
        for b, d in bfs_distances(g, a, limit=n - 1).items():
            if b == a or b not in cur or d >= n:
                continue
            geo = geodesics(g, a, b)
            if geo.unique:
                for v in geo.witness:
                    if v not in cur:
                        cur.add(v)
                        queue.append(v)
    return frozenset(cur)


def generated_subgon(trace: CompletionTrace, A) -> CompletionTrace:
    """The copy of the truncated F(A) inside ``trace``, adopting arcs with both ends in the sub-object."""
    from .polygon import is_open_over

    A = frozenset(A)
    seed = trace.seed
    missing = sorted(A - set(seed.vertices))
    if missing:
        raise GraphError(f"not seed vertices: {missing[:5]}")
    if not is_open_over(frozenset(seed.vertices) - A, A, seed).open:
        raise CompletionError("NOT_STRONGLY_EMBEDDED", "the seed is not open over A")
    cur = set(A)
    sub = CompletionTrace(seed.induced(cur), [seed.induced(cur)], [], trace.complete)
    for s, arcs in enumerate(trace.arcs, start=1):
        adopted = [a for a in arcs if a.a in cur and a.b in cur]
        for a in adopted:
            cur.update(a.interior)
        if not adopted:
            # the sub-object has diameter <= n now, so later stages add nothing to it
            sub.complete = True
            break
        sub.snapshots.append(trace.snapshots[s].induced(cur))
        sub.arcs.append(adopted)
    return sub


__all__ = [
    "Arc", "CompletionTrace", "CompletionError", "NOT_RESOLVED", "arc_ids", "far_pairs", "complete_stage",
    "complete", "complete_until_core_resolved", "seed_resolved", "opposite_in_cycle", "find_2n_cycle_through",
    "transfer_neighbor", "Transfer", "exchange_holds", "geodesic_closure", "generated_subgon",
    "check_partial_gon",
]
