"""Polygon axioms, loose ends, clean arcs and the open/closed calculus.

A clean arc of a graph is a path (x_0, ..., x_{n-1}) whose n-2 interior
vertices all have valency exactly 2; a loose end is a vertex of valency at
most 1.  A finite graph is open when every subgraph has one or the other,
which for finite graphs is the same as being strippable to nothing by
deleting loose ends and arc interiors one at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import (
    INFINITY, GraphError, IncidenceGraph, Verdict, connected_components, diameter, distance,
    is_connected, long_cycle_exists, max_finite_distance, shortest_cycle, shortest_path,
)


# ---------------------------------------------------------------------------
# axiom checks

@dataclass
class CheckReport:
    verdict: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict


def check_partial(g: IncidenceGraph) -> CheckReport:
    """Connected, bipartite, girth at least 2n."""
    failures = []
    if not is_connected(g):
        failures.append(("connected", sorted(sorted(c) for c in connected_components(g))))
    cyc = shortest_cycle(g)
    if cyc is not None and len(cyc) < 2 * g.n:
        failures.append(("girth", cyc))
    return CheckReport(not failures, failures)


def check_weak(g: IncidenceGraph) -> CheckReport:
    """Diameter exactly n and girth exactly 2n."""
    failures = []
    diam = diameter(g)
    if diam != g.n:
        if diam == INFINITY:
            failures.append(("diameter", (INFINITY, connected_components(g))))
        else:
            d, a, b = max_finite_distance(g)
            failures.append(("diameter", (diam, (a, b))))
    cyc = shortest_cycle(g)
    if cyc is None or len(cyc) != 2 * g.n:
        failures.append(("girth", cyc))
    return CheckReport(not failures, failures)


def check_thick(g: IncidenceGraph) -> CheckReport:
    failures = [("valency", v) for v in g.vertices if g.degree(v) < 3]
    return CheckReport(len(g) > 0 and not failures, failures)


@dataclass(frozen=True)
class Nondegeneracy:
    verdict: Verdict
    kind: Optional[str] = None  # "path" or "cycle"
    witness: Optional[tuple] = None


def check_nondegenerate(g: IncidenceGraph, budget: int = 10**6) -> Nondegeneracy:
    """A geodesic of length n+3, or a cycle of length at least 2n+2."""
    n = g.n
    d, a, b = max_finite_distance(g)
    if d >= n + 3:
        return Nondegeneracy(Verdict.YES, "path", tuple(shortest_path(g, a, b)[: n + 4]))
    found = long_cycle_exists(g, 2 * n + 2, budget)
    if found.verdict is Verdict.YES:
        return Nondegeneracy(Verdict.YES, "cycle", found.witness)
    return Nondegeneracy(found.verdict)


def loose_ends(g: IncidenceGraph) -> frozenset:
    return frozenset(v for v in g.vertices if g.degree(v) <= 1)


def clean_arcs(g: IncidenceGraph) -> list:
    """All clean arcs as (a, interior, b) with a < b and interior read from a."""
    k = g.n - 2
    adj = g.adjacency()
    deg2 = {v for v, s in adj.items() if len(s) == 2}
    out = set()
    for v in sorted(deg2):
        for a in sorted(adj[v]):
            chain = [v]
            prev = a
            ok = True
            while len(chain) < k:
                cur = chain[-1]
                (nxt,) = adj[cur] - {prev}
                if nxt not in deg2 or nxt in chain or nxt == a:
                    ok = False
                    break
                prev = cur
                chain.append(nxt)
            if not ok:
                continue
            (b,) = adj[chain[-1]] - {prev}
            if b == a or b in chain:
                continue
            out.add((a, tuple(chain), b) if a < b else (b, tuple(reversed(chain)), a))
    return sorted(out)


# ---------------------------------------------------------------------------
# hyper-free certificates

@dataclass(frozen=True)
class AddLooseEnd:
    vertex: str
    attach: Optional[str] = None


@dataclass(frozen=True)
class AddCleanArc:
    a: str
    b: str
    interior: tuple
    relative: bool = False


HFStep = Union[AddLooseEnd, AddCleanArc]


@dataclass(frozen=True)
class HFCertificate:
    n: int
    base: frozenset
    steps: tuple

    def to_text(self) -> str:
        lines = [" ".join(["hfcert", str(self.n), "base", *sorted(self.base)])]
        for s in self.steps:
            if isinstance(s, AddLooseEnd):
                lines.append(f"loose {s.vertex}" + (f" {s.attach}" if s.attach else ""))
            else:
                lines.append(" ".join(["arc", s.a, s.b, *s.interior] + (["relative"] if s.relative else [])))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "HFCertificate":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or rows[0][:1] != ["hfcert"] or len(rows[0]) < 3 or rows[0][2] != "base":
            raise ValueError("expected header 'hfcert <n> base ...'")
        n = int(rows[0][1])
        steps = []
        for i, tok in enumerate(rows[1:], start=2):
            if tok[0] == "loose" and len(tok) in (2, 3):
                steps.append(AddLooseEnd(tok[1], tok[2] if len(tok) == 3 else None))
            elif tok[0] == "arc" and len(tok) >= 3:
                rest = tok[3:]
                relative = len(rest) == n - 1 and rest[-1] == "relative"
                if relative:
                    rest = rest[:-1]
                if len(rest) != n - 2:
                    raise ValueError(f"line {i}: arc needs {n - 2} interior vertices")
                steps.append(AddCleanArc(tok[1], tok[2], tuple(rest), relative))
            else:
                raise ValueError(f"line {i}: malformed step")
        return cls(n, frozenset(rows[0][3:]), tuple(steps))


@dataclass(frozen=True)
class OpenResult:
    open: bool
    certificate: Optional[HFCertificate] = None
    stuck: Optional[frozenset] = None

    def __bool__(self):
        return self.open


def _strip(g: IncidenceGraph, removable: set) -> tuple[list, set]:
    """Greedy deletion restricted to ``removable``; returns (deletions, leftover)."""
    n = g.n
    cur = g
    rem = set(removable)
    deleted = []
    while rem:
        ends = [v for v in sorted(rem) if cur.degree(v) <= 1]
        if ends:
            v = ends[0]
            nb = sorted(cur.neighbors(v))
            cur = cur.without([v])
            rem.discard(v)
            deleted.append(AddLooseEnd(v, nb[0] if nb else None))
            continue
        arc = next(((a, inner, b) for a, inner, b in clean_arcs(cur) if rem.issuperset(inner)), None)
        if arc is None:
            break
        a, inner, b = arc
        cur = cur.without(inner)
        rem.difference_update(inner)
        deleted.append(AddCleanArc(a, b, inner, distance(cur, a, b) != n + 1))
    return deleted, rem


def is_open(g: IncidenceGraph) -> OpenResult:
    """Greedy deconstruction: loose ends first, then clean arcs, lowest ids first."""
    deleted, left = _strip(g, set(g.vertices))
    if left:
        return OpenResult(False, stuck=frozenset(left))
    return OpenResult(True, HFCertificate(g.n, frozenset(), tuple(reversed(deleted))))


def _disjoint(B, A):
    B, A = frozenset(B), frozenset(A)
    if A & B:
        raise GraphError(f"sets overlap: {sorted(A & B)[:5]}")
    return B, A


def is_closed_over(B, A, g: IncidenceGraph) -> bool:
    """B has no loose end and contains no clean arc, valencies taken in g[A | B]."""
    B, A = _disjoint(B, A)
    H = g.induced(A | B)
    if any(H.degree(v) <= 1 for v in B):
        return False
    return not any(B.issuperset(inner) for _, inner, _ in clean_arcs(H))


def is_open_over(B, A, g: IncidenceGraph) -> OpenResult:
    B, A = _disjoint(B, A)
    deleted, left = _strip(g.induced(A | B), set(B))
    if left:
        return OpenResult(False, stuck=frozenset(left))
    return OpenResult(True, HFCertificate(g.n, A, tuple(reversed(deleted))))


def connected_subsets(g: IncidenceGraph, allowed, max_size: int):
    """Connected vertex subsets of g[allowed] with at most ``max_size`` vertices."""
    allowed = sorted(allowed)
    rank = {v: i for i, v in enumerate(allowed)}
    adj = {v: [w for w in g.neighbors(v) if w in rank] for v in allowed}

    def extend(sub, ext, root):
        yield sub
        if len(sub) == max_size:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            new_ext = set(ext)
            for u in adj[w]:
                if rank[u] > rank[root] and u not in sub and all(u not in adj[s] and u != s for s in sub):
                    new_ext.add(u)
            yield from extend(sub | {w}, sorted(new_ext, key=rank.get), root)

    if max_size < 1:
        return
    for v in allowed:
        yield from extend(frozenset([v]), sorted((u for u in adj[v] if rank[u] > rank[v]), key=rank.get), v)


def find_closed_sets(A, g: IncidenceGraph, size_cap: int = 12) -> list:
    """Inclusion-minimal nonempty sets of size <= cap that are closed over A."""
    A = frozenset(A)
    rest = [v for v in g.vertices if v not in A]
    found = sorted({B for B in connected_subsets(g, rest, size_cap) if is_closed_over(B, A, g)},
                   key=lambda B: (len(B), sorted(B)))
    minimal = []
    for B in found:
        if not any(m < B for m in minimal):
            minimal.append(B)
    return minimal


@dataclass(frozen=True)
class ClosureResult:
    vertices: frozenset
    rounds_used: int
    converged: bool
    size_cap: int
    round_limit: int


def cl_closure(A, g: IncidenceGraph, size_cap: int = 12, rounds: int = 3) -> ClosureResult:
    """Bounded closure: alternately add closed sets and close under short unique geodesics."""
    from .completion import geodesic_closure

    cur = frozenset(A)
    for r in range(1, rounds + 1):
        nxt = cur
        while True:
            extra = find_closed_sets(nxt, g, size_cap)
            if not extra:
                break
            nxt = nxt.union(*extra)
        nxt = geodesic_closure(g, nxt)
        if nxt == cur:
            return ClosureResult(cur, r, True, size_cap, rounds)
        cur = nxt
    return ClosureResult(cur, rounds, False, size_cap, rounds)


@dataclass(frozen=True)
class Replay:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_hf_certificate(cert: HFCertificate, base: IncidenceGraph, target: IncidenceGraph) -> Replay:
    """Replay the steps on ``base`` and compare with ``target``.

    Parts of new vertices are read from ``target``.  Arc steps not flagged
    relative must join two vertices at distance exactly n+1 when applied.
    """
    n = target.n
    if cert.n != n or base.n != n:
        return Replay(False, None, "gonality mismatch")
    if frozenset(base.vertices) != cert.base:
        return Replay(False, None, "certificate base differs from the given base graph")
    cur = base
    for i, s in enumerate(cert.steps):
        if isinstance(s, AddLooseEnd):
            v = s.vertex
            if v in cur or v not in target:
                return Replay(False, i, f"loose end {v} is not fresh or not in target")
            if s.attach is not None:
                if s.attach not in cur:
                    return Replay(False, i, f"attach point {s.attach} missing")
                if cur.part(s.attach) is target.part(v):
                    return Replay(False, i, "loose end in the same part as its attach point")
                cur = cur.extend({v: target.part(v)}, [(s.attach, v)])
            else:
                cur = cur.extend({v: target.part(v)})
        else:
            if s.a not in cur or s.b not in cur or s.a == s.b:
                return Replay(False, i, "arc endpoints missing")
            if len(s.interior) != n - 2 or len(set(s.interior)) != n - 2:
                return Replay(False, i, "arc interior must have n-2 distinct vertices")
            if any(v in cur or v not in target for v in s.interior):
                return Replay(False, i, "arc interior is not fresh or not in target")
            if not s.relative:
                d = distance(cur, s.a, s.b)
                if d != n + 1:
                    return Replay(False, i, f"arc endpoints at distance {d}, expected {n + 1}")
            chain = [s.a, *s.interior, s.b]
            part = {x: cur.part(x) if x in cur else target.part(x) for x in chain}
            for x, y in zip(chain, chain[1:]):
                if part[x] is part[y]:
                    return Replay(False, i, "arc does not alternate parts")
            cur = cur.extend({v: target.part(v) for v in s.interior}, zip(chain, chain[1:]))
    if cur != target:
        return Replay(False, len(cert.steps), "replay result differs from target")
    return Replay(True)


__all__ = [
    "CheckReport", "check_partial", "check_weak", "check_thick", "check_nondegenerate", "Nondegeneracy",
    "loose_ends", "clean_arcs", "AddLooseEnd", "AddCleanArc", "HFCertificate", "OpenResult",
    "is_open", "is_closed_over", "is_open_over", "find_closed_sets", "connected_subsets",
    "cl_closure", "ClosureResult", "verify_hf_certificate", "Replay",
]
