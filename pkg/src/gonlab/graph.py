"""Finite bipartite incidence graphs.

Vertices carry a part (point or line) and a provenance tag recording how
they came into being.  Graphs are immutable: every transformation returns a
new graph, so values can be shared and cached freely.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional

INFINITY = math.inf


class GraphError(ValueError):
    pass


class Part(Enum):
    POINT = "P"
    LINE = "L"

    @property
    def other(self) -> "Part":
        return Part.LINE if self is Part.POINT else Part.POINT


class Verdict(Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Provenance:
    """Where a vertex came from: a seed, an arc of some completion stage, or a loose end."""

    kind: str = "SEED"
    stage: int = 0
    endpoints: Optional[tuple] = None
    position: int = 0
    attach: Optional[str] = None

    @classmethod
    def arc(cls, stage, a, b, position):
        if b < a:
            a, b = b, a
        return cls("ARC", stage, (a, b), position)

    @classmethod
    def loose(cls, stage, attach=None):
        return cls("LOOSE", stage, attach=attach)


SEED = Provenance()


def check_id(v) -> str:
    if not isinstance(v, str) or not v or not v.isascii() or any(c.isspace() for c in v):
        raise GraphError(f"invalid vertex id {v!r}")
    return v


class IncidenceGraph:
    """A finite bipartite graph with a gonality parameter ``n``.

    Equality and hashing look at ``n``, the part labelling and the edge set;
    provenance is descriptive metadata and does not take part.
    """

    __slots__ = ("n", "_parts", "_prov", "_adj", "_cache")

    def __init__(self, n: int, parts: Mapping[str, Part], edges: Iterable = (),
                 provenance: Optional[Mapping[str, Provenance]] = None):
        if not isinstance(n, int) or n < 3:
            raise GraphError(f"gonality must be an integer >= 3, got {n!r}")
        adj: dict[str, set] = {}
        for v, p in parts.items():
            check_id(v)
            if not isinstance(p, Part):
                raise GraphError(f"vertex {v}: part must be a Part, got {p!r}")
            adj[v] = set()
        for a, b in edges:
            if a not in adj or b not in adj:
                raise GraphError(f"edge ({a}, {b}) has an unknown endpoint")
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if parts[a] is parts[b]:
                raise GraphError(f"edge ({a}, {b}) joins two vertices of the same part")
            if b in adj[a]:
                raise GraphError(f"parallel edge ({a}, {b})")
            adj[a].add(b)
            adj[b].add(a)
        prov = {v: SEED for v in parts}
        if provenance:
            for v, pr in provenance.items():
                if v not in prov:
                    raise GraphError(f"provenance for unknown vertex {v}")
                prov[v] = pr
        self._init(n, dict(parts), {v: frozenset(s) for v, s in adj.items()}, prov)

    def _init(self, n, parts, adj, prov):
        self.n = n
        self._parts = parts
        self._adj = adj
        self._prov = prov
        self._cache = {}

    @classmethod
    def _raw(cls, n, parts, adj, prov) -> "IncidenceGraph":
        g = cls.__new__(cls)
        g._init(n, parts, adj, prov)
        return g

    @classmethod
    def empty(cls, n: int) -> "IncidenceGraph":
        return cls(n, {})

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple:
        if "V" not in self._cache:
            self._cache["V"] = tuple(sorted(self._parts))
        return self._cache["V"]

    @property
    def edges(self) -> tuple:
        if "E" not in self._cache:
            self._cache["E"] = tuple(sorted((a, b) for a in self._adj for b in self._adj[a] if a < b))
        return self._cache["E"]

    def __len__(self):
        return len(self._parts)

    def __contains__(self, v):
        return v in self._parts

    def __iter__(self):
        return iter(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def part(self, v) -> Part:
        self._need(v)
        return self._parts[v]

    def provenance(self, v) -> Provenance:
        self._need(v)
        return self._prov[v]

    def neighbors(self, v) -> frozenset:
        self._need(v)
        return self._adj[v]

    def degree(self, v) -> int:
        self._need(v)
        return len(self._adj[v])

    def has_edge(self, a, b) -> bool:
        return a in self._adj and b in self._adj[a]

    def parts(self) -> dict:
        return dict(self._parts)

    def adjacency(self) -> dict:
        return dict(self._adj)

    def _need(self, v):
        if v not in self._parts:
            raise GraphError(f"unknown vertex {v!r}")

    def __eq__(self, other):
        if not isinstance(other, IncidenceGraph):
            return NotImplemented
        return self.n == other.n and self._parts == other._parts and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, tuple(sorted((v, p.value) for v, p in self._parts.items())), self.edges))

    def __repr__(self):
        return f"IncidenceGraph(n={self.n}, |V|={len(self)}, |E|={self.num_edges})"

    # -- derived graphs --------------------------------------------------
    def induced(self, vertices: Iterable) -> "IncidenceGraph":
        keep = set(vertices)
        for v in keep:
            self._need(v)
        return IncidenceGraph._raw(
            self.n,
            {v: self._parts[v] for v in keep},
            {v: self._adj[v] & keep for v in keep},
            {v: self._prov[v] for v in keep},
        )

    def without(self, vertices: Iterable) -> "IncidenceGraph":
        drop = set(vertices)
        return self.induced(v for v in self._parts if v not in drop)

    def without_edges(self, edges: Iterable) -> "IncidenceGraph":
        adj = {v: set(s) for v, s in self._adj.items()}
        for a, b in edges:
            if b not in adj.get(a, ()):
                raise GraphError(f"no edge ({a}, {b})")
            adj[a].discard(b)
            adj[b].discard(a)
        return IncidenceGraph._raw(self.n, dict(self._parts), {v: frozenset(s) for v, s in adj.items()},
                                   dict(self._prov))

    def extend(self, vertices: Mapping = (), edges: Iterable = ()) -> "IncidenceGraph":
        """Add vertices (``id -> Part`` or ``id -> (Part, Provenance)``) and edges."""
        parts = dict(self._parts)
        prov = dict(self._prov)
        adj = {v: set(s) for v, s in self._adj.items()}
        for v, spec in dict(vertices).items():
            check_id(v)
            if v in parts:
                raise GraphError(f"duplicate vertex {v}")
            p, pr = spec if isinstance(spec, tuple) else (spec, SEED)
            parts[v], prov[v] = p, pr
            adj[v] = set()
        for a, b in edges:
            if a not in parts or b not in parts:
                raise GraphError(f"edge ({a}, {b}) has an unknown endpoint")
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if parts[a] is parts[b]:
                raise GraphError(f"edge ({a}, {b}) joins two vertices of the same part")
            if b in adj[a]:
                raise GraphError(f"parallel edge ({a}, {b})")
            adj[a].add(b)
            adj[b].add(a)
        return IncidenceGraph._raw(self.n, parts, {v: frozenset(s) for v, s in adj.items()}, prov)

    def relabel(self, mapping: Mapping) -> "IncidenceGraph":
        m = {v: mapping.get(v, v) for v in self._parts}
        if len(set(m.values())) != len(m):
            raise GraphError("relabelling is not injective")
        return IncidenceGraph._raw(
            self.n,
            {m[v]: p for v, p in self._parts.items()},
            {m[v]: frozenset(m[w] for w in s) for v, s in self._adj.items()},
            {m[v]: pr for v, pr in self._prov.items()},
        )

    def with_n(self, n: int) -> "IncidenceGraph":
        if n < 3:
            raise GraphError("gonality must be >= 3")
        return IncidenceGraph._raw(n, self._parts, self._adj, self._prov)

    def with_provenance(self, prov: Mapping) -> "IncidenceGraph":
        p = dict(self._prov)
        p.update(prov)
        return IncidenceGraph._raw(self.n, self._parts, self._adj, p)


# ---------------------------------------------------------------------------
# distances

def bfs_distances(g: IncidenceGraph, src, limit=None) -> dict:
    dist = {src: 0}
    q = deque([src])
    adj = g._adj
    while q:
        u = q.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = d + 1
                q.append(w)
    return dist


def all_distances(g: IncidenceGraph) -> dict:
    if "D" not in g._cache:
        g._cache["D"] = {v: bfs_distances(g, v) for v in g._parts}
    return g._cache["D"]


def distance(g: IncidenceGraph, a, b):
    g._need(a)
    g._need(b)
    if "D" in g._cache:
        return g._cache["D"][a].get(b, INFINITY)
    return bfs_distances(g, a).get(b, INFINITY)


def connected_components(g: IncidenceGraph) -> list:
    seen = set()
    comps = []
    for v in g.vertices:
        if v not in seen:
            comp = set(bfs_distances(g, v))
            seen |= comp
            comps.append(frozenset(comp))
    return comps


def is_connected(g: IncidenceGraph) -> bool:
    return len(g) == 0 or len(bfs_distances(g, g.vertices[0])) == len(g)


def is_forest(g: IncidenceGraph) -> bool:
    return g.num_edges == len(g) - len(connected_components(g))


def is_tree(g: IncidenceGraph) -> bool:
    return len(g) > 0 and is_connected(g) and g.num_edges == len(g) - 1


def diameter(g: IncidenceGraph):
    if len(g) == 0:
        return 0
    if not is_connected(g):
        return INFINITY
    return max(max(d.values()) for d in all_distances(g).values())


def max_finite_distance(g: IncidenceGraph) -> tuple:
    """Largest finite distance and a pair attaining it (lowest ids first)."""
    best = (0, None, None)
    for a, d in sorted(all_distances(g).items()):
        for b, x in sorted(d.items()):
            if x > best[0]:
                best = (x, a, b)
    return best


def shortest_path(g: IncidenceGraph, a, b) -> list:
    """A shortest a-b path; among ties the one choosing lowest ids from ``a`` outward."""
    g._need(a)
    g._need(b)
    dist_b = bfs_distances(g, b)
    if a not in dist_b:
        raise GraphError(f"{a} and {b} are not connected")
    path = [a]
    while path[-1] != b:
        u = path[-1]
        path.append(min(w for w in g._adj[u] if dist_b.get(w) == dist_b[u] - 1))
    return path


@dataclass(frozen=True)
class Geodesics:
    count: int
    unique: bool
    witness: tuple


def geodesics(g: IncidenceGraph, a, b) -> Geodesics:
    g._need(a)
    g._need(b)
    dist = {a: 0}
    count = {a: 1}
    q = deque([a])
    while q:
        u = q.popleft()
        for w in g._adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                count[w] = count[u]
                q.append(w)
            elif dist[w] == dist[u] + 1:
                count[w] += count[u]
    if b not in dist:
        raise GraphError(f"{a} and {b} are not connected")
    return Geodesics(count[b], count[b] == 1, tuple(shortest_path(g, a, b)))


# ---------------------------------------------------------------------------
# cycles

def shortest_cycle(g: IncidenceGraph) -> Optional[list]:
    """A shortest cycle as a vertex list, or None for forests."""
    best = None
    adj = g._adj
    for r in g.vertices:
        dist = {r: 0}
        parent = {r: None}
        q = deque([r])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        pu, pw = [u], [w]
                        while parent[pu[-1]] is not None:
                            pu.append(parent[pu[-1]])
                        while parent[pw[-1]] is not None:
                            pw.append(parent[pw[-1]])
                        cyc = pu[::-1] + pw[:-1]
                        if len(set(cyc)) == len(cyc) == length:
                            best = cyc
    return best


def girth(g: IncidenceGraph):
    if "girth" not in g._cache:
        c = shortest_cycle(g)
        g._cache["girth"] = INFINITY if c is None else len(c)
    return g._cache["girth"]


def two_core(g: IncidenceGraph) -> set:
    deg = {v: len(s) for v, s in g._adj.items()}
    alive = set(deg)
    stack = [v for v, d in deg.items() if d < 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g._adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


@dataclass(frozen=True)
class CycleSearch:
    verdict: Verdict
    witness: Optional[tuple] = None
    expansions: int = 0


def long_cycle_exists(g: IncidenceGraph, length: int, budget: int = 10**6) -> CycleSearch:
    """Look for a simple cycle of length >= ``length`` by budgeted depth-first search.

    Each cycle is searched from its lowest vertex; branches are cut when the
    vertices still reachable cannot complete a long enough cycle.
    """
    core = two_core(g)
    order = sorted(core)
    rank = {v: i for i, v in enumerate(order)}
    adj = {v: [w for w in sorted(g._adj[v]) if w in core] for v in order}
    expansions = 0

    def reachable(start, allowed):
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen and w in allowed:
                    seen.add(w)
                    stack.append(w)
        return seen

    for s in order:
        allowed = {v for v in order if rank[v] > rank[s]}
        if len(allowed) + 1 < length:
            break
        targets = set(adj[s]) & allowed
        path = [s]
        onpath = {s}
        stack = [iter([w for w in adj[s] if w in allowed])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                onpath.discard(path.pop())
                continue
            if nxt in onpath:
                continue
            expansions += 1
            if expansions > budget:
                return CycleSearch(Verdict.UNKNOWN, None, expansions)
            path.append(nxt)
            onpath.add(nxt)
            if len(path) >= length and len(path) >= 3 and s in g._adj[nxt]:
                return CycleSearch(Verdict.YES, tuple(path), expansions)
            free = allowed - onpath
            reach = reachable(nxt, free | {nxt})
            if len(path) + len(reach) - 1 < length or not (reach & targets or s in g._adj[nxt]):
                onpath.discard(path.pop())
                continue
            stack.append(iter([w for w in adj[nxt] if w in free]))
    return CycleSearch(Verdict.NO, None, expansions)


# ---------------------------------------------------------------------------
# isomorphism and embeddings

def _colors_pair(g1, g2, preserve_parts):
    """Jointly refined colours, so equal colours mean equal refinement histories."""
    tag1 = {v: ("1", v) for v in g1._parts}
    tag2 = {v: ("2", v) for v in g2._parts}
    nodes = list(tag1.values()) + list(tag2.values())
    adj = {}
    for v in g1._parts:
        adj[tag1[v]] = [tag1[w] for w in g1._adj[v]]
    for v in g2._parts:
        adj[tag2[v]] = [tag2[w] for w in g2._adj[v]]
    part = {tag1[v]: g1._parts[v] for v in g1._parts}
    part.update({tag2[v]: g2._parts[v] for v in g2._parts})
    color = {x: (part[x].value if preserve_parts else "", len(adj[x])) for x in nodes}
    ncol = len(set(color.values()))
    while True:
        sig = {x: (color[x], tuple(sorted(color[y] for y in adj[x]))) for x in nodes}
        index = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {x: index[sig[x]] for x in nodes}
        k = len(index)
        if k == ncol:
            break
        ncol = k
    return {v: color[tag1[v]] for v in g1._parts}, {v: color[tag2[v]] for v in g2._parts}


def isomorphic(g1: IncidenceGraph, g2: IncidenceGraph, preserve_parts: bool = True) -> Optional[dict]:
    """A vertex bijection g1 -> g2 that preserves edges (and parts), or None."""
    if len(g1) != len(g2) or g1.num_edges != g2.num_edges:
        return None
    c1, c2 = _colors_pair(g1, g2, preserve_parts)
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    return _match(g1, g2, c1, c2, {}, induced=True, bijective=True)


def find_embedding(small: IncidenceGraph, big: IncidenceGraph, fixed: Optional[Mapping] = None,
                   induced: bool = False) -> Optional[dict]:
    """An injective part-preserving map small -> big carrying edges to edges.

    ``fixed`` pins part of the map in advance.  With ``induced`` non-edges
    must go to non-edges as well.
    """
    fixed = dict(fixed or {})
    for v, w in fixed.items():
        if v not in small or w not in big or small.part(v) is not big.part(w):
            return None
    if len(set(fixed.values())) != len(fixed):
        return None
    c1 = {v: small._parts[v].value for v in small._parts}
    c2 = {v: big._parts[v].value for v in big._parts}
    for v, w in fixed.items():
        for u, x in fixed.items():
            e1 = small.has_edge(v, u)
            e2 = big.has_edge(w, x)
            if (e1 and not e2) or (induced and e2 and not e1):
                return None
    return _match(small, big, c1, c2, fixed, induced=induced, bijective=False)


def _match(g1, g2, c1, c2, fixed, induced, bijective):
    free = [v for v in g1.vertices if v not in fixed]
    if bijective:
        free.sort(key=lambda v: (sum(1 for u in g1.vertices if c1[u] == c1[v]), v))
    # order: grow from already placed vertices so candidates come from neighbourhoods
    order = []
    placed = set(fixed)
    remaining = set(free)
    while remaining:
        best = None
        for v in free:
            if v in remaining:
                k = len(g1._adj[v] & placed)
                key = (-k, v) if not bijective else (-k, free.index(v))
                if best is None or key < best[0]:
                    best = (key, v)
        v = best[1]
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    by_color = {}
    for w in g2.vertices:
        by_color.setdefault(c2[w], []).append(w)
    mapping = dict(fixed)
    used = set(fixed.values())

    def candidates(v):
        anchors = [mapping[u] for u in g1._adj[v] if u in mapping]
        if anchors:
            pool = set(g2._adj[anchors[0]])
            for a in anchors[1:]:
                pool &= g2._adj[a]
            pool = sorted(w for w in pool if c2[w] == c1[v])
        else:
            pool = by_color.get(c1[v], [])
        return [w for w in pool if w not in used]

    def consistent(v, w):
        if len(g2._adj[w]) < len(g1._adj[v]):
            return False
        if bijective and len(g2._adj[w]) != len(g1._adj[v]):
            return False
        for u, x in mapping.items():
            e1 = u in g1._adj[v]
            e2 = x in g2._adj[w]
            if e1 and not e2:
                return False
            if (induced or bijective) and e2 and not e1:
                return False
        return True

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        for w in candidates(v):
            if consistent(v, w):
                mapping[v] = w
                used.add(w)
                if rec(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if rec(0) else None


def is_embedding(mapping: Mapping, small: IncidenceGraph, big: IncidenceGraph) -> bool:
    if set(mapping) != set(small.vertices) or len(set(mapping.values())) != len(mapping):
        return False
    for v, w in mapping.items():
        if w not in big or big.part(w) is not small.part(v):
            return False
    return all(big.has_edge(mapping[a], mapping[b]) for a, b in small.edges)
