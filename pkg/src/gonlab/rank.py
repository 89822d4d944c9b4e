"""The predimension delta_n and n-strong (self-sufficient) embeddings.

For a finite graph with vertex set V and edge set E,

    delta_n = (n - 1) |V| - (n - 2) |E|.

A base B sits n-strongly in G when no finite subgraph X of G has
delta_n(X) < delta_n(X & B).  Fixing T = X minus B, the worst X contains all
of B and every edge of G inside B | T, so the test reduces to minimising

    f(T) = (n - 1) |T| - (n - 2) (|E(G[B | T])| - |E(base)|)

over subsets T of the complement.  Small complements are enumerated in full
with numpy; larger ones go through a maximum-closure min cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .graph import GraphError, IncidenceGraph

EXHAUSTIVE_LIMIT = 16


class PreconditionError(ValueError):
    pass


def delta(g: IncidenceGraph) -> int:
    return (g.n - 1) * len(g) - (g.n - 2) * g.num_edges


def _base_parts(g: IncidenceGraph, base) -> tuple[frozenset, frozenset]:
    """Normalise a base given as a vertex set or as a subgraph of ``g``."""
    if isinstance(base, IncidenceGraph):
        verts = frozenset(base.vertices)
        edges = frozenset(base.edges)
        for a, b in edges:
            if not g.has_edge(a, b):
                raise PreconditionError(f"base edge ({a}, {b}) is not an edge of the graph")
    else:
        verts = frozenset(base)
        edges = None
    missing = [v for v in verts if v not in g]
    if missing:
        raise PreconditionError(f"base is not a subset of the graph: {sorted(missing)[:5]}")
    if edges is None:
        edges = frozenset(e for e in g.edges if e[0] in verts and e[1] in verts)
    return verts, edges


def base_delta(g: IncidenceGraph, base) -> int:
    verts, edges = _base_parts(g, base)
    return (g.n - 1) * len(verts) - (g.n - 2) * len(edges)


def delta_relative(whole: IncidenceGraph, base) -> int:
    """delta_n(whole) - delta_n(base), cross-checked against the cross-edge formula."""
    verts, edges = _base_parts(whole, base)
    direct = delta(whole) - ((whole.n - 1) * len(verts) - (whole.n - 2) * len(edges))
    outside = whole.without(verts)
    cross = sum(1 for a, b in whole.edges if (a in verts) != (b in verts))
    # edges of whole inside the base but missing from the base subgraph also count
    inner_extra = sum(1 for a, b in whole.edges if a in verts and b in verts) - len(edges)
    formula = delta(outside) - (whole.n - 2) * (cross + inner_extra)
    if direct != formula:
        raise AssertionError(f"relative delta mismatch: {direct} != {formula}")
    return direct


@dataclass(frozen=True)
class DeltaReport:
    strong: bool
    delta: int
    relative_to: Optional[frozenset] = None
    witness: Optional[frozenset] = None
    witness_value: Optional[int] = None
    method: str = ""


def _relative_value(g: IncidenceGraph, verts, edges, T) -> int:
    S = verts | set(T)
    inner = sum(1 for a, b in g.edges if a in S and b in S)
    return (g.n - 1) * len(T) - (g.n - 2) * (inner - len(edges))


def _exhaustive_table(g, verts, edges, comp):
    """f(T) for every subset T of ``comp`` (bit i <-> comp[i])."""
    k = len(comp)
    idx = {v: i for i, v in enumerate(comp)}
    masks = np.arange(1 << k, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(k)) & 1).astype(np.int64)
    to_base = np.zeros(k, dtype=np.int64)
    adj = np.zeros((k, k), dtype=np.int64)
    for a, b in g.edges:
        ia, ib = idx.get(a), idx.get(b)
        if ia is not None and ib is not None:
            adj[ia, ib] = adj[ib, ia] = 1
        elif ia is not None and b in verts:
            to_base[ia] += 1
        elif ib is not None and a in verts:
            to_base[ib] += 1
    inner_base = sum(1 for a, b in g.edges if a in verts and b in verts) - len(edges)
    internal = ((bits @ adj) * bits).sum(axis=1) // 2
    new_edges = inner_base + bits @ to_base + internal
    size = bits.sum(axis=1)
    return (g.n - 1) * size - (g.n - 2) * new_edges, size, bits


def _min_closure(g, verts, edges, comp, force=()):
    """Minimum of f over subsets of ``comp`` containing ``force``, via a max-closure cut.

    Returns (value, T).  Every edge with an endpoint in T earns n-2 and every
    vertex of T costs n-1; the source side of a minimum cut is an optimal T.
    """
    import networkx as nx

    n = g.n
    aset = set(comp)
    H = nx.DiGraph()
    H.add_node("_s")
    H.add_node("_t")
    for v in comp:
        H.add_edge(("v", v), "_t", capacity=n - 1)
    for v in force:
        H.add_edge("_s", ("v", v))
    for a, b in g.edges:
        ends = [x for x in (a, b) if x not in verts]
        if not ends or any(x not in aset for x in ends):
            continue
        e = ("e", a, b)
        H.add_edge("_s", e, capacity=n - 2)
        for x in ends:
            H.add_edge(e, ("v", x))
    _, (src_side, _) = nx.minimum_cut(H, "_s", "_t")
    T = frozenset(x[1] for x in src_side if isinstance(x, tuple) and x[0] == "v")
    return _relative_value(g, verts, edges, T), T


def is_n_strong(base, g: IncidenceGraph) -> DeltaReport:
    """Decide base <=_n g and report an inclusion-minimal violating set if not."""
    verts, edges = _base_parts(g, base)
    comp = [v for v in g.vertices if v not in verts]
    if len(comp) <= EXHAUSTIVE_LIMIT:
        values, size, bits = _exhaustive_table(g, verts, edges, comp)
        bad = np.flatnonzero(values < 0)
        if bad.size == 0:
            return DeltaReport(True, delta(g), verts, method="exhaustive")
        smallest = size[bad].min()
        cands = [tuple(np.flatnonzero(bits[m])) for m in bad if size[m] == smallest]
        best = min(cands)
        T = frozenset(comp[i] for i in best)
        X = verts | T
        return DeltaReport(False, delta(g), verts, X, int(_relative_value(g, verts, edges, T)), "exhaustive")
    value, T = _min_closure(g, verts, edges, comp)
    if value >= 0:
        return DeltaReport(True, delta(g), verts, method="min-cut")
    T = _shrink_violation(g, verts, edges, T)
    return DeltaReport(False, delta(g), verts, verts | T, _relative_value(g, verts, edges, T), "min-cut")


def _shrink_violation(g, verts, edges, T):
    """Shrink a violating T until no proper subset violates."""
    T = frozenset(T)
    changed = True
    while changed:
        changed = False
        for v in sorted(T):
            sub = sorted(T - {v})
            if len(sub) <= EXHAUSTIVE_LIMIT:
                values, size, bits = _exhaustive_table(g, verts, edges, sub)
                bad = np.flatnonzero(values < 0)
                if bad.size:
                    m = min(bad, key=lambda m: (size[m], tuple(np.flatnonzero(bits[m]))))
                    T = frozenset(sub[i] for i in np.flatnonzero(bits[m]))
                    changed = True
                    break
            else:
                value, S = _min_closure(g, verts, edges, sub)
                if value < 0:
                    T = frozenset(S)
                    changed = True
                    break
    return T


def strength_value(base, g: IncidenceGraph, X: Iterable) -> int:
    """delta_n(X) - delta_n(X & base) for the subgraph of g induced on X."""
    verts, edges = _base_parts(g, base)
    X = set(X)
    sub = g.induced(X)
    inter_v = X & verts
    inter_e = [e for e in edges if e[0] in X and e[1] in X]
    return delta(sub) - ((g.n - 1) * len(inter_v) - (g.n - 2) * len(inter_e))


@dataclass(frozen=True)
class ZeroStep:
    added: frozenset
    kind: str  # CLEAN_ARC, CLOSED or OTHER


def minimal_zero_decomposition(base, g: IncidenceGraph) -> list:
    """Split a zero extension base <=_n g into a chain of minimal 0-extensions."""
    from .polygon import clean_arcs, is_closed_over

    verts, edges = _base_parts(g, base)
    if not is_n_strong(base, g).strong:
        raise PreconditionError("base is not n-strong in the graph")
    if delta_relative(g, base) != 0:
        raise PreconditionError("relative delta of the graph over the base is not 0")
    steps = []
    current = set(verts)
    cur_edges = set(edges)
    while len(current) < len(g):
        comp = [v for v in g.vertices if v not in current]
        T = _min_zero_set(g, frozenset(current), frozenset(cur_edges), comp)
        sub = g.induced(current | T)
        kind = "OTHER"
        for a, interior, b in clean_arcs(sub):
            if set(interior) == T and a in current and b in current:
                kind = "CLEAN_ARC"
                break
        else:
            if is_closed_over(T, current, sub):
                kind = "CLOSED"
        steps.append(ZeroStep(frozenset(T), kind))
        current |= T
        cur_edges = {e for e in g.edges if e[0] in current and e[1] in current}
    return steps


def _min_zero_set(g, verts, edges, comp):
    if len(comp) <= EXHAUSTIVE_LIMIT:
        values, size, bits = _exhaustive_table(g, verts, edges, comp)
        ok = [m for m in np.flatnonzero(values == 0) if size[m] > 0]
        smallest = min(size[m] for m in ok)
        best = min(tuple(np.flatnonzero(bits[m])) for m in ok if size[m] == smallest)
        return frozenset(comp[i] for i in best)
    T = _zero_set_within(g, verts, edges, comp)
    changed = True
    while changed:
        changed = False
        for v in sorted(T):
            S = _zero_set_within(g, verts, edges, sorted(T - {v}))
            if S:
                T, changed = S, True
                break
    return T


def _zero_set_within(g, verts, edges, comp):
    # f >= 0 on all subsets here, so a forced minimiser of value 0 is a zero set
    if len(comp) <= EXHAUSTIVE_LIMIT:
        if not comp:
            return None
        values, size, bits = _exhaustive_table(g, verts, edges, comp)
        ok = [m for m in np.flatnonzero(values == 0) if size[m] > 0]
        if not ok:
            return None
        m = min(ok, key=lambda m: (size[m], tuple(np.flatnonzero(bits[m]))))
        return frozenset(comp[i] for i in np.flatnonzero(bits[m]))
    for w in comp:
        value, S = _min_closure(g, verts, edges, comp, force=(w,))
        if value == 0:
            return S
    return None


__all__ = [
    "delta", "delta_relative", "base_delta", "is_n_strong", "DeltaReport", "strength_value",
    "minimal_zero_decomposition", "ZeroStep", "PreconditionError", "GraphError",
]
