"""Brute-force reference implementations.

Everything here works from the raw vertex and edge lists with bitmasks and
plain loops, so it shares no logic with the library it is checked against.
"""
from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache


def adjacency_masks(g):
    vs = list(g.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for a, b in g.edges:
        adj[idx[a]] |= 1 << idx[b]
        adj[idx[b]] |= 1 << idx[a]
    return vs, adj


def popcount(x: int) -> int:
    return bin(x).count("1")


def delta_of(n, nverts, nedges):
    return (n - 1) * nverts - (n - 2) * nedges


def induced_edges(adj, mask) -> int:
    total = 0
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        total += popcount(adj[i] & mask)
        m ^= low
    return total // 2


def removable_pieces(n, adj, mask):
    """Loose ends and clean-arc interiors of the subgraph induced on ``mask``."""
    deg = {}
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        deg[i] = popcount(adj[i] & mask)
        m ^= low
    pieces = [1 << i for i, d in deg.items() if d <= 1]
    # clean arc: path x_0 .. x_{n-1} of distinct vertices, interior valency exactly 2
    two = [i for i, d in deg.items() if d == 2]

    def walk(path):
        if len(path) == n:
            yield path
            return
        last = path[-1]
        nb = adj[last] & mask
        while nb:
            low = nb & -nb
            j = low.bit_length() - 1
            nb ^= low
            if j in path:
                continue
            inner_ok = len(path) + 1 == n or deg[j] == 2
            if inner_ok:
                yield from walk(path + [j])

    seen = set()
    for i in two:
        # start at any neighbour of a degree-2 vertex and walk through it
        nb = adj[i] & mask
        while nb:
            low = nb & -nb
            a = low.bit_length() - 1
            nb ^= low
            for path in walk([a, i]):
                inner = 0
                for v in path[1:-1]:
                    inner |= 1 << v
                if inner not in seen:
                    seen.add(inner)
                    pieces.append(inner)
    return pieces


def open_by_deletion_orders(g) -> bool:
    """Search every deletion order (memoised on the remaining vertex set)."""
    n = g.n
    vs, adj = adjacency_masks(g)

    @lru_cache(maxsize=None)
    def ok(mask):
        if mask == 0:
            return True
        return any(ok(mask & ~p) for p in removable_pieces(n, adj, mask))

    return ok((1 << len(vs)) - 1)


def open_by_subgraphs(g) -> bool:
    """Every non-empty induced subgraph has a loose end or a clean arc."""
    n = g.n
    vs, adj = adjacency_masks(g)
    return all(removable_pieces(n, adj, m) for m in range(1, 1 << len(vs)))


def strong_by_subsets(base, g) -> bool:
    """base <=_n g: no intermediate set has smaller delta than the base."""
    n = g.n
    vs, adj = adjacency_masks(g)
    idx = {v: i for i, v in enumerate(vs)}
    bmask = sum(1 << idx[v] for v in base)
    d0 = delta_of(n, popcount(bmask), induced_edges(adj, bmask))
    rest = [i for i in range(len(vs)) if not bmask >> i & 1]
    for r in range(1, len(rest) + 1):
        for T in itertools.combinations(rest, r):
            m = bmask
            for i in T:
                m |= 1 << i
            if delta_of(n, popcount(m), induced_edges(adj, m)) < d0:
                return False
    return True


def bfs(g, src):
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for a, b in g.edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in dist:
                    dist[y] = dist[u] + 1
                    q.append(y)
    return dist


def girth_brute(g):
    """Length of the shortest cycle, by deleting each edge and measuring its ends."""
    best = None
    edges = list(g.edges)
    for k, (a, b) in enumerate(edges):
        rest = type(g)(g.n, g.parts(), edges[:k] + edges[k + 1:])
        d = bfs(rest, a).get(b)
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
    return best


def longest_cycle_brute(g) -> int:
    """Longest cycle length by DFS over simple paths (tiny graphs only)."""
    vs, adj = adjacency_masks(g)
    best = 0

    def dfs(start, cur, used, length):
        nonlocal best
        nb = adj[cur]
        if length >= 3 and nb >> start & 1:
            best = max(best, length)
        while nb:
            low = nb & -nb
            j = low.bit_length() - 1
            nb ^= low
            if j > start and not used >> j & 1:
                dfs(start, j, used | low, length + 1)

    for s in range(len(vs)):
        dfs(s, s, 1 << s, 1)
    return best


def isomorphic_brute(g1, g2) -> bool:
    """Try every part-preserving bijection (at most 7 vertices per part)."""
    if len(g1) != len(g2) or g1.num_edges != g2.num_edges or g1.n != g2.n:
        return False
    by_part = {}
    for g, k in ((g1, 0), (g2, 1)):
        for v in g.vertices:
            by_part.setdefault(g.part(v), ([], []))[k].append(v)
    if any(len(a) != len(b) for a, b in by_part.values()):
        return False
    groups = list(by_part.values())
    e2 = {frozenset(e) for e in g2.edges}
    for perms in itertools.product(*(itertools.permutations(b) for _, b in groups)):
        m = {}
        for (a, _), p in zip(groups, perms):
            m.update(zip(a, p))
        if all(frozenset((m[a], m[b])) in e2 for a, b in g1.edges):
            return True
    return False
