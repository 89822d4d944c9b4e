import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from conftest import hf_graphs
from gonlab import (
    HFCertificate, IncidenceGraph, Part, Verdict, check_nondegenerate, check_partial, check_thick, check_weak,
    cl_closure, clean_arcs, cycle_graph, fano, find_closed_sets, gamma_k, is_closed_over, is_open, is_open_over,
    loose_ends, path_graph, random_bipartite, verify_hf_certificate,
)
from gonlab.polygon import AddCleanArc, AddLooseEnd, connected_subsets
from oracles import adjacency_masks, bfs, open_by_deletion_orders, open_by_subgraphs, removable_pieces


def test_fano_is_a_thick_weak_3gon():
    g = fano()
    assert check_partial(g) and check_weak(g) and check_thick(g)
    assert check_nondegenerate(g).verdict is Verdict.YES


def test_hexagon_is_thin():
    h = cycle_graph(3, 6)
    assert check_weak(h)
    assert not check_thick(h)


def test_octagon_is_not_a_weak_3gon():
    g = cycle_graph(3, 8)
    assert check_partial(g)
    assert not check_weak(g)
    assert not check_partial(cycle_graph(4, 6))


def test_partial_reports_disconnection():
    g = IncidenceGraph(3, {"a": Part.POINT, "b": Part.LINE})
    rep = check_partial(g)
    assert not rep and rep.failures[0][0] == "connected"


def test_nondegenerate_witnesses():
    p = check_nondegenerate(gamma_k(3, 6))
    assert p.verdict is Verdict.YES and p.kind == "path" and len(p.witness) == 7
    c = check_nondegenerate(cycle_graph(3, 8))
    assert c.verdict is Verdict.YES and c.kind == "cycle"
    assert check_nondegenerate(cycle_graph(3, 6)).verdict is Verdict.NO
    assert check_nondegenerate(gamma_k(3, 5)).verdict is Verdict.NO


def _pieces(g):
    vs, adj = adjacency_masks(g)
    out = set()
    for p in removable_pieces(g.n, adj, (1 << len(vs)) - 1):
        out.add(frozenset(vs[i] for i in range(len(vs)) if p >> i & 1))
    return out


@given(st.integers(0, 10**6), st.sampled_from([3, 4, 5]))
def test_loose_ends_and_arcs_match_oracle(seed, n):
    g = random_bipartite(random.Random(seed), n, 9, 0.3)
    mine = {frozenset([v]) for v in loose_ends(g)} | {frozenset(inner) for _, inner, _ in clean_arcs(g)}
    assert mine == _pieces(g)


def test_clean_arcs_of_hexagon():
    arcs = clean_arcs(cycle_graph(3, 6))
    assert len(arcs) == 6
    assert all(a < b and len(inner) == 1 for a, inner, b in arcs)


@given(st.integers(0, 10**6), st.sampled_from([3, 4]), st.integers(1, 9))
def test_open_matches_deletion_oracle(seed, n, nverts):
    rng = random.Random(seed)
    g = random_bipartite(rng, n, nverts, rng.choice((0.2, 0.35, 0.5)))
    assert is_open(g).open == open_by_deletion_orders(g)


@given(st.integers(0, 10**6), st.sampled_from([3, 4]))
def test_deletion_orders_agree_with_subgraph_definition(seed, n):
    rng = random.Random(seed)
    g = random_bipartite(rng, n, 7, rng.choice((0.3, 0.5)))
    assert open_by_deletion_orders(g) == open_by_subgraphs(g)


def test_fano_is_not_open():
    r = is_open(fano())
    assert not r.open and len(r.stuck) == 14


@given(hf_graphs(max_vertices=14, arc_bias=0.6))
def test_certificate_replays(g):
    r = is_open(g)
    assert r.open
    assert verify_hf_certificate(r.certificate, IncidenceGraph.empty(g.n), g)
    text = r.certificate.to_text()
    assert HFCertificate.from_text(text) == r.certificate


def test_tampered_certificate_fails():
    g = cycle_graph(3, 8)
    cert = is_open(g).certificate
    steps = list(cert.steps)
    steps[0], steps[-1] = steps[-1], steps[0]
    bad = HFCertificate(cert.n, cert.base, tuple(steps))
    assert not verify_hf_certificate(bad, IncidenceGraph.empty(3), g)
    assert not verify_hf_certificate(HFCertificate(3, cert.base, cert.steps[:-1]), IncidenceGraph.empty(3), g)


def test_certificate_step_types():
    cert = is_open(cycle_graph(3, 6)).certificate
    kinds = {type(s) for s in cert.steps}
    assert kinds <= {AddLooseEnd, AddCleanArc}
    assert AddCleanArc in kinds


def test_relative_openness():
    h = cycle_graph(3, 6)
    edge = frozenset({"x0", "x1"})
    assert is_open_over(frozenset(h.vertices) - edge, edge, h).open
    f = fano()
    line = frozenset({"l1", "p1", "p2", "p3"})
    assert not is_open_over(frozenset(f.vertices) - line, line, f).open


def test_closedness():
    h = cycle_graph(3, 6)
    edge = frozenset({"x0", "x1"})
    # the rest of the hexagon contains clean arcs, so it is not closed over the edge
    assert not is_closed_over(frozenset(h.vertices) - edge, edge, h)
    f = fano()
    flag = frozenset({"p1", "l1"})
    assert is_closed_over(frozenset(f.vertices) - flag, flag, f)


@given(hf_graphs(max_vertices=10))
def test_open_graph_has_no_closed_extension(g):
    # in an open graph nothing non-empty is closed over the empty set
    assert find_closed_sets(frozenset(), g, size_cap=6) == []


def test_closure_in_fano():
    f = fano()
    res = cl_closure({"p1", "l1"}, f, size_cap=14)
    assert res.converged and res.vertices == frozenset(f.vertices)


@given(hf_graphs(max_vertices=12))
def test_hereditary(g):
    # every induced subgraph of an open graph is open
    rng = random.Random(len(g))
    keep = [v for v in g.vertices if rng.random() < 0.6]
    assert is_open(g.induced(keep)).open


def test_path_open_and_partial():
    p = path_graph(4, 9)
    assert is_open(p).open and check_partial(p)


@given(st.integers(0, 10**6))
def test_connected_subsets_match_brute(seed):
    g = random_bipartite(random.Random(seed), 3, 8, 0.35)
    got = list(connected_subsets(g, g.vertices, 4))
    assert len(got) == len(set(got))
    brute = set()
    for r in range(1, 5):
        for S in itertools.combinations(g.vertices, r):
            if set(bfs(g.induced(S), S[0])) == set(S):
                brute.add(frozenset(S))
    assert set(got) == brute
