import random

import pytest

from gonlab import (
    WitnessBundle, acl_dcl_witness, complete, delta, extend_along_provenance, gamma_k, girth, is_open,
    ladder_prefix,
)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_acl_dcl_assertions(n):
    b = acl_dcl_witness(n)
    assert b.ok and b.recheck() == b.assertions
    assert girth(b.graph) >= 2 * n


def test_acl_dcl_sizes():
    b = acl_dcl_witness(3)
    assert (len(b.graph), b.graph.num_edges) == (12, 16)
    assert len(b.sets["midpoints"]) == 4
    b4 = acl_dcl_witness(4)
    assert len(b4.sets["midpoints"]) == 4 and len(b4.sets["A"]) == 8


def test_automorphism_is_checked(tmp_path):
    b = acl_dcl_witness(5)
    bad = dict(b.maps["automorphism"])
    x0, x1 = "x0", "x1"
    bad[x0], bad[x1] = bad[x1], bad[x0]
    b.maps["automorphism"] = bad
    names = [k for k, v in b.recheck() if not v]
    assert "automorphism" in names


@pytest.mark.parametrize("n", [3, 4, 5])
def test_bundle_round_trip(tmp_path, n):
    b = acl_dcl_witness(n)
    b.write(tmp_path)
    back = WitnessBundle.read(tmp_path)
    assert back.graph == b.graph and back.sets == b.sets
    assert back.assertions == b.assertions
    assert all(v for _, v in back.recheck())


def test_small_n_rejected():
    with pytest.raises(ValueError):
        acl_dcl_witness(2)


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("rungs", [0, 1, 2])
def test_ladder(n, rungs):
    b = ladder_prefix(n, rungs)
    assert b.ok
    assert is_open(b.graph).open
    for i in range(1, rungs + 1):
        lam = b.sets[f"lambda{i}"]
        assert len(lam) - 1 >= n - 1


def test_ladder_depth_and_budget():
    b = ladder_prefix(5, 2)
    assert int(b.params["depth"]) == 2
    with pytest.raises(ValueError):
        ladder_prefix(3, 2, stage_budget=1)
    with pytest.raises(ValueError):
        ladder_prefix(3, -1)


def test_ladder_round_trip(tmp_path):
    b = ladder_prefix(4, 2)
    b.write(tmp_path)
    back = WitnessBundle.read(tmp_path)
    assert all(v for _, v in back.recheck())


def test_extension_along_provenance():
    t = complete(gamma_k(3, 6), 3)
    g = t.last
    rng = random.Random(3)
    for _ in range(40):
        A0 = rng.sample(g.vertices, 5)
        X = extend_along_provenance(g, t.seed.vertices, A0)
        assert set(A0) <= X
        assert delta(g.induced(X)) == 8
