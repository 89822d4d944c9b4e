import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from gonlab import random_hf_graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SEED = int(os.environ.get("GON_TEST_SEED", "20240611"))

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture
def rng():
    return random.Random(SEED)


@st.composite
def hf_graphs(draw, ns=(3, 4), max_vertices=12, arc_bias=0.5, relative=False):
    """Open graphs grown by random loose ends and clean arcs."""
    n = draw(st.sampled_from(ns))
    size = draw(st.integers(1, max_vertices))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_hf_graph(random.Random(seed), n, size, arc_bias, relative)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
