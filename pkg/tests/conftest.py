import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cospec.core import build_graph  # noqa: E402
from cospec.fixtures import fixture_partition, load_fixture  # noqa: E402


@pytest.fixture(scope="session")
def gm8():
    return load_fixture("signed_gm_8")


@pytest.fixture(scope="session")
def gm8_partition():
    return fixture_partition("signed_gm_8")


@pytest.fixture(scope="session")
def ggm8():
    return load_fixture("unsigned_ggm_8")


@pytest.fixture(scope="session")
def ggm8_partition():
    return fixture_partition("unsigned_ggm_8")


@pytest.fixture(scope="session")
def ggm14():
    return load_fixture("signed_ggm_14")


@pytest.fixture(scope="session")
def ggm14_partition():
    return fixture_partition("signed_ggm_14")


@st.composite
def signed_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    signs = draw(st.lists(st.sampled_from([0, 1, -1]), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs) if s])


@st.composite
def graph_and_subset(draw, max_n=7):
    g = draw(signed_graphs(max_n=max_n))
    u = draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    return g, u
