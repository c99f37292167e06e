import itertools

import pytest
from hypothesis import strategies as st

import polylevel as pl


@pytest.fixture(scope="session")
def path3_hull():
    return pl.facets(pl.enumerate_bases(pl.path(3), (2, 3, 2)))


@pytest.fixture(scope="session")
def triangle_hull():
    return pl.facets(pl.enumerate_bases(pl.cycle(3), (1, 1, 1)))


@pytest.fixture(scope="session")
def k34_hull():
    return pl.facets(pl.enumerate_bases(pl.complete_bipartite(3, 4), (2,) * 7))


@pytest.fixture(scope="session")
def cube4():
    return pl.HPolytope(4, tuple(((i,), 2) for i in range(1, 5)))


@st.composite
def graph_and_bounds(draw, max_n=5, max_c=3):
    """A small simple graph without isolated vertices plus a bound vector."""
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = set(draw(st.lists(st.sampled_from(pairs), min_size=1,
                              max_size=len(pairs), unique=True)))
    covered = {v for e in edges for v in e}
    for v in range(1, n + 1):
        if v not in covered:
            edges.add((v, v % n + 1) if v < n else (1, n))
    G = pl.graph(n, edges)
    c = tuple(draw(st.integers(1, max_c)) for _ in range(n))
    return G, c
