"""Shared strategies and small named graphs for the test suite."""

from hypothesis import assume, strategies as st

from trd.families import (
    CartesianComplete,
    Complete,
    Corona,
    Cycle,
    DeadExample,
    DisjointUnion,
    Path,
    Spider,
    Star,
    generate,
)
from trd.graphs import Graph, build_graph, from_edge_mask


def cycle(n: int) -> Graph:
    return generate(Cycle(n))


def path(n: int) -> Graph:
    return generate(Path(n))


def complete(n: int) -> Graph:
    return generate(Complete(n))


def star(k: int) -> Graph:
    return generate(Star(k))


def spider(*legs: int) -> Graph:
    return generate(Spider(tuple(legs)))


def corona_complete(r: int) -> Graph:
    return generate(Corona(Complete(r)))


def union(*parts) -> Graph:
    return generate(DisjointUnion(tuple(parts)))


def rook(n: int, m: int) -> Graph:
    return generate(CartesianComplete(n, m))


def dead_example(n: int) -> Graph:
    return generate(DeadExample(n))


@st.composite
def any_graphs(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_edge_mask(n, mask)


@st.composite
def solvable_graphs(draw, min_n=2, max_n=6):
    """Random labelled graphs without isolated vertices."""
    g = draw(any_graphs(min_n, max_n))
    assume(not g.has_isolated_vertices())
    return g


@st.composite
def connected_graphs(draw, min_n=2, max_n=6):
    from trd.graphs import is_connected

    g = draw(any_graphs(min_n, max_n))
    assume(not g.has_isolated_vertices() and is_connected(g))
    return g
