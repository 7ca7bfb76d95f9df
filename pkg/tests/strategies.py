"""Hypothesis strategies for small hypergraphs and matrices."""

from hypothesis import strategies as st

from altfree.core import BinaryMatrix, OrderedHypergraph


@st.composite
def hypergraphs(draw, max_n=7, max_m=5, min_n=0, nonempty=False):
    n = draw(st.integers(min_n, max_n))
    lo = 1 if nonempty and n else 0
    edge = st.sets(st.integers(0, n - 1), min_size=lo, max_size=n) if n else st.just(set())
    edges = draw(st.lists(edge, max_size=max_m))
    if nonempty and not n:
        edges = []
    return OrderedHypergraph(n, tuple(tuple(sorted(e)) for e in edges))


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return BinaryMatrix.from_rows(rows, n_cols=c)
