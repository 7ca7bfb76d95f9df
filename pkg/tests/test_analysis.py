from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altfree.analysis import (
    alternation_length,
    alternation_witness,
    contains_pattern,
    dualize,
    is_free_ordered,
    is_pattern_free,
    lex_sort_columns,
    max_alternation,
    max_homogeneous_square,
    shattered_set,
    vc_dimension,
)
from altfree.constructions import build_prefix_union, build_tree
from altfree.core import (
    Alternates,
    BinaryMatrix,
    ContainsPattern,
    OrderedHypergraph,
    Pattern,
    incidence,
    verify_witness,
)
from altfree.corpus import corpus_entry
from altfree.search import find_free_ordering
from oracles import alternation_dp, brute_homogeneous, brute_vc, naive_contains
from strategies import hypergraphs, matrices

INTERLEAVED = OrderedHypergraph(4, ((0, 2), (1, 3)))


# ---------------------------------------------------------------------------
# alternation

def test_alternation_interleaved():
    assert alternation_length(INTERLEAVED, 0, 1) == 4
    assert alternation_length(INTERLEAVED, 1, 0) == 3


def test_alternation_duplicate_edges_is_zero():
    h = OrderedHypergraph(3, ((0, 2), (0, 2)))
    assert alternation_length(h, 0, 1) == 0


def test_alternation_cex1_against_added_pair():
    h = corpus_entry("cex1").hypergraph
    assert h.edges[1] == (0, 2, 5)
    g = h.with_edge((1, 3))
    assert alternation_witness(g, 1, g.n_edges - 1) == (0, 1, 2, 3, 5)


def test_alternation_bad_indices():
    with pytest.raises(IndexError):
        alternation_length(INTERLEAVED, 0, 2)
    with pytest.raises(ValueError):
        alternation_length(INTERLEAVED, 1, 1)


@settings(max_examples=300)
@given(st.integers(0, 10).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(0, max(n - 1, 0))), st.sets(st.integers(0, max(n - 1, 0))))))
def test_alternation_matches_dp(case):
    n, a, b = case
    a, b = {v for v in a if v < n}, {v for v in b if v < n}
    h = OrderedHypergraph(n, (tuple(a), tuple(b)))
    assert alternation_length(h, 0, 1) == alternation_dp(a, b, n)


def test_free_single_edge():
    assert is_free_ordered(OrderedHypergraph(3, ((0, 1, 2),)), 1).is_free


def test_not_free_with_witness():
    rep = is_free_ordered(INTERLEAVED, 4)
    assert not rep
    assert rep.witness.vertices == (0, 1, 2, 3)
    assert verify_witness(INTERLEAVED, Alternates(4), rep.witness)


def test_cex1_free_at_five():
    h = corpus_entry("cex1").hypergraph
    assert is_free_ordered(h, 5).is_free
    assert not is_free_ordered(h, 4).is_free


@given(hypergraphs(max_n=8, max_m=5), st.integers(1, 6))
def test_free_report_witness_verifies(h, t):
    rep = is_free_ordered(h, t)
    assert rep.is_free == (max_alternation(h) < t)
    if not rep.is_free:
        assert len(rep.witness.vertices) == t
        assert verify_witness(h, Alternates(t), rep.witness)


# ---------------------------------------------------------------------------
# pattern containment

def test_pattern_equal_to_matrix():
    m = BinaryMatrix.from_rows([[0, 1, 0], [1, 0, 1]])
    w = contains_pattern(m, Pattern.XT(3))
    assert (w.rows, w.cols) == ((0, 1), (0, 1, 2))


@pytest.mark.parametrize("name", ["K4", "M23"])
def test_printed_matrices_avoid_xt3(name):
    assert contains_pattern(corpus_entry(name).matrix, Pattern.XT(3)) is None


def test_induced_zeroes_must_match():
    assert contains_pattern(BinaryMatrix.from_rows([[1, 1, 1], [1, 0, 1]]), Pattern.XT(3)) is None


def test_lexicographic_first_witness():
    m = BinaryMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    w = contains_pattern(m, Pattern.XT(3))
    assert (w.rows, w.cols) == ((0, 1), (1, 2, 3))


@settings(max_examples=300)
@given(matrices(max_rows=6, max_cols=6), matrices(max_rows=3, max_cols=3))
def test_pattern_matches_naive(m, p):
    w = contains_pattern(m, p)
    want = naive_contains(m.entries, p.entries)
    assert (None if w is None else (w.rows, w.cols)) == want
    if w is not None:
        assert verify_witness(m, ContainsPattern(Pattern(p)), w)


@settings(max_examples=200)
@given(matrices(max_rows=7, max_cols=7), st.integers(2, 4), st.sampled_from(["X", "Xp", "XT", "XpT"]))
def test_named_patterns_match_naive(m, t, kind):
    p = getattr(Pattern, kind)(t)
    w = contains_pattern(m, p)
    want = naive_contains(m.entries, p.matrix.entries)
    assert (None if w is None else (w.rows, w.cols)) == want


@given(hypergraphs(max_n=8, max_m=6), st.integers(2, 5))
def test_transposed_incidence_xt_tracks_alternation(h, t):
    # rows i < j of the transpose hold XT(t) iff edge j alternates t times against i
    mt = incidence(h).T
    masks_pairs = [(i, j) for i, j in combinations(range(h.n_edges), 2)]
    forward = any(alternation_length(h, j, i) >= t for i, j in masks_pairs)
    backward = any(alternation_length(h, i, j) >= t for i, j in masks_pairs)
    assert (contains_pattern(mt, Pattern.XT(t)) is not None) == forward
    assert (contains_pattern(mt, Pattern.XpT(t)) is not None) == backward
    assert is_pattern_free(mt, Pattern.XT(t), Pattern.XpT(t)) == is_free_ordered(h, t).is_free


# ---------------------------------------------------------------------------
# column sort

def test_lex_sort_two_columns():
    s, perm = lex_sort_columns(BinaryMatrix.from_rows([[1, 0], [0, 1]]))
    assert s.tolist() == [[0, 1], [1, 0]]
    assert perm == (1, 0)


def test_lex_sort_identical_columns_stable():
    m = BinaryMatrix.from_rows([[1, 1, 1], [0, 0, 0]])
    for desc in (False, True):
        s, perm = lex_sort_columns(m, descending=desc)
        assert s == m and perm == (0, 1, 2)


@given(matrices(), st.randoms(use_true_random=False))
def test_lex_sort_ignores_prior_column_order(m, rnd):
    perm = list(range(m.n_cols))
    rnd.shuffle(perm)
    assert lex_sort_columns(m.permute(cols=perm))[0] == lex_sort_columns(m)[0]


def _free_rows(h, t):
    order = find_free_ordering(h, t)
    return None if order is None else incidence(h.reorder_vertices(order.vertices))


def test_sort_direction_on_k4_dual():
    # ascending order leaves an X_3, only the 1-before-0 order removes it
    m = _free_rows(dualize(corpus_entry("K4").hypergraph), 4)
    assert is_pattern_free(m, Pattern.X(4), Pattern.Xp(4))
    up, _ = lex_sort_columns(m)
    down, _ = lex_sort_columns(m, descending=True)
    assert contains_pattern(up, Pattern.X(3)) is not None
    assert contains_pattern(up, Pattern.Xp(3)) is None
    assert contains_pattern(down, Pattern.X(3)) is None


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=7, max_m=5), st.integers(3, 4))
def test_sort_removes_short_pattern(h, t):
    m = _free_rows(h, t)
    if m is None:
        return
    assert contains_pattern(lex_sort_columns(m)[0], Pattern.Xp(t - 1)) is None
    assert contains_pattern(lex_sort_columns(m, descending=True)[0], Pattern.X(t - 1)) is None


# ---------------------------------------------------------------------------
# dual

def test_dualize_small():
    h = OrderedHypergraph(3, ((0, 1), (2,)))
    assert dualize(h) == OrderedHypergraph(2, ((0,), (0,), (1,)))


def test_dualize_m23_involution():
    h = corpus_entry("M23").hypergraph
    assert dualize(dualize(h)) == h


def test_dual_of_k4():
    d = dualize(corpus_entry("K4").hypergraph)
    assert d.n_vertices == 6
    assert d.edge_sizes() == [3, 3, 3, 3]


@given(hypergraphs())
def test_dualize_transposes(h):
    assert incidence(dualize(h)) == incidence(h).T


# ---------------------------------------------------------------------------
# VC dimension

def test_vc_power_set():
    edges = tuple(c for k in range(4) for c in combinations(range(3), k))
    assert vc_dimension(OrderedHypergraph(3, edges)) == 3


def test_vc_single_edge():
    assert vc_dimension(OrderedHypergraph(4, ((0, 2),))) == 0


def test_vc_prefix_union_bounded():
    h = build_prefix_union(4, 3)
    assert vc_dimension(h) <= 2
    assert vc_dimension(h, cap=1) == 1
    with pytest.raises(ValueError):
        vc_dimension(h, cap=5)


@given(hypergraphs(max_n=6, max_m=8))
def test_vc_matches_brute(h):
    s = shattered_set(h)
    assert len(s) == brute_vc(h.edges, h.n_vertices)


@pytest.mark.parametrize("n,t", [(6, 3), (7, 4), (8, 5)])
def test_vc_at_most_t_minus_one(n, t):
    assert vc_dimension(build_prefix_union(n, t)) <= t - 1


# ---------------------------------------------------------------------------
# homogeneous blocks

def test_homog_all_ones():
    b = max_homogeneous_square(BinaryMatrix.from_rows([[1] * 4] * 4))
    assert (b.size, b.value, b.exact) == (4, 1, True)


def test_homog_identity():
    b = max_homogeneous_square(BinaryMatrix.from_rows(np.eye(3, dtype=int).tolist()))
    assert b.size == 1
    assert (b.value, b.rows, b.cols) == (0, (0,), (1,))


def test_homog_k4():
    m = corpus_entry("K4").matrix
    b = max_homogeneous_square(m)
    assert b.size == brute_homogeneous(m.entries)
    block = m.entries[np.ix_(b.rows, b.cols)]
    assert (block == b.value).all()


def test_homog_greedy_is_labelled():
    m = incidence(build_tree(2, 3))
    b = max_homogeneous_square(m, exact_limit=2)
    assert not b.exact
    assert (m.entries[np.ix_(b.rows, b.cols)] == b.value).all()
    assert 1 <= b.size <= max_homogeneous_square(m).size


def test_homog_empty():
    assert max_homogeneous_square(BinaryMatrix.zeros(0, 3)).size == 0


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=8, max_cols=8))
def test_homog_matches_brute(m):
    b = max_homogeneous_square(m)
    assert b.exact
    assert b.size == brute_homogeneous(m.entries)
    if b.size:
        assert len(b.rows) == len(b.cols) == b.size
        assert (m.entries[np.ix_(b.rows, b.cols)] == b.value).all()


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=6, max_cols=5))
def test_homog_witness_is_lex_first(m):
    b = max_homogeneous_square(m)
    k = b.size
    if not k:
        return
    e = m.entries
    best = min((v, rows, cols)
               for v in (0, 1)
               for rows in combinations(range(m.n_rows), k)
               for cols in combinations(range(m.n_cols), k)
               if (e[np.ix_(rows, cols)] == v).all())
    assert (b.value, b.rows, b.cols) == best
