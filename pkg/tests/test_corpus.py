import pytest

from altfree.analysis import contains_pattern, is_free_ordered
from altfree.core import BinaryMatrix, Pattern
from altfree.corpus import (
    ROWS_ARE_EDGES,
    ROWS_ARE_VERTICES,
    corpus_entry,
    labeled_row_report,
    paper_corpus,
    shipped_matrix,
    verify_entry,
)
from altfree.search import proper_coloring


def test_five_entries_with_shapes():
    shapes = {e.name: (e.matrix.shape, e.orientation) for e in paper_corpus()}
    assert shapes == {
        "K4": ((4, 6), ROWS_ARE_VERTICES),
        "M23": ((7, 7), ROWS_ARE_VERTICES),
        "cex1": ((7, 9), ROWS_ARE_EDGES),
        "cex2": ((5, 9), ROWS_ARE_EDGES),
        "cex3": ((11, 10), ROWS_ARE_EDGES),
    }


@pytest.mark.parametrize("entry", paper_corpus(), ids=lambda e: e.name)
def test_shipped_file_equals_constant(entry):
    assert shipped_matrix(entry.filename) == entry.matrix


@pytest.mark.parametrize("entry", paper_corpus(), ids=lambda e: e.name)
def test_every_claim_holds(entry):
    for claim, ok, detail in verify_entry(entry):
        assert ok, f"{entry.name}: {claim.describe()} [{detail}]"


@pytest.mark.parametrize("name,t", [("cex1", 5), ("cex2", 5), ("cex3", 6)])
def test_counterexamples_free_in_both_readings(name, t):
    e = corpus_entry(name)
    assert is_free_ordered(e.hypergraph, t).is_free
    assert contains_pattern(e.matrix, Pattern.XT(t)) is None
    assert contains_pattern(e.matrix, Pattern.XpT(t)) is None
    # tight: one step shorter is already present
    assert not is_free_ordered(e.hypergraph, t - 1).is_free


def test_cex1_labels_all_split():
    rep = labeled_row_report(corpus_entry("cex1"), 5)
    assert [lab for _, lab, _ in rep] == [(2, 4), (2, 6), (2, 8), (4, 6), (4, 8), (6, 8)]
    assert all(ok for *_, ok in rep)


def test_k4_hypergraph_is_the_complete_graph():
    h = corpus_entry("K4").hypergraph
    assert sorted(h.edges) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert proper_coloring(h, 3, 2) is None


def test_rows_are_edges_reading():
    e = corpus_entry("cex2")
    assert e.hypergraph.n_vertices == 9 and e.hypergraph.n_edges == 5
    assert e.incidence == e.matrix.T
    assert e.hypergraph.edges[0] == (1, 3, 5, 7)


def test_unknown_entry():
    with pytest.raises(KeyError):
        corpus_entry("nope")


def test_claims_describe_themselves():
    text = [c.describe() for c in corpus_entry("K4").claims]
    assert "contains_pattern(pattern=X3T) -> None" in text


def test_matrix_constant_is_bits():
    assert isinstance(corpus_entry("M23").matrix, BinaryMatrix)
