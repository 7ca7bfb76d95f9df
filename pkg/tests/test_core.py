import pytest
from hypothesis import given

from altfree.core import (
    AlternationWitness,
    Alternates,
    BinaryMatrix,
    Coloring,
    ContainsPattern,
    DualFreeOrdering,
    FreeOrdering,
    HittingSet,
    OrderedHypergraph,
    Ordering,
    Pattern,
    PatternWitness,
    ProperColoring,
    ShallowHitting,
    WitnessError,
    from_incidence,
    greedy_alternation,
    incidence,
    mask_of,
    verify_witness,
)
from altfree.corpus import M23
from strategies import hypergraphs, matrices


def test_incidence_small():
    h = OrderedHypergraph(3, ((0, 1), (2,)))
    assert incidence(h).tolist() == [[1, 0], [1, 0], [0, 1]]


def test_incidence_no_edges():
    m = incidence(OrderedHypergraph(2, ()))
    assert m.shape == (2, 0)


def test_from_incidence_examples():
    h = from_incidence(BinaryMatrix.from_rows([[1, 0], [1, 0], [0, 1]]))
    assert h == OrderedHypergraph(3, ((0, 1), (2,)))
    assert from_incidence(BinaryMatrix.zeros(0, 0)) == OrderedHypergraph(0, ())


def test_m23_reads_as_seven_edges_of_mixed_size():
    h = from_incidence(BinaryMatrix.from_strings(M23))
    assert h.n_vertices == 7 and h.n_edges == 7
    assert sorted(h.edge_sizes()) == [2, 2, 2, 3, 3, 3, 3]


@given(hypergraphs())
def test_round_trip_hypergraph(h):
    assert from_incidence(incidence(h)) == h


@given(matrices())
def test_round_trip_matrix(m):
    assert incidence(from_incidence(m)) == m


def test_edges_are_normalized_and_validated():
    h = OrderedHypergraph(4, ((3, 1), (1, 3)))
    assert h.edges == ((1, 3), (1, 3))
    assert h.dedupe().edges == ((1, 3),)
    with pytest.raises(ValueError):
        OrderedHypergraph(3, ((0, 3),))
    assert OrderedHypergraph(3, ((1, 1),)).edges == ((1,),)


def test_reorder_vertices_places_old_vertex():
    h = OrderedHypergraph(3, ((0,), (1, 2)))
    g = h.reorder_vertices((2, 0, 1))
    assert g.edges == ((1,), (0, 2))


def test_named_patterns():
    assert Pattern.X(3).matrix.tolist() == [[0, 1], [1, 0], [0, 1]]
    assert Pattern.Xp(2).matrix.tolist() == [[1, 0], [0, 1]]
    assert Pattern.XT(3).matrix.tolist() == [[0, 1, 0], [1, 0, 1]]
    assert Pattern.named("X4pT").matrix == Pattern.Xp(4).matrix.T
    with pytest.raises(ValueError):
        Pattern.named("Y3")


@pytest.mark.parametrize("a,b,want", [
    ({0, 2}, {1, 3}, [0, 1, 2, 3]),
    ({0, 1}, {0, 1}, []),
    ({1, 3}, {0, 2}, [1, 2, 3]),
    (set(), {0}, []),
])
def test_greedy_alternation(a, b, want):
    assert greedy_alternation(mask_of(a), mask_of(b)) == want


def test_greedy_alternation_limit():
    assert greedy_alternation(mask_of({0, 2, 4}), mask_of({1, 3, 5}), 3) == [0, 1, 2]


# ---------------------------------------------------------------------------
# verify_witness

INTERLEAVED = OrderedHypergraph(4, ((0, 2), (1, 3)))


def test_alternation_witness_true():
    assert verify_witness(INTERLEAVED, Alternates(4, (0, 1)), AlternationWitness((0, 1, 2, 3)))


def test_alternation_witness_pair_from_witness():
    assert verify_witness(INTERLEAVED, Alternates(4), AlternationWitness((0, 1, 2, 3), (0, 1)))


def test_alternation_witness_false_for_wrong_side():
    assert not verify_witness(INTERLEAVED, Alternates(4, (1, 0)), AlternationWitness((0, 1, 2, 3)))
    assert not verify_witness(INTERLEAVED, Alternates(3, (0, 1)), AlternationWitness((0, 1, 2, 3)))


def test_alternation_not_increasing_is_an_error():
    with pytest.raises(WitnessError, match="increasing"):
        verify_witness(INTERLEAVED, Alternates(4, (0, 1)), AlternationWitness((0, 1, 3, 2)))


def test_out_of_range_is_an_error():
    with pytest.raises(WitnessError):
        verify_witness(INTERLEAVED, Alternates(2, (0, 1)), AlternationWitness((0, 7)))
    with pytest.raises(WitnessError):
        verify_witness(INTERLEAVED, Alternates(2, (0, 5)), AlternationWitness((0, 1)))


def test_wrong_variant_is_an_error():
    with pytest.raises(WitnessError):
        verify_witness(INTERLEAVED, Alternates(4, (0, 1)), Coloring((0, 0, 0, 0)))
    with pytest.raises(WitnessError):
        verify_witness(INTERLEAVED, ContainsPattern(Pattern.XT(2)), PatternWitness((0,), (0,)))


def test_pattern_witness():
    m = BinaryMatrix.from_rows([[0, 1, 0], [1, 0, 1]])
    claim = ContainsPattern(Pattern.XT(3))
    assert verify_witness(m, claim, PatternWitness((0, 1), (0, 1, 2)))
    assert not verify_witness(m, ContainsPattern(Pattern.XpT(3)), PatternWitness((0, 1), (0, 1, 2)))
    assert not verify_witness(m, claim, PatternWitness((0, 1), (0, 1)))


def test_coloring_witness():
    h = OrderedHypergraph(3, ((0, 1), (1, 2), (0,)))
    assert verify_witness(h, ProperColoring(2, 2), Coloring((0, 1, 0)))
    assert not verify_witness(h, ProperColoring(2, 1), Coloring((0, 1, 0)))
    assert not verify_witness(h, ProperColoring(2, 2), Coloring((0, 0, 1)))
    with pytest.raises(WitnessError):
        verify_witness(h, ProperColoring(2, 2), Coloring((0, 1)))
    with pytest.raises(WitnessError):
        verify_witness(h, ProperColoring(2, 2), Coloring((0, 2, 0)))


def test_hitting_set_witness():
    h = OrderedHypergraph(3, ((0, 1, 2), (1, 2)))
    assert verify_witness(h, ShallowHitting(1), HittingSet((1,)))
    assert not verify_witness(h, ShallowHitting(1), HittingSet((0,)))
    assert not verify_witness(h, ShallowHitting(1), HittingSet((1, 2)))


def test_ordering_witnesses():
    assert not verify_witness(INTERLEAVED, FreeOrdering(4), Ordering((0, 1, 2, 3)))
    assert verify_witness(INTERLEAVED, FreeOrdering(4), Ordering((0, 2, 1, 3)))
    with pytest.raises(WitnessError, match="permutation"):
        verify_witness(INTERLEAVED, FreeOrdering(4), Ordering((0, 0, 1, 2)))
    with pytest.raises(WitnessError):
        verify_witness(INTERLEAVED, DualFreeOrdering(3), Ordering((0, 1, 2, 3)))


def test_dual_ordering_identity():
    h = from_incidence(BinaryMatrix.from_rows([[0, 1, 0], [1, 0, 1]]))
    ident = Ordering((0, 1), (0, 1, 2))
    # the matrix itself is XT(3), and already XT(2) at columns (0, 1)
    assert not verify_witness(h, DualFreeOrdering(4), ident)
    assert not verify_witness(h, DualFreeOrdering(3), ident)
    assert verify_witness(h, DualFreeOrdering(3), Ordering((0, 1), (1, 0, 2)))
