"""The printed matrices, embedded verbatim, each with machine-checkable claims."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from altfree.analysis import contains_pattern, is_free_ordered, transpose_reading
from altfree.constructions import build_tree
from altfree.core import (
    BinaryMatrix,
    DualFreeOrdering,
    OrderedHypergraph,
    Ordering,
    Pattern,
    ProperColoring,
    from_incidence,
    incidence,
    verify_witness,
)
from altfree.search import (
    SearchBudget,
    is_dual_free,
    proper_coloring,
    splitting_edges,
    unsplittable_subset,
)

K4 = (
    "111000",
    "100011",
    "010101",
    "001110",
)

M23 = (
    "0011011",
    "1011000",
    "1000011",
    "0110000",
    "0101000",
    "0000110",
    "0000101",
)

CEX1 = (
    "010101010",
    "101001000",
    "100100110",
    "100100001",
    "111010010",
    "100001001",
    "010000101",
)
CEX1_LABELS = (None, (2, 4), (2, 6), (2, 8), (4, 6), (4, 8), (6, 8))

CEX2 = (
    "010101010",
    "100010010",
    "100001001",
    "100100001",
    "010010001",
)
CEX2_LABELS = (None, (2, 4, 6), (2, 4, 8), (2, 6, 8), (4, 6, 8))

CEX3 = (
    "0101010101",
    "0010100001",
    "0010100001",
    "1010000100",
    "0001001010",
    "1010000100",
    "1000010010",
    "0100101000",
    "0100101000",
    "0110010010",
    "0001001010",
)
CEX3_LABELS = (None, (2, 4, 6), (2, 4, 8), (2, 4, 10), (2, 6, 8), (2, 6, 10),
               (2, 8, 10), (4, 6, 8), (4, 6, 10), (4, 8, 10), (6, 8, 10))

ROWS_ARE_VERTICES = "rows-are-vertices"
ROWS_ARE_EDGES = "rows-are-edges"


@dataclass(frozen=True)
class Claim:
    """``op`` applied with ``params`` must produce ``expect``."""

    op: str
    params: dict = field(default_factory=dict)
    expect: object = None

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.op}({args}) -> {self.expect}"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    matrix: BinaryMatrix
    orientation: str
    claims: tuple[Claim, ...]
    # 1-based vertex labels printed next to each row, for rows-are-edges tables
    row_labels: tuple = ()
    filename: str = ""

    @property
    def hypergraph(self) -> OrderedHypergraph:
        if self.orientation == ROWS_ARE_EDGES:
            return transpose_reading(self.matrix)
        return from_incidence(self.matrix)

    @property
    def incidence(self) -> BinaryMatrix:
        """Rows are vertices whatever the printed orientation."""
        return self.matrix.T if self.orientation == ROWS_ARE_EDGES else self.matrix


def _alternation_table(t: int, k: int) -> list[Claim]:
    return [
        Claim("is_free_ordered", {"t": t}, True),
        Claim("contains_pattern", {"pattern": f"X{t}T"}, None),
        Claim("contains_pattern", {"pattern": f"X{t}pT"}, None),
        Claim("unsplittable_subset", {"t": t, "edge": 0, "k": k}, None),
        Claim("labeled_rows_split", {"t": t}, True),
    ]


def paper_corpus() -> list[CorpusEntry]:
    return [
        CorpusEntry(
            "K4", BinaryMatrix.from_strings(K4), ROWS_ARE_VERTICES,
            (
                Claim("contains_pattern", {"pattern": "X3T"}, None),
                Claim("proper_coloring", {"colors": 3, "min_size": 2}, None),
                Claim("proper_coloring", {"colors": 4, "min_size": 2}, "some"),
                Claim("is_dual_free", {"t": 4}, "some"),
            ),
            filename="k4.mat",
        ),
        CorpusEntry(
            "M23", BinaryMatrix.from_strings(M23), ROWS_ARE_VERTICES,
            (
                Claim("equals_tree", {"a": 2, "b": 3}, True),
                Claim("contains_pattern", {"pattern": "X3T"}, None),
                Claim("identity_dual_free", {"t": 4}, True),
                Claim("proper_coloring", {"colors": 2, "min_size": 2}, None),
            ),
            filename="m23.mat",
        ),
        CorpusEntry("cex1", BinaryMatrix.from_strings(CEX1), ROWS_ARE_EDGES,
                    tuple(_alternation_table(5, 2)), CEX1_LABELS, "cex1.mat"),
        CorpusEntry("cex2", BinaryMatrix.from_strings(CEX2), ROWS_ARE_EDGES,
                    tuple(_alternation_table(5, 3)), CEX2_LABELS, "cex2.mat"),
        CorpusEntry("cex3", BinaryMatrix.from_strings(CEX3), ROWS_ARE_EDGES,
                    tuple(_alternation_table(6, 3)), CEX3_LABELS, "cex3.mat"),
    ]


def corpus_entry(name: str) -> CorpusEntry:
    for e in paper_corpus():
        if e.name.lower() == name.lower():
            return e
    raise KeyError(name)


def shipped_matrix(filename: str) -> BinaryMatrix:
    """The copy of a corpus matrix shipped as a text file in the package."""
    text = resources.files("altfree").joinpath("data", filename).read_text()
    return BinaryMatrix.from_strings(text.splitlines())


def labeled_row_report(entry: CorpusEntry, t: int) -> list[tuple[int, tuple, bool]]:
    """For each labeled row: does it split (alternate t times with) its label?"""
    h = entry.hypergraph
    out = []
    for row, label in enumerate(entry.row_labels):
        if label is None:
            continue
        subset = [v - 1 for v in label]
        out.append((row, label, row in splitting_edges(h, t, subset)))
    return out


def evaluate_claim(entry: CorpusEntry, claim: Claim, budget: SearchBudget | None = None) -> tuple[bool, str]:
    """Run one claim; returns (holds, short detail)."""
    h = entry.hypergraph
    p = claim.params
    if claim.op == "contains_pattern":
        w = contains_pattern(entry.matrix, Pattern.named(p["pattern"]))
        got = None if w is None else (w.rows, w.cols)
        return (got is None) == (claim.expect is None), f"witness={got}"
    if claim.op == "is_free_ordered":
        rep = is_free_ordered(h, p["t"])
        return rep.is_free == claim.expect, f"free={rep.is_free}"
    if claim.op == "proper_coloring":
        col = proper_coloring(h, p["colors"], p["min_size"], budget)
        if col is not None and not verify_witness(h, ProperColoring(p["colors"], p["min_size"]), col):
            return False, "coloring failed self-verification"
        return (col is None) == (claim.expect is None), f"coloring={None if col is None else col.colors}"
    if claim.op == "is_dual_free":
        o = is_dual_free(h, p["t"], budget)
        if o is not None and not verify_witness(h, DualFreeOrdering(p["t"]), o):
            return False, "orderings failed self-verification"
        return (o is None) == (claim.expect is None), f"ordering={None if o is None else (o.vertices, o.edges)}"
    if claim.op == "identity_dual_free":
        ident = Ordering(tuple(range(h.n_vertices)), tuple(range(h.n_edges)))
        ok = verify_witness(h, DualFreeOrdering(p["t"]), ident)
        return ok == claim.expect, f"identity accepted={ok}"
    if claim.op == "equals_tree":
        same = incidence(build_tree(p["a"], p["b"])) == entry.incidence
        return same == claim.expect, f"bit-equal={same}"
    if claim.op == "unsplittable_subset":
        s = unsplittable_subset(h, p["t"], p["edge"], p["k"])
        return (s is None) == (claim.expect is None), f"subset={None if s is None else s.vertices}"
    if claim.op == "labeled_rows_split":
        rep = labeled_row_report(entry, p["t"])
        bad = [lab for _, lab, ok in rep if not ok]
        return (not bad) == claim.expect, f"non-splitting labels={bad}"
    raise ValueError(f"unknown claim op {claim.op!r}")


def verify_entry(entry: CorpusEntry, budget: SearchBudget | None = None) -> list[tuple[Claim, bool, str]]:
    return [(c, *evaluate_claim(entry, c, budget)) for c in entry.claims]
