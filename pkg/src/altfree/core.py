"""Domain types: 0/1 matrices, ordered hypergraphs, named patterns and witnesses.

Vertices and edges are 0-based everywhere in the library.  Only the file
formats and the CLI output switch to 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np


class WitnessError(ValueError):
    """A witness is malformed: wrong variant, bad indices, not increasing."""


# ---------------------------------------------------------------------------
# bit helpers

def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def greedy_alternation(first: int, second: int, limit: int | None = None) -> list[int]:
    """Longest alternating chain first-only, second-only, first-only, ...

    ``first`` and ``second`` are bitmasks over positions.  Taking the
    earliest admissible position each time is optimal, so one scan is enough.
    Stops early once ``limit`` positions are collected.
    """
    want, other = first & ~second, second & ~first
    chain: list[int] = []
    floor = 0
    while True:
        avail = want & ~((1 << floor) - 1)
        if not avail:
            return chain
        pos = (avail & -avail).bit_length() - 1
        chain.append(pos)
        if limit is not None and len(chain) >= limit:
            return chain
        floor = pos + 1
        want, other = other, want


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """Rectangular 0/1 matrix with meaningful row and column order."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries)
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("matrix entries must be 0 or 1")
        arr = arr.astype(np.uint8, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "BinaryMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(np.zeros((0, n_cols or 0), dtype=np.uint8))
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(np.array(rows, dtype=np.uint8).reshape(len(rows), width))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinaryMatrix":
        return cls.from_rows([[int(ch) for ch in line] for line in lines])

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinaryMatrix":
        return cls(np.zeros((n_rows, n_cols), dtype=np.uint8))

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, idx):
        return int(self.entries[idx])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, r)) for r in self.entries.tolist())
        return f"BinaryMatrix({self.n_rows}x{self.n_cols}: [{body}])"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def to_strings(self) -> list[str]:
        return ["".join(map(str, row)) for row in self.entries.tolist()]

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Row r as a bitmask over column indices."""
        return tuple(mask_of(np.flatnonzero(row).tolist()) for row in self.entries)

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        """Column c as a bitmask over row indices."""
        return tuple(mask_of(np.flatnonzero(col).tolist()) for col in self.entries.T)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.entries.T)

    @property
    def T(self) -> "BinaryMatrix":
        return self.transpose()

    def permute(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "BinaryMatrix":
        """New matrix whose i-th row is old row ``rows[i]`` (same for columns)."""
        arr = self.entries
        if rows is not None:
            arr = arr[list(rows), :] if len(rows) else arr[:0, :]
        if cols is not None:
            arr = arr[:, list(cols)] if len(cols) else arr[:, :0]
        return BinaryMatrix(arr)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "BinaryMatrix":
        return BinaryMatrix(self.entries[np.ix_(list(rows), list(cols))].reshape(len(rows), len(cols)))


# ---------------------------------------------------------------------------
# hypergraphs

@dataclass(frozen=True)
class OrderedHypergraph:
    """Vertices ``0..n_vertices-1`` in index order plus a list of edges.

    Edges are kept as sorted tuples in list order; duplicates are legal.
    """

    n_vertices: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        norm = []
        for i, e in enumerate(self.edges):
            s = tuple(sorted(set(int(v) for v in e)))
            if s and (s[0] < 0 or s[-1] >= self.n_vertices):
                raise ValueError(f"edge {i} has a vertex outside 0..{self.n_vertices - 1}")
            norm.append(s)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def dedupe(self) -> "OrderedHypergraph":
        """Drop repeated edges, keeping first occurrences (set semantics, opt-in)."""
        seen: set[tuple[int, ...]] = set()
        kept = []
        for e in self.edges:
            if e not in seen:
                seen.add(e)
                kept.append(e)
        return OrderedHypergraph(self.n_vertices, tuple(kept))

    def with_edge(self, edge: Iterable[int]) -> "OrderedHypergraph":
        return OrderedHypergraph(self.n_vertices, self.edges + (tuple(edge),))

    def reorder_vertices(self, order: Sequence[int]) -> "OrderedHypergraph":
        """Relabel so that old vertex ``order[p]`` becomes vertex ``p``."""
        if sorted(order) != list(range(self.n_vertices)):
            raise ValueError("order must be a permutation of the vertices")
        pos = {v: p for p, v in enumerate(order)}
        return OrderedHypergraph(self.n_vertices, tuple(tuple(pos[v] for v in e) for e in self.edges))

    def reorder_edges(self, order: Sequence[int]) -> "OrderedHypergraph":
        if sorted(order) != list(range(self.n_edges)):
            raise ValueError("order must be a permutation of the edges")
        return OrderedHypergraph(self.n_vertices, tuple(self.edges[i] for i in order))


def incidence(h: OrderedHypergraph) -> BinaryMatrix:
    """Rows are vertices, columns are edges, entry 1 iff the vertex lies in the edge."""
    arr = np.zeros((h.n_vertices, h.n_edges), dtype=np.uint8)
    for j, e in enumerate(h.edges):
        arr[list(e), j] = 1
    return BinaryMatrix(arr)


def from_incidence(m: BinaryMatrix) -> OrderedHypergraph:
    edges = tuple(tuple(np.flatnonzero(col).tolist()) for col in m.entries.T)
    return OrderedHypergraph(m.n_rows, edges)


# ---------------------------------------------------------------------------
# patterns

@dataclass(frozen=True)
class Pattern:
    matrix: BinaryMatrix
    name: str | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    @classmethod
    def X(cls, t: int) -> "Pattern":
        """t x 2; odd rows (1-based) are (0, 1), even rows (1, 0)."""
        if t < 1:
            raise ValueError("t must be at least 1")
        rows = [(0, 1) if i % 2 == 0 else (1, 0) for i in range(t)]
        return cls(BinaryMatrix.from_rows(rows), f"X{t}")

    @classmethod
    def Xp(cls, t: int) -> "Pattern":
        m = cls.X(t).matrix
        return cls(m.permute(cols=[1, 0]), f"X{t}p")

    @classmethod
    def XT(cls, t: int) -> "Pattern":
        return cls(cls.X(t).matrix.T, f"X{t}T")

    @classmethod
    def XpT(cls, t: int) -> "Pattern":
        return cls(cls.Xp(t).matrix.T, f"X{t}pT")

    @classmethod
    def named(cls, name: str) -> "Pattern":
        """Parse ``X3``, ``X3p``, ``X3T``, ``X3pT`` and so on."""
        import re

        m = re.fullmatch(r"X(\d+)(p?)(T?)", name)
        if not m:
            raise ValueError(f"unknown pattern name {name!r}")
        t = int(m.group(1))
        key = (bool(m.group(2)), bool(m.group(3)))
        build = {(False, False): cls.X, (True, False): cls.Xp,
                 (False, True): cls.XT, (True, True): cls.XpT}[key]
        return build(t)


# ---------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class AlternationWitness:
    """Vertices a1 < b1 < a2 < ... ; ``edges`` optionally names the (A, B) pair."""

    vertices: tuple[int, ...]
    edges: tuple[int, int] | None = None
    kind: str = field(default="alternation", init=False)


@dataclass(frozen=True)
class PatternWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    kind: str = field(default="pattern", init=False)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    kind: str = field(default="coloring", init=False)


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    kind: str = field(default="hitting_set", init=False)


@dataclass(frozen=True)
class Subset:
    """A vertex subset proposed as a new edge (unsplittable pair, triple, ...)."""

    vertices: tuple[int, ...]
    kind: str = field(default="subset", init=False)


@dataclass(frozen=True)
class Ordering:
    """``vertices[p]`` is the vertex placed at position p; likewise ``edges``."""

    vertices: tuple[int, ...] | None = None
    edges: tuple[int, ...] | None = None
    kind: str = field(default="ordering", init=False)


Witness = Union[AlternationWitness, PatternWitness, Coloring, HittingSet, Subset, Ordering]


# claims a witness can certify

@dataclass(frozen=True)
class Alternates:
    """Edges ``edges`` (or the pair stored in the witness) form a length-t alternation."""

    t: int
    edges: tuple[int, int] | None = None


@dataclass(frozen=True)
class ContainsPattern:
    pattern: Pattern


@dataclass(frozen=True)
class ProperColoring:
    colors: int
    min_size: int = 1


@dataclass(frozen=True)
class ShallowHitting:
    depth: int


@dataclass(frozen=True)
class FreeOrdering:
    t: int


@dataclass(frozen=True)
class DualFreeOrdering:
    """Row/column orders under which the incidence matrix avoids X_{t-1}^T."""

    t: int


@dataclass(frozen=True)
class Unsplittable:
    t: int
    edge: int


Claim = Union[Alternates, ContainsPattern, ProperColoring, ShallowHitting,
              FreeOrdering, DualFreeOrdering, Unsplittable]

_EXPECTED = {
    Alternates: (OrderedHypergraph, AlternationWitness),
    ContainsPattern: (BinaryMatrix, PatternWitness),
    ProperColoring: (OrderedHypergraph, Coloring),
    ShallowHitting: (OrderedHypergraph, HittingSet),
    FreeOrdering: (OrderedHypergraph, Ordering),
    DualFreeOrdering: (OrderedHypergraph, Ordering),
    Unsplittable: (OrderedHypergraph, Subset),
}


def _check_indices(values: Sequence[int], bound: int, what: str, increasing: bool) -> None:
    for v in values:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < bound:
            raise WitnessError(f"{what} index {v!r} out of range 0..{bound - 1}")
    if increasing and any(a >= b for a, b in zip(values, values[1:])):
        raise WitnessError(f"{what} indices not strictly increasing: {tuple(values)}")


def _check_permutation(values: Sequence[int] | None, n: int, what: str) -> None:
    if values is None or sorted(values) != list(range(n)):
        raise WitnessError(f"{what} ordering is not a permutation of 0..{n - 1}")


def _max_pair_alternation(masks: Sequence[int], limit: int) -> int:
    best = 0
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j:
                best = max(best, len(greedy_alternation(a, b, limit)))
    return best


def verify_witness(obj, claim, w) -> bool:
    """True iff ``w`` certifies ``claim`` about ``obj``.

    Malformed witnesses raise :class:`WitnessError` instead of returning False.
    """
    try:
        obj_type, w_type = _EXPECTED[type(claim)]
    except KeyError:
        raise WitnessError(f"unknown claim {claim!r}") from None
    if not isinstance(w, w_type):
        raise WitnessError(f"{type(claim).__name__} needs a {w_type.__name__}, got {type(w).__name__}")
    if not isinstance(obj, obj_type):
        raise WitnessError(f"{type(claim).__name__} is a claim about a {obj_type.__name__}")

    if isinstance(claim, Alternates):
        pair = claim.edges if claim.edges is not None else w.edges
        if pair is None:
            raise WitnessError("alternation witness does not name an edge pair")
        _check_indices(pair, obj.n_edges, "edge", increasing=False)
        _check_indices(w.vertices, obj.n_vertices, "vertex", increasing=True)
        i, j = pair
        if i == j or len(w.vertices) != claim.t:
            return False
        a, b = set(obj.edges[i]), set(obj.edges[j])
        for pos, v in enumerate(w.vertices):
            here, there = (a, b) if pos % 2 == 0 else (b, a)
            if v not in here or v in there:
                return False
        return True

    if isinstance(claim, ContainsPattern):
        p = claim.pattern.matrix
        _check_indices(w.rows, obj.n_rows, "row", increasing=True)
        _check_indices(w.cols, obj.n_cols, "column", increasing=True)
        if (len(w.rows), len(w.cols)) != p.shape:
            return False
        return obj.submatrix(w.rows, w.cols) == p

    if isinstance(claim, ProperColoring):
        if len(w.colors) != obj.n_vertices:
            raise WitnessError("coloring length differs from the vertex count")
        for c in w.colors:
            if not 0 <= c < claim.colors:
                raise WitnessError(f"color {c} outside 0..{claim.colors - 1}")
        return all(len({w.colors[v] for v in e}) >= 2
                   for e in obj.edges if len(e) >= claim.min_size)

    if isinstance(claim, ShallowHitting):
        _check_indices(sorted(w.vertices), obj.n_vertices, "vertex", increasing=True)
        chosen = set(w.vertices)
        return all(1 <= len(chosen.intersection(e)) <= claim.depth for e in obj.edges)

    if isinstance(claim, FreeOrdering):
        _check_permutation(w.vertices, obj.n_vertices, "vertex")
        h = obj.reorder_vertices(w.vertices)
        return _max_pair_alternation(h.edge_masks, claim.t) < claim.t

    if isinstance(claim, DualFreeOrdering):
        _check_permutation(w.vertices, obj.n_vertices, "vertex")
        _check_permutation(w.edges, obj.n_edges, "edge")
        m = incidence(obj).permute(rows=w.vertices, cols=w.edges)
        # X^T_{t-1} on rows u < v: a column in v only, then u only, ...
        need = claim.t - 1
        rows = m.row_masks
        for u in range(len(rows)):
            for v in range(u + 1, len(rows)):
                if len(greedy_alternation(rows[v], rows[u], need)) >= need:
                    return False
        return True

    if isinstance(claim, Unsplittable):
        _check_indices([claim.edge], obj.n_edges, "edge", increasing=False)
        _check_indices(sorted(w.vertices), obj.n_vertices, "vertex", increasing=True)
        if not set(w.vertices) <= set(obj.edges[claim.edge]):
            return False
        grown = obj.with_edge(w.vertices)
        new = grown.edge_masks[-1]
        return all(len(greedy_alternation(new, f, claim.t)) < claim.t
                   and len(greedy_alternation(f, new, claim.t)) < claim.t
                   for f in grown.edge_masks[:-1])

    raise WitnessError(f"unhandled claim {claim!r}")  # pragma: no cover
