"""Polynomial-time checks on a fixed ordering: alternations, induced patterns,
the lexicographic column sort, duals, VC dimension, homogeneous blocks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from altfree.core import (
    AlternationWitness,
    BinaryMatrix,
    OrderedHypergraph,
    Pattern,
    PatternWitness,
    bits_of,
    greedy_alternation,
    mask_of,
)


@dataclass(frozen=True)
class FreenessReport:
    is_free: bool
    t: int
    witness: AlternationWitness | None = None

    def __bool__(self) -> bool:
        return self.is_free


@dataclass(frozen=True)
class HomogeneousBlock:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: int
    exact: bool = True

    @property
    def size(self) -> int:
        return len(self.rows)


def _check_edge(h: OrderedHypergraph, i: int) -> None:
    if not 0 <= i < h.n_edges:
        raise IndexError(f"edge index {i} out of range 0..{h.n_edges - 1}")


def alternation_witness(h: OrderedHypergraph, i: int, j: int) -> tuple[int, ...]:
    """Longest alternation A\\B, B\\A, A\\B, ... for A = edges[i], B = edges[j]."""
    _check_edge(h, i)
    _check_edge(h, j)
    if i == j:
        raise ValueError("alternation needs two distinct edge indices")
    return tuple(greedy_alternation(h.edge_masks[i], h.edge_masks[j]))


def alternation_length(h: OrderedHypergraph, i: int, j: int) -> int:
    return len(alternation_witness(h, i, j))


def is_free_ordered(h: OrderedHypergraph, t: int) -> FreenessReport:
    """Check (AB)^{t/2}-freeness under the given vertex order.

    On failure the witness is the first offending ordered pair (i, j) in
    lexicographic order, cut to exactly t vertices.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    masks = h.edge_masks
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i == j:
                continue
            chain = greedy_alternation(a, b, t)
            if len(chain) >= t:
                return FreenessReport(False, t, AlternationWitness(tuple(chain), (i, j)))
    return FreenessReport(True, t)


def max_alternation(h: OrderedHypergraph) -> int:
    """Largest alternation over ordered edge pairs (0 with fewer than 2 edges)."""
    masks = h.edge_masks
    return max((len(greedy_alternation(a, b)) for i, a in enumerate(masks)
                for j, b in enumerate(masks) if i != j), default=0)


# ---------------------------------------------------------------------------
# induced pattern containment

def _row_first(m: BinaryMatrix, p: BinaryMatrix):
    """DFS over row tuples of ``m`` in lexicographic order.

    For a fixed row tuple the lexicographically smallest column tuple is the
    greedy earliest match, so the first hit is the lexicographic minimum.
    Yields (rows, cols) hits.
    """
    n_rows, n_cols = m.shape
    pr, pc = p.shape
    col_masks = m.col_masks
    p_cols = p.col_masks

    def greedy_cols(rows: Sequence[int]) -> tuple[int, ...] | None:
        k = len(rows)
        sel = mask_of(rows)
        targets = []
        for b in range(pc):
            target = 0
            for a in range(k):
                if p_cols[b] >> a & 1:
                    target |= 1 << rows[a]
            targets.append(target)
        out = []
        b = 0
        for c in range(n_cols):
            if b == pc:
                break
            if col_masks[c] & sel == targets[b]:
                out.append(c)
                b += 1
        return tuple(out) if b == pc else None

    rows: list[int] = []

    def dfs(start: int):
        if len(rows) == pr:
            cols = greedy_cols(rows)
            if cols is not None:
                yield tuple(rows), cols
            return
        need = pr - len(rows)
        for r in range(start, n_rows - need + 1):
            rows.append(r)
            # a prefix of the pattern must already embed on the chosen rows
            if greedy_cols(rows) is not None:
                yield from dfs(r + 1)
            rows.pop()

    if pr == 0:
        cols = greedy_cols([])
        if cols is not None:
            yield (), cols
        return
    yield from dfs(0)


def find_pattern(m: BinaryMatrix, p: Pattern | BinaryMatrix) -> PatternWitness | None:
    """Lexicographically smallest induced occurrence of ``p`` in ``m``, or None.

    Entries must match exactly, zeros included; row and column order is kept.
    """
    pm = p.matrix if isinstance(p, Pattern) else p
    pr, pc = pm.shape
    if pr > m.n_rows or pc > m.n_cols:
        return None
    if pr <= pc:
        for rows, cols in _row_first(m, pm):
            return PatternWitness(rows, cols)
        return None
    # few columns: enumerate column tuples on the transpose, keep the minimum
    best = None
    for cols, rows in _row_first(m.T, pm.T):
        cand = (rows, cols)
        if best is None or cand < best:
            best = cand
    return None if best is None else PatternWitness(*best)


def contains_pattern(m: BinaryMatrix, p: Pattern | BinaryMatrix) -> PatternWitness | None:
    return find_pattern(m, p)


def is_pattern_free(m: BinaryMatrix, *patterns: Pattern) -> bool:
    return all(find_pattern(m, p) is None for p in patterns)


# ---------------------------------------------------------------------------
# column sort, dual

def lex_sort_columns(m: BinaryMatrix, descending: bool = False) -> tuple[BinaryMatrix, tuple[int, ...]]:
    """Stable sort of the columns read top to bottom, 0 before 1.

    Returns the sorted matrix and ``perm`` with new column i = old column perm[i].
    Identical columns keep their relative order in both directions.

    If the rows avoid X_t and X_t', the ascending result avoids X_{t-1}'
    and the descending one (1 before 0) avoids X_{t-1}: in a sorted pair the
    first differing row sits strictly above any copy of the mirrored pattern
    and extends it to a forbidden length-t copy.
    """
    cols = m.entries.T.tolist()
    perm = tuple(sorted(range(m.n_cols), key=lambda c: cols[c], reverse=descending))
    return m.permute(cols=perm), perm


def dualize(h: OrderedHypergraph) -> OrderedHypergraph:
    """Swap vertices and edges; the incidence matrix gets transposed."""
    edges = [[] for _ in range(h.n_vertices)]
    for j, e in enumerate(h.edges):
        for v in e:
            edges[v].append(j)
    return OrderedHypergraph(h.n_edges, tuple(tuple(e) for e in edges))


def transpose_reading(m: BinaryMatrix) -> OrderedHypergraph:
    """Hypergraph of a matrix whose rows are edges and columns are vertices."""
    return OrderedHypergraph(m.n_cols, tuple(tuple(bits_of(r)) for r in m.row_masks))


# ---------------------------------------------------------------------------
# VC dimension

def is_shattered(h: OrderedHypergraph, subset: Sequence[int]) -> bool:
    s = mask_of(subset)
    traces = {e & s for e in h.edge_masks}
    return len(traces) == 1 << len(subset)


def shattered_set(h: OrderedHypergraph, cap: int | None = None) -> tuple[int, ...]:
    """A largest shattered vertex set of size at most ``cap`` (lex smallest)."""
    cap = h.n_vertices if cap is None else cap
    if cap > h.n_vertices:
        raise ValueError("cap exceeds the number of vertices")
    best: tuple[int, ...] = ()
    for s in range(1, cap + 1):
        hit = next((c for c in combinations(range(h.n_vertices), s) if is_shattered(h, c)), None)
        if hit is None:
            break  # subsets of shattered sets are shattered
        best = hit
    return best


def vc_dimension(h: OrderedHypergraph, cap: int | None = None) -> int:
    return len(shattered_set(h, cap))


# ---------------------------------------------------------------------------
# homogeneous square blocks

DEFAULT_EXACT_LIMIT = 16


def _best_for_value(row_masks: Sequence[int], n_cols: int, floor: int) -> tuple[int, tuple[int, ...], int]:
    """Branch and bound over row subsets for max min(|R|, |common cols|)."""
    n = len(row_masks)
    full = (1 << n_cols) - 1
    best = [floor, (), 0]
    chosen: list[int] = []

    def dfs(start: int, common: int) -> None:
        size = len(chosen)
        k = min(size, common.bit_count())
        if k > best[0]:
            best[:] = [k, tuple(chosen), common]
        for r in range(start, n):
            if size + (n - r) <= best[0]:
                return
            nxt = common & row_masks[r]
            if nxt.bit_count() <= best[0]:
                continue
            chosen.append(r)
            dfs(r + 1, nxt)
            chosen.pop()

    dfs(0, full)
    return best[0], best[1], best[2]


def _first_block(row_masks: Sequence[int], n_cols: int, k: int) -> tuple[tuple[int, ...], int] | None:
    """Lexicographically first k rows whose common columns number at least k."""
    n = len(row_masks)
    chosen: list[int] = []

    def dfs(start: int, common: int):
        if len(chosen) == k:
            return tuple(chosen), common
        for r in range(start, n - (k - len(chosen)) + 1):
            nxt = common & row_masks[r]
            if nxt.bit_count() >= k:
                chosen.append(r)
                out = dfs(r + 1, nxt)
                if out:
                    return out
                chosen.pop()
        return None

    return dfs(0, (1 << n_cols) - 1)


def max_homogeneous_square(m: BinaryMatrix, exact_limit: int = DEFAULT_EXACT_LIMIT) -> HomogeneousBlock:
    """Largest k x k all-0 or all-1 block.

    Exact when the smaller side is at most ``exact_limit``; otherwise a greedy
    lower bound marked ``exact=False``.  The exact witness is the first block
    in (value, rows, cols) lexicographic order among the maximum ones.
    """
    if m.n_rows == 0 or m.n_cols == 0:
        return HomogeneousBlock((), (), 0, True)
    transposed = m.n_rows > m.n_cols
    work = m.T if transposed else m
    full = (1 << work.n_cols) - 1
    per_value = {1: work.row_masks, 0: tuple(full & ~r for r in work.row_masks)}

    if min(m.shape) <= exact_limit:
        k = 0
        for value in (0, 1):
            k = max(k, _best_for_value(per_value[value], work.n_cols, k)[0])
        # the witness is searched in the original orientation so ties break on rows first
        full_cols = (1 << m.n_cols) - 1
        for value in (0, 1):
            masks = m.row_masks if value else tuple(full_cols & ~r for r in m.row_masks)
            found = _first_block(masks, m.n_cols, k)
            if found:
                rows, common = found
                return HomogeneousBlock(rows, tuple(bits_of(common)[:k]), value, True)

    best = HomogeneousBlock((), (), 0, False)
    for value in (0, 1):
        masks = per_value[value]
        order = sorted(range(len(masks)), key=lambda r: -masks[r].bit_count())
        rows: list[int] = []
        common = full
        for r in order:
            nxt = common & masks[r]
            if min(len(rows) + 1, nxt.bit_count()) > min(len(rows), common.bit_count()):
                rows.append(r)
                common = nxt
        k = min(len(rows), common.bit_count())
        if k > best.size:
            rs = tuple(sorted(rows)[:k])
            cs = tuple(bits_of(common)[:k])
            if transposed:
                rs, cs = cs, rs
            best = HomogeneousBlock(tuple(sorted(rs)), tuple(sorted(cs)), value, False)
    return best
