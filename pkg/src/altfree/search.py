"""Exhaustive decision procedures with budgets.

Every search either returns a witness, returns None after a complete search,
or raises :class:`BudgetExhausted`.  Results are the first hit in a fixed DFS
order, so they are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from altfree.analysis import dualize, lex_sort_columns
from altfree.core import (
    Coloring,
    HittingSet,
    OrderedHypergraph,
    Ordering,
    Subset,
    greedy_alternation,
    incidence,
    mask_of,
)


class BudgetExhausted(RuntimeError):
    """The search hit its node or time limit before it could decide."""

    def __init__(self, what: str, nodes: int, elapsed: float):
        super().__init__(f"{what}: budget exhausted after {nodes} nodes, {elapsed:.2f}s")
        self.nodes = nodes
        self.elapsed = elapsed


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10**8
    time_limit: float = 60.0
    # accepted for interface compatibility; searches run single-threaded
    parallel_width: int = 1


DEFAULT_BUDGET = SearchBudget()


class _Meter:
    __slots__ = ("budget", "what", "nodes", "start")

    def __init__(self, budget: SearchBudget | None, what: str):
        self.budget = budget or DEFAULT_BUDGET
        self.what = what
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExhausted(self.what, self.nodes, time.monotonic() - self.start)
        if self.nodes & 1023 == 0:
            elapsed = time.monotonic() - self.start
            if elapsed > self.budget.time_limit:
                raise BudgetExhausted(self.what, self.nodes, elapsed)


# ---------------------------------------------------------------------------
# vertex orderings

def _twin_classes(h: OrderedHypergraph) -> list[int]:
    """prev_twin[v] = largest u < v with the same edge membership, else -1."""
    sig: dict[tuple[int, ...], int] = {}
    member = [[] for _ in range(h.n_vertices)]
    for j, e in enumerate(h.edges):
        for v in e:
            member[v].append(j)
    prev = []
    for v in range(h.n_vertices):
        key = tuple(member[v])
        prev.append(sig.get(key, -1))
        sig[key] = v
    return prev


def find_free_ordering(h: OrderedHypergraph, t: int, budget: SearchBudget | None = None,
                       fast: bool = False) -> Ordering | None:
    """A vertex order making ``h`` (AB)^{t/2}-free, or None if there is none.

    Builds the order position by position, trying vertices in ascending
    index, and abandons a prefix once a pair of edges alternates t times
    inside it.  ``fast`` adds symmetry breaking (twin vertices kept in
    ascending order, first placed vertex smaller than the last); it changes
    which ordering is found, never whether one exists.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    n = h.n_vertices
    masks = h.edge_masks
    pairs = [(i, j) for i in range(len(masks)) for j in range(len(masks)) if i != j]
    # per vertex: pairs where it sits in A only / in B only
    in_a = [[] for _ in range(n)]
    in_b = [[] for _ in range(n)]
    for p, (i, j) in enumerate(pairs):
        for v in range(n):
            a, b = masks[i] >> v & 1, masks[j] >> v & 1
            if a and not b:
                in_a[v].append(p)
            elif b and not a:
                in_b[v].append(p)
    count = [0] * len(pairs)
    prev_twin = _twin_classes(h) if fast else [-1] * n
    placed = [False] * n
    order: list[int] = []
    meter = _Meter(budget, "find_free_ordering")

    if n == 0:
        return Ordering(vertices=())
    if t == 1 and any(masks[i] & ~masks[j] for i, j in pairs):
        return None

    def place(v: int) -> list[int] | None:
        bumped = []
        ok = True
        for p in in_a[v]:
            if count[p] % 2 == 0:
                count[p] += 1
                bumped.append(p)
                if count[p] >= t:
                    ok = False
        for p in in_b[v]:
            if count[p] % 2 == 1:
                count[p] += 1
                bumped.append(p)
                if count[p] >= t:
                    ok = False
        if not ok:
            for p in bumped:
                count[p] -= 1
            return None
        return bumped

    def dfs() -> bool:
        if len(order) == n:
            return not fast or n < 2 or order[0] < order[-1]
        for v in range(n):
            if placed[v]:
                continue
            if fast and prev_twin[v] >= 0 and not placed[prev_twin[v]]:
                continue
            meter.tick()
            bumped = place(v)
            if bumped is None:
                continue
            placed[v] = True
            order.append(v)
            if dfs():
                return True
            order.pop()
            placed[v] = False
            for p in bumped:
                count[p] -= 1
        return False

    return Ordering(vertices=tuple(order)) if dfs() else None


def is_dual_free(h: OrderedHypergraph, t: int, budget: SearchBudget | None = None,
                 fast: bool = False) -> Ordering | None:
    """Row and column orders under which M(h) avoids X_{t-1}^T, or None.

    The edge order comes from a free ordering of the dual; sorting the
    columns of the dual's reordered incidence matrix (1 before 0) gives the
    vertex order.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    dual = dualize(h)
    found = find_free_ordering(dual, t, budget, fast=fast)
    if found is None:
        return None
    edge_order = found.vertices
    _, vertex_order = lex_sort_columns(incidence(dual.reorder_vertices(edge_order)), descending=True)
    return Ordering(vertices=tuple(vertex_order), edges=tuple(edge_order))


# ---------------------------------------------------------------------------
# colorings and hitting sets

def proper_coloring(h: OrderedHypergraph, colors: int, min_size: int = 1,
                    budget: SearchBudget | None = None) -> Coloring | None:
    """Color vertices so every edge of size >= min_size sees two colors.

    Vertices are colored in index order, a new color only ever being the
    next unused one.  When an edge is down to one uncolored vertex and is
    monochromatic so far, that color is struck from the last vertex.
    """
    if colors < 1 or min_size < 1:
        raise ValueError("colors and min_size must be at least 1")
    n = h.n_vertices
    edges = [e for e in h.edges if len(e) >= min_size]
    if any(len(e) < 2 for e in edges):
        return None
    incident = [[] for _ in range(n)]
    for k, e in enumerate(edges):
        for v in e:
            incident[v].append(k)
    size = [len(e) for e in edges]
    colored = [0] * len(edges)
    tally = [[0] * colors for _ in edges]
    full = (1 << colors) - 1
    domain = [full] * n
    color = [-1] * n
    meter = _Meter(budget, "proper_coloring")

    def assign(v: int, c: int, trail: list) -> bool:
        color[v] = c
        ok = True
        for k in incident[v]:
            colored[k] += 1
            tally[k][c] += 1
            if tally[k][c] == size[k]:
                ok = False
            elif colored[k] == size[k] - 1 and tally[k][c] == colored[k]:
                u = next(x for x in edges[k] if color[x] < 0)
                if domain[u] >> c & 1:
                    trail.append((u, domain[u]))
                    domain[u] &= ~(1 << c)
                    if not domain[u]:
                        ok = False
        return ok

    def unassign(v: int, c: int, trail: list) -> None:
        for k in incident[v]:
            colored[k] -= 1
            tally[k][c] -= 1
        color[v] = -1
        for u, old in reversed(trail):
            domain[u] = old

    def dfs(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, colors)):
            if not domain[v] >> c & 1:
                continue
            meter.tick()
            trail: list = []
            if assign(v, c, trail) and dfs(v + 1, max(used, c + 1)):
                return True
            unassign(v, c, trail)
        return False

    return Coloring(tuple(color)) if dfs(0, 0) else None


def chromatic_number(h: OrderedHypergraph, min_size: int = 1,
                     budget: SearchBudget | None = None) -> int | None:
    """Least c with a proper c-coloring; None if some constrained edge is a singleton."""
    if any(len(e) == 1 for e in h.edges if len(e) >= min_size):
        return None
    c = 1
    while proper_coloring(h, c, min_size, budget) is None:
        c += 1
    return c


def shallow_hitting_set(h: OrderedHypergraph, depth: int,
                        budget: SearchBudget | None = None) -> HittingSet | None:
    """Vertex set meeting every edge in between 1 and ``depth`` vertices.

    Decides vertices in index order, trying "include" before "exclude".
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if any(not e for e in h.edges):
        raise ValueError("an empty edge cannot be hit")
    n = h.n_vertices
    incident = [[] for _ in range(n)]
    for k, e in enumerate(h.edges):
        for v in e:
            incident[v].append(k)
    hits = [0] * h.n_edges
    left = [len(e) for e in h.edges]
    chosen: list[int] = []
    meter = _Meter(budget, "shallow_hitting_set")

    def dfs(v: int) -> bool:
        if v == n:
            return True
        for take in (True, False):
            meter.tick()
            ok = True
            for k in incident[v]:
                left[k] -= 1
                if take:
                    hits[k] += 1
                    if hits[k] > depth:
                        ok = False
                elif hits[k] == 0 and left[k] == 0:
                    ok = False
            if take:
                chosen.append(v)
            if ok and dfs(v + 1):
                return True
            if take:
                chosen.pop()
            for k in incident[v]:
                left[k] += 1
                if take:
                    hits[k] -= 1
        return False

    return HittingSet(tuple(chosen)) if dfs(0) else None


# ---------------------------------------------------------------------------
# unsplittable subsets

def splitting_edges(h: OrderedHypergraph, t: int, subset) -> list[int]:
    """Indices of edges that alternate t times with ``subset`` in either direction."""
    s = mask_of(subset)
    return [j for j, f in enumerate(h.edge_masks)
            if len(greedy_alternation(s, f, t)) >= t or len(greedy_alternation(f, s, t)) >= t]


def unsplittable_subset(h: OrderedHypergraph, t: int, edge: int, k: int) -> Subset | None:
    """First k-subset of ``edges[edge]`` that can be added without breaking freeness.

    The vertex order is the given one; candidates go in lexicographic order.
    """
    if not 0 <= edge < h.n_edges:
        raise IndexError(f"edge index {edge} out of range")
    if not 0 <= k <= len(h.edges[edge]):
        raise ValueError(f"k={k} not in 0..{len(h.edges[edge])}")
    for cand in combinations(h.edges[edge], k):
        if not splitting_edges(h, t, cand):
            return Subset(tuple(cand))
    return None


# ---------------------------------------------------------------------------
# extremal counting

def max_free_uniform_family(n: int, k: int, t: int,
                            budget: SearchBudget | None = None) -> list[tuple[int, ...]]:
    """A largest (AB)^{t/2}-free family of distinct k-subsets of 0..n-1.

    The vertex order is fixed to the identity.  Branch and bound on the
    conflict graph of candidate edges, taken in lexicographic order.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    cands = list(combinations(range(n), k))
    masks = [mask_of(c) for c in cands]
    conflict = [0] * len(cands)
    for i, j in combinations(range(len(cands)), 2):
        a, b = masks[i], masks[j]
        if len(greedy_alternation(a, b, t)) >= t or len(greedy_alternation(b, a, t)) >= t:
            conflict[i] |= 1 << j
            conflict[j] |= 1 << i
    meter = _Meter(budget, "max_free_uniform_count")
    best: list[int] = []
    chosen: list[int] = []

    def expand(pool: int) -> None:
        nonlocal best
        meter.tick()
        if len(chosen) + pool.bit_count() <= len(best):
            return
        if not pool:
            best = list(chosen)
            return
        low = pool & -pool
        v = low.bit_length() - 1
        chosen.append(v)
        expand(pool & ~low & ~conflict[v])
        chosen.pop()
        expand(pool & ~low)

    expand((1 << len(cands)) - 1)
    return [cands[i] for i in best]


def max_free_uniform_count(n: int, k: int, t: int, budget: SearchBudget | None = None) -> int:
    return len(max_free_uniform_family(n, k, t, budget))
