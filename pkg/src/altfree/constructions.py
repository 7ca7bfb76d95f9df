"""Generators for the explicit families: tree hypergraphs H(a, b), prefix-union
hypergraphs, and the wiring-diagram construction for dual-free hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

from altfree.core import OrderedHypergraph


# ---------------------------------------------------------------------------
# H(a, b)

@dataclass(frozen=True)
class TreeHypergraph:
    hypergraph: OrderedHypergraph
    # "h" or "v" per edge, in edge order
    kinds: tuple[str, ...]
    depth: tuple[int, ...]


def build_tree_detailed(a: int, b: int) -> TreeHypergraph:
    if a < 2 or b < 2:
        raise ValueError("need a >= 2 and b >= 2")
    # heap numbering: level order top to bottom, left to right
    n = (a**b - 1) // (a - 1)
    first_leaf = (a ** (b - 1) - 1) // (a - 1)
    depth = []
    for d in range(b):
        depth += [d] * a**d

    def parent(v: int) -> int:
        return (v - 1) // a

    verticals = []
    for leaf in range(first_leaf, n):
        path = [leaf]
        while path[-1]:
            path.append(parent(path[-1]))
        verticals.append(tuple(sorted(path)))
    horizontals = [tuple(range(a * p + 1, a * p + a + 1)) for p in range(first_leaf)]

    # each horizontal goes right before the first vertical touching it
    slot = []
    for hz in horizontals:
        members = set(hz)
        slot.append(next(i for i, vt in enumerate(verticals) if members.intersection(vt)))
    edges: list[tuple[int, ...]] = []
    kinds: list[str] = []
    for i, vt in enumerate(verticals):
        for hz, s in zip(horizontals, slot):
            if s == i:
                edges.append(hz)
                kinds.append("h")
        edges.append(vt)
        kinds.append("v")
    return TreeHypergraph(OrderedHypergraph(n, tuple(edges)), tuple(kinds), tuple(depth))


def build_tree(a: int, b: int) -> OrderedHypergraph:
    """H(a, b) on the full a-ary tree with b levels, in its canonical orders.

    Horizontal edges are sibling sets (size a), vertical edges root-to-leaf
    paths (size b).
    """
    return build_tree_detailed(a, b).hypergraph


# ---------------------------------------------------------------------------
# prefix unions

def interval_lengths(n: int, parts: int) -> list[int]:
    base, extra = divmod(n, parts)
    return [base + 1 if i < extra else base for i in range(parts)]


def build_prefix_union(n: int, t: int) -> OrderedHypergraph:
    """Unions of one prefix from each of t-1 near-equal intervals of 0..n-1.

    Edges are grouped by which intervals contribute (bitmask order), then
    ordered lexicographically by prefix lengths.  The empty union is left out.
    """
    parts = t - 1
    if parts < 2 or n < parts:
        raise ValueError("need n >= t - 1 >= 2")
    lengths = interval_lengths(n, parts)
    starts = np.cumsum([0] + lengths[:-1]).tolist()
    edges = []
    for support in range(1, 1 << parts):
        ranges = [range(1, lengths[i] + 1) if support >> i & 1 else range(0, 1) for i in range(parts)]
        for pick in product(*ranges):
            edge = [v for i, p in enumerate(pick) for v in range(starts[i], starts[i] + p)]
            edges.append(tuple(edge))
    return OrderedHypergraph(n, tuple(edges))


def prefix_union_count(n: int, t: int) -> int:
    return int(np.prod([x + 1 for x in interval_lengths(n, t - 1)])) - 1


# ---------------------------------------------------------------------------
# wiring diagrams

@dataclass(frozen=True)
class WiringDiagram:
    """Wires over time; ``events[k] = p`` swaps the wires at heights p and p+1."""

    n_wires: int
    initial: tuple[int, ...]
    events: tuple[int, ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if sorted(self.initial) != list(range(self.n_wires)):
            raise ValueError("initial order must be a permutation of the wires")
        for k, p in enumerate(self.events):
            if not 0 <= p < self.n_wires - 1:
                raise ValueError(f"event {k} swaps out-of-range height {p}")

    def states(self):
        """Bottom-to-top wire order at every time, initial state included."""
        order = list(self.initial)
        yield tuple(order)
        for p in self.events:
            order[p], order[p + 1] = order[p + 1], order[p]
            yield tuple(order)

    def final(self) -> tuple[int, ...]:
        *_, last = self.states()
        return last

    def swapped_pairs(self):
        order = list(self.initial)
        for p in self.events:
            yield order[p], order[p + 1]
            order[p], order[p + 1] = order[p + 1], order[p]


@dataclass(frozen=True)
class CrossingReport:
    counts: np.ndarray
    total: int
    max_pair: int


def wiring_crossings(w: WiringDiagram) -> CrossingReport:
    counts = np.zeros((w.n_wires, w.n_wires), dtype=np.int64)
    for x, y in w.swapped_pairs():
        counts[x, y] += 1
        counts[y, x] += 1
    return CrossingReport(counts, int(counts.sum() // 2), int(counts.max(initial=0)))


def prefix_sets(w: WiringDiagram) -> OrderedHypergraph:
    """All distinct "bottom d wires" sets, d = 1..n-1, in order of first appearance."""
    seen: set[tuple[int, ...]] = set()
    edges = []
    for state in w.states():
        for d in range(1, w.n_wires):
            s = tuple(sorted(state[:d]))
            if s not in seen:
                seen.add(s)
                edges.append(s)
    return OrderedHypergraph(w.n_wires, tuple(edges))


def dual_extremal_parts(t: int) -> int:
    return (t - 2) // 2


def build_dual_wiring(n: int, t: int) -> WiringDiagram:
    """Curves B_1..B_t' (wires 0..t'-1) and A_1..A_{n-t'} (wires t'..n-1).

    Part j: B_j lies at the bottom while the A-block rotates once (each A
    travels from the bottom of the block to its top).  Then B_j climbs just
    above the A-block and the lowest B of the upper stack drops to the bottom.
    """
    tp = dual_extremal_parts(t)
    if t < 4:
        raise ValueError("dual-extremal construction needs t >= 4")
    if n <= tp:
        raise ValueError(f"need at least one A curve: n > {tp}")
    n_a = n - tp
    b_wires = list(range(tp))
    a_wires = list(range(tp, n))
    initial = [b_wires[0]] + a_wires + b_wires[1:]
    events: list[int] = []
    for j in range(tp):
        # B_j at height 0, A-block at heights 1..n_a
        for _ in range(n_a):
            events.extend(range(1, n_a))
        # B_j climbs to height n_a
        events.extend(range(0, n_a))
        if j + 1 < tp:
            # B_1..B_j now sit at heights n_a..n_a+j; the next B is just above them
            events.extend(range(n_a + j, -1, -1))
    labels = tuple(f"B{i + 1}" for i in range(tp)) + tuple(f"A{i + 1}" for i in range(n_a))
    return WiringDiagram(n, tuple(initial), tuple(events), labels)


def build_dual_extremal(n: int, t: int) -> tuple[WiringDiagram, OrderedHypergraph]:
    w = build_dual_wiring(n, t)
    return w, prefix_sets(w)


def dual_extremal_lower_bound(n: int, t: int) -> int:
    tp = dual_extremal_parts(t)
    return tp * comb(n - tp - 1, 2)


def check_dual_extremal(n: int, t: int) -> dict:
    """Machine-check the crossing bounds and the edge-count lower bound."""
    w, h = build_dual_extremal(n, t)
    rep = wiring_crossings(w)
    tp = dual_extremal_parts(t)
    c = rep.counts
    max_aa = int(c[tp:, tp:].max(initial=0))
    max_b = int(c[:tp, :].max(initial=0))
    distinct = len(set(h.edges)) == h.n_edges
    return {
        "n": n,
        "t": t,
        "parts": tp,
        "max_aa": max_aa,
        "max_with_b": max_b,
        "edges": h.n_edges,
        "lower_bound": dual_extremal_lower_bound(n, t),
        "distinct": distinct,
        "ok": max_aa <= t - 2 and max_b <= 2 and distinct and h.n_edges >= dual_extremal_lower_bound(n, t),
    }
