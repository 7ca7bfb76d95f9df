"""Flat-file formats and the JSON witness schema.  Everything here is 1-based."""

from __future__ import annotations

import json
import re

from altfree.core import (
    AlternationWitness,
    BinaryMatrix,
    Coloring,
    HittingSet,
    OrderedHypergraph,
    Ordering,
    PatternWitness,
    Subset,
    WitnessError,
)


class FormatError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.line = line
        self.col = col


def parse_hypergraph(text: str, source: str = "<input>") -> OrderedHypergraph:
    """``n m`` on the first line, then one edge per line as 1-based vertices.

    A blank edge line is an empty edge.  Blank lines after the m edges are ignored.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise FormatError("missing header 'n m'", 1, 1, source)
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise FormatError(f"header must be two non-negative integers, got {lines[0]!r}", 1, 1, source)
    n, m = map(int, head)
    if len(lines) - 1 < m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}", len(lines) + 1, 1, source)
    edges = []
    for k in range(m):
        lineno = k + 2
        line = lines[k + 1]
        edge = []
        for match in re.finditer(r"\S+", line):
            tok, col = match.group(), match.start() + 1
            if not tok.isdigit():
                raise FormatError(f"vertex {tok!r} is not a positive integer", lineno, col, source)
            v = int(tok)
            if not 1 <= v <= n:
                raise FormatError(f"vertex {v} out of range 1..{n}", lineno, col, source)
            if v - 1 in edge:
                raise FormatError(f"vertex {v} repeated in the edge", lineno, col, source)
            edge.append(v - 1)
        edges.append(tuple(edge))
    for k, line in enumerate(lines[m + 1:], start=m + 2):
        if line.strip():
            raise FormatError(f"unexpected content after {m} edges", k, 1, source)
    return OrderedHypergraph(n, tuple(edges))


def serialize_hypergraph(h: OrderedHypergraph) -> str:
    out = [f"{h.n_vertices} {h.n_edges}"]
    out += [" ".join(str(v + 1) for v in e) for e in h.edges]
    return "\n".join(out) + "\n"


def parse_matrix(text: str, source: str = "<input>") -> BinaryMatrix:
    """One row per line, characters 0/1 only, equal lengths."""
    lines = text.splitlines()
    while lines and not lines[-1] and any(lines):
        lines.pop()
    width = len(lines[0]) if lines else 0
    for i, line in enumerate(lines, start=1):
        for j, ch in enumerate(line, start=1):
            if ch not in "01":
                raise FormatError(f"character {ch!r} is not 0 or 1", i, j, source)
        if len(line) != width:
            raise FormatError(f"row has length {len(line)}, expected {width}", i, min(len(line), width) + 1, source)
    if not lines:
        return BinaryMatrix.zeros(0, 0)
    return BinaryMatrix.from_strings(lines)


def serialize_matrix(m: BinaryMatrix) -> str:
    return "".join(row + "\n" for row in m.to_strings())


# ---------------------------------------------------------------------------
# JSON witnesses

def _one_based(xs) -> list[int]:
    return [int(x) + 1 for x in xs]


def _zero_based(xs, field: str) -> tuple[int, ...]:
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in xs):
        raise WitnessError(f"field {field!r} must be a list of integers")
    return tuple(x - 1 for x in xs)


def witness_to_dict(w) -> dict:
    if isinstance(w, AlternationWitness):
        d = {"kind": w.kind, "vertices": _one_based(w.vertices)}
        if w.edges is not None:
            d["edges"] = _one_based(w.edges)
        return d
    if isinstance(w, PatternWitness):
        return {"kind": w.kind, "rows": _one_based(w.rows), "cols": _one_based(w.cols)}
    if isinstance(w, Coloring):
        return {"kind": w.kind, "colors": [int(c) for c in w.colors]}
    if isinstance(w, (HittingSet, Subset)):
        return {"kind": w.kind, "vertices": _one_based(w.vertices)}
    if isinstance(w, Ordering):
        if w.edges is not None:
            return {"kind": w.kind, "rows": _one_based(w.vertices), "cols": _one_based(w.edges)}
        return {"kind": w.kind, "vertices": _one_based(w.vertices)}
    raise TypeError(f"not a witness: {w!r}")


def witness_from_dict(d: dict):
    kind = d.get("kind")
    try:
        if kind == "alternation":
            edges = d.get("edges")
            return AlternationWitness(_zero_based(d["vertices"], "vertices"),
                                      None if edges is None else _zero_based(edges, "edges"))
        if kind == "pattern":
            return PatternWitness(_zero_based(d["rows"], "rows"), _zero_based(d["cols"], "cols"))
        if kind == "coloring":
            return Coloring(tuple(d["colors"]))
        if kind == "hitting_set":
            return HittingSet(_zero_based(d["vertices"], "vertices"))
        if kind == "subset":
            return Subset(_zero_based(d["vertices"], "vertices"))
        if kind == "ordering":
            if "rows" in d:
                return Ordering(_zero_based(d["rows"], "rows"), _zero_based(d["cols"], "cols"))
            return Ordering(_zero_based(d["vertices"], "vertices"))
    except KeyError as exc:
        raise WitnessError(f"{kind} witness is missing field {exc.args[0]!r}") from None
    raise WitnessError(f"unknown witness kind {kind!r}")


def witness_to_json(w) -> str:
    return json.dumps(witness_to_dict(w), sort_keys=True)


def witness_from_json(text: str):
    return witness_from_dict(json.loads(text))
