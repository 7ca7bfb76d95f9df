"""``altfree`` command line.

Exit codes: 0 claim holds / object found, 1 claim fails / nothing found,
2 usage or input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass
from pathlib import Path

from altfree import analysis, constructions, corpus, search
from altfree.core import (
    Alternates,
    ContainsPattern,
    DualFreeOrdering,
    FreeOrdering,
    OrderedHypergraph,
    Pattern,
    ProperColoring,
    ShallowHitting,
    Unsplittable,
    WitnessError,
    incidence,
    verify_witness,
)
from altfree.formats import (
    FormatError,
    parse_hypergraph,
    parse_matrix,
    serialize_hypergraph,
    serialize_matrix,
    witness_from_dict,
    witness_to_dict,
)

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    text: str = ""
    witness: dict | None = None
    error: str = ""
    json_mode: bool = False


class _InternalError(Exception):
    pass


def _certified(obj, claim, w) -> dict:
    """Serialize a witness and check the serialized form before anyone sees it."""
    d = witness_to_dict(w)
    try:
        ok = verify_witness(obj, claim, witness_from_dict(json.loads(json.dumps(d))))
    except WitnessError as exc:
        raise _InternalError(f"witness self-verification raised: {exc}") from exc
    if not ok:
        raise _InternalError(f"witness self-verification failed for {d}")
    return d


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", 0, 0, path) from None


def _hg(path: str):
    return parse_hypergraph(_read(path), path)


def _mat(path: str):
    return parse_matrix(_read(path), path)


def _budget(args) -> search.SearchBudget:
    return search.SearchBudget(args.budget_nodes, args.budget_seconds, args.jobs)


def _ones(xs) -> str:
    return " ".join(str(x + 1) for x in xs)


# ---------------------------------------------------------------------------
# commands

def cmd_check(args) -> CommandResult:
    h = _hg(args.file)
    if args.search_order:
        o = search.find_free_ordering(h, args.t, _budget(args), fast=args.fast)
        if o is None:
            return CommandResult(FAIL, f"no vertex ordering is (AB)^{{{args.t}/2}}-free")
        w = _certified(h, FreeOrdering(args.t), o)
        return CommandResult(OK, f"free ordering: {_ones(o.vertices)}", w)
    rep = analysis.is_free_ordered(h, args.t)
    if rep.is_free:
        return CommandResult(OK, f"free: no pair of edges alternates {args.t} times")
    w = _certified(h, Alternates(args.t), rep.witness)
    i, j = rep.witness.edges
    return CommandResult(FAIL, f"not free: edges {i + 1} and {j + 1} alternate on vertices "
                               f"{_ones(rep.witness.vertices)}", w)


def cmd_check_dual(args) -> CommandResult:
    h = _hg(args.file)
    o = search.is_dual_free(h, args.t, _budget(args), fast=args.fast)
    if o is None:
        return CommandResult(FAIL, f"not dual-free: no row/column ordering avoids X{args.t - 1}T")
    w = _certified(h, DualFreeOrdering(args.t), o)
    return CommandResult(OK, f"dual-free\nrow order: {_ones(o.vertices)}\ncolumn order: {_ones(o.edges)}", w)


def cmd_pattern(args) -> CommandResult:
    m = _mat(args.file)
    p = Pattern.named(args.name) if args.name else Pattern(_mat(args.pattern), Path(args.pattern).stem)
    w = analysis.contains_pattern(m, p)
    if w is None:
        return CommandResult(FAIL, f"{p.name or 'pattern'}-free")
    d = _certified(m, ContainsPattern(p), w)
    return CommandResult(OK, f"contains {p.name or 'pattern'}: rows {_ones(w.rows)}; cols {_ones(w.cols)}", d)


def cmd_sortcols(args) -> CommandResult:
    m = _mat(args.file)
    out, perm = analysis.lex_sort_columns(m, descending=args.descending)
    text = serialize_matrix(out) + f"permutation: {_ones(perm)}"
    return CommandResult(OK, text, {"kind": "ordering", "cols": [p + 1 for p in perm]})


def cmd_color(args) -> CommandResult:
    h = _hg(args.file)
    col = search.proper_coloring(h, args.colors, args.min_size, _budget(args))
    if col is None:
        return CommandResult(FAIL, f"no proper {args.colors}-coloring of edges of size >= {args.min_size}")
    w = _certified(h, ProperColoring(args.colors, args.min_size), col)
    return CommandResult(OK, "coloring: " + " ".join(map(str, col.colors)), w)


def cmd_hit(args) -> CommandResult:
    h = _hg(args.file)
    try:
        s = search.shallow_hitting_set(h, args.depth, _budget(args))
    except ValueError as exc:
        return CommandResult(USAGE, error=str(exc))
    if s is None:
        return CommandResult(FAIL, f"no {args.depth}-shallow hitting set")
    w = _certified(h, ShallowHitting(args.depth), s)
    return CommandResult(OK, f"hitting set: {_ones(s.vertices)}", w)


def cmd_unsplit(args) -> CommandResult:
    h = _hg(args.file)
    edge = args.edge - 1
    try:
        s = search.unsplittable_subset(h, args.t, edge, args.size)
    except (IndexError, ValueError) as exc:
        return CommandResult(USAGE, error=str(exc))
    if s is None:
        return CommandResult(FAIL, f"edge {args.edge} has no unsplittable {args.size}-subset")
    w = _certified(h, Unsplittable(args.t, edge), s)
    return CommandResult(OK, f"unsplittable subset: {_ones(s.vertices)}", w)


def cmd_build(args) -> CommandResult:
    kind, x, y = args.family, args.x, args.y
    extra = {}
    if kind == "tree":
        h = constructions.build_tree(x, y)
        stem = f"tree_{x}_{y}"
    elif kind == "prefix":
        h = constructions.build_prefix_union(x, y)
        stem = f"prefix_{x}_{y}"
    else:
        w, h = constructions.build_dual_extremal(x, y)
        stem = f"dual_extremal_{x}_{y}"
        extra[f"{stem}.wiring.json"] = json.dumps(
            {"n_wires": w.n_wires, "labels": list(w.labels),
             "initial": [v + 1 for v in w.initial], "events": [p + 1 for p in w.events]},
            sort_keys=True) + "\n"
    text = serialize_hypergraph(h)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{stem}.hg").write_text(text)
        (out / f"{stem}.mat").write_text(serialize_matrix(incidence(h)))
        for name, body in extra.items():
            (out / name).write_text(body)
        return CommandResult(OK, f"wrote {stem}.* to {out}")
    return CommandResult(OK, text.rstrip("\n"))


def cmd_oracle(args) -> CommandResult:
    fam = search.max_free_uniform_family(args.n, args.k, args.t, _budget(args))
    if not analysis.is_free_ordered(OrderedHypergraph(args.n, tuple(fam)), args.t).is_free:
        raise _InternalError("extremal family failed its freeness self-check")
    return CommandResult(OK, str(len(fam)), {"kind": "family", "edges": [[v + 1 for v in e] for e in fam]})


def cmd_vc(args) -> CommandResult:
    h = _hg(args.file)
    if args.cap is not None and args.cap > h.n_vertices:
        return CommandResult(USAGE, error="--cap exceeds the number of vertices")
    s = analysis.shattered_set(h, args.cap)
    if not analysis.is_shattered(h, s):
        raise _InternalError("reported set is not shattered")
    return CommandResult(OK, f"vc dimension: {len(s)}\nshattered set: {_ones(s)}",
                         {"kind": "shattered_set", "vertices": [v + 1 for v in s]})


def cmd_homog(args) -> CommandResult:
    m = _mat(args.file)
    b = analysis.max_homogeneous_square(m, args.exact_limit)
    if b.size and not (m.submatrix(b.rows, b.cols).entries == b.value).all():
        raise _InternalError("reported block is not homogeneous")
    label = "exact" if b.exact else "greedy lower bound"
    text = f"homogeneous {b.size}x{b.size} block of {b.value}s ({label})\nrows: {_ones(b.rows)}\ncols: {_ones(b.cols)}"
    return CommandResult(OK, text, {"kind": "block", "rows": [r + 1 for r in b.rows],
                                    "cols": [c + 1 for c in b.cols], "value": b.value, "exact": b.exact})


def cmd_corpus(args) -> CommandResult:
    entries = corpus.paper_corpus()
    if args.action == "list":
        rows = [f"{e.name}\t{e.matrix.n_rows}x{e.matrix.n_cols}\t{e.orientation}\t{len(e.claims)} claims"
                for e in entries]
        return CommandResult(OK, "\n".join(rows))
    if args.action == "export":
        if not args.dir:
            return CommandResult(USAGE, error="corpus export needs a directory")
        out = Path(args.dir)
        out.mkdir(parents=True, exist_ok=True)
        for e in entries:
            (out / e.filename).write_text(serialize_matrix(e.matrix))
            (out / e.filename.replace(".mat", ".hg")).write_text(serialize_hypergraph(e.hypergraph))
        return CommandResult(OK, f"exported {len(entries)} entries to {out}")
    lines = []
    all_ok = True
    budget = _budget(args)
    for e in entries:
        results = corpus.verify_entry(e, budget)
        ok = all(r[1] for r in results)
        all_ok &= ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {e.name}")
        for claim, passed, detail in results:
            lines.append(f"  {'ok ' if passed else 'BAD'} {claim.describe()}  [{detail}]")
    return CommandResult(OK if all_ok else FAIL, "\n".join(lines))


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=search.DEFAULT_BUDGET.node_limit)
    common.add_argument("--budget-seconds", type=float, default=search.DEFAULT_BUDGET.time_limit)
    common.add_argument("--jobs", type=int, default=1, help="parallel width (output does not depend on it)")
    common.add_argument("--json", action="store_true", help="print the witness as JSON")

    parser = argparse.ArgumentParser(prog="altfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="(AB)^{t/2}-freeness of a hypergraph")
    p.add_argument("--t", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--ordered", action="store_true", help="use the given vertex order (default)")
    mode.add_argument("--search-order", action="store_true", help="search for a free vertex order")
    p.add_argument("--fast", action="store_true", help="symmetry breaking during order search")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-dual", parents=[common], help="dual-(AB)^{t/2}-freeness")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--fast", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_dual)

    p = sub.add_parser("pattern", parents=[common], help="induced submatrix search")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--name", help="X<t>, X<t>p, X<t>T or X<t>pT")
    which.add_argument("--pattern", help="pattern matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("sortcols", parents=[common], help="lexicographic column sort")
    p.add_argument("--descending", action="store_true", help="1 before 0")
    p.add_argument("file")
    p.set_defaults(func=cmd_sortcols)

    p = sub.add_parser("color", parents=[common], help="proper coloring search")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("hit", parents=[common], help="shallow hitting set search")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_hit)

    p = sub.add_parser("unsplit", parents=[common], help="unsplittable subset of an edge")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--edge", type=int, required=True, help="1-based edge index")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_unsplit)

    p = sub.add_parser("build", parents=[common], help="generate a construction")
    p.add_argument("family", choices=["tree", "prefix", "dual-extremal"])
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive extremal counts")
    p.add_argument("which", choices=["max-uniform"])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("vc", parents=[common], help="VC dimension")
    p.add_argument("--cap", type=int)
    p.add_argument("file")
    p.set_defaults(func=cmd_vc)

    p = sub.add_parser("homog", parents=[common], help="largest homogeneous square block")
    p.add_argument("--exact-limit", type=int, default=analysis.DEFAULT_EXACT_LIMIT)
    p.add_argument("file")
    p.set_defaults(func=cmd_homog)

    p = sub.add_parser("corpus", parents=[common], help="embedded matrices")
    p.add_argument("action", choices=["list", "verify", "export"])
    p.add_argument("dir", nargs="?")
    p.set_defaults(func=cmd_corpus)
    return parser


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(USAGE if exc.code else OK, error=err.getvalue().strip())
    try:
        result = args.func(args)
    except FormatError as exc:
        return CommandResult(USAGE, error=str(exc))
    except search.BudgetExhausted as exc:
        return CommandResult(BUDGET, error=str(exc))
    except _InternalError as exc:
        return CommandResult(USAGE, error=f"internal error: {exc}")
    except ValueError as exc:
        return CommandResult(USAGE, error=str(exc))
    result.json_mode = args.json
    return result


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.json_mode and result.witness is not None:
        print(json.dumps(result.witness, sort_keys=True))
    elif result.text:
        print(result.text)
    if result.error:
        print(f"altfree: {result.error}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
