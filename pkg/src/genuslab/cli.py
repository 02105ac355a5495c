"""genuslab command line.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 timeout or unconfirmed result.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import catalog, classify
from .embed.search import SearchTimeout, default_timeout, embeds_in_nonorientable, embeds_in_orientable
from .embed.surface import surface_verdict
from .graphs import (
    SimpleGraph,
    commuting_graph,
    complete_bipartite,
    complete_graph,
    connected_components,
    induced_subgraph,
    non_commuting_graph,
)
from .groups import GroupError, stats
from .io import FileFormatError, dot_text, edgelist_text, load_edgelist, load_group_file

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


class InputError(Exception):
    pass


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_group(args):
    try:
        if args.catalog:
            return catalog.lookup(args.catalog)
        return load_group_file(args.file)
    except catalog.UnknownGroup as exc:
        raise InputError(exc.args[0]) from None
    except (FileFormatError, GroupError) as exc:
        raise InputError(str(exc)) from None
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None


def _group_graph(G, kind: str) -> SimpleGraph:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return commuting_graph(G) if kind == "commuting" else non_commuting_graph(G)


def _add_group_source(p: argparse.ArgumentParser, required: bool = True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--catalog", metavar="NAME", help="name of a shipped catalog group")
    src.add_argument("--file", metavar="PATH", help="Cayley-table or permutation-generator JSON file")
    return src


# -- group-info -----------------------------------------------------------------


def cmd_group_info(args) -> int:
    G = _load_group(args)
    st = stats(G)
    info = {
        "name": G.name,
        "order": G.order,
        "center_size": st.center_size,
        "class_count": st.class_count,
        "spectrum": sorted(st.spectrum),
        "exponent": st.exponent,
        "is_abelian": st.is_abelian,
        "commuting_graph": "not applicable" if st.is_abelian else "defined",
    }
    if args.format == "json":
        print(_dump(info))
    else:
        for key, value in info.items():
            if key == "spectrum":
                value = "{" + ", ".join(map(str, value)) + "}"
            print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


# -- graph ------------------------------------------------------------------------


def cmd_graph(args) -> int:
    G = _load_group(args)
    g = _group_graph(G, args.kind)
    if args.format == "edgelist":
        text = edgelist_text(g)
    elif args.format == "dot":
        text = dot_text(g, f"{G.name} {args.kind}")
    else:
        text = _dump({
            "name": G.name,
            "kind": args.kind,
            "vertex_count": g.vertex_count,
            "labels": list(g.labels or ()),
            "edges": [list(e) for e in g.edges],
            "not_applicable": g.not_applicable,
        }) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- surface ----------------------------------------------------------------------


def _surface_graph(args) -> SimpleGraph:
    if args.edgelist:
        try:
            return load_edgelist(args.edgelist)
        except (FileFormatError, ValueError, IndexError) as exc:
            raise InputError(str(exc)) from None
        except OSError as exc:
            raise InputError(f"cannot read {args.edgelist}: {exc.strerror}") from None
    if args.kn is not None:
        if args.kn < 1:
            raise InputError("--kn needs n >= 1")
        return complete_graph(args.kn)
    if args.kmn is not None:
        m, n = args.kmn
        if m < 1 or n < 1:
            raise InputError("--kmn needs m, n >= 1")
        return complete_bipartite(m, n)
    return _group_graph(_load_group(args), args.kind)


def _embeds(g: SimpleGraph, surface: str, k: int, timeout: float) -> bool:
    nontrivial = [c for c in connected_components(g) if len(c) > 1]
    if len(nontrivial) <= 1:
        sub = induced_subgraph(g, nontrivial[0]) if nontrivial else SimpleGraph(1, ())
        if surface == "orientable":
            return embeds_in_orientable(sub, k, timeout=timeout)
        return embeds_in_nonorientable(sub, k, timeout=timeout)
    v = surface_verdict(g, limit=k, timeout=timeout)
    if surface == "orientable":
        return v.genus is not None and v.genus <= k
    return v.planar or (v.crosscap is not None and v.crosscap <= k)


def cmd_surface(args) -> int:
    g = _surface_graph(args)
    timeout = args.timeout or default_timeout()
    queries = []
    if args.planar:
        queries.append("planar")
    if args.genus:
        queries.append("genus")
    if args.crosscap:
        queries.append("crosscap")
    results: dict = {}
    try:
        if args.embeds_orientable is not None:
            if args.embeds_orientable < 0:
                raise InputError("--embeds-orientable needs a genus >= 0")
            results[f"embeds_orientable_{args.embeds_orientable}"] = _embeds(g, "orientable", args.embeds_orientable, timeout)
        if args.embeds_nonorientable is not None:
            if args.embeds_nonorientable < 1:
                raise InputError("--embeds-nonorientable needs a crosscap >= 1")
            results[f"embeds_nonorientable_{args.embeds_nonorientable}"] = _embeds(
                g, "nonorientable", args.embeds_nonorientable, timeout
            )
        if queries or not results:
            verdict = surface_verdict(g, timeout=timeout)
            if queries:
                for q in queries:
                    results[q] = getattr(verdict, q)
            else:
                results = verdict.to_dict()
    except SearchTimeout as exc:
        partial = {"status": "unknown", "reason": str(exc), "lower_bound": exc.lower_bound}
        print(_dump(partial) if args.format == "json" else f"unknown: {exc} (lower bound {exc.lower_bound})")
        return EXIT_TIMEOUT

    if args.format == "json":
        print(_dump(results))
    elif len(results) == 1 and (queries or args.embeds_orientable is not None or args.embeds_nonorientable is not None):
        print(_fmt(next(iter(results.values()))))
    else:
        for key, value in results.items():
            print(f"{key}: {_fmt(value)}")
    return EXIT_OK


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return "; ".join(map(str, value)) if value else "-"
    return "unknown" if value is None else str(value)


# -- verify ------------------------------------------------------------------------


def _exit_for(summary: dict) -> int:
    if summary["mismatched"]:
        return EXIT_MISMATCH
    if summary["unconfirmed"]:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_verify(args) -> int:
    timeout = args.timeout
    if args.all:
        result = classify.verify_all(timeout=timeout, jobs=args.jobs)
    elif args.theorem:
        result = classify.verify_theorem(args.theorem, timeout=timeout, jobs=args.jobs)
    else:
        if args.input:
            try:
                groups = [load_group_file(p) for p in args.input]
            except FileFormatError as exc:
                raise InputError(str(exc)) from None
            except OSError as exc:
                raise InputError(f"cannot read {exc.filename}: {exc.strerror}") from None
        else:
            groups = [G for _, G in catalog.catalog()] + catalog.order32_groups()
        records = classify.verify_commuting_subset_lemma(groups)
        applicable = [r for r in records if r["applies"]]
        result = {
            "lemma": "2.1",
            "records": records,
            "coverage": classify.order32_coverage(groups),
            "summary": classify._tally(r["ok"] for r in applicable),
        }
    text = _dump(result) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        print(_dump({"summary": result["summary"], "report": args.output}))
    else:
        sys.stdout.write(text)
    return _exit_for(result["summary"])


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genuslab",
        description="Groups, commuting graphs and surface embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-info", help="order, center, class number, element orders")
    _add_group_source(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_group_info)

    p = sub.add_parser("graph", help="export the commuting or non-commuting graph")
    _add_group_source(p)
    p.add_argument("--kind", choices=("commuting", "noncommuting"), default="commuting")
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("surface", help="planarity, genus, crosscap and embedding decisions")
    src = _add_group_source(p)
    src.add_argument("--edgelist", metavar="PATH", help="graph as a 'u v' edge list")
    src.add_argument("--kn", type=int, metavar="N", help="complete graph K_N")
    src.add_argument("--kmn", type=int, nargs=2, metavar=("M", "N"), help="complete bipartite K_M,N")
    p.add_argument("--kind", choices=("commuting", "noncommuting"), default="commuting")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--genus", action="store_true")
    p.add_argument("--crosscap", action="store_true")
    p.add_argument("--embeds-orientable", type=int, metavar="G")
    p.add_argument("--embeds-nonorientable", type=int, metavar="K")
    p.add_argument("--timeout", type=_positive_float, metavar="SECONDS")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("verify", help="run the classification checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true")
    which.add_argument("--theorem", choices=classify.THEOREMS)
    which.add_argument("--lemma", choices=("2.1",))
    p.add_argument("--input", nargs="+", metavar="PATH", help="group files for the lemma check")
    p.add_argument("--output", metavar="PATH", help="write the JSON report here")
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--timeout", type=_positive_float, metavar="SECONDS")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "input", None) and not getattr(args, "lemma", None):
        parser.error("--input only applies to --lemma")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"genuslab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
