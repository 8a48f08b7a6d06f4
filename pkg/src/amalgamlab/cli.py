"""Command-line driver: the catalog, per-row verification with JSON and
delimited/figure output, coset graphs, completion enumeration and
presentation checks.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or input
error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .amalgam import ROWS_BY_LABEL
from .fpgroups import (
    TABLE3,
    TABLE4,
    default_relator_pool,
    quotient_search,
    verify_presentation_orders,
)
from .graphsym import graph_automorphisms, measure_s
from .report import (
    build_all_reports,
    build_report,
    default_workers,
    reports_to_json,
    write_run,
)
from .svalue import certified_completion
from .witnesses import verify_assignment

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_RESOURCE_WORDS = ("cap", "bound", "too large", "exceed", "overflow")


def _is_resource_error(exc: Exception) -> bool:
    text = str(exc).lower()
    return any(word in text for word in _RESOURCE_WORDS)


def _say(args, *parts):
    if not getattr(args, "quiet", False):
        print(*parts)


def _require_label(label: str) -> str:
    if label not in ROWS_BY_LABEL:
        raise SystemExit_usage(f"unknown catalog row {label!r}")
    return label


class SystemExit_usage(Exception):
    pass


# -- catalog ------------------------------------------------------------------

def _parse_filter(text: str):
    if "=" not in text:
        raise SystemExit_usage(f"bad filter {text!r}; use key=value")
    key, value = text.split("=", 1)
    key = key.strip()
    if key not in ("s", "b_order", "label"):
        raise SystemExit_usage(f"unknown filter key {key!r}")
    return key, value.strip()


def cmd_catalog(args) -> int:
    rows = list(ROWS_BY_LABEL.values())
    for text in args.filter or ():
        key, value = _parse_filter(text)
        if key == "label":
            rows = [r for r in rows if r.label == value]
        else:
            rows = [r for r in rows if getattr(r, key) == int(value)]
    if args.json:
        print(json.dumps([{"label": r.label, "a1": r.a1_name,
                           "a2": r.a2_name, "b": r.b_name,
                           "b_order": r.b_order, "s": r.s} for r in rows],
                         indent=2))
        return EXIT_OK
    header = f"{'label':7} {'A1':16} {'A2':18} {'B':16} {'|B|':>5} {'s':>2}"
    _say(args, header)
    _say(args, "-" * len(header))
    for r in rows:
        _say(args, f"{r.label:7} {r.a1_name:16} {r.a2_name:18} "
             f"{r.b_name:16} {r.b_order:>5} {r.s:>2}")
    _say(args, f"{len(rows)} rows")
    return EXIT_OK


# -- verify ---------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.label == "all":
        reports = build_all_reports(workers=args.workers or default_workers())
    else:
        reports = [build_report(_require_label(args.label))]
    for report in reports:
        failed = [c.name for c in report.checks if not c.ok]
        status = "ok" if report.ok else f"FAIL ({', '.join(failed)})"
        _say(args, f"{report.label:7} {status}")
        for note in report.notes:
            _say(args, f"        note: {note}")
    if args.json:
        with open(args.json, "w") as handle:
            handle.write(reports_to_json(reports))
        _say(args, f"wrote {args.json}")
    if args.out:
        for path in write_run(reports, args.out):
            _say(args, f"wrote {path}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# -- graph ----------------------------------------------------------------------

def cmd_graph(args) -> int:
    label = _require_label(args.label)
    action, info = certified_completion(label)
    graph = action.graph
    _say(args, f"vertices: {graph.n}")
    _say(args, f"girth: {graph.girth()}")
    _say(args, f"s: {measure_s(action)}")
    order = action.group.order()
    _say(args, f"vertex_stab_order: {order // graph.n}")
    _say(args, f"edge_stab_order: {order // (5 * graph.n // 2)}")
    if graph.n <= 500:
        _say(args, f"aut_order: {graph_automorphisms(graph).order()}")
    if args.emit:
        with open(args.emit, "w") as handle:
            for u, v in sorted(graph.edges()):
                handle.write(f"{u} {v}\n")
        _say(args, f"wrote {args.emit}")
    return EXIT_OK


# -- enumerate-completions ------------------------------------------------------

def cmd_enumerate(args) -> int:
    label = _require_label(args.label)
    row = ROWS_BY_LABEL[label]
    if row.geometric:
        action, info = certified_completion(label)
        _say(args, f"{label} geometric completion: order "
             f"{info['group_order']}, {info['n_vertices']} vertices")
        return EXIT_OK
    pres = TABLE3[label]
    found = quotient_search(pres, row.b_order,
                            extra_relator_pool=None,
                            max_cosets=args.max_cosets,
                            limit=args.limit)
    for comp in found:
        _say(args, f"{label} + {comp.extra_relator}: order "
             f"{comp.group.order()}, {comp.n_vertices} vertices")
    if not found:
        _say(args, f"no completion accepted from the default pool "
             f"({len(default_relator_pool(pres))} candidates)")
    return EXIT_OK


# -- presentation ----------------------------------------------------------------

def cmd_presentation(args) -> int:
    label = _require_label(args.label)
    row = ROWS_BY_LABEL[label]
    if row.geometric:
        pres = TABLE4[label]
        _say(args, f"gens: {', '.join(pres.generators)}")
        for name, template in pres.macros:
            _say(args, f"def: {name} = {template}")
        for text in pres.relator_texts:
            _say(args, f"rel: {text}")
        if args.check:
            out = verify_assignment(label)
            _say(args, f"witness: relators {out['relators']}, generated "
                 f"order {out['generated_order']} of "
                 f"{out['completion_order']}")
            return EXIT_OK if out["ok"] else EXIT_FAIL
        return EXIT_OK
    rp = TABLE3[label]
    _say(args, f"gens: {', '.join(rp.x_gens)}, a, b")
    for kind, texts in (("rel", rp.r), ("rel[vertex]", rp.s),
                        ("rel[edge]", rp.t)):
        for text in texts:
            _say(args, f"{kind}: {text}")
    if args.check:
        out = verify_presentation_orders(rp, row.b_order,
                                         max_cosets=args.max_cosets)
        orders = (out["b_order"], out["vertex_order"], out["edge_order"])
        _say(args, f"orders (B, G_x, G_e): {orders}, expected "
             f"{tuple(out['expected'])}")
        if None in orders:
            return EXIT_RESOURCE
        return EXIT_OK if tuple(orders) == tuple(out["expected"]) \
            else EXIT_FAIL
    return EXIT_OK


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amalgamlab",
        description="verify the catalog of finite primitive amalgams "
        "of degree (5,2)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress normal output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="catalog queries")
    cat_sub = p_cat.add_subparsers(dest="subcommand", required=True)
    p_list = cat_sub.add_parser("list", help="print the 25 rows")
    p_list.add_argument("--filter", action="append",
                        help="key=value; keys: s, b_order, label")
    p_list.add_argument("--json", action="store_true")
    p_list.set_defaults(func=cmd_catalog)

    p_ver = sub.add_parser("verify", help="run every check for a row")
    p_ver.add_argument("label", help="row label or 'all'")
    p_ver.add_argument("--json", metavar="FILE",
                       help="write the reports as JSON")
    p_ver.add_argument("--out", metavar="DIR",
                       help="write JSON, CSV and figures to DIR")
    p_ver.add_argument("--workers", type=int,
                       help="worker count (default AMALGAMLAB_THREADS)")
    p_ver.set_defaults(func=cmd_verify)

    p_graph = sub.add_parser("graph", help="coset graph of a completion")
    p_graph.add_argument("label")
    p_graph.add_argument("--emit", metavar="FILE",
                         help="write the edge list (u v per line, 0-based)")
    p_graph.set_defaults(func=cmd_graph)

    p_enum = sub.add_parser("enumerate-completions",
                            help="search finite completions of a row")
    p_enum.add_argument("label")
    p_enum.add_argument("--max-cosets", type=int, default=200_000)
    p_enum.add_argument("--limit", type=int, default=3)
    p_enum.set_defaults(func=cmd_enumerate)

    p_pres = sub.add_parser("presentation",
                            help="print or check a row presentation")
    p_pres.add_argument("label")
    p_pres.add_argument("--check", action="store_true")
    p_pres.add_argument("--max-cosets", type=int, default=1_000_000)
    p_pres.set_defaults(func=cmd_presentation)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SystemExit_usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # uniform exit-code contract
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE if _is_resource_error(exc) else EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
