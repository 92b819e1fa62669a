"""Command-line front end.

Exit codes: 0 when nothing was distinguished (or the genus search found a
single class, or a table matched), 1 when two graphs are distinguished,
several classes were found or a table row mismatched, 2 on any error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources

from . import __version__
from .cache import ENV_VAR, InvariantCache
from .classification import cf_max
from .enumeration import SINGLETON, EnumerationConfig, enumerate_graphs, genus_search
from .gram import DEFAULT_TOLERANCE, OracleDisagreement, classify_via_gram, cross_check
from .graph import GraphError, canonical_form, component_masks
from .invariants import FIELDS, InvariantVector, decompose, invariant_vector
from .io import load_graph, render_dot, to_json_dict
from .rigidity import FAMILIES, compare_vectors, family_membership, genus_bounds, normal_key
from .tables import TABLES, check_finite, check_lanner

EXIT_OK, EXIT_DIFFERENT, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def load_schema(name: str) -> dict:
    """Shipped JSON schema for the output of subcommand ``name``."""
    return json.loads(resources.files("coxrigid").joinpath(f"schemas/{name}.schema.json")
                      .read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# invariant vectors with an optional cache

def _vector_from_payload(p: dict) -> InvariantVector:
    return InvariantVector(p["values"], p["hyperbolic_fc"], p["connected_extra_large"],
                           p["connected_odd"])


def _payload(v: InvariantVector) -> dict:
    return {"values": v.flat(), "hyperbolic_fc": v.hyperbolic_fc,
            "connected_extra_large": v.connected_extra_large, "connected_odd": v.connected_odd}


def make_vector_fn(cache: InvariantCache | None):
    """Invariant vectors in JSON-normalised form, read through ``cache``.

    Every vector handed out has the same value types whether or not it
    came from disk, so comparisons never mix representations.
    """
    def vector_of(g):
        key = canonical_form(g)
        if cache is not None:
            hit = cache.get(key)
            if hit is not None:
                return _vector_from_payload(hit)
        p = json.loads(json.dumps(_payload(invariant_vector(g))))
        if cache is not None:
            cache.put(key, p)
        return _vector_from_payload(p)
    return vector_of


def _cache_from(args) -> InvariantCache | None:
    if args.no_cache:
        return None
    return InvariantCache(args.cache_dir)


# ---------------------------------------------------------------------------
# rendering

def _text_lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                yield f"{pad}{k}:"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_scalar(v)}"
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                yield f"{pad}- [{i}]"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}- {_scalar(v)}"
    else:
        yield pad + _scalar(obj)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(data: dict, fmt: str, graph=None, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    elif fmt == "dot":
        if graph is None:
            raise CliError("dot output needs a single graph")
        out.write("".join(f"// {line}\n" for line in _text_lines(data)))
        out.write(render_dot(graph))
    else:
        out.write("\n".join(_text_lines(data)) + "\n")


# ---------------------------------------------------------------------------
# subcommands

def _load(path):
    g = load_graph(path)
    if g.n == 0:
        raise CliError(f"{path}: no vertices")
    return g


def _gram_check(g, tol):
    try:
        cross_check(g, tol)
    except OracleDisagreement as exc:
        raise CliError(f"classifier and Gram oracle disagree: {exc}") from None


def cmd_invariants(args) -> int:
    g = _load(args.path)
    _gram_check(g, args.gram_tolerance)
    v = make_vector_fn(_cache_from(args))(g)
    data = {"graph": to_json_dict(g),
            "canonical_form": canonical_form(g).decode(),
            "values": {name: v.values[name] for name, *_ in FIELDS},
            "profinite_status": {name: status for name, status, _ in FIELDS},
            "cf_max": cf_max(g).to_dict(),
            "decomposition": decompose(g).to_dict()}
    emit(data, args.format, g)
    return EXIT_OK


def cmd_compare(args) -> int:
    g1, g2 = _load(args.path1), _load(args.path2)
    for g in (g1, g2):
        _gram_check(g, args.gram_tolerance)
    vec = make_vector_fn(_cache_from(args))
    same = normal_key(g1) == normal_key(g2)
    rep = compare_vectors(vec(g1), vec(g2), same)
    data = rep.to_dict()
    notes = []
    if same:
        notes.append("same known-isomorphism class")
    if not rep.distinguished:
        notes.append("not distinguished by implemented invariants; this is not a proof of "
                     "profinite isomorphism")
    data["notes"] = notes
    emit(data, args.format, g1 if args.format == "dot" else None)
    return EXIT_DIFFERENT if rep.distinguished else EXIT_OK


def cmd_genus(args) -> int:
    g = _load(args.path)
    labels = [m for *_, m in g.edge_index_list]
    d = args.max_label if args.max_label is not None else max(labels, default=2)
    nmax = args.max_vertices if args.max_vertices is not None else g.n
    connected = g.n == 1 or len(component_masks(g.adj_masks, (1 << g.n) - 1)) == 1
    # "connected" is a matched general field, so disconnected candidates never match
    cfg = EnumerationConfig(nmax, d, connected_only=connected, jobs=args.jobs)
    rep = genus_search(g, cfg, max_graphs=args.max_graphs,
                       vector_of=make_vector_fn(_cache_from(args)))
    data = rep.to_dict()
    data["statement"] = (f"relative to |V| <= {nmax} and labels <= {d}; classes are "
                         "grouped by implemented known isomorphisms only")
    emit(data, args.format, g)
    return EXIT_OK if rep.verdict == SINGLETON else EXIT_DIFFERENT


def cmd_classify(args) -> int:
    g = _load(args.path)
    _gram_check(g, args.gram_tolerance)
    fam = family_membership(g)
    items = [item for name, item, kind, _ in FAMILIES if fam.members[name] and kind == fam.verdict]
    summary = f"{fam.verdict} (Theorem A {', '.join(items)})" if items else fam.verdict
    data = {"graph": to_json_dict(g),
            "decomposition": decompose(g).to_dict(),
            "gram": [{"vertices": list(vs), "class": kind} for vs, kind in
                     classify_via_gram(g, args.gram_tolerance)],
            "summary": summary}
    data.update(fam.to_dict())
    if args.max_label is not None:
        data["genus_bounds"] = genus_bounds(g, args.max_label).to_dict()
    emit(data, args.format, g)
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.format == "dot":
        raise CliError("tables have no dot rendering")
    if args.name == "finite":
        rows = check_finite()
    else:
        rows = [{"label": r.label, "expected": list(r.expected), "computed": list(r.computed),
                 "erratum": None if r.erratum is None else
                 f"printed column of row {r.erratum} belongs to this diagram",
                 "vcd": _vcd(r.graph), "match": r.match} for r in check_lanner(args.name)]
    ok = all(r["match"] for r in rows)
    emit({"table": args.name, "rows": rows, "all_match": ok}, args.format)
    return EXIT_OK if ok else EXIT_DIFFERENT


def _vcd(g):
    from .topology import vcd
    return vcd(g)


def cmd_enumerate(args) -> int:
    if args.format == "dot":
        raise CliError("enumeration has no dot rendering")
    cfg = EnumerationConfig(args.max_vertices, args.max_label, connected_only=args.connected_only,
                            min_vertices=args.min_vertices, jobs=args.jobs)
    graphs = [{"canonical_form": canonical_form(g).decode(), **to_json_dict(g)}
              for g in enumerate_graphs(cfg)]
    emit({"max_vertices": cfg.max_vertices, "max_label": cfg.max_label,
          "connected_only": cfg.connected_only, "min_vertices": cfg.min_vertices,
          "count": len(graphs), "graphs": graphs}, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------

def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--gram-tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="eigenvalue tolerance of the Gram oracle")
    common.add_argument("--cache-dir", default=None, help=f"cache root (default ${ENV_VAR})")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="coxrigid", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="invariant vector of a graph")
    s.add_argument("path")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("compare", parents=[common], help="compare two invariant vectors")
    s.add_argument("path1")
    s.add_argument("path2")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("genus", parents=[common], help="bounded genus search")
    s.add_argument("path")
    s.add_argument("--max-vertices", type=_positive)
    s.add_argument("--max-label", type=_positive)
    s.add_argument("--max-graphs", type=_positive, help="stop after examining this many graphs")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("classify", parents=[common], help="decomposition and family verdict")
    s.add_argument("path")
    s.add_argument("--max-label", type=_positive, help="also report genus bounds for this d")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("tables", parents=[common], help="recompute a stored table")
    s.add_argument("name", choices=sorted(TABLES) + ["finite"])
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("enumerate", parents=[common], help="graphs up to isomorphism")
    s.add_argument("--max-vertices", type=_positive, required=True)
    s.add_argument("--max-label", type=_positive, required=True)
    s.add_argument("--min-vertices", type=_positive, default=1)
    s.add_argument("--connected-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (CliError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
