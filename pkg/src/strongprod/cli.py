"""Command line: build, certify, export and re-verify product orientations.

Exit codes: 0 success, 2 parse error, 3 precondition violated,
4 certification failed. Errors are printed to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cycle_orient import CycleFactor, claimed_cycle_diameter, orient_cycle_product
from .errors import CertificationFailed, ParseError, StrongProdError
from .formats import (SCHEMA_VERSION, diameter_summary, dumps, export_dot, factor_summary,
                      orientation_summary, parse_arcs, parse_graph_file, product_summary,
                      violation_summary)
from .graph import RootedTree, UndirectedGraph, distance_matrix, eccentricity_profile
from .metrics import (BoundKind, build_general_orientation, chvatal_thomassen_bound,
                      check_local_lemmas, check_structure, corollary_bound, directed_diameter,
                      spanning_trees, tree_bound)
from .oracle import DEFAULT_MAX_EDGES, brute_force_diam_min
from .orient import OrientedProduct, orient_tree_product
from .product import strong_product

EXIT_OK, EXIT_CERT = 0, 4


def _read_graph(path: str) -> tuple[UndirectedGraph, int | None]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_file(text)


def _oracle_section(op: OrientedProduct, rule_diameter, max_edges: int) -> dict:
    res = brute_force_diam_min(op.product.graph, max_edges)
    return {
        "diam_min": res.diam_min,
        "gap": rule_diameter - res.diam_min,
        "orientations_tested": res.orientations_tested,
        "strong_count": res.strong_count,
    }


def _comparison(op: OrientedProduct) -> dict:
    try:
        ct = chvatal_thomassen_bound(op.product.graph)
    except StrongProdError:
        ct = None
    return {"chvatal_thomassen": ct}


def build_report(command: str, op: OrientedProduct, factors: list[dict], bound: int,
                 bound_kind: BoundKind, *, tree_lemmas: bool, allow_residual: bool = False,
                 oracle_max_edges: int | None = None) -> dict:
    """Run every check on ``op`` and assemble the report document."""
    dist = distance_matrix(op.digraph)
    rep = directed_diameter(op.digraph, dist).with_bound(bound, bound_kind)
    lemmas = check_local_lemmas(op, dist) if tree_lemmas else []
    problems = check_structure(op, allow_residual=allow_residual)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "factors": factors,
        "product": product_summary(op),
        "rules": op.rule_histogram,
        "diameter": diameter_summary(op, rep),
        "comparison": _comparison(op),
        "lemma_violations": [violation_summary(v) for v in lemmas],
        "structure_problems": problems,
        "findings": [],
        "orientation": orientation_summary(op),
    }
    if oracle_max_edges is not None:
        doc["oracle"] = _oracle_section(op, rep.diameter, oracle_max_edges)
    doc["certified"] = rep.within_bound and not lemmas and not problems
    return doc


def _emit(doc: dict, op: OrientedProduct, args) -> int:
    text = dumps(doc)
    if getattr(args, "dot", None):
        Path(args.dot).write_text(export_dot(op))
    if getattr(args, "json", None):
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc["certified"] else EXIT_CERT


def _oracle_cap(args) -> int | None:
    return args.max_edges if args.oracle else None


def cmd_orient_trees(args) -> int:
    g1, file_root1 = _read_graph(args.t1)
    g2, file_root2 = _read_graph(args.t2)
    r1 = args.root1 if args.root1 is not None else file_root1
    r2 = args.root2 if args.root2 is not None else file_root2
    t1 = RootedTree.from_tree(g1, r1)
    t2 = RootedTree.from_tree(g2, r2)
    op = orient_tree_product(t1, t2)
    factors = [factor_summary("T1", g1, t1.root), factor_summary("T2", g2, t2.root)]
    doc = build_report("orient-trees", op, factors, tree_bound(t1, t2), BoundKind.TREE_THEOREM,
                       tree_lemmas=True, oracle_max_edges=_oracle_cap(args))
    return _emit(doc, op, args)


def cmd_orient_cycles(args) -> int:
    op = orient_cycle_product(args.m, args.n)
    f1, f2 = op.factors
    factors = [factor_summary("G", f1.graph, cycle=args.m), factor_summary("H", f2.graph, cycle=args.n)]
    claimed = claimed_cycle_diameter(args.m, args.n)
    doc = build_report("orient-cycles", op, factors, claimed, BoundKind.CYCLE_PROPOSITION,
                       tree_lemmas=False, oracle_max_edges=_oracle_cap(args))
    _add_cycle_finding(doc, claimed)
    return _emit(doc, op, args)


def _add_cycle_finding(doc: dict, claimed: int) -> None:
    measured = doc["diameter"]["diameter"]
    doc["claimed_diameter"] = claimed
    if measured != claimed:
        doc["findings"].append({"finding": "CycleDiameterDiffersFromClaim",
                                "claimed": claimed, "measured": measured})


def cmd_orient_general(args) -> int:
    g, _ = _read_graph(args.g)
    h, _ = _read_graph(args.h)
    op = build_general_orientation(g, h)
    t1, t2 = op.factors
    factors = [factor_summary("G", g, t1.root), factor_summary("H", h, t2.root)]
    doc = build_report("orient-general", op, factors, corollary_bound(g, h), BoundKind.COROLLARY,
                       tree_lemmas=False, allow_residual=True, oracle_max_edges=_oracle_cap(args))
    doc["spanning_trees"] = [[list(e) for e in t1.tree.edges()], [list(e) for e in t2.tree.edges()]]
    return _emit(doc, op, args)


def cmd_bruteforce(args) -> int:
    g, _ = _read_graph(args.g)
    res = brute_force_diam_min(g, args.max_edges)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "bruteforce",
        "graph": factor_summary("G", g),
        "oracle": {
            "diam_min": res.diam_min,
            "witness_orientation": "".join(map(str, res.witness_orientation)),
            "orientations_tested": res.orientations_tested,
            "strong_count": res.strong_count,
            "evaluated": res.evaluated,
        },
        "undirected_diameter": eccentricity_profile(g).diameter,
    }
    text = dumps(doc)
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _graph_from_summary(f: dict) -> UndirectedGraph:
    try:
        return UndirectedGraph(f["vertices"], (tuple(e) for e in f["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed factor description: {exc}") from None


def _orientation_from_doc(doc: dict, f1, f2, g1, g2) -> OrientedProduct:
    p = strong_product(g1, g2)
    by_edge = {}
    for a, b, tag in parse_arcs(doc):
        u, v = p.index(*a), p.index(*b)
        key = (min(u, v), max(u, v))
        if key not in p.edge_index or key in by_edge:
            raise CertificationFailed(f"arc {a}->{b} is not a distinct edge of the product")
        by_edge[key] = (u, v, tag)
    if len(by_edge) != p.edge_count:
        raise CertificationFailed(f"{len(by_edge)} arcs for {p.edge_count} product edges")
    arcs = [by_edge[(e.u, e.v)] for e in p.edges]
    return OrientedProduct(p, arcs, (f1, f2))


def cmd_verify(args) -> int:
    try:
        doc = json.loads(Path(args.report).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {args.report}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("report must be a JSON object")
    command = doc.get("command")
    if doc.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema {doc.get('schema')!r}")
    factors = doc.get("factors") or []
    if len(factors) != 2:
        raise ParseError("report must describe two factors")
    g1, g2 = (_graph_from_summary(f) for f in factors)
    try:
        return _verify(args, doc, command, factors, g1, g2)
    except KeyError as exc:
        raise ParseError(f"report is missing field {exc}") from None


def _verify(args, doc, command, factors, g1, g2) -> int:
    if command == "orient-trees":
        f1 = RootedTree.from_tree(g1, factors[0]["root"])
        f2 = RootedTree.from_tree(g2, factors[1]["root"])
        op = _orientation_from_doc(doc, f1, f2, g1, g2)
        new = build_report(command, op, factors, tree_bound(f1, f2), BoundKind.TREE_THEOREM, tree_lemmas=True)
    elif command == "orient-cycles":
        m, n = factors[0]["cycle"], factors[1]["cycle"]
        f1, f2 = CycleFactor(m), CycleFactor(n)
        op = _orientation_from_doc(doc, f1, f2, g1, g2)
        new = build_report(command, op, factors, claimed_cycle_diameter(m, n), BoundKind.CYCLE_PROPOSITION,
                           tree_lemmas=False)
        _add_cycle_finding(new, claimed_cycle_diameter(m, n))
    elif command == "orient-general":
        f1, f2 = spanning_trees(g1, g2)
        op = _orientation_from_doc(doc, f1, f2, g1, g2)
        new = build_report(command, op, factors, corollary_bound(g1, g2), BoundKind.COROLLARY,
                           tree_lemmas=False, allow_residual=True)
    else:
        raise ParseError(f"cannot verify a report of command {command!r}")

    mismatched = sorted(k for k in ("diameter", "rules", "product", "lemma_violations", "structure_problems")
                        if doc.get(k) != new[k])
    out = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "source_command": command,
        "diameter": new["diameter"],
        "lemma_violations": new["lemma_violations"],
        "structure_problems": new["structure_problems"],
        "findings": new["findings"],
        "mismatched_fields": mismatched,
        "certified": new["certified"] and not mismatched,
    }
    text = dumps(out)
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if out["certified"] else EXIT_CERT


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p, dot=True):
        if dot:
            p.add_argument("--dot", metavar="OUT", help="write the orientation as DOT")
        p.add_argument("--json", metavar="OUT", help="write the report here instead of stdout")

    def oracle_flags(p):
        p.add_argument("--oracle", action="store_true", help="also compute the exhaustive optimum")
        p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)

    p = sub.add_parser("orient-trees", help="orient a product of two trees")
    p.add_argument("--t1", required=True, metavar="FILE")
    p.add_argument("--t2", required=True, metavar="FILE")
    p.add_argument("--root1", type=int)
    p.add_argument("--root2", type=int)
    outputs(p)
    oracle_flags(p)
    p.set_defaults(func=cmd_orient_trees)

    p = sub.add_parser("orient-cycles", help="orient a product of two even cycles")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    outputs(p)
    oracle_flags(p)
    p.set_defaults(func=cmd_orient_cycles)

    p = sub.add_parser("orient-general", help="orient a product of connected graphs via spanning trees")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--h", required=True, metavar="FILE")
    outputs(p)
    oracle_flags(p)
    p.set_defaults(func=cmd_orient_general)

    p = sub.add_parser("bruteforce", help="exhaustive minimum-diameter orientation")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    outputs(p, dot=False)
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("verify", help="re-check an exported report")
    p.add_argument("--report", required=True, metavar="FILE")
    outputs(p, dot=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except StrongProdError as exc:
        sys.stderr.write(dumps(exc.to_dict()))
        return exc.exit_code


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
