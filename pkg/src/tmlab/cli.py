"""Command-line driver.

Subcommands map one-to-one onto the library: solve, enumerate, ineq, facet,
hull, vertices, check, separate, bounds.  All output is deterministic (fixed
ordering, no timestamps), so identical inputs give byte-identical output.

Exit codes: 0 success (and, for check, complete description); 2 incomplete
description; 3 invalid input (bad flags, unreadable files, parse errors);
4 size cap exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from .graph import Graph, bipartition, enumerate_induced_bicliques, is_tree, parse_graph
from .ineq import (
    balanced_biclique_inequalities,
    basic_inequalities,
    is_valid,
    lifted_biclique_inequalities,
    parse_inequalities,
)
from .polylab import (
    check_complete_description,
    face_dimension,
    hull,
    polytope_dimension,
    vertices,
)
from .separation import separate
from .totalmatch import (
    CapExceededError,
    DEFAULT_ELEMENT_CAP,
    alpha,
    enumerate_total_matchings,
    incidence,
    nu,
    nu_T,
    tau,
    tree_max,
)

EXIT_OK = 0
EXIT_INCOMPLETE = 2
EXIT_BAD_INPUT = 3
EXIT_CAP = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this project reserves 2 for
    'incomplete description', so usage errors exit 3 instead."""

    def error(self, message):
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path) -> Graph:
    return parse_graph(_read(path))


def _load_inequalities(path, g):
    return parse_inequalities(_read(path), g.num_elements)


def _load_point(path, g):
    tokens = []
    for raw in _read(path).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) != g.num_elements:
        raise ValueError(
            f"point file has {len(tokens)} coordinates, graph has "
            f"{g.num_elements} elements"
        )
    try:
        return tuple(Fraction(t) for t in tokens)
    except (ValueError, ZeroDivisionError):
        raise ValueError("point file contains a malformed rational") from None


def _labels(g, elements):
    return [g.element_label(a) for a in elements]


def _matching_str(g, elements):
    return " ".join(_labels(g, elements)) if elements else "(empty)"


def _emit(args, lines, obj):
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        print("\n".join(lines))


def cmd_solve(args):
    g = _load_graph(args.graph)
    tree = is_tree(g)
    if tree:
        method = "tree dynamic program"
        best = tree_max(g)
    else:
        method = "exhaustive branch and bound"
        best = nu_T(g)
    within_cap = g.num_elements <= DEFAULT_ELEMENT_CAP
    lines = [
        f"graph: n={g.n} m={g.m} elements={g.num_elements}",
        f"method: {method}",
        f"nu_T = {best}",
    ]
    obj = {"n": g.n, "m": g.m, "method": method, "nu_T": best}
    if within_cap:
        check, witness = nu_T(g, with_witness=True)
        if check != best:
            raise AssertionError(
                f"tree dynamic program disagrees with search: {best} vs {check}"
            )
        a, v, t = alpha(g), nu(g), tau(g)
        ok = best >= max(a, v) and t <= best
        lines += [
            f"witness = {_matching_str(g, witness)}",
            f"alpha = {a}",
            f"nu = {v}",
            f"tau = {t}",
            f"bound nu_T >= max(alpha, nu): {'OK' if best >= max(a, v) else 'VIOLATED'}",
            f"bound tau <= nu_T: {'OK' if t <= best else 'VIOLATED'}",
        ]
        obj.update(
            witness=_labels(g, witness), alpha=a, nu=v, tau=t, bounds_ok=ok
        )
        _emit(args, lines, obj)
        return EXIT_OK if ok else 1
    lines.append("witness, alpha, nu, tau omitted: graph exceeds the enumeration cap")
    obj.update(witness=None, alpha=None, nu=None, tau=None, bounds_ok=None)
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_enumerate(args):
    g = _load_graph(args.graph)
    matchings = list(enumerate_total_matchings(g))
    lines = [f"count = {len(matchings)}"]
    lines += [_matching_str(g, t) for t in matchings]
    obj = {"count": len(matchings), "matchings": [_labels(g, t) for t in matchings]}
    _emit(args, lines, obj)
    return EXIT_OK


def _lifted_family(g, max_side):
    out = []
    for b in enumerate_induced_bicliques(g, max_side):
        if 1 < b.r < b.s:
            out.extend(lifted_biclique_inequalities(g, b))
    return out


def cmd_ineq(args):
    g = _load_graph(args.graph)
    if args.family == "basic":
        ineqs = basic_inequalities(g)
    elif args.family == "biclique":
        if args.r is None:
            raise ValueError("family 'biclique' needs --r")
        if args.r < 1:
            raise ValueError("--r must be >= 1")
        ineqs = balanced_biclique_inequalities(g, args.r)
    else:
        ineqs = _lifted_family(g, args.max_side)
    lines = [q.format_line() for q in ineqs]
    obj = {
        "count": len(ineqs),
        "inequalities": [
            {"coeffs": list(q.coeffs), "rhs": q.rhs, "label": q.label} for q in ineqs
        ],
    }
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_facet(args):
    g = _load_graph(args.graph)
    ineqs = _load_inequalities(args.ineq, g)
    if not ineqs:
        raise ValueError("inequality file is empty")
    pdim = polytope_dimension(g)
    lines = [f"polytope dimension: {pdim}"]
    results = []
    for i, q in enumerate(ineqs, start=1):
        ok, cert = is_valid(g, q)
        if not ok:
            lines.append(f"{i}: invalid (violated by {_matching_str(g, cert)})")
            results.append(
                {"index": i, "status": "invalid", "violated_by": _labels(g, cert)}
            )
            continue
        fd = face_dimension(g, q)
        status = "facet" if fd == pdim - 1 else "valid, not facet"
        lines.append(f"{i}: {status} (face dimension {fd})")
        results.append({"index": i, "status": status, "face_dimension": fd})
    _emit(args, lines, {"polytope_dimension": pdim, "results": results})
    return EXIT_OK


def cmd_hull(args):
    g = _load_graph(args.graph)
    points = [incidence(g, t) for t in enumerate_total_matchings(g)]
    rep = hull(points, dim_cap=args.force_dim)
    lines = [q.format_line() for q in rep.hrep]
    obj = {"facets": [{"coeffs": list(q.coeffs), "rhs": q.rhs} for q in rep.hrep]}
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_vertices(args):
    g = _load_graph(args.graph)
    ineqs = _load_inequalities(args.ineq, g)
    if not ineqs:
        raise ValueError("inequality file is empty")
    rep = vertices(ineqs, dim_cap=args.force_dim)
    lines = [" ".join(str(c) for c in v) for v in rep.vrep]
    obj = {"vertices": [[str(c) for c in v] for v in rep.vrep]}
    _emit(args, lines, obj)
    return EXIT_OK


def _check_families(g, max_side):
    """The family set whose completeness the check command asserts: basic for
    trees; basic + all balanced and lifted biclique inequalities for complete
    bipartite graphs; every family up to max_side otherwise."""
    if is_tree(g):
        return list(basic_inequalities(g)), "basic (tree)"
    sides = bipartition(g)
    if sides is not None:
        a, b = sides
        if g.m == len(a) * len(b):
            side = max(len(a), len(b), 1)
            fams = list(basic_inequalities(g))
            for r in range(2, min(len(a), len(b)) + 1):
                fams.extend(balanced_biclique_inequalities(g, r))
            fams.extend(_lifted_family(g, side))
            return fams, "basic + balanced + lifted (complete bipartite)"
    fams = list(basic_inequalities(g))
    seen = set(fams)
    for r in range(2, max_side + 1):
        for q in balanced_biclique_inequalities(g, r):
            if q not in seen:
                seen.add(q)
                fams.append(q)
    for q in _lifted_family(g, max_side):
        if q not in seen:
            seen.add(q)
            fams.append(q)
    return fams, f"basic + balanced + lifted (general graph, max side {max_side})"


def cmd_check(args):
    g = _load_graph(args.graph)
    fams, desc = _check_families(g, args.max_side)
    report = check_complete_description(g, fams, dim_cap=args.force_dim)
    lines = [
        f"families: {desc}",
        f"dimension: {report.dimension}",
        f"complete: {'yes' if report.complete else 'no'}",
        f"missing facets ({len(report.missing_facets)}):",
    ]
    lines += [f"  {q.format_line()}" for q in report.missing_facets]
    lines.append(f"redundant inequalities ({len(report.redundant)}):")
    lines += [f"  {q.format_line()}" for q in report.redundant]
    obj = {
        "families": desc,
        "complete": report.complete,
        "missing_facets": [q.format_line() for q in report.missing_facets],
        "redundant": [q.format_line() for q in report.redundant],
        "dimension": report.dimension,
    }
    _emit(args, lines, obj)
    return EXIT_OK if report.complete else EXIT_INCOMPLETE


def cmd_separate(args):
    g = _load_graph(args.graph)
    z = _load_point(args.point, g)
    result = separate(g, z, args.max_side)
    lines = ["searched: " + "; ".join(result.searched_families)]
    lines.append(f"violated: {len(result.violated)}")
    lines += [
        f"{amount} : {q.format_line()}  # {q.label}" for q, amount in result.violated
    ]
    obj = {
        "searched": list(result.searched_families),
        "violated": [
            {
                "violation": str(amount),
                "coeffs": list(q.coeffs),
                "rhs": q.rhs,
                "label": q.label,
            }
            for q, amount in result.violated
        ],
    }
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_bounds(args):
    g = _load_graph(args.graph)
    best = nu_T(g)
    a, v, t = alpha(g), nu(g), tau(g)
    ok = best >= max(a, v) and t <= best
    lines = [
        f"nu_T = {best}",
        f"alpha = {a}",
        f"nu = {v}",
        f"tau = {t}",
        f"bound nu_T >= max(alpha, nu): {'OK' if best >= max(a, v) else 'VIOLATED'}",
        f"bound tau <= nu_T: {'OK' if t <= best else 'VIOLATED'}",
    ]
    obj = {"nu_T": best, "alpha": a, "nu": v, "tau": t, "bounds_ok": ok}
    _emit(args, lines, obj)
    return EXIT_OK if ok else 1


def build_parser():
    parser = _Parser(
        prog="tmlab",
        description="Exact verification laboratory for total matching polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="graph file ('n m' header, 'u v' lines)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(func=func)
        return p

    add("solve", cmd_solve, "maximum total matching and the classical bounds")
    add("enumerate", cmd_enumerate, "list every total matching")

    p = add("ineq", cmd_ineq, "generate an inequality family")
    p.add_argument("--family", required=True, choices=["basic", "biclique", "lifted"])
    p.add_argument("--r", type=int, help="side size for --family biclique")
    p.add_argument("--max-side", type=int, default=4, help="biclique side cap for --family lifted")

    p = add("facet", cmd_facet, "classify inequalities: facet / valid / invalid")
    p.add_argument("--ineq", required=True, help="inequality file")

    p = add("hull", cmd_hull, "facets of the total matching polytope")
    p.add_argument("--force-dim", type=int, help="raise the ambient dimension cap")

    p = add("vertices", cmd_vertices, "vertices of an inequality system")
    p.add_argument("--ineq", required=True, help="inequality file")
    p.add_argument("--force-dim", type=int, help="raise the ambient dimension cap")

    p = add("check", cmd_check, "check completeness of the known families")
    p.add_argument("--max-side", type=int, default=4, help="biclique side cap for general graphs")
    p.add_argument("--force-dim", type=int, help="raise the ambient dimension cap")

    p = add("separate", cmd_separate, "find family inequalities violated at a point")
    p.add_argument("--point", required=True, help="point file (one line of n+m rationals)")
    p.add_argument("--max-side", type=int, default=4, help="biclique side cap")

    add("bounds", cmd_bounds, "nu_T, alpha, nu, tau and the bound checks")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_BAD_INPUT
    if getattr(args, "max_side", 1) < 1:
        print("error: --max-side must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    if getattr(args, "force_dim", None) is not None and args.force_dim < 1:
        print("error: --force-dim must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
