"""Command-line front end.

Exit codes: 0 ok, 1 violation or table mismatch, 2 usage error, 3 search
budget exhausted (a partial result is still printed).
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction

from . import __version__, sidon, tables
from ._budget import BUDGET_ENV, BudgetExceeded
from .coloring import (
    EVEN_CYCLES,
    P3,
    as_colours,
    chromatic_number,
    chromatic_span,
    colour_count,
    is_f_free,
    is_lp1_labelling,
    is_proper,
    lp1_range,
    lp1_span,
    min_lp1_range,
    min_lp1_span,
    parse_family,
    span,
)
from .construct import (
    acyclic_tree_product,
    closed_form_bound,
    lp1_key_construction,
    sidon_prefix,
    star_tree_product,
    theorem_lambda_pipeline,
    torus_bound,
    torus_coloring,
)
from .graphs import cartesian_product, parse_graph_spec

log = logging.getLogger("sidoncolor")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def _fraction(f: Fraction) -> dict:
    return {"exact": f"{f.numerator}/{f.denominator}", "approx": f"{float(f):.6f}"}


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


# -- sidon ----------------------------------------------------------------------

def cmd_sidon(args) -> int:
    if args.action == "gen":
        if (args.count is None) == (args.limit is None):
            raise UsageError("sidon gen needs exactly one of --count or --limit")
        if args.count is not None:
            s = sidon.first_elements(args.set, args.k, args.count)
        else:
            s = sidon.up_to(args.set, args.k, args.limit)
        if args.csv:
            print(",".join(map(str, s.elements)))
        else:
            _emit({"set": args.set, "k": args.k, "elements": list(s.elements)})
        return EXIT_OK

    if args.action == "verify":
        elements = _int_list(args.elements)
        witness = sidon.find_violation(elements, args.k)
        out = {"k": args.k, "elements": sorted(set(elements)), "k_multiplicative": witness is None}
        if witness is not None:
            out["witness"] = {"a": witness[0], "b": witness[1], "x": witness[2], "y": witness[3]}
        _emit(out)
        return EXIT_OK if witness is None else EXIT_VIOLATION

    if args.action == "density":
        _emit({"set": args.set, "k": args.k, "density": _fraction(sidon.DENSITY[args.set](args.k))})
        return EXIT_OK

    # max
    if args.n is None:
        raise UsageError("sidon max needs --n")
    code, optimal = EXIT_OK, True
    try:
        best = sidon.max_sidon_subset(args.n, args.k, budget=args.budget)
    except BudgetExceeded as exc:
        best, optimal, code = exc.best, False, EXIT_BUDGET
        log.warning("%s", exc)
    s_count = len(sidon.up_to("s", args.k, args.n))
    t_count = len(sidon.up_to("t", args.k, args.n))
    _emit({
        "n": args.n,
        "k": args.k,
        "cardinality": len(best),
        "elements": list(best.elements),
        "optimal": optimal,
        "s_count": s_count,
        "t_count": t_count,
        "ratio_to_s": _fraction(Fraction(len(best), s_count)),
    })
    return code


# -- color ----------------------------------------------------------------------

def _load_colours(args, n: int) -> list[int]:
    if args.colors:
        return _int_list(args.colors)
    if args.coloring:
        with open(args.coloring) as fh:
            return [int(c) for c in json.load(fh)["colors"]]
    raise UsageError("color check needs --colors or --coloring")


def cmd_color(args) -> int:
    try:
        factors = parse_graph_spec(args.graph)
        family = parse_family(args.family)
    except (ValueError, OSError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    product = cartesian_product(factors)
    g = product.graph

    if args.action == "check":
        col = _load_colours(args, g.n)
        try:
            col = as_colours(g, col)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        out = {"graph": args.graph, "vertices": g.n, "colours": colour_count(col)}
        if args.p is not None:
            ok = is_lp1_labelling(g, col, args.p)
            out.update(p=args.p, lp1_valid=ok, lp1_span=lp1_span(g, col), lp1_range=lp1_range(g, col))
        else:
            proper = is_proper(g, col)
            ok = proper and is_f_free(g, col, family)
            out.update(family=str(family), proper=proper, f_free=ok, span=span(g, col) if proper else None)
        _emit(out)
        return EXIT_OK if ok else EXIT_VIOLATION

    if args.action == "solve":
        return _solve(args, g, family)
    return _construct(args, factors, family)


def _solve(args, g, family) -> int:
    measure = args.measure
    if args.p is not None:
        measure = measure if measure in ("span", "range") else "range"
        solver = {"span": min_lp1_span, "range": min_lp1_range}[measure]
        call = lambda: solver(g, args.p, budget=args.budget)  # noqa: E731
    else:
        measure = measure if measure in ("chi", "span") else "chi"
        solver = {"chi": chromatic_number, "span": chromatic_span}[measure]
        call = lambda: solver(g, family, budget=args.budget)  # noqa: E731
    out = {"graph": args.graph, "vertices": g.n, "family": str(family) if args.p is None else f"L({args.p},1)",
           "measure": measure}
    try:
        value, col = call()
    except BudgetExceeded as exc:
        log.warning("%s", exc)
        if exc.best is None:
            out.update(optimal=False, value=None, colors=None)
        else:
            value, col = exc.best
            out.update(optimal=False, value=value, colors=list(col))
        _emit(out)
        return EXIT_BUDGET
    out.update(optimal=True, value=value, colors=list(col))
    _emit(out)
    return EXIT_OK


_TORUS_TOKEN = re.compile(r"^C(\d+)(?:\^(\d+))?$")


def _construct(args, factors, family) -> int:
    product = cartesian_product(factors)
    g = product.graph
    d = len(factors)
    out: dict = {"graph": args.graph, "vertices": g.n, "dimension": d, "method": args.method}

    if args.p is not None:
        labellings = []
        for f in factors:
            labellings.append(min_lp1_span(f, args.p, budget=args.budget)[1])
        k = max(lp1_span(f, c) for f, c in zip(factors, labellings))
        mult = sidon_prefix(args.strategy, k, d)
        res = lp1_key_construction(factors, labellings, mult, args.p, k)
        ok = is_lp1_labelling(g, res.labelling, args.p) and is_lp1_labelling(g, res.folded, args.p)
        out.update(p=args.p, k=k, strategy=args.strategy, multipliers=list(mult.elements),
                   edge_span=lp1_span(g, res.labelling), edge_span_bound=k * mult.max,
                   folded_range=lp1_range(g, res.folded), modulus=res.modulus, verified=ok,
                   labels=list(res.folded))
        _emit(out)
        return EXIT_OK if ok else EXIT_VIOLATION

    if args.method == "acyclic-trees":
        if any(not f.is_tree() for f in factors):
            raise UsageError("acyclic-trees needs every factor to be a tree")
        col = acyclic_tree_product(factors)
        family = EVEN_CYCLES
        out.update(family=str(family), bound=d + 1)
    elif args.method == "star-trees":
        if any(not f.is_tree() for f in factors):
            raise UsageError("star-trees needs every factor to be a tree")
        col = star_tree_product(factors)
        family = parse_family("p4")
        out.update(family=str(family), bound=2 * d + 1)
    elif args.method == "torus":
        tokens = [_TORUS_TOKEN.match(t.strip()) for t in args.graph.split("x")]
        if not all(tokens):
            raise UsageError("torus needs a product of cycle powers such as C5xC6 or C5^2xC7^2")
        powers = {int(m.group(2) or 1) for m in tokens}
        if len(powers) != 1:
            raise UsageError("torus factors must share one power")
        k = powers.pop()
        res = torus_coloring([int(m.group(1)) for m in tokens], k=k, strategy=args.strategy)
        col, family = list(res.colouring), P3
        out.update(family=str(family), k=k, multipliers=list(res.sidon.elements), bound=res.bound,
                   closed_form_bound=torus_bound(d, k), span_before_fold=res.span_before_fold)
    else:
        res = theorem_lambda_pipeline(factors, family, k=args.k, strategy=args.strategy,
                                      exact_factors=args.exact_factors)
        col = list(res.colouring)
        out.update(family=str(family), strategy=args.strategy, k=res.k, multipliers=list(res.sidon.elements),
                   span_before_fold=res.span_before_fold, bound=res.bound,
                   closed_form_bound=closed_form_bound(res.k, d))
    # re-check the output with the independent checkers before reporting success
    ok = is_proper(g, col) and is_f_free(g, col, family)
    out.update(colours=colour_count(col), span=span(g, col) if is_proper(g, col) else None, verified=ok,
               colors=list(col))
    _emit(out)
    return EXIT_OK if ok else EXIT_VIOLATION


# -- reproduce ------------------------------------------------------------------

def cmd_reproduce(args) -> int:
    if args.table == "grid":
        report = tables.reproduce_grid(args.d_max)
    elif args.table == "s":
        report = tables.reproduce_s(args.k_max or 30)
    else:
        report = tables.reproduce_t(args.k_max or 15)
    if args.csv:
        sys.stdout.write(report.to_csv())
    else:
        _emit(report.to_json())
    if args.diff:
        problems = tables.diff(report)
        for line in problems:
            print(f"MISMATCH {line}", file=sys.stderr)
        return EXIT_VIOLATION if problems else EXIT_OK
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sidoncolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sidon", help="generate, verify and search k-multiplicative sets")
    ps.add_argument("action", choices=["gen", "verify", "max", "density"])
    ps.add_argument("--set", choices=["r", "s", "t"], default="s")
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--count", type=int)
    ps.add_argument("--limit", type=int)
    ps.add_argument("--elements", help="comma-separated integers for verify")
    ps.add_argument("--n", type=int, help="search range [1, n] for max")
    ps.add_argument("--budget", type=int, help=f"node budget (default: ${BUDGET_ENV} or 10^7)")
    ps.add_argument("--csv", action="store_true")
    ps.set_defaults(func=cmd_sidon)

    pc = sub.add_parser("color", help="solve, check or construct F-free colourings")
    pc.add_argument("action", choices=["solve", "check", "construct"])
    pc.add_argument("--graph", required=True, help="P5, C7^2, Q3, P3xP3xC5, inline JSON or a .json file")
    pc.add_argument("--family", default="p3", help="p3 | p4 | acyclic | none | explicit:<file>")
    pc.add_argument("--p", type=int, help="work with L(p,1)-labellings instead")
    pc.add_argument("--measure", choices=["chi", "span", "range"], default=None)
    pc.add_argument("--strategy", choices=["r", "s", "t"], default="r")
    pc.add_argument("--method", choices=["lambda", "acyclic-trees", "star-trees", "torus"], default="lambda")
    pc.add_argument("--k", type=int, help="common span bound for the factor colourings")
    pc.add_argument("--exact-factors", action="store_true", help="colour factors with the exact span solver")
    pc.add_argument("--colors", help="comma-separated colours for check")
    pc.add_argument("--coloring", help='JSON file {"colors": [...]} for check')
    pc.add_argument("--budget", type=int)
    pc.set_defaults(func=cmd_color)

    pr = sub.add_parser("reproduce", help="regenerate the S_k, T_k or grid-bound table")
    pr.add_argument("table", choices=["s", "t", "grid"])
    pr.add_argument("--k-max", type=int)
    pr.add_argument("--d-max", type=int, default=15)
    pr.add_argument("--diff", action="store_true", help="compare with the stored copy")
    pr.add_argument("--csv", action="store_true")
    pr.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    log.info("sidoncolor %s", __version__)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
