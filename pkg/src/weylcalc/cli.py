"""Command-line interface: graphs, lambda, star, expand, quadratic, zag, bs
and verify subcommands with machine-readable output.

Exact quantities print as exact rationals; eigenvalue numerics print 12
significant digits.  Exit codes: 0 success, 1 verification failure, 2 usage
error (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bohr import Hamiltonian1D, bs_eigenvalues, schrodinger_oracle
from .errors import WeylcalcError
from .funcalc import (FunctionJet, substitute_exponential, substitute_polynomial,
                      substitute_resolvent, symbol_of_function_connected,
                      symbol_of_function_labeled, symbol_of_function_unlabeled)
from .graphs import LabeledGraph, UnlabeledGraph, c_coefficient, enumerate_reduced
from .contraction import contract_graph
from .poly import parse_symbol
from .quadratic import (QuadraticForm, parse_q_matrix, quadratic_closed_symbol,
                        time_evolution_cells, zag_numbers)
from .series import DEFAULT_TRUNCATION_ORDER, MAX_TRUNCATION_ORDER
from .star import StarConfig, star_fold
from .tensors import tensor_by_name
from .verify import ALL_SUITES, run_suites

ORDER_ENV = "WEYLCALC_ORDER"


def default_order() -> int:
    value = os.environ.get(ORDER_ENV)
    if value is None:
        return DEFAULT_TRUNCATION_ORDER
    order = int(value)
    if not 0 <= order <= MAX_TRUNCATION_ORDER:
        raise WeylcalcError(f"{ORDER_ENV} must be within 0..{MAX_TRUNCATION_ORDER}")
    return order


def _add_order(parser):
    parser.add_argument("--order", type=int, default=None,
                        help="hbar truncation order (default from "
                        f"{ORDER_ENV} or {DEFAULT_TRUNCATION_ORDER})")


def _resolve_order(args) -> int:
    return default_order() if args.order is None else args.order


def _read_graph(path: str) -> LabeledGraph:
    data = sys.stdin.read() if path == "-" else open(path).read()
    return LabeledGraph.from_json(data)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_graphs(args) -> int:
    if args.action == "enum":
        graphs = enumerate_reduced(
            args.edges,
            connected_only=args.connected,
            max_vertices=args.max_vertices,
            even_components_only=not args.all_reduced)
        if args.format == "json":
            print(json.dumps([g.to_json_dict() for g in graphs]))
        else:
            for g in graphs:
                print(json.dumps(g.to_json_dict()))
            print(f"# {len(graphs)} graphs", file=sys.stderr)
        return 0
    if args.action == "invariants":
        labeled = _read_graph(args.infile)
        graph = UnlabeledGraph.from_labeled(labeled)
        payload = {"S": graph.symmetry_order(), "c": c_coefficient(graph),
                   "connected": graph.is_connected}
        print(json.dumps(payload))
        return 0
    raise WeylcalcError(f"unknown graphs action {args.action!r}")


def cmd_lambda(args) -> int:
    labeled = _read_graph(args.graph)
    symbol = parse_symbol(args.symbol)
    tensor = tensor_by_name(args.tensor, symbol.n)
    value = contract_graph(labeled, [symbol] * labeled.vertices, tensor)
    if args.format == "json":
        print(json.dumps(value.to_json_dict()))
    else:
        print(value)
    return 0


def cmd_star(args) -> int:
    order = _resolve_order(args)
    symbols = [parse_symbol(text) for text in args.symbols]
    n = max(s.n for s in symbols)
    symbols = [parse_symbol(text, n) for text in args.symbols]
    cfg = StarConfig(tensor_by_name(args.tensor, n), order)
    result = star_fold(symbols, cfg)
    if args.format == "text":
        print(result)
    else:
        print(json.dumps(result.to_json_dict()))
    return 0


def _parse_function(text: str) -> FunctionJet:
    if text == "abstract":
        return FunctionJet.abstract()
    if text == "resolvent":
        return FunctionJet.resolvent()
    if text.startswith("poly:"):
        coeffs = [Fraction(c) for c in text[5:].split(",")] if text[5:] else []
        return FunctionJet.polynomial(coeffs)
    if text.startswith("exp:"):
        return FunctionJet.exponential(Fraction(text[4:]))
    raise WeylcalcError(
        "function must be abstract, poly:c0,c1,..., exp:rate or resolvent")


def cmd_expand(args) -> int:
    order = _resolve_order(args)
    symbol = parse_symbol(args.symbol)
    cfg = StarConfig(tensor_by_name(args.tensor, symbol.n), order)
    form = args.form
    if form == "labeled":
        js = symbol_of_function_labeled(symbol, cfg)
    elif form == "connected":
        js = symbol_of_function_connected(symbol, cfg)
    else:
        js = symbol_of_function_unlabeled(symbol, cfg)
    f = _parse_function(args.function)
    if f.kind == "abstract":
        print(json.dumps(js.to_json_dict()))
    elif f.kind == "polynomial":
        print(json.dumps(substitute_polynomial(js, f, symbol).to_json_dict()))
    elif f.kind == "exponential":
        series = substitute_exponential(js, f.rate)
        print(json.dumps({"factor": f"exp({f.rate}*A)",
                          "series": series.to_json_dict()}))
    else:
        grades = substitute_resolvent(js, symbol)
        items = []
        for e, res in enumerate(grades):
            for apow, poly in sorted(res.numerator.items()):
                items.append({"hbar": e, "a_power": apow,
                              "pole_order": res.pole_order,
                              "poly": poly.to_json_dict()})
        print(json.dumps({"N": symbol.n, "truncation_order": order,
                          "terms": items}))
    return 0


def cmd_quadratic(args) -> int:
    order = _resolve_order(args)
    form = QuadraticForm.from_matrix(parse_q_matrix(args.q))
    if args.function == "abstract":
        js = quadratic_closed_symbol(form, order)
        print(json.dumps(js.to_json_dict()))
        return 0
    if args.function == "exp":
        cells = time_evolution_cells(form, order)
        items = []
        for (tpow, hpow) in sorted(cells):
            items.append({"t_power": tpow, "hbar_power": hpow,
                          "poly": cells[(tpow, hpow)].to_json_dict()})
        print(json.dumps({"N": form.n, "t_order": order, "cells": items}))
        return 0
    raise WeylcalcError("quadratic --function must be abstract or exp")


def cmd_zag(args) -> int:
    if args.k < 1:
        raise WeylcalcError("--k must be at least 1")
    print(" ".join(str(v) for v in zag_numbers(args.k - 1)))
    return 0


def cmd_bs(args) -> int:
    potential = parse_symbol(args.potential, 1)
    for exp in potential.terms:
        if exp[1] != 0:
            raise WeylcalcError("the potential must depend on x only")
    coeffs = []
    for exp, c in potential.terms.items():
        k = exp[0]
        while len(coeffs) <= k:
            coeffs.append(Fraction(0))
        if not c.is_real:
            raise WeylcalcError("the potential must be real")
        coeffs[k] = c.re
    ham = Hamiltonian1D.from_potential(Fraction(args.mass), coeffs)
    n_values = list(range(1, args.levels + 1))
    orders = [o for o in (0, 2, 4) if o <= args.order]
    columns = {}
    for order in orders:
        for level in bs_eigenvalues(ham, n_values, order, args.hbar,
                                    version=args.version):
            columns.setdefault(level.n, {})[order] = level.energy
    oracle = None
    if args.compare_oracle:
        oracle = schrodinger_oracle(coeffs, Fraction(args.mass), args.hbar,
                                    args.levels)
    print("n,E_bs0,E_bs2,E_bs4,E_oracle,abs_err")
    for n in n_values:
        row = [str(n)]
        for order in (0, 2, 4):
            value = columns.get(n, {}).get(order)
            row.append(f"{value:.12g}" if value is not None else "")
        if oracle is not None:
            reference = oracle[n - 1]
            best = columns[n][max(orders)]
            row.append(f"{reference:.12g}")
            row.append(f"{abs(best - reference):.12g}")
        else:
            row.extend(["", ""])
        print(",".join(row))
    return 0


def cmd_verify(args) -> int:
    names = args.suite or None
    results = run_suites(names, include_slow=args.all, seed=args.seed)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {status}  {r.seconds:8.2f}s  {r.detail}")
        if not r.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} suites passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcalc",
        description="Exact graph-indexed Weyl-symbol calculus and "
                    "semiclassical eigenvalue tools")
    sub = parser.add_subparsers(dest="command", required=True)

    graphs = sub.add_parser("graphs", help="enumerate graphs or compute invariants")
    gsub = graphs.add_subparsers(dest="action", required=True)
    genum = gsub.add_parser("enum", help="list isomorphism classes")
    genum.add_argument("--edges", type=int, required=True)
    genum.add_argument("--reduced", action="store_true",
                       help="accepted for symmetry with the docs; enumeration "
                       "is always over reduced graphs")
    genum.add_argument("--connected", action="store_true")
    genum.add_argument("--all-reduced", action="store_true",
                       help="include classes with odd-edge components, which "
                       "cannot contribute to the expansion")
    genum.add_argument("--max-vertices", type=int, default=None)
    genum.add_argument("--format", choices=("text", "json"), default="text")
    genum.set_defaults(func=cmd_graphs)
    ginv = gsub.add_parser("invariants", help="S, c and connectivity of a graph")
    ginv.add_argument("--in", dest="infile", required=True,
                      help="graph JSON file, or - for stdin")
    ginv.set_defaults(func=cmd_graphs)

    lam = sub.add_parser("lambda", help="contract a graph against a symbol")
    lam.add_argument("--graph", required=True, help="graph JSON file or -")
    lam.add_argument("--symbol", required=True)
    lam.add_argument("--tensor", choices=("moyal", "standard"), default="moyal")
    lam.add_argument("--format", choices=("text", "json"), default="text")
    lam.set_defaults(func=cmd_lambda)

    star = sub.add_parser("star", help="star product of symbols")
    star.add_argument("symbols", nargs="+")
    star.add_argument("--tensor", choices=("moyal", "standard"), default="moyal")
    star.add_argument("--format", choices=("text", "json"), default="json")
    _add_order(star)
    star.set_defaults(func=cmd_star)

    expand = sub.add_parser("expand", help="symbol of a function of an operator")
    expand.add_argument("--symbol", required=True)
    expand.add_argument("--function", default="abstract")
    expand.add_argument("--form", choices=("unlabeled", "labeled", "connected"),
                        default="unlabeled")
    expand.add_argument("--tensor", choices=("moyal", "standard"), default="moyal")
    _add_order(expand)
    expand.set_defaults(func=cmd_expand)

    quad = sub.add_parser("quadratic", help="closed forms for quadratic symbols")
    quad.add_argument("--Q", dest="q", required=True, help='matrix "1,0;0,1"')
    quad.add_argument("--function", choices=("abstract", "exp"), default="abstract")
    _add_order(quad)
    quad.set_defaults(func=cmd_quadratic)

    zag = sub.add_parser("zag", help="Zag numbers")
    zag.add_argument("--k", type=int, required=True, help="how many entries")
    zag.set_defaults(func=cmd_zag)

    bs = sub.add_parser("bs", help="semiclassical eigenvalues")
    bs.add_argument("--potential", required=True, help='e.g. "x^4"')
    bs.add_argument("--mass", default="1")
    bs.add_argument("--hbar", type=float, default=1.0)
    bs.add_argument("--levels", type=int, default=6)
    bs.add_argument("--order", type=int, choices=(0, 2, 4), default=4)
    bs.add_argument("--version", choices=("reduced", "full"), default="reduced")
    bs.add_argument("--compare-oracle", action="store_true")
    bs.set_defaults(func=cmd_bs)

    verify = sub.add_parser("verify", help="run the cross-oracle suites")
    verify.add_argument("--all", action="store_true",
                        help="include the slow eigenvalue and battery suites")
    verify.add_argument("--suite", action="append",
                        choices=sorted(ALL_SUITES),
                        help="run specific suites (repeatable)")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeylcalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
