"""Command-line interface: ``nsfrac {deriv,laplace,heatflow,figure1,verify}``.

Output is CSV (or TSV) with ``#`` comment lines describing the run, one
header row, then data.  Floats are written with ``repr`` (shortest string
that round-trips), so identical invocations give byte-identical files.

Exit codes: 0 success, 1 invalid input, 2 a ``verify`` check failed.
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import List, Optional

import numpy as np

from . import __version__
from .checks import run_checks
from .core import (CAPUTO_FABRIZIO, ONE, Grid, NormalizationRule, make_order,
                   sample)
from .errors import InvalidGrid, InvalidNormalization, NsfracError
from .funcspec import parse_function_spec
from .heatflow import (HeatFlowParams, figure1_dataset, solve_steady,
                       solve_steady_via_inversion)
from .laplace import numeric_laplace, operator_symbol
from .operators import OperatorKind, fractional_derivative

EXIT_OK, EXIT_INVALID, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(NsfracError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def fmt(value) -> str:
    # +0.0 folds negative zero into zero
    return repr(float(value) + 0.0)


def parse_grid(text: str) -> Grid:
    """``start:step:stop`` or ``start..end@points``."""
    try:
        if "@" in text:
            span, points = text.split("@")
            start, end = span.split("..")
            return Grid.span(float(start), float(end), int(points))
        start, step, stop = (float(t) for t in text.split(":"))
    except ValueError as exc:
        raise InvalidGrid(f"cannot parse grid {text!r}: use start:step:stop or start..end@points") from exc
    if step <= 0 or stop <= start:
        raise InvalidGrid(f"grid {text!r} needs step > 0 and stop > start")
    intervals = (stop - start) / step
    n = round(intervals)
    if abs(intervals - n) > 1e-9 * max(1.0, intervals):
        raise InvalidGrid(f"grid {text!r}: (stop - start) is not a whole number of steps")
    return Grid(start, step, n + 1)


def parse_floats(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse number list {text!r}") from exc


def load_norm_table(path: str) -> NormalizationRule:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append([float(t) for t in line.replace(",", " ").split()])
    table = np.array(rows, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2 or table.shape[0] < 2:
        raise InvalidNormalization(f"{path}: expected at least two 'nu value' rows")
    table = table[np.argsort(table[:, 0])]
    lo, hi = table[0, 0], table[-1, 0]

    def value(nu):
        if not lo <= nu <= hi:
            raise InvalidNormalization(f"nu={nu} outside the table range [{lo}, {hi}]")
        return float(np.interp(nu, table[:, 0], table[:, 1]))

    return NormalizationRule.custom(value)


def parse_norm(text: str) -> NormalizationRule:
    if text == "one":
        return ONE
    if text == "cf":
        return CAPUTO_FABRIZIO
    if text.startswith("custom:"):
        return load_norm_table(text[len("custom:"):])
    raise UsageError(f"unknown normalization {text!r}; use one, cf or custom:<path>")


def _orders(nus):
    # all orders are validated before any computation starts
    return [(nu, make_order(nu)) for nu in sorted(set(nus))]


def cmd_deriv(args):
    f = parse_function_spec(args.fn)
    grid = parse_grid(args.grid)
    kind = OperatorKind(args.kind)
    norm = parse_norm(args.norm)
    sf = sample(f, grid)
    cols, header = [grid.nodes], ["x"]
    for nu, order in _orders(parse_floats(args.nu)):
        if kind in (OperatorKind.CAPUTO_FABRIZIO, OperatorKind.LOSADA_NIETO):
            d = fractional_derivative(f, order, kind, norm, grid=grid)
        else:
            d = fractional_derivative(sf, order, kind, norm)
        cols.append(d.values)
        header.append(f"D_nu{nu!r}")
    return header, np.column_stack(cols).tolist()


def cmd_laplace(args):
    f = parse_function_spec(args.fn)
    grid = parse_grid(args.grid)
    norm = parse_norm(args.norm)
    sf = sample(f, grid)
    image = f.laplace()
    rows = []
    for nu, order in _orders(parse_floats(args.nu)):
        d = fractional_derivative(sf, order, OperatorKind.NEW_RL, norm)
        symbol = operator_symbol(order, norm)
        for s in parse_floats(args.s):
            numeric = numeric_laplace(d, s)
            exact = float(symbol(s) * image(s))
            rows.append([nu, s, numeric, exact, abs(numeric - exact) / abs(exact) if exact else abs(numeric)])
    return ["nu", "s", "numeric", "symbolic", "rel_err"], rows


def cmd_heatflow(args):
    grid = parse_grid(args.grid)
    norm = parse_norm(args.norm)
    solve = solve_steady if args.method == "closed" else solve_steady_via_inversion
    runs = [(nu, HeatFlowParams.from_nu(nu, args.K, args.g, args.C, norm))
            for nu in sorted(set(parse_floats(args.nu)))]
    cols, header = [grid.nodes], ["x"]
    for nu, params in runs:
        cols.append(solve(params, grid).temperatures)
        header.append(f"T_nu{nu!r}")
    return header, np.column_stack(cols).tolist()


def cmd_figure1(args):
    series = figure1_dataset(args.xmax, args.points)
    header = ["x"] + [f"T_nu{s.nu_label!r}" for s in series]
    cols = [series[0].xs] + [s.temperatures for s in series]
    return header, np.column_stack(cols).tolist()


def cmd_verify(args):
    wanted = set(args.only.split(",")) if args.only else None
    results = run_checks(lambda name: wanted is None or name in wanted)
    rows = [[r.name, r.measured, r.tolerance, "PASS" if r.passed else "FAIL"] for r in results]
    args._failed = not all(r.passed for r in results)
    return ["property", "measured", "tolerance", "status"], rows


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nsfrac", description="Exponential-kernel fractional derivatives and steady heat flow.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
        sp.add_argument("--format", choices=("csv", "tsv"), default="csv")

    sp = sub.add_parser("deriv", help="fractional derivative of a closed-form function")
    sp.add_argument("--fn", required=True, help="function spec, e.g. 'x', '2*x + 1', 'exp(-1)'")
    sp.add_argument("--nu", required=True, help="order or comma-separated orders in (0,1)")
    sp.add_argument("--grid", default="0:0.001:1", help="start:step:stop or start..end@points")
    sp.add_argument("--kind", choices=[k.value for k in OperatorKind], default="rl")
    sp.add_argument("--norm", default="one", help="one, cf or custom:<table path>")
    common(sp)
    sp.set_defaults(func=cmd_deriv)

    sp = sub.add_parser("laplace", help="compare numeric Laplace transform of D f with the symbol")
    sp.add_argument("--fn", default="exp(-1)")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--s", default="1,2,5")
    sp.add_argument("--grid", default="0:0.001:40")
    sp.add_argument("--norm", default="one")
    common(sp)
    sp.set_defaults(func=cmd_laplace)

    sp = sub.add_parser("heatflow", help="steady fractional heat-flow temperature profile")
    sp.add_argument("--nu", required=True, help="orders in (0,1]; 1 selects the classical law")
    sp.add_argument("--K", type=float, required=True, help="thermal conductivity")
    sp.add_argument("--g", type=float, required=True, help="constant heat flow")
    sp.add_argument("--C", type=float, default=1.0, help="solution constant")
    sp.add_argument("--grid", required=True)
    sp.add_argument("--method", choices=("closed", "inversion"), default="closed")
    sp.add_argument("--norm", default="one")
    common(sp)
    sp.set_defaults(func=cmd_heatflow)

    sp = sub.add_parser("figure1", help="reference lines nu=0.3, 0.6, 1 with C=-1, g=2, K=3")
    sp.add_argument("--xmax", type=float, required=True)
    sp.add_argument("--points", type=int, default=101)
    common(sp)
    sp.set_defaults(func=cmd_figure1)

    sp = sub.add_parser("verify", help="run the built-in invariant checks")
    sp.add_argument("--only", default="", help="comma-separated check names")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def _params_line(args) -> str:
    skip = {"func", "output", "format", "command"}
    items = sorted((k, v) for k, v in vars(args).items() if k not in skip and not k.startswith("_"))
    return "; ".join(f"{k}={v}" for k, v in items)


def write_table(stream, args, header, rows):
    stream.write(f"# nsfrac {args.command}\n")
    stream.write(f"# params: {_params_line(args)}\n")
    stream.write("# seedless deterministic\n")
    writer = csv.writer(stream, delimiter="," if args.format == "csv" else "\t",
                        lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else fmt(v) for v in row])


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        header, rows = args.func(args)
    except (NsfracError, ValueError, OSError) as exc:
        print(f"nsfrac {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output == "-":
        write_table(sys.stdout, args, header, rows)
    else:
        with open(args.output, "w", newline="") as fh:
            write_table(fh, args, header, rows)
    if getattr(args, "_failed", False):
        print("nsfrac verify: one or more checks failed", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
