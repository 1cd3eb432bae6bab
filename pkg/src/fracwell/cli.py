"""Command-line driver: ``fracwell solve|sweep|bounds|operator-demo``.

Exit codes: 0 success, 1 usage or domain error, 2 non-convergence.
"""
from __future__ import annotations

import argparse
import io
import itertools
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import reference
from .grid_config import State, WellConfig, make_discretization, make_grid
from .operator import apply_to_samples, assemble, dump_weights_csv
from .records import CaseSpec, format_csv, run_case, run_spec, state_csv

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}")


def _add_common(p, alpha_required=True):
    p.add_argument("--alpha", type=float, required=alpha_required)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--state", default="ground", help="ground | first")
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--J", type=int, default=2048)
    p.add_argument("--dt", type=float, default=0.005)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--max-iters", type=int, default=500_000)
    p.add_argument("--gamma", type=float, default=None, help="splitting exponent, default 1 - alpha/2")
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracwell", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute one stationary state")
    _add_common(p)
    p.add_argument("--dump-state", default=None, help="write x,phi samples to this CSV")

    p = sub.add_parser("sweep", help="solve over alpha/beta grids, CSV to stdout or --out")
    _add_common(p, alpha_required=False)
    p.add_argument("--alpha-list", type=_float_list, default=None)
    p.add_argument("--beta-list", type=_float_list, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("bounds", help="published eigenvalue bounds and asymptotics")
    p.add_argument("--alpha-list", type=_float_list, required=True)
    p.add_argument("--state", default="ground", help="ground | first | both")
    p.add_argument("--out", default=None)

    p = sub.add_parser("operator-demo", help="discrete (-Delta)^(alpha/2) of sin(pi(1+x)/2)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--J", type=int, default=1024)
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--weights", default=None, help="also dump the Toeplitz weights as lag,weight CSV")
    p.add_argument("--out", default=None)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _states(name: str) -> list[str]:
    if name.strip().lower() == "both":
        return ["ground", "first"]
    return [State.parse(name).label]


def cmd_solve(args) -> int:
    cfg = WellConfig(alpha=args.alpha, beta=args.beta, L=args.L, state=State.parse(args.state))
    disc = make_discretization(cfg, args.J, args.dt, args.eps, args.max_iters, args.gamma)
    record, phi = run_case(cfg, disc)
    _emit(record.to_json() + "\n", args.out)
    if args.dump_state:
        with open(args.dump_state, "w") as fh:
            fh.write(state_csv(make_grid(cfg, disc).points, phi))
    if not record.converged:
        print(f"fracwell: no convergence (residual {record.flow['final_residual']:.3e})", file=sys.stderr)
        return EXIT_NONCONVERGED
    return EXIT_OK


def sweep_specs(args) -> list[CaseSpec]:
    alphas = args.alpha_list if args.alpha_list is not None else ([args.alpha] if args.alpha is not None else [])
    betas = args.beta_list if args.beta_list is not None else [args.beta]
    if not alphas or not betas:
        raise UsageError("sweep needs a non-empty --alpha-list (or --alpha) and --beta-list")
    specs = []
    for alpha, beta, state in itertools.product(alphas, betas, _states(args.state)):
        spec = CaseSpec(alpha, beta, state, args.L, args.J, args.dt, args.eps, args.max_iters, args.gamma)
        spec.build()  # validate every point before any work starts
        specs.append(spec)
    return specs


def cmd_sweep(args) -> int:
    specs = sweep_specs(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(run_spec, specs))
    else:
        records = [run_spec(s) for s in specs]
    _emit(format_csv(r.sweep_row() for r in records), args.out)
    return EXIT_OK if all(r.converged for r in records) else EXIT_NONCONVERGED


BOUNDS_COLUMNS = ("alpha", "s", "chen_lower", "chen_upper", "banuelos_lower", "banuelos_upper", "kwasnicki")


def bounds_rows(alphas, states):
    for alpha in alphas:
        for name in states:
            s = State.parse(name).s
            row = reference.bounds_row(alpha, s)
            yield {
                "alpha": alpha, "s": s,
                "chen_lower": row.chen_lower, "chen_upper": row.chen_upper,
                "banuelos_lower": row.banuelos_lower, "banuelos_upper": row.banuelos_upper,
                "kwasnicki": row.asymptotic,
            }


def cmd_bounds(args) -> int:
    if not args.alpha_list:
        raise UsageError("--alpha-list is empty")
    rows = list(bounds_rows(args.alpha_list, _states(args.state)))
    _emit(format_csv(rows, BOUNDS_COLUMNS), args.out)
    return EXIT_OK


def operator_demo_table(alpha: float, J: int, L: float = 1.0, gamma: float | None = None):
    cfg = WellConfig(alpha=alpha, L=L)
    disc = make_discretization(cfg, J, gamma_override=gamma)
    x = make_grid(cfg, disc).points
    u = np.sin(0.5 * np.pi * (1.0 + x / L))
    return x, u, apply_to_samples(cfg, disc, u), (cfg, disc)


def cmd_operator_demo(args) -> int:
    x, u, lu, (cfg, disc) = operator_demo_table(args.alpha, args.J, args.L, args.gamma)
    buf = io.StringIO()
    buf.write("x,u,Lu\n")
    for row in zip(x, u, lu):
        buf.write(",".join(repr(float(v)) for v in row) + "\n")
    _emit(buf.getvalue(), args.out)
    if args.weights:
        dump_weights_csv(assemble(cfg, disc), args.weights)
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "bounds": cmd_bounds,
    "operator-demo": cmd_operator_demo,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        return COMMANDS[args.command](args)
    except UsageError as err:
        print(f"fracwell: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        # domain errors from config validation
        print(f"fracwell: error: {err}", file=sys.stderr)
        return EXIT_USAGE
