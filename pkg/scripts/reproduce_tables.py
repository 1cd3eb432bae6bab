"""Recompute the linear and nonlinear eigenvalue tables.

    python3 scripts/reproduce_tables.py --J 2048 --jobs 1 --outdir results/

Writes table1.csv .. table4.csv. Use --J 8192 for the h = 1/4096 mesh.
"""
import argparse
import pathlib

from fracwell.cli import main
from fracwell.reference import TABLE_ALPHAS

NONLINEAR_ALPHAS = (0.3, 0.5, 0.7, 0.9, 1.0, 1.1, 1.3, 1.5, 1.7, 1.9)
NONLINEAR_BETAS = (1, 5, 10, 50)


def _list(xs):
    return ",".join(str(x) for x in xs)


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--J", type=int, default=2048)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    jobs = {
        "table1": (TABLE_ALPHAS, (0,), "ground"),
        "table2": (TABLE_ALPHAS, (0,), "first"),
        "table3": (NONLINEAR_ALPHAS, NONLINEAR_BETAS, "ground"),
        "table4": (NONLINEAR_ALPHAS, NONLINEAR_BETAS, "first"),
    }
    worst = 0
    for name, (alphas, betas, state) in jobs.items():
        argv = [
            "sweep", "--alpha-list", _list(alphas), "--beta-list", _list(betas),
            "--state", state, "--J", str(args.J), "--jobs", str(args.jobs),
            "--out", str(out / f"{name}.csv"),
        ]
        code = main(argv)
        print(f"{name}: exit {code} -> {out / (name + '.csv')}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    raise SystemExit(run())
