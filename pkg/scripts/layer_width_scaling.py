"""Boundary-layer width w against beta for fixed alpha, with a log-log slope fit.

The explicit cubic term needs a smaller time step once beta reaches a few hundred,
so the default dt here is 0.001.
"""
import argparse

import numpy as np

from fracwell.grid_config import WellConfig, make_discretization
from fracwell.records import run_case


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphas", default="0.5,1,1.5,1.9")
    ap.add_argument("--betas", default="10,20,50,100,200")
    ap.add_argument("--J", type=int, default=2048)
    ap.add_argument("--dt", type=float, default=0.001)
    args = ap.parse_args()
    betas = np.array([float(b) for b in args.betas.split(",")])
    print("alpha,beta,layer_width,mu")
    for alpha in (float(a) for a in args.alphas.split(",")):
        widths = []
        for beta in betas:
            cfg = WellConfig(alpha=alpha, beta=beta)
            rec, _ = run_case(cfg, make_discretization(cfg, args.J, args.dt))
            w = rec.observables["layer_width"]
            widths.append(w)
            print(f"{alpha},{beta:g},{w},{rec.observables['mu']:.6g}", flush=True)
        if all(w is not None for w in widths):
            q = -np.polyfit(np.log(betas), np.log(widths), 1)[0]
            print(f"# alpha={alpha}: w ~ beta^(-{q:.3f})")


if __name__ == "__main__":
    run()
