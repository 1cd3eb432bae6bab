"""Run records: one solve bundled with its inputs, observables and reference values."""
from __future__ import annotations

import csv
import dataclasses
import datetime as _dt
import io
import json
from dataclasses import dataclass

import numpy as np

from . import __version__
from .grid_config import Discretization, State, WellConfig, make_discretization, make_grid
from .gradient_flow import FlowReport, NonConvergence, StateVector, solve_flow
from .observables import Observables, compute_observables
from .operator import assemble
from . import reference

SWEEP_COLUMNS = (
    "alpha", "beta", "state", "J", "dt", "eps",
    "mu", "mu_kin", "mu_int", "energy", "expected_x", "variance_x",
    "x_c", "rho_max", "layer_width", "iterations", "residual", "converged",
)


@dataclass(frozen=True)
class RunRecord:
    config: dict
    discretization: dict
    observables: dict
    flow: dict
    reference: dict
    timestamp: str
    version: str = __version__

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        # float repr is the shortest string that round-trips exactly
        return json.dumps(self.to_dict(), indent=indent, allow_nan=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls.from_dict(json.loads(text))

    @property
    def converged(self) -> bool:
        return bool(self.flow["converged"])

    def sweep_row(self) -> dict:
        cfg, disc, obs, flow = self.config, self.discretization, self.observables, self.flow
        return {
            "alpha": cfg["alpha"], "beta": cfg["beta"], "state": cfg["state"],
            "J": disc["J"], "dt": disc["dt"], "eps": disc["eps"],
            **{k: obs[k] for k in SWEEP_COLUMNS[6:15]},
            "iterations": flow["iterations"], "residual": flow["final_residual"],
            "converged": flow["converged"],
        }


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def format_csv(rows, columns=SWEEP_COLUMNS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def reference_columns(cfg: WellConfig) -> dict:
    s = cfg.state.s
    ref = {}
    if cfg.beta == 0:
        row = reference.bounds_row(cfg.alpha, s) if cfg.L == 1.0 else None
        if row is not None:
            ref.update(lower=row.lower, upper=row.upper, asymptotic=row.asymptotic)
        ref["standard_mu"] = reference.standard_eigenpair(s, cfg.L, 0.0)[1]
        ref["standard_variance"] = reference.standard_variance(s, cfg.L)
    elif cfg.beta >= 10:
        ref["thomas_fermi_mu"] = reference.thomas_fermi_mu(s, cfg.beta, cfg.L)
    return ref


def _obs_dict(obs: Observables) -> dict:
    return {k: (None if v is None else float(v)) for k, v in dataclasses.asdict(obs).items()}


def _flow_dict(report: FlowReport) -> dict:
    return {
        "iterations": int(report.iterations),
        "final_residual": float(report.final_residual),
        "converged": bool(report.converged),
        "wall_time": float(report.wall_time),
        "energy_monotone": bool(report.energy_monotone),
        "parity_broken": bool(report.parity_broken),
    }


def run_case(cfg: WellConfig, disc: Discretization, **flow_kwargs) -> tuple[RunRecord, StateVector]:
    """Solve one configuration.  Non-convergence yields a record flagged converged=false."""
    op = assemble(cfg, disc)
    grid = make_grid(cfg, disc)
    try:
        phi, report = solve_flow(cfg, disc, op=op, **flow_kwargs)
    except NonConvergence as err:
        phi, report = err.state, err.report
    obs = compute_observables(op, phi, grid, cfg.beta, cfg.state)
    record = RunRecord(
        config={"alpha": cfg.alpha, "beta": cfg.beta, "L": cfg.L, "state": cfg.state.label},
        discretization=dataclasses.asdict(disc),
        observables=_obs_dict(obs),
        flow=_flow_dict(report),
        reference=reference_columns(cfg),
        timestamp=_dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    )
    return record, phi


@dataclass(frozen=True)
class CaseSpec:
    """Picklable description of one sweep point."""

    alpha: float
    beta: float
    state: str
    L: float = 1.0
    J: int = 2048
    dt: float = 0.005
    eps: float = 1e-5
    max_iters: int = 500_000
    gamma: float | None = None

    def build(self) -> tuple[WellConfig, Discretization]:
        cfg = WellConfig(alpha=self.alpha, beta=self.beta, L=self.L, state=State.parse(self.state))
        disc = make_discretization(cfg, self.J, self.dt, self.eps, self.max_iters, self.gamma)
        return cfg, disc


def run_spec(spec: CaseSpec) -> RunRecord:
    cfg, disc = spec.build()
    return run_case(cfg, disc)[0]


def state_csv(grid_points: np.ndarray, phi: StateVector) -> str:
    buf = io.StringIO()
    buf.write("x,phi\n")
    for x, v in zip(grid_points, phi.values):
        buf.write(f"{x!r},{float(v)!r}\n")
    return buf.getvalue()


__all__ = [
    "CaseSpec", "RunRecord", "SWEEP_COLUMNS", "format_csv", "reference_columns",
    "run_case", "run_spec", "state_csv",
]
