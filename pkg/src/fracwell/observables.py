"""Quantities reported for a converged state.

All integrals are h * sum over interior points; the wave function vanishes at
x = +-L so this is the trapezoid rule as well.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass

import numpy as np

from .grid_config import Grid, State
from .gradient_flow import StateVector
from .operator import FractionalOperator, matvec_fast

log = logging.getLogger(__name__)

ETA_DEFAULT = np.sqrt(2.0) / 2.0


class AmbiguousPeakWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Observables:
    mu: float
    mu_kin: float
    mu_int: float
    energy: float
    expected_x: float
    variance_x: float
    x_c: float | None = None
    rho_max: float | None = None
    layer_width: float | None = None


def chemical_potential(op: FractionalOperator, phi: StateVector, beta: float) -> tuple[float, float, float]:
    v = phi.values
    mu_kin = -phi.h * float(np.dot(v, matvec_fast(op, v)))
    mu_int = beta * phi.h * float(np.sum(v**4))
    return mu_kin + mu_int, mu_kin, mu_int


def total_energy(op: FractionalOperator, phi: StateVector, beta: float) -> float:
    _, mu_kin, mu_int = chemical_potential(op, phi, beta)
    return mu_kin + 0.5 * mu_int


def eigen_residual(op: FractionalOperator, phi: StateVector, beta: float) -> float:
    """max |-D phi + beta phi^3 - mu phi| over the interior."""
    mu, _, _ = chemical_potential(op, phi, beta)
    v = phi.values
    return float(np.max(np.abs(-matvec_fast(op, v) + beta * v**3 - mu * v)))


def position_moments(phi: StateVector, grid: Grid) -> tuple[float, float]:
    rho = phi.values**2
    x = grid.points
    mean = grid.h * float(np.dot(x, rho))
    var = grid.h * float(np.dot((x - mean) ** 2, rho))
    return mean, var


def density_peak(phi: StateVector, grid: Grid) -> tuple[float, float]:
    """Location and height of the density maximum on (0, L)."""
    right = grid.points > 0
    x = grid.points[right]
    rho = phi.values[right] ** 2
    k = int(np.argmax(rho))
    near_top = np.flatnonzero(rho >= rho[k] * (1.0 - 1e-12))
    if near_top[-1] - near_top[0] + 1 > 3:
        warnings.warn(
            f"density maximum is flat over {near_top[-1] - near_top[0] + 1} grid cells",
            AmbiguousPeakWarning,
            stacklevel=2,
        )
    return float(x[k]), float(rho[k])


def _first_crossing(x: np.ndarray, slope: np.ndarray, eta: float) -> float | None:
    above = slope >= eta
    if not above[0]:
        return None
    drops = np.flatnonzero(above[:-1] & ~above[1:])
    if len(drops) == 0:
        return None
    i = drops[0]
    # linear interpolation of |phi'| between the two bracketing nodes
    frac = (slope[i] - eta) / (slope[i] - slope[i + 1])
    return float(x[i] + frac * (x[i + 1] - x[i]))


def layer_width(phi: StateVector, grid: Grid, eta: float = ETA_DEFAULT, side: str = "left") -> float | None:
    """Boundary-layer width L - |xbar|, where |phi'(xbar)| = eta.

    Scans inward from the wall and takes the first place where |phi'| falls
    through ``eta``.  Returns None when there is no such crossing, i.e. the
    profile has no boundary layer at this threshold.
    """
    if not eta > 0:
        raise ValueError("eta must be positive")
    x = grid.points
    slope = np.abs(np.gradient(phi.values, grid.h))
    if side == "left":
        xbar = _first_crossing(x, slope, eta)
    elif side == "right":
        xbar = _first_crossing(-x[::-1], slope[::-1], eta)
    else:
        raise ValueError("side must be 'left' or 'right'")
    if xbar is None:
        return None
    return grid.L - abs(xbar)


def compute_observables(
    op: FractionalOperator,
    phi: StateVector,
    grid: Grid,
    beta: float,
    state: State,
    eta: float = ETA_DEFAULT,
) -> Observables:
    mu, mu_kin, mu_int = chemical_potential(op, phi, beta)
    mean, var = position_moments(phi, grid)
    x_c = rho_max = w = None
    if state is State.FIRST_EXCITED:
        x_c, rho_max = density_peak(phi, grid)
    elif beta > 0:
        w = layer_width(phi, grid, eta)
        if w is None:
            log.info("no boundary layer at eta=%g (beta=%g)", eta, beta)
    return Observables(
        mu=mu,
        mu_kin=mu_kin,
        mu_int=mu_int,
        energy=mu_kin + 0.5 * mu_int,
        expected_x=mean,
        variance_x=var,
        x_c=x_c,
        rho_max=rho_max,
        layer_width=w,
    )
