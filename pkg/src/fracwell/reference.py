"""Closed-form comparison values.

Standard (alpha = 2) eigenpairs and Thomas-Fermi profiles, plus the published
eigenvalue bounds and asymptotics for the fractional linear problem.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

TABLE_ALPHAS = (0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0, 1.1, 1.3, 1.5, 1.7, 1.9, 1.99)


def _check_s(s: int) -> None:
    if s not in (0, 1):
        raise ValueError(f"only s = 0 (ground) and s = 1 (first excited) are supported, got {s}")


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must lie in (0, 2], got {alpha}")


def beta_function(a: float, b: float) -> float:
    return math.gamma(a) * math.gamma(b) / math.gamma(a + b)


def standard_eigenpair(s: int, L: float, x):
    """Exact s-th eigenfunction value at x and eigenvalue of -u'' on (-L, L)."""
    _check_s(s)
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > L):
        raise ValueError("x must satisfy |x| <= L")
    phi = np.sqrt(1.0 / L) * np.sin(0.5 * (s + 1) * np.pi * (1.0 + x / L))
    mu = (0.5 * (s + 1) * np.pi / L) ** 2
    return (float(phi) if phi.ndim == 0 else phi), mu


def standard_variance(s: int, L: float = 1.0) -> float:
    _check_s(s)
    return L**2 / 3.0 * (1.0 - 6.0 / (np.pi**2 * (s + 1) ** 2))


def thomas_fermi_mu(s: int, beta: float, L: float = 1.0) -> float:
    k = s + 2
    return (0.5 * L * beta + k * math.sqrt(beta * L + k**2) + k**2) / L**2


def thomas_fermi(s: int, beta: float, L: float, x):
    """Strong-interaction (beta >> 1) approximation of the standard nonlinear state."""
    _check_s(s)
    if beta < 10:
        warnings.warn(f"Thomas-Fermi approximation is meant for beta >> 1, got beta={beta}", stacklevel=2)
    mu = thomas_fermi_mu(s, beta, L)
    x = np.asarray(x, dtype=float)
    k = 0.5 * math.sqrt(2.0 * mu) * L
    y = 1.0 + x / L
    total = np.zeros_like(y)
    for r in range((s + 1) // 2 + 1):
        total += np.tanh(k * (y - 4.0 * r / (s + 1)))
    for r in range(s // 2 + 1):
        total += np.tanh(k * ((4.0 * r + 2.0) / (s + 1) - y))
    c_s = 1.0 if s % 2 == 0 else 0.0
    phi = math.sqrt(mu / beta) * (total - c_s * math.tanh(k))
    return (float(phi) if phi.ndim == 0 else phi), mu


def chen_bounds(s: int, alpha: float, l: float = 2.0) -> tuple[float, float]:
    """Bounds 0.5 q^alpha <= mu_s <= q^alpha with q = (s+1) pi / l, valid for every s."""
    _check_alpha(alpha)
    if not l > 0:
        raise ValueError("interval length must be positive")
    upper = ((s + 1) * math.pi / l) ** alpha
    return 0.5 * upper, upper


def banuelos_bounds(alpha: float) -> tuple[float, float]:
    """Sharper ground-state bounds on (-1, 1)."""
    _check_alpha(alpha)
    p = 2.0**alpha * math.gamma(1.0 + 0.5 * alpha) * math.gamma(0.5 * (1.0 + alpha)) / math.gamma(0.5)
    ratio = beta_function(0.5, 1.0 + 0.5 * alpha) / beta_function(0.5, 1.0 + alpha)
    return p, p * ratio


def kwasnicki_mu(s: int, alpha: float) -> float:
    """Leading asymptotic term for the s-th eigenvalue on (-1, 1)."""
    _check_alpha(alpha)
    return (0.5 * (s + 1) * math.pi - (2.0 - alpha) * math.pi / 8.0) ** alpha


@dataclass(frozen=True)
class BoundsRow:
    alpha: float
    s: int
    lower: float
    upper: float
    asymptotic: float
    chen_lower: float
    chen_upper: float
    banuelos_lower: float | None = None
    banuelos_upper: float | None = None


def bounds_row(alpha: float, s: int) -> BoundsRow:
    """Reference row; the sharper ground-state pair is used for s = 0 when available."""
    _check_s(s)
    c_lo, c_hi = chen_bounds(s, alpha, 2.0)
    b_lo = b_hi = None
    lo, hi = c_lo, c_hi
    if s == 0:
        b_lo, b_hi = banuelos_bounds(alpha)
        lo, hi = b_lo, b_hi
    return BoundsRow(
        alpha=alpha,
        s=s,
        lower=lo,
        upper=hi,
        asymptotic=kwasnicki_mu(s, alpha),
        chen_lower=c_lo,
        chen_upper=c_hi,
        banuelos_lower=b_lo,
        banuelos_upper=b_hi,
    )
