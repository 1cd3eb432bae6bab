"""Physical and numerical parameters for the infinite-well problem.

Everything downstream (operator assembly, the flow, observables) reads its
constants from the three frozen dataclasses defined here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np


class State(enum.Enum):
    GROUND = 0
    FIRST_EXCITED = 1

    @property
    def s(self) -> int:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "State":
        key = name.strip().lower()
        if key in ("ground", "g", "0"):
            return cls.GROUND
        if key in ("first", "first_excited", "excited", "1"):
            return cls.FIRST_EXCITED
        raise ValueError(f"unknown state {name!r}; expected 'ground' or 'first'")

    @property
    def label(self) -> str:
        return "ground" if self is State.GROUND else "first"


def c1_alpha(alpha: float) -> float:
    """Normalization constant of the Riesz kernel, Gamma(1+a) sin(a pi/2) / pi."""
    if not 0.0 < alpha < 2.0:
        raise ValueError(f"alpha must lie in (0, 2), got {alpha}")
    return math.gamma(1.0 + alpha) * math.sin(0.5 * alpha * math.pi) / math.pi


@dataclass(frozen=True)
class WellConfig:
    alpha: float
    beta: float = 0.0
    L: float = 1.0
    state: State = State.GROUND

    def __post_init__(self):
        if not 0.0 < self.alpha < 2.0:
            raise ValueError(f"alpha must lie in (0, 2), got {self.alpha}")
        if not self.beta >= 0.0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")
        if not self.L > 0.0:
            raise ValueError(f"L must be positive, got {self.L}")
        if not isinstance(self.state, State):
            object.__setattr__(self, "state", State.parse(str(self.state)))


@dataclass(frozen=True)
class Discretization:
    """Mesh, quadrature and time-stepping parameters.

    The truncation length is pinned to A = 2L, so the tail index M equals J.
    """

    J: int
    h: float
    M: int
    A: float
    gamma: float
    sigma: float
    dt: float
    eps: float
    max_iters: int = 500_000


@dataclass(frozen=True)
class Grid:
    points: np.ndarray = field(repr=False)
    h: float
    L: float

    @property
    def J(self) -> int:
        return len(self.points) + 1

    @property
    def center(self) -> int:
        """Array index of x = 0."""
        return self.J // 2 - 1


def make_discretization(
    cfg: WellConfig,
    J: int = 2048,
    dt: float = 0.005,
    eps: float = 1e-5,
    max_iters: int = 500_000,
    gamma_override: float | None = None,
) -> Discretization:
    if int(J) != J or J < 8 or J % 2:
        raise ValueError(f"J must be an even integer >= 8, got {J}")
    J = int(J)
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")
    alpha = cfg.alpha
    if gamma_override is None:
        gamma = 1.0 - 0.5 * alpha
    else:
        gamma = float(gamma_override)
        if not 0.0 < gamma < 2.0 - alpha:
            # the weight integral of xi^(1 - alpha - gamma) over (0, h) diverges
            raise ValueError(
                f"gamma must lie in (0, 2 - alpha) = (0, {2.0 - alpha}), got {gamma}"
            )
    return Discretization(
        J=J,
        h=2.0 * cfg.L / J,
        M=J,
        A=2.0 * cfg.L,
        gamma=gamma,
        sigma=2.0 - alpha - gamma,
        dt=float(dt),
        eps=float(eps),
        max_iters=int(max_iters),
    )


def make_grid(cfg: WellConfig, disc: Discretization) -> Grid:
    j = np.arange(1, disc.J)
    # build from the left and mirror so that x_j = -x_{J-j} holds bit-for-bit
    x = -cfg.L + j * disc.h
    half = disc.J // 2
    x[half - 1] = 0.0
    x[half:] = -x[: half - 1][::-1]
    return Grid(points=x, h=disc.h, L=cfg.L)
