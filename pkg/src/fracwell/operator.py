"""Discrete Riesz fractional Laplacian on the interior grid.

The matrix D approximates -(-Delta)^{alpha/2} with the nonzero volume
constraint built in (exterior samples are zero and never stored).  It is a
symmetric Toeplitz matrix, so it is kept as its first column only:
``diag`` plus the lagged weights ``offdiag[k-1] = D[j, j+k]``.
"""
from __future__ import annotations

import csv
import functools
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .grid_config import Discretization, WellConfig, c1_alpha


def quadrature_weights(n: int, gamma: float, sigma: float) -> np.ndarray:
    """((l+1)^sigma - (l-1)^sigma) / (sigma l^(2-gamma)) for l = 1..n."""
    l = np.arange(1, n + 1, dtype=float)
    return ((l + 1.0) ** sigma - (l - 1.0) ** sigma) / (sigma * l ** (2.0 - gamma))


@dataclass(frozen=True)
class FractionalOperator:
    diag: float
    offdiag: np.ndarray = field(repr=False)
    cfg: WellConfig
    disc: Discretization

    @property
    def n(self) -> int:
        return len(self.offdiag) + 1

    @property
    def column(self) -> np.ndarray:
        return np.concatenate(([self.diag], self.offdiag))

    @functools.cached_property
    def embedding_size(self) -> int:
        return 1 << int(np.ceil(np.log2(2 * self.n)))

    @functools.cached_property
    def symbol(self) -> np.ndarray:
        """rfft of the circulant that embeds D."""
        size = self.embedding_size
        c = np.zeros(size)
        col = self.column
        c[: self.n] = col
        c[size - self.n + 1 :] = col[1:][::-1]
        return np.fft.rfft(c)

    def dense(self) -> np.ndarray:
        return scipy.linalg.toeplitz(self.column)

    def __matmul__(self, v):
        return matvec_fast(self, v)


def assemble(cfg: WellConfig, disc: Discretization) -> FractionalOperator:
    alpha, h, M, A = cfg.alpha, disc.h, disc.M, disc.A
    gamma, sigma = disc.gamma, disc.sigma
    scale = c1_alpha(alpha) / h**alpha

    w = quadrature_weights(M - 1, gamma, sigma)
    # the l = M node only sees -2 phi_j; its weight uses the half cell (M-1, M)
    w_tail = (M**sigma - (M - 1.0) ** sigma) / (sigma * M ** (2.0 - gamma))
    # exact contribution of xi in (A, inf), rescaled by h^alpha
    w_far = 2.0 * h**alpha / (alpha * A**alpha)

    # summing the small terms first keeps the long diagonal sum stable
    diag = -scale * (math.fsum(w[::-1]) + w_tail + w_far)
    offdiag = 0.5 * scale * w[: disc.J - 2]
    return FractionalOperator(diag=diag, offdiag=offdiag, cfg=cfg, disc=disc)


def _check_length(op: FractionalOperator, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.shape[0] != op.n:
        raise ValueError(f"expected a vector of length {op.n}, got shape {v.shape}")
    return v


def matvec_dense(op: FractionalOperator, v) -> np.ndarray:
    v = _check_length(op, v)
    return op.dense() @ v


def matvec_fast(op: FractionalOperator, v) -> np.ndarray:
    """D @ v through a power-of-two circulant embedding, O(J log J)."""
    v = _check_length(op, v)
    size = op.embedding_size
    return np.fft.irfft(op.symbol * np.fft.rfft(v, size), size)[: op.n]


def apply_to_samples(cfg: WellConfig, disc: Discretization, f) -> np.ndarray:
    """(-Delta)^{alpha/2} f at the interior points, f zero outside the well."""
    op = assemble(cfg, disc)
    return -matvec_fast(op, f)


def dump_weights_csv(op: FractionalOperator, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["lag", "weight"])
        for lag, weight in enumerate(op.column):
            writer.writerow([lag, repr(float(weight))])
