"""Periodic trapezoidal rule and product weights for the log kernel.

The log weights integrate

    -(1/4pi) int_{-L}^{L} ln(4 sin^2(pi (x - x0) / 2L)) F(x0) dx0

exactly once F is replaced by its trigonometric interpolant on the n
equispaced nodes.  From the cosine series of ln(4 sin^2) the integral of
``cos(m pi x0/L)`` is ``L/(2 pi m) cos(m pi x/L)`` (zero for m = 0), and
integrating the Lagrange basis gives

    R_j(x) = L/(pi n) [ sum_{m=1}^{N-1} cos(m pi (x - x_j)/L) / m
                        + cos(N pi (x - x_j)/L) / n ],    N = n/2.
"""

from dataclasses import dataclass, field

import numpy as np

from .geometry import sample_nodes


def trapezoid_integrate(values, grid):
    """Arc-length integral over one period of the interface."""
    v = np.asarray(values, dtype=float)
    return float(grid.spacing * np.sum(v * grid.arc))


def _check_even(n):
    n = int(n)
    if n < 4 or n % 2:
        raise ValueError(f"log weights need an even n >= 4, got {n}")
    return n


def log_weight_function(x, n, L):
    """R_j(x) for all nodes j at arbitrary points ``x``; shape ``x.shape + (n,)``."""
    n = _check_even(n)
    N = n // 2
    d = np.asarray(x, dtype=float)[..., None] - sample_nodes(n, L)
    theta = np.pi * d / L
    m = np.arange(1, N)
    total = (np.cos(theta[..., None] * m) / m).sum(axis=-1) + np.cos(N * theta) / n
    return L / (np.pi * n) * total


@dataclass(frozen=True, eq=False)
class LogWeightTable:
    """Weights R_j(x_i) on the node grid.

    The table is circulant: entry (i, j) depends only on (i - j) mod n,
    so only ``row[d] = R_0(x_d)`` is stored.
    """

    n: int
    L: float
    row: np.ndarray = field(repr=False)

    @property
    def table(self):
        idx = (np.arange(self.n)[:, None] - np.arange(self.n)[None, :]) % self.n
        return self.row[idx]

    def apply(self, values):
        """``sum_j R_j(x_i) values_j`` for every node i (via FFT)."""
        v = np.asarray(values, dtype=float)
        return np.fft.irfft(np.fft.rfft(self.row) * np.fft.rfft(v), self.n)


def log_weights(n, L):
    """Circulant log-kernel weight table for ``n`` nodes on [-L, L)."""
    n = _check_even(n)
    N = n // 2
    coeffs = np.zeros(N + 1)
    m = np.arange(1, N)
    # irfft(coeffs)[d] = (1/n)(2 sum spec_m cos(2 pi m d/n) + spec_N (-1)^d)
    coeffs[1:N] = n / (2.0 * m)
    coeffs[N] = 1.0
    row = L / (np.pi * n) * np.fft.irfft(coeffs, n)
    row.setflags(write=False)
    return LogWeightTable(n, float(L), row)
