"""Nystrom discretization of the interface integral equations.

Potential (second kind, trapezoidal rule)::

    phi_i - 2 mu sum_j (2L/n) k_ij arc_j phi_j = 2 eps1/(eps1 + eps2) phi_H(x_i, h_i)
    mu = (eps2 - eps1) / (eps1 + eps2)

Normal derivative (first kind, log product quadrature plus trapezoid)::

    sum_j (R_j(x_i) + (2L/n) s_ij) arc_j u_j
        = (eps2/eps_alpha) (-phi_i/2 + sum_j (2L/n) k_ij arc_j phi_j)

The normal points out of the oil layer (region 1) into the air.
"""

import logging
import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .geometry import NodeGrid, build_grid, spectral_derivative
from .kernels import double_layer_matrix, smooth_single_layer_matrix
from .oracles import HalfPlaneData, phi_H
from .quadrature import log_weights

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-11


class SolverError(RuntimeError):
    """Raised when a discrete system cannot be solved reliably."""


@dataclass(frozen=True)
class ProblemParams:
    """Dielectric constants and boundary data of a transmission problem."""

    eps1: float
    eps2: float
    data: HalfPlaneData

    def __post_init__(self):
        if not (self.eps1 > 0 and self.eps2 > 0):
            raise ValueError("dielectric constants must be positive")

    @classmethod
    def cosine(cls, eps1=8.0, eps2=1.0, L=1.0, A=1.0):
        return cls(float(eps1), float(eps2), HalfPlaneData.cosine(A, L))

    @property
    def L(self):
        return self.data.L

    @property
    def mu(self):
        return (self.eps2 - self.eps1) / (self.eps1 + self.eps2)


@dataclass(frozen=True, eq=False)
class DenseSystem:
    matrix: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)
    grid: NodeGrid


@dataclass(frozen=True, eq=False)
class InterfaceSolution:
    """Potential and its derivatives at the interface nodes.

    ``dphi_dnu_1`` is the normal derivative from the oil side,
    ``dphi_dnu_2`` from the air side; ``eps1 * dphi_dnu_1 == eps2 * dphi_dnu_2``.
    """

    grid: NodeGrid
    phi: np.ndarray = field(repr=False)
    dphi_dnu_1: np.ndarray = field(repr=False)
    dphi_dnu_2: np.ndarray = field(repr=False)
    dphi_dtau: np.ndarray = field(repr=False)
    residuals: dict = field(default_factory=dict, repr=False)


def _check_compatible(profile, params):
    if profile.L != params.L:
        raise ValueError(f"profile half period {profile.L} != problem half period {params.L}")


def discrete_double_layer(grid, backend=None):
    """The matrix of ``phi -> K phi`` at the nodes, ``(2L/n) k_ij arc_j``."""
    return grid.spacing * double_layer_matrix(grid, backend) * grid.arc[None, :]


def assemble_second_kind(profile, params, n, *, grid=None, K=None):
    """Assemble ``(I - 2 mu K_n) phi = 2 eps1/(eps1+eps2) phi_H``.

    ``grid`` and the discrete double layer ``K`` may be supplied to reuse
    work already done on the same nodes.
    """
    _check_compatible(profile, params)
    grid = grid if grid is not None else build_grid(profile, n)
    if grid.n != n:
        raise ValueError("grid size does not match n")
    K = K if K is not None else discrete_double_layer(grid)
    matrix = np.eye(n) - 2.0 * params.mu * K
    rhs = 2.0 * params.eps1 / (params.eps1 + params.eps2) * phi_H(params.data, (grid.x, grid.h))
    return DenseSystem(matrix, np.asarray(rhs, dtype=float), grid)


def _lu_solve(system, what):
    A, b = system.matrix, system.rhs
    if not np.all(np.isfinite(A)) or not np.all(np.isfinite(b)):
        raise SolverError(f"{what}: non-finite entries in the system")
    try:
        with warnings.catch_warnings():
            # an exactly singular pivot is reported below as SolverError
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    except (ValueError, np.linalg.LinAlgError) as exc:  # pragma: no cover
        raise SolverError(f"{what}: factorization failed: {exc}") from exc
    if np.any(np.diag(lu) == 0.0):
        raise SolverError(f"{what}: matrix is singular")
    x = scipy.linalg.lu_solve((lu, piv), b, check_finite=False)
    bnorm = np.max(np.abs(b))
    residual = float(np.max(np.abs(A @ x - b)) / bnorm) if bnorm > 0 else 0.0
    if residual >= RESIDUAL_TOL:
        raise SolverError(f"{what}: relative residual {residual:.2e} exceeds {RESIDUAL_TOL:.0e}")
    logger.debug("%s: n=%d relative residual %.2e", what, b.size, residual)
    return x, residual


def solve_potential(system, *, return_residual=False):
    """Interface potential from an assembled second-kind system
    (LU with partial pivoting)."""
    phi, residual = _lu_solve(system, "potential")
    return (phi, residual) if return_residual else phi


def assemble_first_kind(profile, params, phi_n, alpha, *, grid=None, K=None):
    """First-kind system for the normal derivative from side ``alpha``."""
    if alpha not in (1, 2):
        raise ValueError("alpha must be 1 (oil) or 2 (air)")
    _check_compatible(profile, params)
    phi_n = np.asarray(phi_n, dtype=float)
    n = phi_n.size
    grid = grid if grid is not None else build_grid(profile, n)
    K = K if K is not None else discrete_double_layer(grid)
    R = log_weights(n, grid.L).table
    S = smooth_single_layer_matrix(grid)
    matrix = (R + grid.spacing * S) * grid.arc[None, :]
    eps_alpha = params.eps1 if alpha == 1 else params.eps2
    rhs = params.eps2 / eps_alpha * (-0.5 * phi_n + K @ phi_n)
    return DenseSystem(matrix, rhs, grid)


def solve_normal_derivative(profile, params, phi_n, alpha, *, grid=None, K=None,
                            return_residual=False):
    """Normal derivative of the potential on side ``alpha`` at the nodes."""
    system = assemble_first_kind(profile, params, phi_n, alpha, grid=grid, K=K)
    u, residual = _lu_solve(system, f"normal derivative (alpha={alpha})")
    return (u, residual) if return_residual else u


def tangential_derivative(phi_n, grid):
    """Arc-length derivative: spectral x-derivative divided by arc factor."""
    return spectral_derivative(phi_n, grid.L) / grid.arc


def solve_interface(profile, params, n):
    """Potential, both normal derivatives and tangential derivative."""
    grid = build_grid(profile, n)
    K = discrete_double_layer(grid)
    phi, res_phi = solve_potential(
        assemble_second_kind(profile, params, n, grid=grid, K=K), return_residual=True
    )
    dnu2, res_dnu = solve_normal_derivative(
        profile, params, phi, 2, grid=grid, K=K, return_residual=True
    )
    # the two sides differ only by the flux-continuity factor
    dnu1 = (params.eps2 / params.eps1) * dnu2
    return InterfaceSolution(
        grid=grid,
        phi=phi,
        dphi_dnu_1=dnu1,
        dphi_dnu_2=dnu2,
        dphi_dtau=tangential_derivative(phi, grid),
        residuals={"potential": res_phi, "normal_derivative": res_dnu},
    )
