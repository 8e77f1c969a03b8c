"""Boundary integral solver for the potential on an electrified,
periodic oil film.

The film occupies ``0 < y < h(x)`` under air; electrodes impose
``phi = f(x)`` on ``y = 0``.  The problem is reduced to integral
equations on the oil-air interface and solved with Nystrom schemes that
converge super-algebraically for smooth interfaces.
"""

from ._backend import get_backend, set_backend
from .field import TooCloseError, eval_domain_potential
from .geometry import (
    InterfaceError,
    InterfaceProfile,
    NodeGrid,
    build_grid,
    builtin_profile,
    eval_profile,
    fit_profile,
    load_profile,
    spectral_derivative,
)
from .harness import CaseConfig, ConvergenceRow, convergence_study, discrete_l2_error, run_case
from .kernels import (
    KernelSingularityError,
    PlanePoint,
    grad_green_halfplane,
    green_halfplane,
    green_periodic,
    kernel_K_entry,
    kernel_S_entry,
)
from .oracles import HalfPlaneData, flat_exact, phi_H, phi_H_by_quadrature
from .quadrature import LogWeightTable, log_weights, trapezoid_integrate
from .solver import (
    DenseSystem,
    InterfaceSolution,
    ProblemParams,
    SolverError,
    assemble_first_kind,
    assemble_second_kind,
    solve_interface,
    solve_normal_derivative,
    solve_potential,
    tangential_derivative,
)

__version__ = "0.1.0"
