"""Periodic Green's functions for the half-plane and the interface kernels.

Points are ``(x, y)`` pairs; coordinates may be numpy arrays, in which
case the functions broadcast.  With ``c = pi / (2L)``::

    G(p, q)   = -(1/2pi) ln(2 |sin(c (z - z0))|),     z = x + iy
    G_H(p, q) = G(p, q) - G(p, q')                     q' = (x0, -y0)

All complex sines and cotangents go through the overflow-free real
decompositions in ``_stable``.
"""

from typing import NamedTuple

import numpy as np

from . import _backend
from ._stable import cot_parts, log4_sin_sq


class KernelSingularityError(ValueError):
    """Raised when a kernel is evaluated at its singular point."""


class PlanePoint(NamedTuple):
    x: float
    y: float


def _check_distinct(dx, dy, L):
    # coincidence modulo the period
    wrapped = np.abs(np.remainder(np.asarray(dx) + L, 2.0 * L) - L)
    if np.any((wrapped == 0.0) & (np.asarray(dy) == 0.0)):
        raise KernelSingularityError("kernel singularity: coincident points")


def green_periodic(p, q, L):
    """2L-periodic free-space Green's function G(p, q)."""
    (x, y), (x0, y0) = p, q
    _check_distinct(np.subtract(x, x0), np.subtract(y, y0), L)
    c = np.pi / (2.0 * L)
    return -log4_sin_sq(c * np.subtract(x, x0), c * np.subtract(y, y0)) / (4.0 * np.pi)


def green_halfplane(p, q, L):
    """Periodic Green's function vanishing on y = 0 (method of images)."""
    (x, y), (x0, y0) = p, q
    _check_distinct(np.subtract(x, x0), np.subtract(y, y0), L)
    c = np.pi / (2.0 * L)
    a = c * np.subtract(x, x0)
    return -(log4_sin_sq(a, c * np.subtract(y, y0)) - log4_sin_sq(a, c * np.add(y, y0))) / (
        4.0 * np.pi
    )


def grad_green_halfplane(p, q, L):
    """Derivatives of G_H(p, q) with respect to the source point q.

    Returns ``(dG_H/dx0, dG_H/dy0)``.
    """
    (x, y), (x0, y0) = p, q
    _check_distinct(np.subtract(x, x0), np.subtract(y, y0), L)
    c = np.pi / (2.0 * L)
    a = c * np.subtract(x, x0)
    re_d, im_d = cot_parts(a, c * np.subtract(y, y0))
    re_i, im_i = cot_parts(a, c * np.add(y, y0))
    return (re_d - re_i) / (4.0 * L), -(im_d + im_i) / (4.0 * L)


def double_layer_kernel(profile, x, x0):
    """T_H(x, x0): normal derivative at the interface point over x0 of
    G_H, with the target at the interface point over x (x != x0)."""
    h, h0, hp0 = profile(x), profile(x0), profile(x0, 1)
    gx, gy = grad_green_halfplane((x, h), (x0, h0), profile.L)
    return (-hp0 * gx + gy) / np.sqrt(1.0 + hp0 * hp0)


def double_layer_diagonal(profile, x):
    """Limit of T_H(x, x0) as x0 -> x."""
    L = profile.L
    h, hp, hpp = profile(x), profile(x, 1), profile(x, 2)
    arc = np.sqrt(1.0 + hp * hp)
    return hpp / (4.0 * np.pi * arc**3) + 1.0 / (4.0 * L * arc * np.tanh(np.pi * h / L))


def log_part(x, x0, L):
    """The periodic logarithmic part ``-(1/4pi) ln(4 sin^2(c (x - x0)))``."""
    c = np.pi / (2.0 * L)
    return -log4_sin_sq(c * np.subtract(x, x0), 0.0) / (4.0 * np.pi)


def smooth_single_layer_kernel(profile, x, x0):
    """G_H on the interface minus its periodic log part (x != x0)."""
    L = profile.L
    c = np.pi / (2.0 * L)
    a = c * np.subtract(x, x0)
    h, h0 = profile(x), profile(x0)
    return -(
        log4_sin_sq(a, c * (h - h0)) - log4_sin_sq(a, c * (h + h0)) - log4_sin_sq(a, 0.0)
    ) / (4.0 * np.pi)


def smooth_single_layer_diagonal(profile, x):
    L = profile.L
    h, hp = profile(x), profile(x, 1)
    return -(np.log1p(hp * hp) - np.log(4.0 * np.sinh(np.pi * h / L) ** 2)) / (4.0 * np.pi)


def double_layer_matrix(grid, backend=None):
    """All k_ij on a node grid (diagonal in closed form)."""
    return _backend.kernels(backend).double_layer_matrix(
        grid.x, grid.h, grid.hp, grid.hpp, grid.L
    )


def smooth_single_layer_matrix(grid, backend=None):
    """All s_ij on a node grid (diagonal in closed form)."""
    return _backend.kernels(backend).smooth_single_layer_matrix(
        grid.x, grid.h, grid.hp, grid.L
    )


def kernel_K_entry(grid, profile, i, j):
    """Single entry k_ij (0-based indices) of the double-layer matrix."""
    if i == j:
        return float(double_layer_diagonal(profile, grid.x[j]))
    return float(double_layer_kernel(profile, grid.x[i], grid.x[j]))


def kernel_S_entry(grid, profile, i, j):
    """Single entry s_ij (0-based indices) of the smooth single-layer matrix."""
    if i == j:
        return float(smooth_single_layer_diagonal(profile, grid.x[j]))
    return float(smooth_single_layer_kernel(profile, grid.x[i], grid.x[j]))
