"""Closed-form reference solutions.

``phi_H`` solves the Laplace equation in the half-plane with periodic
Dirichlet data f on y = 0 and bounded growth as y -> infinity; each
Fourier mode of f decays like ``exp(-m pi y / L)``.  ``flat_exact`` is the
separable transmission solution for a flat film of height h0 under
single-mode data ``f = A cos(pi x / L)``.
"""

from dataclasses import dataclass

import numpy as np

from .kernels import grad_green_halfplane


@dataclass(frozen=True, eq=False)
class HalfPlaneData:
    """Boundary data ``f(x) = sum_m a_m cos(m pi x/L) + b_m sin(m pi x/L)``."""

    L: float
    cos_amps: tuple = (0.0,)
    sin_amps: tuple = (0.0,)

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError("half period must be positive")
        a = np.array(self.cos_amps, dtype=float).ravel()
        b = np.array(self.sin_amps, dtype=float).ravel()
        size = max(a.size, b.size, 1)
        a = np.pad(a, (0, size - a.size))
        b = np.pad(b, (0, size - b.size))
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("non-finite boundary amplitudes")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "cos_amps", a)
        object.__setattr__(self, "sin_amps", b)

    @classmethod
    def cosine(cls, A, L):
        """The single-electrode pattern ``f = A cos(pi x / L)``."""
        return cls(L, (0.0, A), (0.0, 0.0))

    @property
    def single_mode_amplitude(self):
        """A if the data are exactly ``A cos(pi x/L)``, else None."""
        a, b = self.cos_amps, self.sin_amps
        others = np.delete(a, 1) if a.size > 1 else a
        if a.size > 1 and not np.any(others) and not np.any(b):
            return float(a[1])
        return None

    def boundary(self, x):
        return phi_H(self, (x, 0.0))


def phi_H(data, p):
    """Half-plane solution at ``p = (x, y)``, ``y >= 0``."""
    x, y = p
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(y < 0):
        raise ValueError("phi_H is defined for y >= 0")
    k = np.arange(data.cos_amps.size) * np.pi / data.L
    theta = x[..., None] * k
    decay = np.exp(-y[..., None] * k)
    out = ((data.cos_amps * np.cos(theta) + data.sin_amps * np.sin(theta)) * decay).sum(-1)
    return float(out) if out.ndim == 0 else out


def phi_H_by_quadrature(data, p, n_quad):
    """phi_H from the double-layer formula on y = 0 via the trapezoid rule.

    ``phi_H(p) = int dG_H/dy0 (p, (x0, 0)) f(x0) dx0``; the integrand is
    smooth and periodic for ``p.y > 0``.
    """
    x, y = p
    if not y > 0:
        raise ValueError("quadrature representation needs y > 0")
    L = data.L
    x0 = -L + 2.0 * L * np.arange(n_quad) / n_quad
    _, gy = grad_green_halfplane((x, y), (x0, 0.0), L)
    return float(2.0 * L / n_quad * np.sum(gy * data.boundary(x0)))


def _flat_denominator(eps1, eps2, h0, L):
    return (eps1 + eps2) * np.exp(2.0 * np.pi * h0 / L) + (eps1 - eps2)


def flat_exact(params, h0, p, region, quantity="value"):
    """Exact solution for a flat interface at height ``h0``.

    Parameters
    ----------
    params : ProblemParams
        Must carry single-mode data ``A cos(pi x/L)``.
    p : (x, y)
        Region 1 needs ``0 <= y <= h0``; region 2 needs ``y >= h0``.
    region : 1 or 2
    quantity : {"value", "dx", "dy"}
    """
    A = params.data.single_mode_amplitude
    if A is None:
        raise ValueError("flat_exact needs boundary data A cos(pi x / L)")
    if quantity not in ("value", "dx", "dy"):
        raise ValueError(f"unknown quantity {quantity!r}")
    e1, e2, L = params.eps1, params.eps2, params.L
    x, y = (np.asarray(v, dtype=float) for v in p)
    k = np.pi / L
    den = _flat_denominator(e1, e2, h0, L)
    if region == 1:
        if np.any(y < 0) or np.any(y > h0):
            raise ValueError("region 1 point must satisfy 0 <= y <= h0")
        up = (e1 - e2) * np.exp(k * y)
        down = (e1 + e2) * np.exp(k * (2.0 * h0 - y))
        vert = {"value": up + down, "dx": up + down, "dy": k * (up - down)}[quantity]
    elif region == 2:
        if np.any(y < h0):
            raise ValueError("region 2 point must satisfy y >= h0")
        down = 2.0 * e1 * np.exp(k * (2.0 * h0 - y))
        vert = {"value": down, "dx": down, "dy": -k * down}[quantity]
    else:
        raise ValueError("region must be 1 or 2")
    horiz = -k * np.sin(k * x) if quantity == "dx" else np.cos(k * x)
    out = A * horiz * vert / den
    return float(out) if out.ndim == 0 else out
