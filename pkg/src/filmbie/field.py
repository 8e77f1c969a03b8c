"""Potential away from the interface via the representation formulas.

In the air (region 2)::

    phi_2 = D phi - S(dphi_2/dnu)

and in the oil (region 1)::

    phi_1 = S(dphi_1/dnu) - D phi + phi_H

with S, D the interface single and double layer potentials built on the
half-plane Green's function.  Both are evaluated with the trapezoidal
rule.  Because the integrands become sharply peaked as the target nears
the interface, the nodal densities are first resampled (trigonometric
interpolation) onto a finer grid whose spacing is at most
``distance / POINTS_PER_DISTANCE``.  Targets that would need more than
``max_nodes`` quadrature points are refused.
"""

import numpy as np

from . import _backend
from .geometry import eval_profile, resample_periodic, sample_nodes
from .oracles import phi_H

POINTS_PER_DISTANCE = 6
DEFAULT_MAX_NODES = 2**15


class TooCloseError(ValueError):
    """Raised for targets too close to the interface to resolve."""


def interface_distance(profile, x, y):
    """Lower bound on the distance from (x, y) to the interface.

    ``|y - h(x)| / sqrt(1 + s^2)`` with s a bound on the slope.
    """
    s = profile.max_slope()
    return np.abs(np.asarray(y) - eval_profile(profile, x)) / np.sqrt(1.0 + s * s)


def _refined_size(n, L, distance, max_nodes):
    m = n
    while 2.0 * L / m > distance / POINTS_PER_DISTANCE:
        m *= 2
        if m > max_nodes:
            return None
    return m


def eval_domain_potential(sol, profile, params, p, *, max_nodes=DEFAULT_MAX_NODES,
                          backend=None):
    """Potential at ``p = (x, y)`` (scalars or equal-shape arrays).

    The region is chosen by comparing y with h(x).

    Raises
    ------
    ValueError
        If any y < 0.
    TooCloseError
        If a target cannot be resolved with ``max_nodes`` quadrature nodes.
    """
    px, py = (np.atleast_1d(np.asarray(v, dtype=float)) for v in p)
    px, py = np.broadcast_arrays(px, py)
    scalar = np.ndim(p[0]) == 0 and np.ndim(p[1]) == 0
    if np.any(py < 0):
        raise ValueError("evaluation points must satisfy y >= 0")
    L = profile.L
    n = sol.grid.n
    dist = interface_distance(profile, px, py)
    above = py > eval_profile(profile, px)
    out = np.empty(px.shape)
    sizes = [_refined_size(n, L, d, max_nodes) for d in dist.ravel()]
    if any(m is None for m in sizes):
        bad = int(np.argmax([m is None for m in sizes]))
        raise TooCloseError(
            f"too close to interface: point ({px.ravel()[bad]}, {py.ravel()[bad]}) "
            f"needs more than {max_nodes} quadrature nodes"
        )
    sizes = np.reshape(sizes, px.shape)
    kern = _backend.kernels(backend)
    for m in np.unique(sizes):
        sel = sizes == m
        x0 = sample_nodes(m, L)
        y0 = eval_profile(profile, x0)
        hp0 = eval_profile(profile, x0, 1)
        w = np.full(m, 2.0 * L / m)
        mu = resample_periodic(sol.phi, m)
        for region, mask, sigma_nodes, sign in (
            (2, sel & above, sol.dphi_dnu_2, 1.0),
            (1, sel & ~above, sol.dphi_dnu_1, -1.0),
        ):
            if not np.any(mask):
                continue
            sigma = resample_periodic(sigma_nodes, m)
            single, double = kern.layer_potential_sums(
                px[mask], py[mask], x0, y0, hp0, w, sigma, mu, L
            )
            # region 2: D phi - S u2;  region 1: S u1 - D phi + phi_H
            val = sign * (double - single)
            if region == 1:
                val = val + phi_H(params.data, (px[mask], py[mask]))
            out[mask] = val
    return float(out.ravel()[0]) if scalar else out
