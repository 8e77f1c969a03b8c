"""Vectorized numpy implementations of the hot kernels.

Every function here has a loop twin in ``_numba_kernels`` with the same
signature; ``tests/test_backends.py`` keeps the two in agreement.
"""

import numpy as np

from ._stable import cot_parts, log4_sin_sq


def double_layer_matrix(x, h, hp, hpp, L):
    """Nodal values of the interface double-layer kernel T_H(x_i, x_j).

    Off the diagonal this is the normal derivative (at the source node)
    of the half-plane Green's function; the diagonal holds its limit.
    """
    c = np.pi / (2.0 * L)
    n = x.size
    a = c * (x[:, None] - x[None, :])
    bd = c * (h[:, None] - h[None, :])
    bi = c * (h[:, None] + h[None, :])
    arc = np.sqrt(1.0 + hp * hp)
    with np.errstate(divide="ignore", invalid="ignore"):
        re_d, im_d = cot_parts(a, bd)
    re_i, im_i = cot_parts(a, bi)
    k = (hp[None, :] * (re_i - re_d) - (im_d + im_i)) / (4.0 * L * arc[None, :])
    diag = np.arange(n)
    k[diag, diag] = hpp / (4.0 * np.pi * arc**3) + 1.0 / (
        4.0 * L * arc * np.tanh(np.pi * h / L)
    )
    return k


def smooth_single_layer_matrix(x, h, hp, L):
    """Smooth remainder of the single-layer kernel after removing the
    periodic log term handled by the product quadrature."""
    c = np.pi / (2.0 * L)
    n = x.size
    a = c * (x[:, None] - x[None, :])
    bd = c * (h[:, None] - h[None, :])
    bi = c * (h[:, None] + h[None, :])
    with np.errstate(divide="ignore", invalid="ignore"):
        s = -(log4_sin_sq(a, bd) - log4_sin_sq(a, bi) - log4_sin_sq(a, 0.0 * a)) / (
            4.0 * np.pi
        )
    diag = np.arange(n)
    s[diag, diag] = -(
        np.log1p(hp * hp) - np.log(4.0 * np.sinh(np.pi * h / L) ** 2)
    ) / (4.0 * np.pi)
    return s


def layer_potential_sums(px, py, x0, y0, hp0, w, sigma, mu, L):
    """Trapezoid sums of the single and double layer potentials.

    Parameters
    ----------
    px, py : (m,) arrays
        Target points, none of which may coincide with a source node.
    x0, y0, hp0 : (q,) arrays
        Source nodes on the interface and the interface slope there.
    w : (q,) array
        Quadrature weights for dx0 (arc length not included).
    sigma, mu : (q,) arrays
        Single-layer density (normal derivative) and double-layer
        density (potential).

    Returns
    -------
    single, double : (m,) arrays
    """
    c = np.pi / (2.0 * L)
    a = c * (px[:, None] - x0[None, :])
    bd = c * (py[:, None] - y0[None, :])
    bi = c * (py[:, None] + y0[None, :])
    arc = np.sqrt(1.0 + hp0 * hp0)
    g = -(log4_sin_sq(a, bd) - log4_sin_sq(a, bi)) / (4.0 * np.pi)
    re_d, im_d = cot_parts(a, bd)
    re_i, im_i = cot_parts(a, bi)
    gx = (re_d - re_i) / (4.0 * L)
    gy = -(im_d + im_i) / (4.0 * L)
    # (-h', 1) is the unnormalized normal; its length cancels the arc factor
    dn = -hp0[None, :] * gx + gy
    single = (g * (w * arc * sigma)[None, :]).sum(axis=1)
    double = (dn * (w * mu)[None, :]).sum(axis=1)
    return single, double
