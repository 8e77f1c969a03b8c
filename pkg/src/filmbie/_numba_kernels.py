"""Numba loop implementations of the hot kernels (see ``_numpy_kernels``)."""

import math
import os

import numpy as np
from numba import config, njit, prange

from . import _stable

# the bundled TBB is too old for numba; skip the probe unless the user chose
if "NUMBA_THREADING_LAYER" not in os.environ:
    config.THREADING_LAYER = "omp"

JIT_OPTIONS = {"cache": True, "nogil": True}

_cot_parts = njit(**JIT_OPTIONS)(_stable.cot_parts)
_log4_sin_sq = njit(**JIT_OPTIONS)(_stable.log4_sin_sq)


@njit(parallel=True, **JIT_OPTIONS)
def double_layer_matrix(x, h, hp, hpp, L):
    n = x.size
    c = math.pi / (2.0 * L)
    k = np.empty((n, n))
    for i in prange(n):
        for j in range(n):
            arc = math.sqrt(1.0 + hp[j] * hp[j])
            if i == j:
                k[i, j] = hpp[j] / (4.0 * math.pi * arc**3) + 1.0 / (
                    4.0 * L * arc * math.tanh(math.pi * h[j] / L)
                )
                continue
            a = c * (x[i] - x[j])
            re_d, im_d = _cot_parts(a, c * (h[i] - h[j]))
            re_i, im_i = _cot_parts(a, c * (h[i] + h[j]))
            k[i, j] = (hp[j] * (re_i - re_d) - (im_d + im_i)) / (4.0 * L * arc)
    return k


@njit(parallel=True, **JIT_OPTIONS)
def smooth_single_layer_matrix(x, h, hp, L):
    n = x.size
    c = math.pi / (2.0 * L)
    s = np.empty((n, n))
    for i in prange(n):
        for j in range(n):
            if i == j:
                sh = math.sinh(math.pi * h[j] / L)
                s[i, j] = -(math.log1p(hp[j] * hp[j]) - math.log(4.0 * sh * sh)) / (
                    4.0 * math.pi
                )
                continue
            a = c * (x[i] - x[j])
            s[i, j] = -(
                _log4_sin_sq(a, c * (h[i] - h[j]))
                - _log4_sin_sq(a, c * (h[i] + h[j]))
                - _log4_sin_sq(a, 0.0)
            ) / (4.0 * math.pi)
    return s


@njit(parallel=True, **JIT_OPTIONS)
def layer_potential_sums(px, py, x0, y0, hp0, w, sigma, mu, L):
    m = px.size
    q = x0.size
    c = math.pi / (2.0 * L)
    single = np.zeros(m)
    double = np.zeros(m)
    for t in prange(m):
        acc_s = 0.0
        acc_d = 0.0
        for j in range(q):
            a = c * (px[t] - x0[j])
            bd = c * (py[t] - y0[j])
            bi = c * (py[t] + y0[j])
            g = -(_log4_sin_sq(a, bd) - _log4_sin_sq(a, bi)) / (4.0 * math.pi)
            re_d, im_d = _cot_parts(a, bd)
            re_i, im_i = _cot_parts(a, bi)
            gx = (re_d - re_i) / (4.0 * L)
            gy = -(im_d + im_i) / (4.0 * L)
            arc = math.sqrt(1.0 + hp0[j] * hp0[j])
            acc_s += g * w[j] * arc * sigma[j]
            acc_d += (-hp0[j] * gx + gy) * w[j] * mu[j]
        single[t] = acc_s
        double[t] = acc_d
    return single, double
