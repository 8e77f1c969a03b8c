"""Overflow-free real decompositions of sin/cot at complex arguments.

Written with ``np.*`` ufuncs only so that the same source serves as the
vectorized numpy implementation and, wrapped in ``njit``, as the scalar
numba one.

With ``e = exp(-2|b|)`` the identity

    4 (sin^2 a + sinh^2 b) = exp(2|b|) * ((1 - e)^2 + 4 e sin^2 a)

keeps every intermediate bounded for large |b| and avoids cancellation
near a = b = 0 (``1 - e`` is taken from ``expm1``).
"""

import numpy as np


def log4_sin_sq(a, b):
    """``ln(4 |sin(a + ib)|^2) = ln(4 (sin^2 a + sinh^2 b))``."""
    # denominator inlined (here and below) so numba can compile each alone
    ab = np.abs(b)
    em = np.expm1(-2.0 * ab)
    s = np.sin(a)
    return 2.0 * ab + np.log(em * em + 4.0 * np.exp(-2.0 * ab) * s * s)


def cot_parts(a, b):
    """Real and imaginary parts of ``cot(a + ib)``."""
    ab = np.abs(b)
    em = np.expm1(-2.0 * ab)
    s = np.sin(a)
    den = em * em + 4.0 * np.exp(-2.0 * ab) * s * s
    re = 2.0 * np.exp(-2.0 * ab) * np.sin(2.0 * a) / den
    im = np.sign(b) * np.expm1(-4.0 * ab) / den
    return re, im
