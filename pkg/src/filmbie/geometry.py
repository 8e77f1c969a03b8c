"""Periodic interface profiles and the quadrature node grid.

The oil-air interface is a graph ``y = h(x)``, 2L-periodic in x, stored as
a real trigonometric polynomial

    h(x) = a_0 + sum_{m=1}^{M} a_m cos(m pi x / L) + b_m sin(m pi x / L).

Numeric height data are turned into this form by trigonometric
interpolation, so derivatives are always analytic derivatives of the
Fourier series.
"""

from dataclasses import dataclass, field

import numpy as np

BUILTIN_INTERFACES = ("flat", "sine", "cosine")


class InterfaceError(ValueError):
    """Raised for interface data that cannot be solved on."""


def _as_coeffs(values):
    arr = np.array(values, dtype=float).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class InterfaceProfile:
    """A positive, 2L-periodic interface height given by Fourier coefficients.

    ``cos_coeffs[m]`` and ``sin_coeffs[m]`` multiply ``cos(m pi x / L)``
    and ``sin(m pi x / L)``; ``sin_coeffs[0]`` is ignored.
    """

    L: float
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray

    def __post_init__(self):
        if not self.L > 0:
            raise InterfaceError(f"half period must be positive, got {self.L}")
        a = _as_coeffs(self.cos_coeffs)
        b = _as_coeffs(self.sin_coeffs)
        if a.size != b.size or a.size == 0:
            raise InterfaceError("cosine and sine coefficient arrays must match")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise InterfaceError("non-finite Fourier coefficients")
        object.__setattr__(self, "cos_coeffs", a)
        object.__setattr__(self, "sin_coeffs", b)
        if self.min_height() <= 0:
            raise InterfaceError("interface not positive")

    @property
    def n_modes(self):
        return self.cos_coeffs.size - 1

    def __call__(self, x, order=0):
        return eval_profile(self, x, order)

    def min_height(self):
        """Minimum of h over a grid with at least 16 points per mode."""
        npts = max(16 * max(self.n_modes, 1), 64)
        xs = -self.L + 2.0 * self.L * np.arange(npts) / npts
        return float(np.min(eval_profile(self, xs)))

    def max_slope(self):
        """Upper bound on |h'| from the coefficient magnitudes."""
        m = np.arange(self.n_modes + 1) * np.pi / self.L
        return float(np.sum(m * np.hypot(self.cos_coeffs, self.sin_coeffs)))


def eval_profile(profile, x, order=0):
    """Evaluate h, h' or h'' (``order`` 0, 1, 2) at ``x``.

    Scalars in, scalars out; arrays are evaluated elementwise.
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order}")
    xa = np.asarray(x, dtype=float)
    k = np.arange(profile.n_modes + 1) * np.pi / profile.L
    theta = xa[..., None] * k
    a, b = profile.cos_coeffs, profile.sin_coeffs
    if order == 0:
        terms = a * np.cos(theta) + b * np.sin(theta)
        terms[..., 0] = a[0]
    elif order == 1:
        terms = k * (b * np.cos(theta) - a * np.sin(theta))
    else:
        terms = -(k**2) * (a * np.cos(theta) + b * np.sin(theta))
    out = terms.sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def sample_nodes(n, L):
    """``n`` equispaced points on [-L, L), starting at -L."""
    return -L + 2.0 * L * np.arange(n) / n


def fit_profile(samples, L):
    """Trigonometric interpolant of equispaced heights on [-L, L).

    Sample ``k`` is taken at ``x_k = -L + 2Lk/n_s``.  For even ``n_s`` the
    Nyquist term is kept as a pure cosine, giving ``M = n_s/2`` modes; for
    odd ``n_s`` the interpolant has ``M = (n_s - 1)/2`` modes.

    Raises
    ------
    InterfaceError
        If there are fewer than two samples, any sample is not finite, or
        the interpolant is not strictly positive.
    """
    h = np.asarray(samples, dtype=float).ravel()
    if h.size < 2:
        raise InterfaceError("need at least two interface samples")
    if not np.all(np.isfinite(h)):
        raise InterfaceError("interface samples must be finite")
    ns = h.size
    c = np.fft.rfft(h) / ns
    m = np.arange(c.size)
    # samples start at x = -L, i.e. a phase shift of (-1)^m per mode
    c = c * (-1.0) ** m
    a = 2.0 * c.real
    b = -2.0 * c.imag
    a[0] = c[0].real
    b[0] = 0.0
    if ns % 2 == 0:
        a[-1] = c[-1].real
        b[-1] = 0.0
    return InterfaceProfile(L=float(L), cos_coeffs=a, sin_coeffs=b)


def builtin_profile(kind, h0, L, n_samples=32):
    """The three test interfaces, built by sampling and interpolating.

    ``flat``: h = h0; ``sine``: h = h0 (1 + 0.2 sin(pi x/L));
    ``cosine``: h = h0 (1 - cos(2 pi x/L)/(2 pi)).
    """
    x = sample_nodes(n_samples, L)
    if kind == "flat":
        h = np.full_like(x, h0)
    elif kind == "sine":
        h = h0 * (1.0 + 0.2 * np.sin(np.pi * x / L))
    elif kind == "cosine":
        h = h0 * (1.0 - np.cos(2.0 * np.pi * x / L) / (2.0 * np.pi))
    else:
        raise InterfaceError(f"unknown builtin interface {kind!r}")
    return fit_profile(h, L)


def load_profile(path, L):
    """Read one height per line (blank lines and ``#`` comments skipped)."""
    values = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                values.append(float(line))
    return fit_profile(values, L)


@dataclass(frozen=True, eq=False)
class NodeGrid:
    """Equispaced quadrature nodes on the interface with cached geometry."""

    n: int
    L: float
    x: np.ndarray = field(repr=False)
    h: np.ndarray = field(repr=False)
    hp: np.ndarray = field(repr=False)
    hpp: np.ndarray = field(repr=False)
    arc: np.ndarray = field(repr=False)

    @property
    def spacing(self):
        return 2.0 * self.L / self.n


def build_grid(profile, n):
    """Nodes ``x_j = -L + 2L j/n`` (j = 0..n-1) with h, h', h'' and the
    arc-length factor ``sqrt(1 + h'^2)``."""
    n = int(n)
    if n <= 0 or n % 2:
        raise ValueError(f"number of nodes must be a positive even integer, got {n}")
    x = sample_nodes(n, profile.L)
    h = eval_profile(profile, x, 0)
    hp = eval_profile(profile, x, 1)
    hpp = eval_profile(profile, x, 2)
    arrays = [x, h, hp, hpp, np.sqrt(1.0 + hp * hp)]
    for arr in arrays:
        arr.setflags(write=False)
    return NodeGrid(n, float(profile.L), *arrays)


def spectral_derivative(values, L):
    """Differentiate the trigonometric interpolant of nodal values.

    ``values`` are samples on the 2L-periodic equispaced grid (even
    length).  The Nyquist mode contributes nothing to the derivative.
    """
    v = np.asarray(values, dtype=float)
    n = v.size
    if n % 2:
        raise ValueError("spectral differentiation needs an even number of nodes")
    c = np.fft.rfft(v)
    k = np.arange(c.size) * (np.pi / L)
    c = 1j * k * c
    c[-1] = 0.0
    return np.fft.irfft(c, n)


def resample_periodic(values, m):
    """Evaluate the trigonometric interpolant of ``values`` on ``m >= n``
    equispaced nodes covering the same period from the same start point."""
    v = np.asarray(values, dtype=float)
    n = v.size
    if m < n or n % 2:
        raise ValueError("resampling needs an even n and m >= n")
    if m == n:
        return v.copy()
    c = np.fft.rfft(v)
    padded = np.zeros(m // 2 + 1, dtype=complex)
    padded[: c.size] = c
    # the old Nyquist term is a cosine: split it over +-n/2 in the finer grid
    padded[n // 2] *= 0.5
    return np.fft.irfft(padded, m) * (m / n)
