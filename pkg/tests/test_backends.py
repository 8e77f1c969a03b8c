import os
import subprocess
import sys

import numpy as np
import pytest

import filmbie
from filmbie import _backend
from filmbie.field import eval_domain_potential
from filmbie.geometry import build_grid, sample_nodes
from filmbie.solver import solve_interface

needs_numba = pytest.mark.skipif(not _backend.HAVE_NUMBA, reason="numba not installed")


@needs_numba
@pytest.mark.parametrize("kind", ["flat", "sine", "cosine"])
def test_matrices_agree(profiles, kind):
    g = build_grid(profiles[kind], 48)
    nb, npk = _backend.kernels("numba"), _backend.kernels("numpy")
    args = (g.x, g.h, g.hp, g.hpp, g.L)
    np.testing.assert_allclose(nb.double_layer_matrix(*args), npk.double_layer_matrix(*args), rtol=0, atol=1e-13)
    args = (g.x, g.h, g.hp, g.L)
    np.testing.assert_allclose(
        nb.smooth_single_layer_matrix(*args), npk.smooth_single_layer_matrix(*args), rtol=0, atol=1e-13
    )


@needs_numba
def test_layer_sums_agree(profiles):
    prof = profiles["cosine"]
    m = 256
    x0 = sample_nodes(m, 1.0)
    y0, hp0 = prof(x0), prof(x0, 1)
    rng = np.random.default_rng(7)
    px, py = rng.uniform(-1, 1, 30), rng.uniform(0.005, 1.5, 30)
    sigma, mu = rng.normal(size=m), rng.normal(size=m)
    w = np.full(m, 2.0 / m)
    a = _backend.kernels("numba").layer_potential_sums(px, py, x0, y0, hp0, w, sigma, mu, 1.0)
    b = _backend.kernels("numpy").layer_potential_sums(px, py, x0, y0, hp0, w, sigma, mu, 1.0)
    for u, v in zip(a, b):
        np.testing.assert_allclose(u, v, rtol=1e-12, atol=1e-13)


@needs_numba
def test_end_to_end_agree(profiles, params):
    prof = profiles["sine"]
    previous = filmbie.get_backend()
    try:
        out = {}
        for name in ("numba", "numpy"):
            filmbie.set_backend(name)
            sol = solve_interface(prof, params, 64)
            out[name] = (sol.phi, eval_domain_potential(sol, prof, params, (0.1, 0.4)))
    finally:
        filmbie.set_backend(previous)
    np.testing.assert_allclose(out["numba"][0], out["numpy"][0], atol=1e-13)
    assert out["numba"][1] == pytest.approx(out["numpy"][1], abs=1e-13)


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        filmbie.set_backend("cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, FILMBIE_DISABLE_NUMBA="1")
    code = "import filmbie; print(filmbie.get_backend())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
