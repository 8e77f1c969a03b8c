import numpy as np
import pytest

from filmbie.geometry import builtin_profile, build_grid, sample_nodes
from filmbie.harness import discrete_l2_error
from filmbie.oracles import HalfPlaneData, flat_exact, phi_H
from filmbie.solver import (
    RESIDUAL_TOL,
    DenseSystem,
    ProblemParams,
    SolverError,
    assemble_first_kind,
    assemble_second_kind,
    discrete_double_layer,
    solve_interface,
    solve_normal_derivative,
    solve_potential,
    tangential_derivative,
)

H0 = 0.03


@pytest.mark.parametrize("kind", ["flat", "sine", "cosine"])
def test_equal_permittivity_gives_halfplane_solution(profiles, kind):
    prof = profiles[kind]
    params = ProblemParams.cosine(eps1=3.0, eps2=3.0)
    system = assemble_second_kind(prof, params, 64)
    np.testing.assert_array_equal(system.matrix, np.eye(64))
    phi = solve_potential(system)
    g = system.grid
    assert np.max(np.abs(phi - phi_H(params.data, (g.x, g.h)))) <= 1e-13


@pytest.mark.parametrize(
    "n, lo, hi", [(16, 1e-2, 1e-1), (32, 5e-4, 1e-2), (64, 1e-6, 2e-5), (128, 0.0, 1e-9)]
)
def test_flat_potential_error_bands(profiles, params, n, lo, hi):
    sol = solve_interface(profiles["flat"], params, n)
    exact = flat_exact(params, H0, (sol.grid.x, np.full(n, H0)), 1)
    assert lo <= discrete_l2_error(sol.phi, exact) <= hi


def test_flat_pointwise_values(profiles, params):
    sol = solve_interface(profiles["flat"], params, 128)
    x = sol.grid.x
    i0 = int(np.argmin(np.abs(x)))
    ih = int(np.argmin(np.abs(x + 0.5)))
    assert sol.phi[i0] == pytest.approx(0.984016587338941080, abs=1e-9)
    assert sol.dphi_dnu_1[i0] == pytest.approx(-0.386422410224314556, abs=1e-8)
    assert sol.dphi_dtau[ih] == pytest.approx(3.09137928179451645, abs=1e-8)


def test_flat_normal_derivative_n64(profiles, params):
    sol = solve_interface(profiles["flat"], params, 64)
    exact = flat_exact(params, H0, (sol.grid.x, np.full(64, H0)), 1, "dy")
    assert 1e-5 <= discrete_l2_error(sol.dphi_dnu_1, exact) <= 5e-4


def test_flux_continuity_and_direct_side_one(profiles, params):
    prof = profiles["cosine"]
    sol = solve_interface(prof, params, 64)
    np.testing.assert_allclose(params.eps1 * sol.dphi_dnu_1, params.eps2 * sol.dphi_dnu_2, rtol=1e-15)
    direct = solve_normal_derivative(prof, params, sol.phi, 1)
    np.testing.assert_allclose(direct, sol.dphi_dnu_1, atol=1e-13)


def test_only_permittivity_ratio_matters(profiles):
    prof = profiles["sine"]
    a = solve_interface(prof, ProblemParams.cosine(8.0, 1.0), 64)
    b = solve_interface(prof, ProblemParams.cosine(16.0, 2.0), 64)
    np.testing.assert_allclose(a.phi, b.phi, atol=1e-14)
    np.testing.assert_allclose(a.dphi_dnu_1, b.dphi_dnu_1, atol=1e-13)


def test_linear_in_amplitude(profiles):
    prof = profiles["cosine"]
    a = solve_interface(prof, ProblemParams.cosine(A=1.0), 32)
    b = solve_interface(prof, ProblemParams.cosine(A=2.5), 32)
    np.testing.assert_allclose(b.phi, 2.5 * a.phi, atol=1e-13)


@pytest.mark.parametrize("kind", ["flat", "cosine"])
def test_even_interface_gives_even_potential(profiles, params, kind):
    sol = solve_interface(profiles[kind], params, 64)
    mirror = (-np.arange(64)) % 64
    assert np.max(np.abs(sol.phi - sol.phi[mirror])) < 1e-12
    assert np.max(np.abs(sol.dphi_dtau + sol.dphi_dtau[mirror])) < 1e-11


def test_residuals_recorded(profiles, params):
    sol = solve_interface(profiles["sine"], params, 64)
    assert set(sol.residuals) == {"potential", "normal_derivative"}
    assert all(0 <= r < RESIDUAL_TOL for r in sol.residuals.values())


def test_doubling_is_stable(profiles, params):
    """Beyond resolution, doubling n changes nodal values only at roundoff."""
    a = solve_interface(profiles["cosine"], params, 256)
    b = solve_interface(profiles["cosine"], params, 512)
    assert np.max(np.abs(a.phi - b.phi[::2])) < 1e-13


def test_double_layer_row_sums_bounded(profiles):
    for n in (32, 64, 128):
        K = discrete_double_layer(build_grid(profiles["cosine"], n))
        rows = K.sum(axis=1)
        # the discrete row sums converge to the continuous double layer of 1
        assert np.all(np.abs(rows) < 1.0)


def test_first_kind_matrix_structure(profiles, params):
    g = build_grid(profiles["sine"], 32)
    phi = np.cos(np.pi * g.x)
    system = assemble_first_kind(profiles["sine"], params, phi, 2, grid=g)
    unscaled = system.matrix / g.arc[None, :]
    np.testing.assert_allclose(unscaled, unscaled.T, atol=1e-15)


def test_first_kind_rejects_bad_side(profiles, params):
    with pytest.raises(ValueError):
        assemble_first_kind(profiles["flat"], params, np.ones(16), 3)


def test_mismatched_half_period_rejected(params):
    prof = builtin_profile("flat", 0.06, 2.0)
    with pytest.raises(ValueError):
        assemble_second_kind(prof, params, 16)


def test_non_finite_system_raises(profiles):
    g = build_grid(profiles["flat"], 8)
    A = np.eye(8)
    A[2, 3] = np.nan
    with pytest.raises(SolverError):
        solve_potential(DenseSystem(A, np.ones(8), g))


def test_singular_system_raises(profiles):
    g = build_grid(profiles["flat"], 8)
    with pytest.raises(SolverError):
        solve_potential(DenseSystem(np.zeros((8, 8)), np.ones(8), g))


def test_bad_permittivity():
    with pytest.raises(ValueError):
        ProblemParams(0.0, 1.0, HalfPlaneData.cosine(1.0, 1.0))


@pytest.mark.parametrize("kind", ["flat", "sine"])
@pytest.mark.parametrize("m", [1, 4, 15])
def test_tangential_derivative_of_resolved_mode(profiles, kind, m):
    prof = profiles[kind]
    g = build_grid(prof, 32)
    v = np.sin(m * np.pi * g.x) + 0.3 * np.cos(m * np.pi * g.x)
    dv = m * np.pi * (np.cos(m * np.pi * g.x) - 0.3 * np.sin(m * np.pi * g.x))
    assert np.max(np.abs(tangential_derivative(v, g) - dv / g.arc)) < 1e-11 * m
