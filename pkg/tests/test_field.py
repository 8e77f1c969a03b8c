import numpy as np
import pytest

from filmbie.field import TooCloseError, eval_domain_potential, interface_distance
from filmbie.oracles import flat_exact, phi_H
from filmbie.solver import ProblemParams, solve_interface

H0 = 0.03


@pytest.fixture(scope="module")
def flat_solution(profiles, params):
    return solve_interface(profiles["flat"], params, 128)


def test_equal_permittivity_flat_midfilm(profiles):
    params = ProblemParams.cosine(eps1=2.0, eps2=2.0)
    sol = solve_interface(profiles["flat"], params, 128)
    p = (0.3, 0.5 * H0)
    assert eval_domain_potential(sol, profiles["flat"], params, p) == pytest.approx(phi_H(params.data, p), abs=1e-10)


def test_equal_permittivity_reproduces_halfplane(profiles):
    params = ProblemParams.cosine(eps1=2.0, eps2=2.0)
    prof = profiles["sine"]
    sol = solve_interface(prof, params, 128)
    for p in [(0.3, 0.015), (-0.4, 0.5), (0.8, 2.0)]:
        assert eval_domain_potential(sol, prof, params, p) == pytest.approx(phi_H(params.data, p), abs=1e-9)


@pytest.mark.parametrize("p, region", [((0.2, H0 / 2), 1), ((0.2, 0.015), 1), ((-0.7, 0.1), 2), ((0.4, 1.0), 2)])
def test_flat_matches_closed_form(profiles, params, flat_solution, p, region):
    got = eval_domain_potential(flat_solution, profiles["flat"], params, p)
    assert got == pytest.approx(flat_exact(params, H0, p, region), abs=1e-8)


def test_far_field_small_and_decaying(profiles, params, flat_solution):
    prof = profiles["flat"]
    far = eval_domain_potential(flat_solution, prof, params, (0.0, 5.0))
    assert abs(far) < 1e-5
    ys = np.array([1.0, 2.0])
    vals = eval_domain_potential(flat_solution, prof, params, (np.zeros(2), ys))
    assert vals[1] / vals[0] == pytest.approx(np.exp(-np.pi), rel=0.02)


def test_trace_at_bottom_boundary(profiles, params, flat_solution):
    x = np.linspace(-0.9, 0.9, 7)
    got = eval_domain_potential(flat_solution, profiles["flat"], params, (x, np.full_like(x, 1e-3)))
    np.testing.assert_allclose(got, flat_exact(params, H0, (x, np.full_like(x, 1e-3)), 1), atol=1e-8)


def test_tends_to_boundary_data(profiles, params):
    sol = solve_interface(profiles["flat"], params, 256)
    x = np.linspace(-1, 1, 9)
    got = eval_domain_potential(sol, profiles["flat"], params, (x, np.full_like(x, H0 / 50)))
    np.testing.assert_allclose(got, np.cos(np.pi * x), atol=1e-3)


def test_array_and_scalar_forms_agree(profiles, params, flat_solution):
    prof = profiles["flat"]
    xs, ys = np.array([0.1, -0.3]), np.array([0.01, 0.4])
    arr = eval_domain_potential(flat_solution, prof, params, (xs, ys))
    for i in range(2):
        assert arr[i] == eval_domain_potential(flat_solution, prof, params, (xs[i], ys[i]))


def test_curved_interface_continuous_across(profiles, params):
    """Just above and just below the interface the two formulas agree."""
    prof = profiles["cosine"]
    sol = solve_interface(prof, params, 128)
    x = 0.37
    h = float(prof(x))
    d = 2e-3
    up = eval_domain_potential(sol, prof, params, (x, h + d))
    down = eval_domain_potential(sol, prof, params, (x, h - d))
    # potential varies by about |grad phi| * 2d across the gap
    assert abs(up - down) < 2 * d * 4.0


def test_too_close_refused(profiles, params, flat_solution):
    with pytest.raises(TooCloseError):
        eval_domain_potential(flat_solution, profiles["flat"], params, (0.0, H0 + 1e-6))
    with pytest.raises(TooCloseError):
        eval_domain_potential(flat_solution, profiles["flat"], params, (0.0, H0 / 2), max_nodes=128)


def test_negative_height_rejected(profiles, params, flat_solution):
    with pytest.raises(ValueError):
        eval_domain_potential(flat_solution, profiles["flat"], params, (0.0, -0.1))


def test_distance_is_lower_bound(profiles):
    prof = profiles["cosine"]
    xs = np.linspace(-1, 1, 4001)
    curve = np.stack([xs, prof(xs)], axis=1)
    for p in [(0.1, 0.05), (-0.6, 0.01), (0.9, 0.3)]:
        true = np.min(np.hypot(curve[:, 0] - p[0], curve[:, 1] - p[1]))
        assert interface_distance(prof, *p) <= true + 1e-12
