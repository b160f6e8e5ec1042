import numpy as np
import pytest
from scipy.integrate import quad

from soljitter.errors import DomainError
from soljitter.grid import make_grid
from soljitter.solitons import (
    SolitonParams,
    lam_integrals,
    modulated_soliton,
    soliton_profile,
)


@pytest.fixture(scope="module")
def grid():
    return make_grid(20.0, 1024)


def mass(g, u):
    return g.spacing * np.sum(np.abs(u) ** 2)


def test_peak_value_of_unit_soliton(grid):
    u = soliton_profile(SolitonParams(amplitude=1.0), 0.0, grid)
    i0 = np.argmin(np.abs(grid.x))
    assert abs(u[i0] - np.sqrt(2.0)) < 1e-12


def test_unit_soliton_mass_is_four(grid):
    u = soliton_profile(SolitonParams(amplitude=1.0), 0.37, grid)
    assert abs(mass(grid, u) - 4.0) < 1e-8


@pytest.mark.parametrize("A", [2.0, 3.0])
def test_soliton_mass_quadrature_oracle(grid, A):
    # independent oracle: adaptive quadrature of 2 A^2 sech^2(A x)
    w = 50.0 / A
    expected, err = quad(lambda x: 2 * A**2 / np.cosh(A * x) ** 2, -w, w)
    assert err < 1e-8
    assert abs(expected - 4 * A) < 1e-9
    u = soliton_profile(SolitonParams(amplitude=A), 0.0, grid)
    assert abs(mass(grid, u) - expected) < 1e-8


def test_soliton_tail_outside_grid_rejected():
    small = make_grid(2.0, 64)
    with pytest.raises(DomainError):
        soliton_profile(SolitonParams(amplitude=1.0), 0.0, small)


def test_moving_soliton_center(grid):
    # velocity parameter V translates the profile by -2 V t
    p = SolitonParams(amplitude=1.0, velocity=0.5)
    u = soliton_profile(p, 1.0, grid)
    center = grid.x[np.argmax(np.abs(u))]
    assert abs(center - (-1.0)) < 2 * grid.spacing


def test_modulated_zero_control_is_free_soliton(grid):
    u = modulated_soliton(1.0, lambda t: 0.0, 0.8, grid)
    ref = soliton_profile(SolitonParams(amplitude=1.0), 0.8, grid)
    assert np.max(np.abs(u - ref)) < 1e-12


def test_modulated_constant_control_center(grid):
    # closed-form double integral: center = 2 * c t^2 / 2 = c t^2
    c, t = 0.7, 1.5
    u = modulated_soliton(1.0, lambda s: c, t, grid)
    y = grid.spacing * np.sum(grid.x * np.abs(u) ** 2)
    assert abs(y / mass(grid, u) - c * t**2) < 1e-8


def test_modulated_arrival_time_velocity_star(grid):
    # slope lam*(t) = 3 R (T-t) / (8 A T^3) produces arrival time R at T
    R, A, T = 1.0, 1.0, 1.0
    lam = lambda t: 3 * R * (T - t) / (8 * A * T**3)
    u = modulated_soliton(A, lam, T, grid, translated=True)
    y = grid.spacing * np.sum(grid.x * np.abs(u) ** 2)
    assert abs(y - R) < 1e-6


@pytest.mark.parametrize("translated", [False, True])
def test_modulated_solves_its_pde(grid, translated):
    # finite-difference time derivative against the spatial operator
    A, t, eps = 1.0, 0.4, 1e-5
    lam = lambda s: 0.3 * (1.0 - s)
    fields = [
        modulated_soliton(A, lam, t + dt_, grid, translated=translated, n_panels=4000)
        for dt_ in (-eps, 0.0, eps)
    ]
    um, u, up = fields
    ut = (up - um) / (2 * eps)
    x_c = 2.0 * lam_integrals(lam, t, 4000)[1]
    pot = lam(t) * (grid.x - x_c) if translated else lam(t) * grid.x
    res = 1j * ut - grid.laplacian(u) - np.abs(u) ** 2 * u - pot * u
    assert grid.norm_l2(res) < 1e-5


def test_lam_integrals_polynomial_exactness():
    # Simpson is exact through cubic integrands
    lam = lambda t: 2.0 * t
    V, D, E, G = lam_integrals(lam, 1.0, 400)
    assert abs(V - 1.0) < 1e-12          # int 2s = t^2
    assert abs(D - 1.0 / 3.0) < 1e-12    # int s^2
    assert abs(E - 1.0 / 5.0) < 1e-9     # int s^4


def test_lam_integrals_g_value():
    # G = int lam * D with lam = 2t, D = t^3/3: int 2 s^4 / 3 = 2/15
    _, _, _, G = lam_integrals(lambda t: 2.0 * t, 1.0, 400)
    assert abs(G - 2.0 / 15.0) < 1e-9
