import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from fieldemission import CONSTANTS, FieldConfiguration, LandauState, LongitudinalState, ZeroMagneticFieldError
from fieldemission.quantum import (
    DegenerateFieldError,
    airy_length,
    dimensionless_energy_check,
    eta_of_y,
    hankel_airy_basis,
    landau_energy,
    landau_energy_exact,
    landau_spacing,
    longitudinal_wavefunction,
    magnetic_length,
    transverse_wavefunction,
    turning_point_y,
    xi_of_x,
)
from fieldemission.specialfn import airy

E, M, HBAR = CONSTANTS.electron_charge, CONSTANTS.electron_mass, CONSTANTS.hbar


def second_derivative(f, x, h):
    """Fourth-order central difference."""
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)


def state(n=0, p_z=0.0, e0=0.0, b0=1.0, alpha=0.0):
    return LandauState(n, p_z, FieldConfiguration(e0, b0, alpha))


def test_state_validation():
    with pytest.raises(ZeroMagneticFieldError):
        state(b0=0.0)
    with pytest.raises(ValueError):
        state(n=-1)
    with pytest.raises(ValueError):
        state(n=1.5)


def test_magnetic_length_and_xi():
    s = state()
    a = magnetic_length(s.config)
    assert a == pytest.approx(math.sqrt(HBAR / E), rel=1e-14)
    assert a == pytest.approx(2.5656e-8, rel=1e-4)
    assert xi_of_x(s, 0.0) == 0.0
    assert abs(xi_of_x(s, a) - 1.0) < 1e-12
    s2 = state(p_z=1e-26, e0=1e6, alpha=1.0)
    from fieldemission import guiding_center_offset
    assert xi_of_x(s2, guiding_center_offset(s2.config, s2.p_z)) == 0.0


def test_ground_level_energy():
    eps = landau_energy(state())
    assert eps == pytest.approx(9.274e-24, rel=1e-4)
    assert eps / E == pytest.approx(5.788e-5, rel=1e-4)
    assert landau_spacing(state().config) / E == pytest.approx(1.1577e-4, rel=1e-4)


def test_crossed_field_terms():
    # alpha = pi/2, E0 = 1e8, B0 = 1: m v_d^2/2 = 4.555e-15 J and e E0 x0 = m E0^2/B0^2 = 9.109e-15 J
    s = state(e0=1e8, alpha=math.pi / 2)
    kinetic = 0.5 * M * 1e8**2
    electrostatic = M * 1e8**2
    assert kinetic == pytest.approx(4.555e-15, rel=1e-3)
    assert electrostatic == pytest.approx(9.109e-15, rel=1e-3)
    want = 0.5 * HBAR * E / M + kinetic - electrostatic
    assert landau_energy(s) == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("kw", [
    dict(),
    dict(e0=1e8, alpha=math.pi / 4, p_z=1e-25),
    dict(e0=1e6, b0=0.1, alpha=math.pi / 2),
    dict(e0=3e9, b0=7.0, alpha=0.3, p_z=-4e-24),
])
@pytest.mark.parametrize("n", [0, 1, 3, 10, 40])
def test_spacing_is_hbar_omega_exactly(kw, n):
    lower, upper = state(n=n, **kw), state(n=n + 1, **kw)
    gap = landau_energy_exact(upper) - landau_energy_exact(lower)
    assert gap == Fraction(HBAR) * Fraction(E) * Fraction(kw.get("b0", 1.0)) / Fraction(M)
    assert float(gap) == landau_spacing(lower.config)


def test_spacing_in_float_for_pure_oscillator():
    s = [landau_energy(state(n=n)) for n in range(5)]
    assert np.allclose(np.diff(s), landau_spacing(state().config), rtol=1e-14, atol=0)


@pytest.mark.parametrize("kw,n", [
    (dict(), 0),
    (dict(e0=1e8, alpha=math.pi / 4, p_z=1e-25), 3),
    (dict(e0=1e6, b0=0.1, alpha=math.pi / 2), 10),
])
def test_quantisation_residual_examples(kw, n):
    assert abs(dimensionless_energy_check(state(n=n, **kw))) < 1e-12


@settings(max_examples=300, deadline=None)
@given(
    st.integers(0, 1000),
    st.floats(-1e-22, 1e-22),
    st.floats(0.0, 1e11),
    st.floats(1e-3, 10.0),
    st.floats(0.0, math.pi / 2),
)
def test_quantisation_residual_property(n, p_z, e0, b0, alpha):
    assert abs(dimensionless_energy_check(state(n, p_z, e0, b0, alpha))) < 1e-9


# transverse wavefunction


def test_ground_state_peak_and_node():
    s0 = state()
    a = magnetic_length(s0.config)
    assert abs(transverse_wavefunction(s0, 0.0)) ** 2 == pytest.approx(1 / (a * math.sqrt(math.pi)), rel=1e-13)
    s1 = state(n=1, e0=1e7, alpha=math.pi / 2)
    from fieldemission import guiding_center_offset
    x0 = guiding_center_offset(s1.config)
    for z in (0.0, 1e-9, 3e-7):
        assert transverse_wavefunction(s1, x0, z) == 0


def test_plane_wave_factor():
    p_z = 3e-26
    s = state(p_z=p_z)
    psi0 = transverse_wavefunction(s, 1e-9, 0.0)
    psi = transverse_wavefunction(s, 1e-9, 2e-8)
    assert psi == pytest.approx(psi0 * np.exp(1j * p_z * 2e-8 / HBAR), rel=1e-13)


def test_norm_by_trapezoid_n4():
    s = state(n=4)
    a = magnetic_length(s.config)
    xs = np.linspace(-12 * a, 12 * a, 4001)
    dens = np.abs(transverse_wavefunction(s, xs)) ** 2
    assert abs(integrate.trapezoid(dens, xs) - 1) < 1e-6


@pytest.mark.parametrize("n", range(11))
def test_norm_up_to_ten(n):
    s = state(n=n, e0=1e5, alpha=math.pi / 2)
    a = magnetic_length(s.config)
    x0 = xi_of_x(s, 0.0) * -a
    xs = np.linspace(x0 - 14 * a, x0 + 14 * a, 6001)
    assert abs(integrate.simpson(np.abs(transverse_wavefunction(s, xs)) ** 2, x=xs) - 1) < 1e-6


def test_orthogonality():
    a = magnetic_length(state().config)
    xs = np.linspace(-14 * a, 14 * a, 6001)
    psis = [transverse_wavefunction(state(n=n), xs).real for n in range(7)]
    for i in range(7):
        for j in range(i):
            assert abs(integrate.simpson(psis[i] * psis[j], x=xs)) < 1e-6


def test_wavefunction_order_bound():
    transverse_wavefunction(state(n=50), 0.0)
    with pytest.raises(ValueError):
        transverse_wavefunction(state(n=51), 0.0)


# longitudinal motion


def test_airy_length_scale():
    # (hbar^2 / (2 m e E0))^(1/3) at 1e8 V/m is 7.25e-10 m
    cfg = FieldConfiguration(1e8)
    assert airy_length(cfg) == pytest.approx((HBAR**2 / (2 * M * E * 1e8)) ** (1 / 3), rel=1e-14)
    assert airy_length(cfg) == pytest.approx(7.2495e-10, rel=1e-4)


def test_eta_is_affine_with_negative_slope_and_zero_at_turning_point():
    cfg = FieldConfiguration(1e8, 1.0, 0.4)
    eps = -2.0 * E
    y_t = turning_point_y(cfg, eps)
    # potential energy -e E0 y cos(alpha) equals eps_y there
    assert -E * 1e8 * y_t * math.cos(0.4) == pytest.approx(eps, rel=1e-14)
    assert abs(eta_of_y(cfg, eps, y_t)) < 1e-12
    ys = np.linspace(y_t - 1e-9, y_t + 1e-9, 5)
    etas = eta_of_y(cfg, eps, ys)
    assert np.all(np.diff(etas) < 0)
    assert np.allclose(np.diff(etas, 2), 0, atol=1e-12)


def test_degenerate_geometry():
    for cfg in (FieldConfiguration(1e8, 1.0, math.pi / 2), FieldConfiguration(0.0, 1.0)):
        with pytest.raises(DegenerateFieldError):
            eta_of_y(cfg, 0.0, 0.0)


def test_hamiltonian_along_b_by_finite_differences():
    # -hbar^2/(2m) Y'' - e E0 y cos(alpha) Y = eps_y Y
    cfg = FieldConfiguration(1e8, 2.0, 0.3)
    eps = 0.5 * E
    st_ = LongitudinalState.decaying(eps)
    force = E * 1e8 * math.cos(0.3)
    l = airy_length(cfg)
    scale = force * l  # energy unit of the Airy problem
    f = lambda t: longitudinal_wavefunction(st_, cfg, t)
    for y in np.linspace(-4 * l, 4 * l, 13) + turning_point_y(cfg, eps):
        lhs = -HBAR**2 / (2 * M) * second_derivative(f, y, 5e-3 * l) - force * y * f(y)
        assert abs(lhs - eps * f(y)) < 1e-7 * scale * (1 + abs(f(y)))


def test_decaying_branch_is_ai():
    cfg = FieldConfiguration(1e8)
    st_ = LongitudinalState.decaying(0.0)
    l = airy_length(cfg)
    for eta in (-4.0, 0.0, 1.5, 5.0):
        y = -eta * l
        assert longitudinal_wavefunction(st_, cfg, y) == pytest.approx(airy(eta).ai, rel=1e-10, abs=1e-14)
    y5 = -5.0 * l
    assert abs(longitudinal_wavefunction(st_, cfg, y5)) <= 1.09e-4
    assert airy(5.0).ai == pytest.approx(math.exp(-2 / 3 * 5**1.5) / (2 * math.sqrt(math.pi) * 5**0.25), rel=0.02)
    vals = [abs(longitudinal_wavefunction(st_, cfg, -e * l)) for e in np.linspace(1.0, 8.0, 30)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_hankel_basis_solves_airy_equation():
    for eta in np.linspace(-4, 4, 50):
        for k in (0, 1):
            f = lambda t: hankel_airy_basis(t)[k]
            assert abs(second_derivative(f, eta, 5e-3) - eta * f(eta)) < 1e-7 * (1 + abs(f(eta)))


def test_hankel_basis_matches_bessel_form_on_negative_axis():
    from fieldemission.specialfn import hankel_one_third
    for eta in (-0.5, -2.0, -6.0):
        w1, w2 = hankel_airy_basis(eta)
        assert w1 == pytest.approx(math.sqrt(-eta) * hankel_one_third(-eta, 1), rel=1e-10)
        assert w2 == pytest.approx(math.sqrt(-eta) * hankel_one_third(-eta, 2), rel=1e-10)


def test_conjugate_pair_is_real():
    cfg = FieldConfiguration(1e8)
    st_ = LongitudinalState(0.0, 1.0, 1.0)
    for eta in (0.5, 2.0, 6.0):
        assert longitudinal_wavefunction(st_, cfg, -eta * airy_length(cfg)).imag == pytest.approx(0.0, abs=1e-15)


def test_longitudinal_state_needs_a_coefficient():
    with pytest.raises(ValueError):
        LongitudinalState(0.0, 0, 0)
