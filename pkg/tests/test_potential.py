import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fieldemission import (
    CONSTANTS,
    FieldConfiguration,
    PotentialKind,
    PotentialSpec,
    barrier_peak,
    collinear_barrier,
    evaluate_potential,
    turning_points,
)
from fieldemission.potential import MIN_POSITION, NoPeakError, PotentialDomainError

E, M, EPS0 = CONSTANTS.electron_charge, CONSTANTS.electron_mass, CONSTANTS.vacuum_permittivity
EV = E


def spec(kind, e0=1e8, b0=0.0):
    return PotentialSpec(PotentialKind(kind), FieldConfiguration(e0, b0, math.pi / 2 if b0 else 0.0))


def schottky_peak(e0):
    x = math.sqrt(E / (16 * math.pi * EPS0 * e0))
    return x, -2 * E * e0 * x


def test_schottky_peak_value():
    x_m, v_m = schottky_peak(1e8)
    assert x_m == pytest.approx(1.897e-9, rel=1e-3)
    assert evaluate_potential(spec("schottky"), x_m) == pytest.approx(v_m, rel=1e-14)
    assert v_m / EV == pytest.approx(-0.3795, rel=1e-3)
    assert v_m == pytest.approx(-6.080e-20, rel=1e-3)


def test_bare_triangular_value():
    assert evaluate_potential(spec("bare_triangular"), 1e-8) == pytest.approx(-EV, rel=1e-15)


def test_magnetic_term_negligible_at_nanometres():
    a = evaluate_potential(spec("schottky"), 6e-8)
    b = evaluate_potential(spec("magnetic_parallel", b0=1.0), 6e-8)
    assert abs(b - a) / abs(a) < 1e-3


def test_vectorised_matches_scalar():
    s = spec("magnetic_parallel", b0=1.0)
    xs = np.geomspace(1e-10, 1e-3, 50)
    assert np.array_equal(evaluate_potential(s, xs), [evaluate_potential(s, x) for x in xs])
    assert isinstance(evaluate_potential(s, 1e-9), float)


def test_zero_induction_degenerates_to_schottky():
    xs = np.geomspace(1e-10, 1e-2, 200)
    assert np.array_equal(evaluate_potential(spec("magnetic_parallel", b0=0.0), xs), evaluate_potential(spec("schottky"), xs))


@pytest.mark.parametrize("x", [0.0, -1e-9, 1e-13])
def test_image_term_domain(x):
    with pytest.raises(PotentialDomainError):
        evaluate_potential(spec("schottky"), x)


def test_bare_triangular_allows_origin():
    assert evaluate_potential(spec("bare_triangular"), 0.0) == 0.0


def test_barrier_peak_examples():
    x, v = barrier_peak(spec("schottky"))
    x_m, v_m = schottky_peak(1e8)
    assert x == pytest.approx(x_m, rel=1e-10)
    assert v == pytest.approx(v_m, rel=1e-12)
    x4, v4 = barrier_peak(spec("schottky", 4e8))
    assert x4 == pytest.approx(x / 2, rel=1e-10)
    assert v4 == pytest.approx(2 * v, rel=1e-10)
    assert x4 == pytest.approx(9.49e-10, rel=1e-3)
    xb, _ = barrier_peak(spec("magnetic_parallel", b0=1.0))
    assert abs(xb - x) / x < 1e-4


def test_barrier_peak_brute_force_scan():
    s = spec("magnetic_parallel", 3e9, 1.0)
    xs = np.linspace(2e-10, 2e-9, 200001)
    vs = evaluate_potential(s, xs)
    x, v = barrier_peak(s)
    assert v >= vs.max()
    assert x == pytest.approx(xs[vs.argmax()], rel=1e-4)


def test_no_peak_for_triangular():
    with pytest.raises(NoPeakError):
        barrier_peak(spec("bare_triangular"))


def test_tangent_energy_gives_double_root():
    x_m, v_m = schottky_peak(1e8)
    a = turning_points(spec("schottky"), v_m)
    assert len(a.turning_points) == 2
    assert a.turning_points[0] == a.turning_points[1]
    assert a.turning_points[0] == pytest.approx(x_m, rel=1e-8)


def test_outer_wall_zero_crossing():
    a = turning_points(spec("magnetic_parallel", b0=1.0), 0.0)
    assert a.zero_crossings[-1] == pytest.approx(1.1371e-3, rel=1e-4)
    # independent cubic: (e^2 B^2 / 2m) x^3 - e E0 x^2 - e^2/(16 pi eps0) = 0
    roots = np.roots([E**2 / (2 * M), -E * 1e8, 0.0, -E**2 / (16 * math.pi * EPS0)])
    real = max(r.real for r in roots if abs(r.imag) < 1e-12 * abs(r))
    assert a.zero_crossings[-1] == pytest.approx(real, rel=1e-10)


def test_magnetic_parallel_three_turning_points():
    s = spec("magnetic_parallel", b0=1.0)
    a = turning_points(s, -1.0 * EV)
    assert len(a.turning_points) == 3
    assert a.turning_points == sorted(a.turning_points)
    for x in a.turning_points:
        assert evaluate_potential(s, x) == pytest.approx(-EV, rel=1e-9)
    x_entry, x_exit, x_wall = a.turning_points
    assert a.emission_window == (x_exit, x_wall)
    assert a.peak_value >= evaluate_potential(s, np.linspace(x_entry, x_exit, 1001)).max()


def test_schottky_window_is_open():
    a = turning_points(spec("schottky"), -1.0 * EV)
    assert len(a.turning_points) == 2
    assert a.emission_window == (a.turning_points[1], math.inf)


def test_bare_triangular_single_root():
    a = turning_points(spec("bare_triangular"), -EV)
    assert a.turning_points == [pytest.approx(1e-8, rel=1e-12)]
    assert a.peak_position is None


def test_energy_above_peak_has_no_barrier():
    a = turning_points(spec("schottky"), -0.1 * EV)
    assert a.turning_points == []


@settings(max_examples=40, deadline=None)
@given(st.floats(1e7, 1e10), st.floats(0.05, 0.99))
def test_turning_points_solve_the_equation(e0, depth):
    s = spec("schottky", e0)
    _, v_m = barrier_peak(s)
    energy = v_m / depth  # below the top
    a = turning_points(s, energy)
    assert len(a.turning_points) == 2
    for x in a.turning_points:
        assert evaluate_potential(s, x) == pytest.approx(energy, rel=1e-9)


def test_far_field_behaviour():
    xs = np.linspace(1e-8, 1.2e-3, 5000)
    assert np.all(evaluate_potential(spec("schottky"), xs) < 0)
    v = evaluate_potential(spec("magnetic_parallel", b0=1.0), xs)
    assert v[-1] > 0 and v[0] < 0


# collinear barrier


def test_collinear_barrier_values():
    c = 10 * EV
    s = collinear_barrier(FieldConfiguration(1e8, 1.5, 0.0), c)
    x_m, v_m = schottky_peak(1e8)
    assert evaluate_potential(s, x_m) / EV == pytest.approx(9.6205, abs=1e-4)
    assert evaluate_potential(s, -1e-9) == 0.0
    assert evaluate_potential(s, np.array([-1.0, -1e-20])).tolist() == [0.0, 0.0]


def test_collinear_barrier_independent_of_b():
    rng = np.random.default_rng(7)
    ys = rng.uniform(-5e-9, 5e-8, 1000)
    ys = np.where((ys > 0) & (ys < MIN_POSITION), 1e-9, ys)
    a = collinear_barrier(FieldConfiguration(1e8, 0.0), 10 * EV)
    b = collinear_barrier(FieldConfiguration(1e8, 1.5), 10 * EV)
    assert np.array_equal(evaluate_potential(a, ys), evaluate_potential(b, ys))


def test_collinear_barrier_requires_positive_height():
    with pytest.raises(ValueError):
        collinear_barrier(FieldConfiguration(1e8), 0.0)
