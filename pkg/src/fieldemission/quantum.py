"""Separated stationary states of an electron in constant E and B fields.

The transverse motion (x, z) is a shifted harmonic oscillator: Landau levels
``(n + 1/2) hbar w + m v_d^2/2 - e E0 sin(alpha) x0`` with Hermite-Gauss wavefunctions
centred on the guiding centre ``x0``. The motion along B (y) obeys the Airy
equation ``Y'' = eta Y`` and is written as a combination of the two
Hankel-type Airy solutions.

Conventions
-----------
* The Airy variable is ``eta = -lam (y - y_t)`` with
  ``lam = (2 m e E0 cos(alpha) / hbar^2)^(1/3)`` and turning point
  ``y_t = -eps_y / (e E0 cos(alpha))``, i.e. where ``-e E0 y cos(alpha) = eps_y``.
  With this choice ``-hbar^2/(2m) Y'' - e E0 y cos(alpha) Y = eps_y Y`` holds
  exactly and the wave decays on the metal side of the turning point.
* The transverse factor is normalised over x per unit length in z; the plane
  wave in z is left unnormalised.

Energies are computed in exact rational arithmetic (:class:`fractions.Fraction`
built from the float inputs) and rounded once. The field terms of a Landau
level can exceed ``hbar w`` by eight or more orders of magnitude, and exact
evaluation keeps the consistency residual at zero instead of at the float
round-off of those terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from fieldemission.fields import (
    CONSTANTS,
    FieldConfiguration,
    ZeroMagneticFieldError,
    cyclotron_frequency,
    guiding_center_offset,
)
from fieldemission.specialfn import airy, hermite

WAVEFUNCTION_MAX_ORDER = 50

_E = CONSTANTS.electron_charge
_M = CONSTANTS.electron_mass
_HBAR = CONSTANTS.hbar
_SQRT3 = math.sqrt(3.0)


class DegenerateFieldError(ValueError):
    """E0 cos(alpha) = 0: motion along B is free and the Airy map is undefined."""


@dataclass(frozen=True)
class LandauState:
    n: int
    p_z: float
    config: FieldConfiguration

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"Landau index must be a non-negative integer, got {self.n!r}")
        if not math.isfinite(self.p_z):
            raise ValueError("p_z must be finite")
        if self.config.b_induction <= 0:
            raise ZeroMagneticFieldError("Landau quantisation needs B0 > 0")


@dataclass(frozen=True)
class LongitudinalState:
    """Energy along B and the coefficients of ``A w1(eta) + B w2(eta)``."""

    eps_y: float
    coeff_a: complex
    coeff_b: complex

    def __post_init__(self):
        if self.coeff_a == 0 and self.coeff_b == 0:
            raise ValueError("coefficients must not both vanish")

    @classmethod
    def decaying(cls, eps_y: float, amplitude: complex = 1.0) -> "LongitudinalState":
        """The branch ``Y = amplitude * Ai(eta)``, decaying into the barrier."""
        a = amplitude / complex(3.0, -_SQRT3)
        return cls(eps_y, a, a * cmath.exp(-1j * math.pi / 3.0))


def magnetic_length(config: FieldConfiguration) -> float:
    """Oscillator length ``a = sqrt(hbar / (m w)) = sqrt(hbar / (e B0))``."""
    if config.b_induction <= 0:
        raise ZeroMagneticFieldError("magnetic length is undefined for B0 = 0")
    return math.sqrt(_HBAR / (_M * cyclotron_frequency(config)))


def xi_of_x(state: LandauState, x):
    """Dimensionless oscillator coordinate ``(x - x0) / a``."""
    a = magnetic_length(state.config)
    xi = (np.asarray(x, dtype=float) - guiding_center_offset(state.config, state.p_z)) / a
    return float(xi) if xi.ndim == 0 else xi


def _exact_terms(config: FieldConfiguration, p_z: float):
    e, m, hbar = Fraction(_E), Fraction(_M), Fraction(_HBAR)
    e0, b0 = Fraction(config.e_strength), Fraction(config.b_induction)
    s = Fraction(math.sin(config.alpha))
    p = Fraction(p_z)
    omega = e * b0 / m
    v_d = e0 / b0 * s
    x0 = p / (m * omega) + e * e0 * s / (m * omega**2)
    return e, m, hbar, e0, s, p, omega, v_d, x0


def landau_energy_exact(state: LandauState) -> Fraction:
    """Landau-level energy as an exact rational of the float inputs."""
    e, m, hbar, e0, s, _, omega, v_d, x0 = _exact_terms(state.config, state.p_z)
    return (state.n + Fraction(1, 2)) * hbar * omega + m * v_d**2 / 2 - e * e0 * s * x0


def landau_energy(state: LandauState) -> float:
    """Transverse energy ``(n + 1/2) hbar w + m v_d^2 / 2 - e E0 sin(alpha) x0`` in J.

    The last term is the electrostatic energy at the guiding centre; at
    ``alpha = pi/2`` it reduces to ``-e E0 x0``.
    """
    return float(landau_energy_exact(state))


def landau_spacing(config: FieldConfiguration) -> float:
    """Level spacing ``hbar w``, rounded from the same exact terms as the energies."""
    if config.b_induction <= 0:
        raise ZeroMagneticFieldError("no Landau levels for B0 = 0")
    _, _, hbar, _, _, _, omega, _, _ = _exact_terms(config, 0.0)
    return float(hbar * omega)


def dimensionless_energy_check(state: LandauState) -> float:
    """Residual of the oscillator quantisation condition.

    Recomputes ``eps~ = [2 eps_x + e^2 E0^2 sin^2(alpha)/(m w^2)
    + 2 e E0 sin(alpha) p_z/(m w)] / (hbar w)`` from the Landau energy and
    returns ``eps~ - (2n + 1)``. Evaluated exactly, so any nonzero value
    means the two energy expressions disagree.
    """
    e, m, hbar, e0, s, p, omega, _, _ = _exact_terms(state.config, state.p_z)
    eps_x = landau_energy_exact(state)
    scaled = (2 * eps_x + e**2 * e0**2 * s**2 / (m * omega**2) + 2 * e * e0 * s * p / (m * omega)) / (hbar * omega)
    return float(scaled - (2 * state.n + 1))


def transverse_wavefunction(state: LandauState, x, z=0.0):
    """Hermite-Gauss factor times the plane wave in z.

    ``psi = (a sqrt(pi) 2^n n!)^(-1/2) exp(-xi^2/2) H_n(xi) exp(i p_z z / hbar)``,
    normalised so that the integral of ``|psi|^2`` over x is 1.
    """
    n = state.n
    if n > WAVEFUNCTION_MAX_ORDER:
        raise ValueError(f"wavefunction order {n} exceeds {WAVEFUNCTION_MAX_ORDER}")
    a = magnetic_length(state.config)
    log_norm = -0.5 * (math.log(a) + 0.5 * math.log(math.pi) + n * math.log(2.0) + math.lgamma(n + 1))
    xi = xi_of_x(state, x)
    radial = math.exp(log_norm) * np.exp(-0.5 * np.square(xi)) * hermite(n, xi)
    phase = np.exp(1j * state.p_z * np.asarray(z, dtype=float) / _HBAR)
    out = radial * phase
    return complex(out) if np.ndim(out) == 0 else out


def _cos_alpha(config: FieldConfiguration) -> float:
    # cos(pi/2) rounds to 6e-17; the right-angle geometry is exactly degenerate
    return 0.0 if config.alpha == math.pi / 2 else math.cos(config.alpha)


def airy_length(config: FieldConfiguration) -> float:
    """Length scale ``(hbar^2 / (2 m e E0 cos(alpha)))^(1/3)`` of the motion along B."""
    force = _E * config.e_strength * _cos_alpha(config)
    if force <= 0:
        raise DegenerateFieldError("E0 cos(alpha) = 0: no Airy scaling along B")
    return (_HBAR**2 / (2.0 * _M * force)) ** (1.0 / 3.0)


def turning_point_y(config: FieldConfiguration, eps_y: float) -> float:
    """Classical turning point ``-eps_y / (e E0 cos(alpha))`` along B."""
    force = _E * config.e_strength * _cos_alpha(config)
    if force <= 0:
        raise DegenerateFieldError("E0 cos(alpha) = 0: no turning point along B")
    return -eps_y / force


def eta_of_y(config: FieldConfiguration, eps_y: float, y):
    """Airy coordinate ``eta = -(y - y_t) / l`` (affine, negative slope)."""
    return -(y - turning_point_y(config, eps_y)) / airy_length(config)


def hankel_airy_basis(eta: float) -> tuple[complex, complex]:
    """The two Hankel-type solutions of ``Y'' = eta Y``.

    For ``eta < 0`` these equal ``sqrt(-eta) H^(1,2)_{1/3}((2/3)(-eta)^(3/2))``;
    they are continued to all real eta through the Airy pair.
    """
    ai, _, bi, _ = airy(eta)
    w1 = (complex(3.0, -_SQRT3) * ai - complex(_SQRT3, 3.0) * bi) / 2.0
    w2 = (complex(3.0, _SQRT3) * ai - complex(_SQRT3, -3.0) * bi) / 2.0
    return w1, w2


def longitudinal_wavefunction(state: LongitudinalState, config: FieldConfiguration, y: float) -> complex:
    """``A w1(eta(y)) + B w2(eta(y))``.

    Evaluated as ``c_ai Ai + c_bi Bi`` with the coefficients combined first,
    so the decaying branch (``c_bi = 0``) does not cancel two large Bi terms.
    """
    a, b = state.coeff_a, state.coeff_b
    c_ai = (a * complex(3.0, -_SQRT3) + b * complex(3.0, _SQRT3)) / 2.0
    c_bi = -(a * complex(_SQRT3, 3.0) + b * complex(_SQRT3, -3.0)) / 2.0
    ai, _, bi, _ = airy(eta_of_y(config, state.eps_y, y))
    return c_ai * ai + c_bi * bi
