"""Physical constants, the field configuration and classical derived quantities.

Geometry: the metal surface is the plane x = 0 with vacuum at x > 0. The
magnetic induction points along +y with magnitude ``b_induction``; the
electric field has magnitude ``e_strength`` and makes the angle ``alpha``
with the magnetic field, so that an electron gains potential energy
``-e*E0*(x*sin(alpha) + y*cos(alpha))``. ``alpha = 0`` is the collinear case,
``alpha = pi/2`` puts the magnetic field parallel to the surface.

All quantities are SI. The only non-SI conveniences are :func:`ev_to_joule`
and :func:`joule_to_ev`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values (SI)."""

    electron_charge: float = 1.602176634e-19  # C, exact
    electron_mass: float = 9.1093837015e-31  # kg
    planck: float = 6.62607015e-34  # J s, exact
    vacuum_permittivity: float = 8.8541878128e-12  # F/m
    speed_of_light: float = 299792458.0  # m/s, exact

    @property
    def hbar(self) -> float:
        # h is exact in SI 2019, so hbar is defined rather than rounded
        return self.planck / (2.0 * math.pi)


CONSTANTS = PhysicalConstants()

_E = CONSTANTS.electron_charge
_M = CONSTANTS.electron_mass
_C = CONSTANTS.speed_of_light


def ev_to_joule(value):
    return value * _E


def joule_to_ev(value):
    return value / _E


class ZeroMagneticFieldError(ValueError):
    """Raised when a quantity needs B0 > 0 (drift, Larmor centre, Landau levels)."""


class CriticalFieldError(ValueError):
    """Raised when c*B0 >= E0, where the Lorentz-reduced field is not real.

    The critical induction ``E0/c`` is stored in :attr:`b_critical`.
    """

    def __init__(self, e_strength: float, b_induction: float):
        self.e_strength = e_strength
        self.b_induction = b_induction
        self.b_critical = e_strength / _C
        super().__init__(
            f"c*B0 >= E0: B0 = {b_induction:.6g} T is at or above the critical "
            f"field B_crit = E0/c = {self.b_critical:.4f} T for E0 = {e_strength:.6g} V/m; "
            "the reduced field E0*sqrt(1 - (c*B0/E0)^2) has no real value"
        )


@dataclass(frozen=True)
class FieldConfiguration:
    """Constant uniform fields: E0 [V/m], B0 [T] and the angle between them [rad]."""

    e_strength: float
    b_induction: float = 0.0
    alpha: float = 0.0

    def __post_init__(self):
        for name in ("e_strength", "b_induction", "alpha"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.e_strength < 0:
            raise ValueError(f"e_strength must be >= 0, got {self.e_strength!r}")
        if self.b_induction < 0:
            raise ValueError(f"b_induction must be >= 0, got {self.b_induction!r}")
        if not 0.0 <= self.alpha <= math.pi / 2:
            raise ValueError(f"alpha must lie in [0, pi/2], got {self.alpha!r}")

    def _require_magnetic(self, what: str):
        if self.b_induction == 0.0:
            raise ZeroMagneticFieldError(f"{what} is undefined for B0 = 0")


def cyclotron_frequency(config: FieldConfiguration) -> float:
    """Angular cyclotron frequency ``e*B0/m`` in rad/s (0 when B0 = 0)."""
    return _E * config.b_induction / _M


def drift_velocity(config: FieldConfiguration) -> float:
    """E x B drift speed of the Larmor-orbit centre, ``(E0/B0) sin(alpha)``."""
    config._require_magnetic("drift velocity")
    return config.e_strength / config.b_induction * math.sin(config.alpha)


def guiding_center_offset(config: FieldConfiguration, p_z: float = 0.0) -> float:
    """Equilibrium x of the transverse oscillator.

    ``x0 = p_z/(m*w) + e*E0*sin(alpha)/(m*w**2)`` with ``w`` the cyclotron
    frequency.
    """
    config._require_magnetic("guiding-centre offset")
    omega = cyclotron_frequency(config)
    return p_z / (_M * omega) + _E * config.e_strength * math.sin(config.alpha) / (_M * omega**2)


def lorentz_reduced_field(config: FieldConfiguration) -> float:
    """Electric field with the same field invariant ``E^2 - c^2 B^2``.

    Returns ``E0*sqrt(1 - (c*B0/E0)**2)``; raises :class:`CriticalFieldError`
    when ``c*B0 >= E0``.
    """
    e0, b0 = config.e_strength, config.b_induction
    if b0 == 0.0:
        return e0
    ratio = _C * b0 / e0 if e0 > 0 else math.inf
    if ratio >= 1.0:
        raise CriticalFieldError(e0, b0)
    # 1 - r^2 is monotone in r under rounding; near r = 1 the factored form
    # keeps precision (1 - r is exact there)
    if ratio <= 0.5:
        return e0 * math.sqrt(1.0 - ratio * ratio)
    return e0 * math.sqrt((1.0 - ratio) * (1.0 + ratio))
