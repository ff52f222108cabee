"""Barrier-penetration coefficients.

Two independent routes:

* :func:`wkb_transmission` - ``D = exp(-(2/hbar) * integral sqrt(2m(V - E)) dx)``
  between the classical turning points of a :class:`PotentialSpec`.
* :func:`numerov_transmission` - direct integration of the stationary
  Schroedinger equation on a sampled potential with flat end pads, giving
  the transmitted-to-incident flux ratio.

:func:`collinear_independence_demo` evaluates the surface barrier for
collinear E and B over a list of inductions; B only enters the transverse
Hamiltonian, so every coefficient is the same.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from fieldemission.fields import CONSTANTS, FieldConfiguration
from fieldemission.potential import (
    DEFAULT_GRID_POINTS,
    DEFAULT_X_MAX,
    MIN_POSITION,
    PotentialKind,
    PotentialSpec,
    _bisect,
    collinear_barrier,
    evaluate_potential,
    turning_points,
)

_M = CONSTANTS.electron_mass
_HBAR = CONSTANTS.hbar
_TWO_M_OVER_HBAR2 = 2.0 * _M / _HBAR**2

NUMEROV_MIN_POINTS = 500
NUMEROV_MAX_KH = 0.1
DEFAULT_INTERIOR_DEPTH = 7.0 * CONSTANTS.electron_charge


class Method(str, enum.Enum):
    WKB = "wkb"
    NUMEROV = "numerov"


class GridError(ValueError):
    """Sampled potential unsuitable for Numerov integration."""


@dataclass(frozen=True)
class TransmissionResult:
    coefficient: float
    exponent: float
    method: Method
    barrier_free: bool = False
    turning_points: tuple[float, float] | None = None

    @property
    def log_coefficient(self) -> float:
        """``ln D``; finite even when D underflows."""
        if self.method is Method.WKB or self.coefficient == 0:
            return 0.0 - self.exponent  # no negative zero
        return math.log(self.coefficient)


def _barrier_pair(spec, energy, x_max, n_grid):
    analysis = turning_points(spec, energy, x_max=x_max, n_grid=n_grid)
    pts = analysis.turning_points
    for lo, hi in zip(pts, pts[1:]):
        if lo == hi:
            return lo, hi
        if evaluate_potential(spec, 0.5 * (lo + hi)) > energy:
            return lo, hi
    if pts and not spec.has_image_term and evaluate_potential(spec, 0.0) > energy:
        # no image term: the barrier starts at the metal surface
        return 0.0, pts[0]
    return None


def wkb_action(spec: PotentialSpec, energy: float, x1: float, x2: float) -> float:
    """``(2/hbar) * integral_{x1}^{x2} sqrt(2m(V - E)) dx``.

    The substitution ``x = mid - half*cos(theta)`` removes the square-root
    behaviour at both turning points, leaving a smooth integrand.
    """
    if x2 <= x1:
        return 0.0
    mid, half = 0.5 * (x1 + x2), 0.5 * (x2 - x1)

    def integrand(theta):
        x = mid - half * math.cos(theta)
        gap = evaluate_potential(spec, x) - energy
        return math.sqrt(2.0 * _M * gap) * half * math.sin(theta) if gap > 0 else 0.0

    value, _ = integrate.quad(integrand, 0.0, math.pi, epsabs=0.0, epsrel=1e-12, limit=200)
    return 2.0 * value / _HBAR


def wkb_transmission(
    spec: PotentialSpec,
    energy: float,
    x_max: float = DEFAULT_X_MAX,
    n_grid: int = DEFAULT_GRID_POINTS,
) -> TransmissionResult:
    """WKB penetration coefficient through the first barrier above ``energy``.

    When no classically forbidden interval exists the result is ``D = 1``
    with ``barrier_free`` set.
    """
    pair = _barrier_pair(spec, energy, x_max, n_grid)
    if pair is None:
        return TransmissionResult(1.0, 0.0, Method.WKB, barrier_free=True)
    exponent = wkb_action(spec, energy, *pair)
    return TransmissionResult(math.exp(-exponent), exponent, Method.WKB, turning_points=pair)


def numerov_transmission(x, potential, energy: float) -> TransmissionResult:
    """Flux transmission through a sampled potential by Numerov integration.

    ``x`` must be uniform with at least 500 points and ``potential`` flat over
    the first and last three samples, with ``energy`` above both pad levels.
    The transmitted lattice wave is started on the right pad and the
    solution integrated leftwards; the incident amplitude is read off the
    left pad. Pad waves use the Numerov lattice dispersion, so a flat
    potential transmits exactly.
    """
    x = np.asarray(x, dtype=float)
    v = np.asarray(potential, dtype=float)
    if x.ndim != 1 or x.shape != v.shape:
        raise GridError("x and potential must be 1-D arrays of equal length")
    if len(x) < NUMEROV_MIN_POINTS:
        raise GridError(f"need at least {NUMEROV_MIN_POINTS} grid points, got {len(x)}")
    steps = np.diff(x)
    h = (x[-1] - x[0]) / (len(x) - 1)
    if h <= 0 or np.max(np.abs(steps - h)) > 1e-6 * h:
        raise GridError("grid must be uniform and increasing")
    if not (v[0] == v[1] == v[2] and v[-1] == v[-2] == v[-3]):
        raise GridError("potential must be flat over the first and last three samples")
    if not (energy > v[0] and energy > v[-1]):
        raise GridError("energy must exceed the potential on both pads")
    k_max = math.sqrt(_TWO_M_OVER_HBAR2 * (energy - min(v[0], v[-1])))
    if k_max * h > NUMEROV_MAX_KH:
        raise GridError(f"grid too coarse: k*h = {k_max * h:.3g} > {NUMEROV_MAX_KH}")

    f = _TWO_M_OVER_HBAR2 * (v - energy)
    w = 1.0 - h * h * f / 12.0

    def lattice_q(f_pad):
        return math.acos((1.0 + 5.0 * h * h * f_pad / 12.0) / (1.0 - h * h * f_pad / 12.0))

    q_left, q_right = lattice_q(f[0]), lattice_q(f[-1])
    n = len(x)
    psi = [0j] * n
    psi[-1] = 1.0 + 0j
    psi[-2] = complex(math.cos(q_right), -math.sin(q_right))
    for i in range(n - 2, 0, -1):
        psi[i - 1] = (2.0 * (1.0 + 5.0 * h * h * f[i] / 12.0) * psi[i] - w[i + 1] * psi[i + 1]) / w[i - 1]

    u = complex(math.cos(q_left), math.sin(q_left))
    incident = (psi[1] - psi[0] / u) / (u - 1.0 / u)
    ratio = math.sin(q_right) / math.sin(q_left)
    log_d = math.log(ratio) - 2.0 * math.log(abs(incident))
    d = min(1.0, math.exp(log_d))
    return TransmissionResult(d, -log_d, Method.NUMEROV)


def padded_barrier_samples(
    spec: PotentialSpec,
    energy: float,
    n_points: int = 4001,
    interior_depth: float = DEFAULT_INTERIOR_DEPTH,
    exterior_depth: float | None = None,
    pad_fraction: float = 0.25,
    x_max: float = DEFAULT_X_MAX,
):
    """Uniform samples of ``spec`` around its barrier, clamped flat outside it.

    Left of the barrier the potential is held at ``energy - interior_depth``,
    standing in for the metal interior where the electron moves with that
    kinetic energy (default 7 eV, a free-electron Fermi energy). Right of the
    barrier it is held at ``energy - exterior_depth`` (default: the barrier
    height above ``energy``). The sampled span between the two clamp points is
    widened by ``pad_fraction`` of its length on each side.

    Returns ``(x, V)`` ready for :func:`numerov_transmission`.
    """
    pair = _barrier_pair(spec, energy, x_max, DEFAULT_GRID_POINTS)
    if pair is None or pair[0] == pair[1]:
        raise ValueError("no barrier above the given energy")
    x1, x2 = pair
    if exterior_depth is None:
        exterior_depth = max(evaluate_potential(spec, np.linspace(x1, x2, 257))) - energy
    left = lambda t: evaluate_potential(spec, t) - (energy - interior_depth)
    right = lambda t: evaluate_potential(spec, t) - (energy - exterior_depth)

    x_l = _bisect(left, MIN_POSITION, x1) if left(MIN_POSITION) < 0 else MIN_POSITION
    hi = x2 + (x2 - x1)
    while right(hi) > 0 and hi < x_max:
        hi = x2 + 2.0 * (hi - x2)
    x_r = _bisect(right, x2, hi) if right(hi) < 0 else hi

    span = x_r - x_l
    grid = np.linspace(x_l - pad_fraction * span, x_r + pad_fraction * span, n_points)
    return grid, evaluate_potential(spec, np.clip(grid, x_l, x_r))


def collinear_independence_demo(
    barrier_height: float,
    e_strength: float,
    b_values,
    energy: float,
    geometry: str = "collinear",
) -> list[TransmissionResult]:
    """WKB coefficients of the surface barrier for each induction in ``b_values``.

    ``geometry="collinear"`` (alpha = 0) builds the barrier seen by the motion
    along B, which carries no B dependence. ``geometry="parallel"``
    (alpha = pi/2) uses the same barrier with the parabolic magnetic wall
    added, for contrast.
    """
    b_values = list(b_values)
    if len(b_values) < 2:
        raise ValueError("need at least two induction values")
    if not all(math.isfinite(b) for b in b_values):
        raise ValueError("induction values must be finite")
    results = []
    for b in b_values:
        if geometry == "collinear":
            spec = collinear_barrier(FieldConfiguration(e_strength, b, 0.0), barrier_height)
        elif geometry == "parallel":
            cfg = FieldConfiguration(e_strength, b, math.pi / 2)
            spec = PotentialSpec(PotentialKind.MAGNETIC_PARALLEL, cfg, barrier_height=barrier_height)
        else:
            raise ValueError(f"unknown geometry {geometry!r}")
        results.append(wkb_transmission(spec, energy))
    return results
