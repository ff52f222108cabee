"""Electron potential-energy landscapes near the metal surface and their geometry.

Three barrier families are available through :class:`PotentialSpec`:

``bare_triangular``
    ``V(x) = -e E0 x``
``schottky``
    ``V(x) = -e E0 x - e^2/(16 pi eps0 x)`` (field plus image force)
``magnetic_parallel``
    ``V(x) = m w^2 x^2 / 2 - e E0 x - e^2/(16 pi eps0 x)``; the Schottky barrier
    plus the parabolic wall produced by a magnetic induction parallel to the
    surface (``w = e B0 / m``). The electric field is taken normal to the
    surface regardless of ``config.alpha``.

Energy reference: for these families V is zero at the vacuum level just
outside the surface, so a Fermi-level electron sits at ``-phi``. The
collinear barrier built by :func:`collinear_barrier` instead follows the
step convention: ``V = 0`` inside the metal (``x < 0``) and
``C + V_schottky(x)`` for ``x >= 0``.

The image term is not regularised; positions below ``MIN_POSITION`` are
rejected whenever it is active.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from fieldemission.fields import CONSTANTS, FieldConfiguration, cyclotron_frequency

MIN_POSITION = 1e-12
DEFAULT_X_MAX = 1e-1
DEFAULT_GRID_POINTS = 4096
ROOT_RTOL = 1e-12

_E = CONSTANTS.electron_charge
_M = CONSTANTS.electron_mass
# e^2 / (16 pi eps0): image-force strength in J m
IMAGE_STRENGTH = _E**2 / (16.0 * math.pi * CONSTANTS.vacuum_permittivity)


class PotentialKind(str, enum.Enum):
    BARE_TRIANGULAR = "bare_triangular"
    SCHOTTKY = "schottky"
    MAGNETIC_PARALLEL = "magnetic_parallel"


class PotentialDomainError(ValueError):
    """Position outside the domain on which the potential is defined."""


class NoPeakError(ValueError):
    """The potential has no interior maximum (no image term)."""


@dataclass(frozen=True)
class PotentialSpec:
    kind: PotentialKind
    config: FieldConfiguration
    barrier_height: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        if self.barrier_height is not None:
            if not (math.isfinite(self.barrier_height) and self.barrier_height >= 0):
                raise ValueError(f"barrier height must be finite and >= 0, got {self.barrier_height!r}")

    @property
    def has_image_term(self) -> bool:
        return self.kind is not PotentialKind.BARE_TRIANGULAR


@dataclass(frozen=True)
class BarrierAnalysis:
    energy: float
    turning_points: list[float]
    peak_position: float | None
    peak_value: float | None
    zero_crossings: list[float] = field(default_factory=list)
    emission_window: tuple[float, float] | None = None


def _evaluate_array(spec: PotentialSpec, x: np.ndarray) -> np.ndarray:
    cfg = spec.config
    if not np.all(np.isfinite(x)):
        raise PotentialDomainError("positions must be finite")
    step = spec.barrier_height is not None
    inside = x < 0 if step else np.zeros(x.shape, dtype=bool)
    vac = ~inside
    if spec.has_image_term and np.any(x[vac] < MIN_POSITION):
        bad = x[vac][x[vac] < MIN_POSITION][0]
        raise PotentialDomainError(
            f"x = {bad!r} m: image term requires x >= {MIN_POSITION:g} m"
        )
    xv = x[vac]
    v = -(_E * cfg.e_strength * xv)
    if spec.has_image_term:
        v = v - IMAGE_STRENGTH / xv
    if spec.kind is PotentialKind.MAGNETIC_PARALLEL:
        omega = cyclotron_frequency(cfg)
        v = v + 0.5 * _M * omega**2 * xv**2
    if step:
        v = spec.barrier_height + v
    out = np.zeros(x.shape)
    out[vac] = v
    return out


def evaluate_potential(spec: PotentialSpec, x):
    """Potential energy in J at position(s) ``x`` in m; scalars in, scalar out."""
    arr = np.asarray(x, dtype=float)
    v = _evaluate_array(spec, np.atleast_1d(arr))
    return float(v[0]) if arr.ndim == 0 else v.reshape(arr.shape)


def _derivative(spec: PotentialSpec, x: np.ndarray) -> np.ndarray:
    cfg = spec.config
    d = np.full(x.shape, -_E * cfg.e_strength)
    if spec.has_image_term:
        d = d + IMAGE_STRENGTH / x**2
    if spec.kind is PotentialKind.MAGNETIC_PARALLEL:
        d = d + _M * cyclotron_frequency(cfg) ** 2 * x
    return d


def _bisect(func, lo, hi, rtol=ROOT_RTOL):
    """Sign-bracketed bisection; ``func(lo)`` and ``func(hi)`` differ in sign."""
    f_lo = func(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rtol * abs(mid):
            break
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_grid(x_max, n):
    if x_max <= MIN_POSITION:
        raise ValueError(f"x_max must exceed {MIN_POSITION:g} m")
    return np.geomspace(MIN_POSITION, x_max, n)


def _stationary_points(spec, grid):
    """Refined sign changes of dV/dx on the scan grid, as (x, is_maximum)."""
    d = _derivative(spec, grid)
    out = []
    for i in np.nonzero(np.sign(d[:-1]) != np.sign(d[1:]))[0]:
        deriv = lambda t: float(_derivative(spec, np.array([t]))[0])
        xs = _bisect(deriv, float(grid[i]), float(grid[i + 1]))
        out.append((xs, bool(d[i] > 0)))
    return out


def barrier_peak(
    spec: PotentialSpec, x_max: float = DEFAULT_X_MAX, n_grid: int = DEFAULT_GRID_POINTS
) -> tuple[float, float]:
    """Position and value of the barrier maximum on ``(0, x_max]``.

    Found by scanning dV/dx on a log grid and bisecting the first + to -
    sign change. For the Schottky barrier this is ``x_m = sqrt(e/(16 pi eps0 E0))``
    with ``V = -2 e E0 x_m``.
    """
    if not spec.has_image_term:
        raise NoPeakError(f"{spec.kind.value} potential has no interior maximum")
    for x, is_max in _stationary_points(spec, _scan_grid(x_max, n_grid)):
        if is_max:
            return x, evaluate_potential(spec, x)
    raise NoPeakError("no local maximum found on the search interval")


def turning_points(
    spec: PotentialSpec,
    energy: float,
    x_max: float = DEFAULT_X_MAX,
    n_grid: int = DEFAULT_GRID_POINTS,
) -> BarrierAnalysis:
    """Classical turning points ``V(x) = energy`` on ``[MIN_POSITION, x_max]``.

    Roots are bracketed on a log grid (augmented with the stationary points
    of V so narrow barriers cannot slip between nodes) and refined by
    bisection to ``|dx|/x < 1e-12``. A barrier top exactly at ``energy`` is
    reported as a double root.
    """
    if not math.isfinite(energy):
        raise ValueError("energy must be finite")
    grid = _scan_grid(x_max, n_grid)
    stationary = _stationary_points(spec, grid) if spec.kind is not PotentialKind.BARE_TRIANGULAR else []
    peak_x = peak_v = None
    for xs, is_max in stationary:
        if is_max:
            peak_x = xs
            peak_v = evaluate_potential(spec, xs)
            break

    nodes = np.unique(np.concatenate([grid, [xs for xs, _ in stationary]]))
    f = evaluate_potential(spec, nodes) - energy
    g = lambda t: evaluate_potential(spec, t) - energy

    roots = []
    tol = ROOT_RTOL * (abs(energy) + (abs(peak_v) if peak_v is not None else 0.0))
    for i in range(len(nodes)):
        if f[i] == 0.0:
            roots.append(float(nodes[i]))
        elif i + 1 < len(nodes) and f[i + 1] != 0.0 and (f[i] < 0) != (f[i + 1] < 0):
            roots.append(_bisect(g, float(nodes[i]), float(nodes[i + 1])))
    if peak_x is not None and abs(peak_v - energy) <= tol:
        # tangency at the barrier top: entry and exit coincide
        roots = [r for r in roots if abs(r - peak_x) > 1e-4 * peak_x]
        roots.extend([peak_x, peak_x])
    roots.sort()

    zeros = []
    f0 = evaluate_potential(spec, nodes)
    for i in range(len(nodes) - 1):
        if f0[i] == 0.0:
            zeros.append(float(nodes[i]))
        elif f0[i + 1] != 0.0 and (f0[i] < 0) != (f0[i + 1] < 0):
            zeros.append(_bisect(lambda t: evaluate_potential(spec, t), float(nodes[i]), float(nodes[i + 1])))

    window = _emission_window(spec, energy, roots, peak_x, x_max)
    return BarrierAnalysis(
        energy=energy,
        turning_points=roots,
        peak_position=peak_x,
        peak_value=peak_v,
        zero_crossings=zeros,
        emission_window=window,
    )


def _emission_window(spec, energy, roots, peak_x, x_max):
    """Allowed interval (V < energy) beyond the barrier; upper end ``inf`` when open."""
    start = peak_x if peak_x is not None else MIN_POSITION
    if evaluate_potential(spec, start) >= energy:
        # first point past the barrier where V drops below the energy
        exits = [r for r in roots if r >= start and _falls_through(spec, energy, r, x_max)]
        if not exits:
            return None
        start = exits[0]
    walls = [r for r in roots if r > start and not _falls_through(spec, energy, r, x_max)]
    return (start, walls[0] if walls else math.inf)


def _falls_through(spec, energy, root, x_max):
    probe = min(root * (1.0 + 1e-6), x_max)
    return evaluate_potential(spec, probe) < energy


def collinear_barrier(config: FieldConfiguration, barrier_height: float) -> PotentialSpec:
    """Surface barrier for motion along collinear E and B fields.

    ``V(y) = C - e E0 y - e^2/(16 pi eps0 y)`` for ``y >= 0`` and ``0`` inside
    the metal. The magnetic induction only enters the transverse motion, so
    it is dropped from the returned description.
    """
    if not barrier_height > 0:
        raise ValueError(f"barrier height C must be > 0, got {barrier_height!r}")
    electric_only = replace(config, b_induction=0.0, alpha=0.0)
    return PotentialSpec(PotentialKind.SCHOTTKY, electric_only, barrier_height=barrier_height)
