"""Fowler-Nordheim current density with image-force corrections, and its
magnetic reduction through the field invariant.

The current density is the Murphy-Good form

    j = e^3 E^2 / (8 pi h phi t(y)^2) * exp(-4 sqrt(2m) phi^(3/2) v(y) / (3 hbar e E)),
    y = sqrt(e^3 E / (4 pi eps0)) / phi,

with v, t the Nordheim functions. Desk-scale fields give exponents of
several hundred, so every result carries ``ln j`` next to ``j``.

A magnetic induction B is folded in by replacing E with the field that has
the same invariant ``E^2 - c^2 B^2``; for ``c B >= E`` there is no such real
field and the point is reported as suppressed (``j = 0``) rather than raised,
so that sweeps can cross the critical line.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import NamedTuple

from fieldemission import __version__
from fieldemission.fields import (
    CONSTANTS,
    CriticalFieldError,
    FieldConfiguration,
    lorentz_reduced_field,
)
from fieldemission.specialfn import nordheim_t, nordheim_v

_E = CONSTANTS.electron_charge
_M = CONSTANTS.electron_mass
_H = CONSTANTS.planck
_HBAR = CONSTANTS.hbar
_EPS0 = CONSTANTS.vacuum_permittivity

# exponent coefficient 4 sqrt(2m) / (3 hbar e), in J^(-3/2) V/m
FN_B = 4.0 * math.sqrt(2.0 * _M) / (3.0 * _HBAR * _E)

E_GRID_BOUNDS = (1e6, 1e11)
B_GRID_BOUNDS = (0.0, 10.0)


class BarrierCollapseError(ValueError):
    """Schottky lowering exceeds the work function (y > 1)."""


class EmissionStatus(str, enum.Enum):
    OK = "ok"
    BEYOND_CRITICAL_FIELD = "beyond_critical_field"
    BARRIER_COLLAPSE = "barrier_collapse"


class FNCurrent(NamedTuple):
    j: float
    ln_j: float
    y: float
    v: float
    t: float


@dataclass(frozen=True)
class EmissionPoint:
    e_applied: float
    b_applied: float
    work_function: float
    current_density: float
    log_current_density: float
    e_effective: float
    status: EmissionStatus


@dataclass(frozen=True)
class SweepTable:
    e_grid: tuple[float, ...]
    b_grid: tuple[float, ...]
    rows: list[EmissionPoint]
    metadata: dict = field(default_factory=dict)


def nordheim_parameter(e_field: float, work_function: float) -> float:
    """``y = sqrt(e^3 E / (4 pi eps0)) / phi``: Schottky lowering over phi."""
    return math.sqrt(_E**3 * e_field / (4.0 * math.pi * _EPS0)) / work_function


def fn_current_density(e_field: float, work_function: float, *, v_override: float | None = None) -> FNCurrent:
    """Image-corrected Fowler-Nordheim current density (A/m^2).

    ``v_override`` replaces v(y) by a constant; with ``v_override=1`` the
    quantity ``ln(j t^2 / E^2)`` is exactly affine in ``1/E``.
    """
    if not (e_field > 0 and math.isfinite(e_field)):
        raise ValueError(f"field must be positive and finite, got {e_field!r}")
    if not (work_function > 0 and math.isfinite(work_function)):
        raise ValueError(f"work function must be positive and finite, got {work_function!r}")
    y = nordheim_parameter(e_field, work_function)
    if y > 1.0:
        raise BarrierCollapseError(
            f"Schottky lowering exceeds the work function at E = {e_field:.6g} V/m (y = {y:.4f} > 1)"
        )
    v = nordheim_v(y) if v_override is None else v_override
    t = nordheim_t(y)
    log_prefactor = math.log(_E**3 * e_field**2 / (8.0 * math.pi * _H * work_function * t * t))
    ln_j = log_prefactor - FN_B * work_function**1.5 * v / e_field
    return FNCurrent(math.exp(ln_j), ln_j, y, v, t)


def fn_current_with_field_reduction(e_field: float, b_field: float, work_function: float) -> EmissionPoint:
    """Current density at the Lorentz-reduced field ``E sqrt(1 - c^2 B^2 / E^2)``.

    Never raises on the field domain; ``status`` tells what happened.
    """
    if not (e_field > 0 and work_function > 0 and b_field >= 0):
        raise ValueError("need E > 0, phi > 0 and B >= 0")
    try:
        e_eff = lorentz_reduced_field(FieldConfiguration(e_field, b_field, 0.0))
    except CriticalFieldError:
        return EmissionPoint(e_field, b_field, work_function, 0.0, -math.inf, 0.0,
                             EmissionStatus.BEYOND_CRITICAL_FIELD)
    try:
        cur = fn_current_density(e_eff, work_function)
    except BarrierCollapseError:
        return EmissionPoint(e_field, b_field, work_function, math.nan, math.nan, e_eff,
                             EmissionStatus.BARRIER_COLLAPSE)
    return EmissionPoint(e_field, b_field, work_function, cur.j, cur.ln_j, e_eff, EmissionStatus.OK)


def _check_grid(name, grid, bounds):
    grid = tuple(float(g) for g in grid)
    if not grid:
        raise ValueError(f"{name} grid is empty")
    lo, hi = bounds
    if any(not (lo <= g <= hi) for g in grid):
        raise ValueError(f"{name} grid values must lie in [{lo:g}, {hi:g}]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError(f"{name} grid must be strictly ascending")
    return grid


def sweep(e_grid, b_grid, work_function: float, *, timestamp: bool = True) -> SweepTable:
    """Row-major (E outer, B inner) table of :func:`fn_current_with_field_reduction`."""
    e_grid = _check_grid("E", e_grid, E_GRID_BOUNDS)
    b_grid = _check_grid("B", b_grid, B_GRID_BOUNDS)
    rows = [fn_current_with_field_reduction(e, b, work_function) for e in e_grid for b in b_grid]
    metadata = {"work_function_J": work_function, "tool_version": __version__}
    if timestamp:
        metadata["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return SweepTable(e_grid, b_grid, rows, metadata)
