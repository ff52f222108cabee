"""
A magnetic induction parallel to the surface
============================================

An electron leaving the metal with B parallel to the surface feels, besides
the applied field and its own image charge, the parabolic wall
``m w^2 x^2 / 2`` (``w = e B / m``). At the nanometre scale of the
tunneling barrier the wall is invisible; at the millimetre scale it turns the
potential back up and closes the region where an emitted electron can go.
"""

import math

import numpy as np

from fieldemission import (
    CONSTANTS,
    FieldConfiguration,
    PotentialKind,
    PotentialSpec,
    barrier_peak,
    evaluate_potential,
    turning_points,
)

EV = CONSTANTS.electron_charge
cfg = FieldConfiguration(1e8, 1.0, math.pi / 2)
plain = PotentialSpec(PotentialKind.SCHOTTKY, cfg)
walled = PotentialSpec(PotentialKind.MAGNETIC_PARALLEL, cfg)

# Near the surface the two curves coincide
x_near = np.linspace(1e-9, 6e-8, 7)
print("   x [nm]    V(B=0) [eV]    V(B=1 T) [eV]")
for x, a, b in zip(x_near, evaluate_potential(plain, x_near), evaluate_potential(walled, x_near)):
    print(f"{x * 1e9:9.1f}   {a / EV:12.6f}   {b / EV:14.6f}")

x_peak, v_peak = barrier_peak(walled)
print(f"\nbarrier top: x = {x_peak * 1e9:.4f} nm, V = {v_peak / EV:.4f} eV")

# Far away the wall wins: V returns to zero near 2 m E / (e B^2)
far = turning_points(walled, 0.0, x_max=1.2e-3)
print(f"V = 0 again at x = {far.zero_crossings[-1] * 1e3:.5f} mm")
print(f"electron at the vacuum level is confined to {far.emission_window[0]:.3e} .. {far.emission_window[1]:.3e} m")

# The plain Schottky potential never comes back
x_far = np.linspace(x_peak, 1.2e-3, 5)
print("V(B=0) beyond the peak:", ", ".join(f"{v / EV:.1f}" for v in evaluate_potential(plain, x_far)), "eV")

# The same profiles are available as one CSV from the command line:
#   fieldemission fig2 --no-timestamp > profiles.csv
