"""
Landau levels in crossed and tilted fields
==========================================

The motion across B is a harmonic oscillator centred on the guiding centre
x0. The energy of a level is ``(n + 1/2) hbar w`` plus the drift kinetic
energy, minus the electrostatic energy at x0. The levels stay exactly
``hbar w`` apart, however large the field terms are.
"""

import math

import numpy as np
from scipy import integrate

from fieldemission import CONSTANTS, FieldConfiguration, LandauState, drift_velocity, guiding_center_offset
from fieldemission.quantum import (
    dimensionless_energy_check,
    landau_energy,
    landau_spacing,
    magnetic_length,
    transverse_wavefunction,
)

EV = CONSTANTS.electron_charge

cfg = FieldConfiguration(1e8, 1.0, math.pi / 2)
print(f"drift velocity      {drift_velocity(cfg):.4e} m/s")
print(f"guiding centre      {guiding_center_offset(cfg):.4e} m")
print(f"magnetic length     {magnetic_length(cfg):.4e} m")
print(f"level spacing       {landau_spacing(cfg) / EV:.6e} eV")

# Field terms are ~1e4 eV; the levels still sit hbar*w apart
for n in range(4):
    s = LandauState(n, 0.0, cfg)
    print(f"n={n}: eps_x = {landau_energy(s) / EV:.10e} eV, quantisation residual {dimensionless_energy_check(s):g}")

# Tilting B changes the drift and the offset, not the spacing
for alpha in (0.0, math.pi / 6, math.pi / 3):
    tilted = FieldConfiguration(1e8, 1.0, alpha)
    print(f"alpha={alpha:.3f}: x0 = {guiding_center_offset(tilted):.3e} m, spacing = {landau_spacing(tilted) / EV:.6e} eV")

# Hermite-Gauss wavefunctions are normalised over x
a = magnetic_length(cfg)
x0 = guiding_center_offset(cfg)
xs = np.linspace(x0 - 12 * a, x0 + 12 * a, 4001)
for n in (0, 1, 4):
    dens = np.abs(transverse_wavefunction(LandauState(n, 0.0, cfg), xs)) ** 2
    print(f"n={n}: integral |psi|^2 dx = {integrate.trapezoid(dens, xs):.12f}")
