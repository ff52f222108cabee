"""
Magnetic suppression of field emission
======================================

The Fowler-Nordheim current with image-force corrections depends on the
field through an exponent of order ``b phi^(3/2) / E``. A magnetic induction
enters through the invariant ``E^2 - c^2 B^2``: the current is evaluated at
``E* = E sqrt(1 - (cB/E)^2)``. There is no real E* once ``cB >= E``; at the
desk-scale 100 MV/m that already happens above 0.334 T.
"""

import numpy as np

from fieldemission import CONSTANTS, fn_current_density, fn_current_with_field_reduction, sweep

EV = CONSTANTS.electron_charge
C = CONSTANTS.speed_of_light
phi = 4.5 * EV

cur = fn_current_density(3e9, phi)
print(f"E = 3 GV/m:   j = {cur.j:.4e} A/m^2   (y = {cur.y:.4f}, v = {cur.v:.4f}, t = {cur.t:.4f})")
cur = fn_current_density(1e8, phi)
print(f"E = 100 MV/m: ln j = {cur.ln_j:.1f}, i.e. j = {cur.j:.2e} A/m^2")

# Relative suppression along B at a strong field
table = sweep([3e9], list(np.linspace(0, 10, 11)), phi, timestamp=False)
j0 = table.rows[0].current_density
print("\n  B [T]      E* [V/m]      j/j(0)")
for row in table.rows:
    print(f"{row.b_applied:6.1f}   {row.e_effective:.5e}   {row.current_density / j0:.4e}")

# At 100 MV/m and 1.5 T the invariant is negative
pt = fn_current_with_field_reduction(1e8, 1.5, phi)
print(f"\nE = 100 MV/m, B = 1.5 T -> {pt.status.value}; critical induction E/c = {1e8 / C:.4f} T")
