"""
Collinear fields leave tunneling untouched
==========================================

With E and B along the same axis the Hamiltonian splits into the Landau
problem across B and a one-dimensional barrier along B. The induction only
appears in the first part, so the penetration coefficient of the surface
barrier is the same for every B. Putting B parallel to the surface instead
adds the magnetic wall to the barrier, and the coefficient moves.
"""

from fieldemission import CONSTANTS, collinear_independence_demo

EV = CONSTANTS.electron_charge
b_values = [0.0, 0.5, 1.0, 1.5]
barrier_height, e_field, energy = 10 * EV, 3e9, 5 * EV

print("   B [T]   D (collinear)          D (B parallel to surface)")
collinear = collinear_independence_demo(barrier_height, e_field, b_values, energy)
parallel = collinear_independence_demo(barrier_height, e_field, b_values, energy, geometry="parallel")
for b, c, p in zip(b_values, collinear, parallel):
    print(f"{b:7.2f}   {c.coefficient!r:22}   {p.coefficient!r}")

print("\ncollinear values identical to the last bit:", len({r.coefficient for r in collinear}) == 1)
