"""Electron field emission in superimposed constant electric and magnetic fields.

Submodules
----------
fields      physical constants, field configuration, classical derived quantities
potential   surface-barrier landscapes and their geometry
specialfn   Hermite, Airy / Hankel-1/3 and Nordheim functions
quantum     Landau levels and the separated wavefunctions
tunneling   WKB and Numerov barrier-penetration coefficients
emission    Fowler-Nordheim current densities with the magnetic field reduction
cli         command-line front end
"""

__version__ = "0.1.0"

from fieldemission.fields import (
    CONSTANTS,
    FieldConfiguration,
    PhysicalConstants,
    ZeroMagneticFieldError,
    CriticalFieldError,
    cyclotron_frequency,
    drift_velocity,
    guiding_center_offset,
    lorentz_reduced_field,
    ev_to_joule,
    joule_to_ev,
)
from fieldemission.potential import (
    PotentialKind,
    PotentialSpec,
    BarrierAnalysis,
    evaluate_potential,
    barrier_peak,
    turning_points,
    collinear_barrier,
)
from fieldemission.quantum import LandauState, LongitudinalState
from fieldemission.tunneling import (
    TransmissionResult,
    wkb_transmission,
    numerov_transmission,
    collinear_independence_demo,
)
from fieldemission.emission import (
    EmissionPoint,
    SweepTable,
    fn_current_density,
    fn_current_with_field_reduction,
    sweep,
)
