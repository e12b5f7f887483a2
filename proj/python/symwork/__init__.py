"""Work extraction from the symmetrization entanglement of a boson condensate."""

from ._core import (  # noqa: F401
    DensityGrid,
    DickeKet,
    EIWEParams,
    MeasurementResult,
    Outcome,
    ParticleSplit,
    Regime,
    RegimeVerdict,
    SymmetricDensity,
    ThermalParams,
    condensate_work,
    eiwe_work,
    embed_full,
    entropy_lowT_approx,
    extract_work,
    make_dicke,
    mean_energy,
    measure_one_boson,
    occupation_x,
    phonon_dispersion,
    photon_nbar,
    recoil_gate,
    rethermalize,
    run_cycles,
    sample_outcomes,
    split_one_particle,
    thermal_state,
    two_mode_bell_work,
    u_int_from_density,
    von_neumann_entropy,
)

__version__ = "0.1.0"
