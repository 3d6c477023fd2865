"""Spontaneous emission of a two-level atom into a disordered cavity array.

The package simulates a single excitation shared between an atom and a 1D
coupled-cavity chain whose on-site frequencies carry long-range correlated
disorder (power-law spectrum, exponent alpha).  Tuning alpha from 0 (white
noise) past 2 (where extended band-center modes appear) drives the emission
from strongly non-Markovian, with population trapping and backflow, to
almost pure exponential decay.  Ensemble sweeps quantify this with the
accessible-volume non-Markovianity measure, and two closed-form effective
models (dominant mode + Markovian sink, and a Lorentzian bath) reproduce
the trend from a single dissipation-to-coupling ratio r.

Modules
-------
disorder     correlated on-site frequency series (normalized per draw)
model        single-excitation Hamiltonians as structural sparse operators
evolution    Taylor-expansion propagator and trajectory recording
tridiagonal  from-scratch implicit-shift QL eigensolver
spectral     mode couplings, binned G(omega) and gamma, participation, r
nonmarkov    accessible-volume backflow measure of a trajectory
effective    closed-form models, their N_V, and a Lindblad oracle
ensemble     seeded sweeps, averaging, persistence, figure datasets
cli          `cca-decay` command-line entry point
"""

__version__ = "0.1.0"

from .disorder import DisorderSeries, generate_raw_series, normalize_series, sample_series
from .effective import (
    integrate_lindblad_bath_plus_mode,
    lorentzian_density,
    nv_bath_plus_mode,
    nv_lorentzian,
    pe_bath_plus_mode,
    pe_lorentzian,
    predicted_n,
)
from .ensemble import (
    DEFAULT_MASTER_SEED,
    RealizationRecord,
    SweepConfig,
    SweepResult,
    derive_sub_seed,
    reproduce_figure,
    run_realization,
    run_sweep,
)
from .evolution import (
    PropagatorSettings,
    Trajectory,
    evolve,
    initial_state,
    load_trajectory,
    save_trajectory,
    taylor_step,
)
from .model import (
    SingleExcitationHamiltonian,
    SymmetricTridiagonal,
    SystemConfig,
    build_free_field,
    build_full_hamiltonian,
)
from .nonmarkov import (
    ExtremaList,
    NonMarkovianityResult,
    find_extrema,
    n_v_extrema_sum,
    n_v_integral,
    non_markovianity,
)
from .spectral import (
    EffectiveParams,
    SpectralDensity,
    decay_rate,
    effective_params,
    mode_couplings,
    participation_ratio,
    select_mode_ell,
    spectral_density,
)
from .tridiagonal import EigenDecomposition, diagonalize_tridiagonal

__all__ = [
    "__version__",
    "DisorderSeries",
    "generate_raw_series",
    "normalize_series",
    "sample_series",
    "SystemConfig",
    "SingleExcitationHamiltonian",
    "SymmetricTridiagonal",
    "build_full_hamiltonian",
    "build_free_field",
    "PropagatorSettings",
    "Trajectory",
    "initial_state",
    "taylor_step",
    "evolve",
    "save_trajectory",
    "load_trajectory",
    "EigenDecomposition",
    "diagonalize_tridiagonal",
    "SpectralDensity",
    "EffectiveParams",
    "mode_couplings",
    "spectral_density",
    "decay_rate",
    "participation_ratio",
    "select_mode_ell",
    "effective_params",
    "ExtremaList",
    "NonMarkovianityResult",
    "find_extrema",
    "n_v_extrema_sum",
    "n_v_integral",
    "non_markovianity",
    "pe_bath_plus_mode",
    "pe_lorentzian",
    "nv_bath_plus_mode",
    "nv_lorentzian",
    "predicted_n",
    "lorentzian_density",
    "integrate_lindblad_bath_plus_mode",
    "DEFAULT_MASTER_SEED",
    "SweepConfig",
    "SweepResult",
    "RealizationRecord",
    "derive_sub_seed",
    "run_realization",
    "run_sweep",
    "reproduce_figure",
]
