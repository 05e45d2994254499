"""Steady-state simulator for a three-mode optomechanical system.

One cavity mode, two degenerate mechanical resonators, an intracavity
optical parametric amplifier and a Coulomb-induced mechanical parametric
term.  The package builds the linearized drift and noise matrices, solves
the steady-state Lyapunov equation and evaluates cooling, squeezing and
entanglement observables, including the sweep presets of the bundled
reference study.
"""

__version__ = "0.1.0"

from .params import (CODATA2018, REFERENCE_PARAMS, EffectiveParams,
                     PhysicalConstants, PhysicalParams, effective_from_physical,
                     lambda_from_voltage, n_th_from_temperature, optimal_opa,
                     x_zpf)
from .dynamics import (StabilityReport, StepTooLarge, Unstable, build_drift,
                       build_noise, default_initial_covariance,
                       integrate_transient, stability, steady_state)
from .observables import (ObservablesRecord, compute_observables,
                          log_negativity, phonon_numbers, residual_contangle,
                          squeezing_db, squeezing_db_optimal,
                          symplectic_eigenvalues, symplectic_form)
from .hybrid import (HybridModeParams, ZeroCoupling, dark_mode_broken,
                     dark_mode_occupation, hybrid_decomposition,
                     rotate_covariance_bd)
from .meanfield import DriveParams, MeanFieldState, NoConvergence, solve_mean_field
from .sweep import (ConfigError, SweepResult, SweepRow, SweepSpec,
                    evaluate_point, figure_preset, run_sweep)

__all__ = [
    "__version__",
    # params
    "PhysicalConstants", "CODATA2018", "PhysicalParams", "EffectiveParams",
    "REFERENCE_PARAMS", "lambda_from_voltage", "n_th_from_temperature",
    "x_zpf", "effective_from_physical", "optimal_opa",
    # dynamics
    "StabilityReport", "Unstable", "StepTooLarge", "build_drift",
    "build_noise", "stability", "steady_state", "integrate_transient",
    "default_initial_covariance",
    # observables
    "ObservablesRecord", "phonon_numbers", "squeezing_db",
    "squeezing_db_optimal", "symplectic_form", "symplectic_eigenvalues",
    "log_negativity", "residual_contangle", "compute_observables",
    # hybrid
    "HybridModeParams", "ZeroCoupling", "hybrid_decomposition",
    "dark_mode_broken", "rotate_covariance_bd", "dark_mode_occupation",
    # meanfield
    "DriveParams", "MeanFieldState", "NoConvergence", "solve_mean_field",
    # sweep
    "ConfigError", "SweepSpec", "SweepRow", "SweepResult", "evaluate_point",
    "run_sweep", "figure_preset",
]
