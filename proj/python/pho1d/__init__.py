"""1D pseudoharmonic oscillator toolkit.

Compiled core: spectra, position/momentum waveforms, classical motion and
the quantum-information measures (deviations, Shannon/Renyi/Tsallis
entropies, Fisher information, Onicescu energy, non-Gaussianities).

Units: hbar = m = omega = 1. Lengths are reported in units of x_2omega,
wave vectors in 1/x_2omega, matching the dimensionless conventions of the
command-line tool.
"""

from ._pho1d import (  # noqa: F401
    BelowThresholdError,
    NearThresholdError,
    MeasureReport,
    Orbital,
    PhoModel,
    D_OMEGA,
    X_2OMEGA,
    X_OMEGA,
    alpha_threshold,
    average_speed,
    conjugate_beta,
    energy,
    fd_energies,
    gamma_density,
    measure_report,
    period,
    phi,
    potential,
    psi,
    renyi_k,
    renyi_k_sup,
    renyi_x,
    rho,
    shannon_k,
    shannon_x,
    symmetry_ratio,
    tsallis_k,
    tsallis_x,
    turning_points,
    uncertainty_gaps,
)

__all__ = [
    "BelowThresholdError",
    "NearThresholdError",
    "MeasureReport",
    "Orbital",
    "PhoModel",
    "D_OMEGA",
    "X_2OMEGA",
    "X_OMEGA",
    "alpha_threshold",
    "average_speed",
    "conjugate_beta",
    "energy",
    "fd_energies",
    "gamma_density",
    "measure_report",
    "period",
    "phi",
    "potential",
    "psi",
    "renyi_k",
    "renyi_k_sup",
    "renyi_x",
    "rho",
    "shannon_k",
    "shannon_x",
    "symmetry_ratio",
    "tsallis_k",
    "tsallis_x",
    "turning_points",
    "uncertainty_gaps",
]

__version__ = "1.0.0"
