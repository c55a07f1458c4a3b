"""Photon production by a collapsing dielectric bubble: Bessel machinery,
Bogolubov kernels, spectra and budgets."""

from ._core import (
    MatchingCoefficients,
    Media,
    NumericalError,
    PhotonBudget,
    Scenario,
    StaticEnergy,
    __version__,
    a_squared_asymptotic,
    bessel_j_half,
    bessel_n_half,
    d_approx,
    d_exact,
    f_exact,
    f_factorized,
    matching_coefficients,
    overlap_integral_closed,
    photon_budget,
    photon_budget_infinite,
    preset,
    preset_names,
    pseudo_wronskian,
    pseudo_wronskian_diagonal,
    run_cli,
    schwinger_static_energy,
    sinc_kernel,
    spectrum,
    spectrum_infinite,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
