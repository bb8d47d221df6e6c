"""Parametric Nikiforov-Uvarov engine, trigonometric Poschl-Teller bound
states, self-contained special functions, and a finite-difference oracle."""

from . import errors
from .nu import (
    Branch,
    NuCoefficients,
    NuDerived,
    SpectralFamily,
    derive_constants,
    eigenfunction_factors,
    evaluate_eigenfunction,
    evaluate_eigenfunction_limit,
    k_values,
    quantization_residual,
    solve_energy,
    tau_prime,
)
from .oracle import (
    ConvergedEigenvalue,
    RadialOperator,
    converge_eigenvalue,
    discretize,
    eigenvector,
    lowest_eigenvalues,
    ode_residual,
    richardson,
)
from .poschl_teller import (
    BoundState,
    PtPotential,
    alpha_zero_limit,
    energy_closed_form,
    energy_via_nu,
    normalize,
    normalized_wavefunction,
    potential_value,
    radial_wavefunction,
    spectrum_table,
    to_nu_family,
)
from .special_functions import (
    QuadratureRule,
    binomial,
    composite_rule,
    gauss_rule,
    integrate,
    jacobi,
    jacobi_sum,
    laguerre,
    laguerre_sum,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "NuCoefficients",
    "NuDerived",
    "SpectralFamily",
    "derive_constants",
    "eigenfunction_factors",
    "evaluate_eigenfunction",
    "evaluate_eigenfunction_limit",
    "k_values",
    "quantization_residual",
    "solve_energy",
    "tau_prime",
    "ConvergedEigenvalue",
    "RadialOperator",
    "converge_eigenvalue",
    "discretize",
    "eigenvector",
    "lowest_eigenvalues",
    "ode_residual",
    "richardson",
    "BoundState",
    "PtPotential",
    "alpha_zero_limit",
    "energy_closed_form",
    "energy_via_nu",
    "normalize",
    "normalized_wavefunction",
    "potential_value",
    "radial_wavefunction",
    "spectrum_table",
    "to_nu_family",
    "QuadratureRule",
    "binomial",
    "composite_rule",
    "gauss_rule",
    "integrate",
    "jacobi",
    "jacobi_sum",
    "laguerre",
    "laguerre_sum",
    "errors",
    "__version__",
]
