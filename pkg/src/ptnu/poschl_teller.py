"""Trigonometric Poschl-Teller potential: s-wave bound states in closed form.

The potential V(r) = V1/sin^2(alpha*r) + V2/cos^2(alpha*r) confines the
particle to the principal well between the two singularities, i.e.
r in (0, pi/(2*alpha)).  Natural units (hbar = c = 1) throughout: masses
and energies in fm^-1, the spectral parameter eps = 2*m*E in fm^-2.

The substitution s = sin^2(alpha*r) maps the l = 0 radial equation onto
the parametric template handled by `ptnu.nu`, which yields both the
closed-form energy levels and Jacobi-polynomial radial wavefunctions

    R_n(r) ~ (sin ar)^k1 (cos ar)^k2 P_n^(ja,jb)(cos 2ar).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonFinite, QuadratureFailure
from .nu import Branch, SpectralFamily, derive_constants, eigenfunction_factors, solve_energy
from .special_functions import integrate, jacobi


@dataclass(frozen=True)
class PtPotential:
    """Physical parameters: mass m, well depths v1 and v2, range alpha.

    All in fm^-1 and strictly positive; the well spans (0, pi/(2*alpha)).
    """

    m: float
    v1: float
    v2: float
    alpha: float

    def __post_init__(self):
        if not (self.m > 0.0 and self.v1 > 0.0 and self.v2 > 0.0 and self.alpha > 0.0):
            raise DomainError(
                f"need m, v1, v2, alpha all > 0, got m={self.m}, v1={self.v1}, "
                f"v2={self.v2}, alpha={self.alpha}")

    @property
    def v1_prime(self) -> float:
        """Reduced depth 2*m*V1 (fm^-2)."""
        return 2.0 * self.m * self.v1

    @property
    def v2_prime(self) -> float:
        """Reduced depth 2*m*V2 (fm^-2)."""
        return 2.0 * self.m * self.v2

    @property
    def r_max(self) -> float:
        """Right edge of the principal well, pi/(2*alpha) (fm)."""
        return math.pi / (2.0 * self.alpha)


@dataclass(frozen=True)
class BoundState:
    """One s-wave level: quantum number, energy, eps = 2mE, and the scale
    factor that gives the radial wavefunction unit L2 norm."""

    n: int
    energy: float
    eps: float
    norm: float


def potential_value(p: PtPotential, r: float) -> float:
    """V(r) = V1/sin^2(alpha r) + V2/cos^2(alpha r) inside the well."""
    if not (0.0 < r < p.r_max):
        raise DomainError(f"r={r} outside the well (0, {p.r_max})")
    a_r = p.alpha * r
    return p.v1 / math.sin(a_r) ** 2 + p.v2 / math.cos(a_r) ** 2


def to_nu_family(p: PtPotential) -> SpectralFamily:
    """Template family for this potential under s = sin^2(alpha r).

    The fixed coefficients are (1/2, 1, 1); only x1 and x2 carry eps.
    """
    quarter = 1.0 / (4.0 * p.alpha * p.alpha)
    v1p = p.v1_prime
    v2p = p.v2_prime

    def xi_map(eps: float) -> tuple[float, float, float]:
        return (eps * quarter, (eps + v1p - v2p) * quarter, v1p * quarter)

    return SpectralFamily(a1=0.5, a2=1.0, a3=1.0, xi_map=xi_map)


def energy_closed_form(p: PtPotential, n: int) -> float:
    """Closed-form level E_n (fm^-1) of the s-wave spectrum."""
    if n < 0:
        raise DomainError(f"quantum number must be >= 0, got {n}")
    a2 = p.alpha * p.alpha
    sq1 = math.sqrt(a2 + 8.0 * p.m * p.v1)
    sq2 = math.sqrt(a2 + 8.0 * p.m * p.v2)
    return ((2.0 * a2 / p.m) * (n + 0.5) ** 2
            + (p.alpha / (2.0 * p.m)) * (2.0 * n + 1.0) * (sq1 + sq2)
            + (sq1 * sq2 + a2) / (4.0 * p.m)
            + p.v1 + p.v2)


def alpha_zero_limit(p: PtPotential) -> float:
    """Common limit of every level as the range parameter goes to zero:
    V1 + V2 + 2*sqrt(V1*V2), the floor of the well."""
    return p.v1 + p.v2 + 2.0 * math.sqrt(p.v1 * p.v2)


def energy_via_nu(p: PtPotential, n: int, tol_rel: float = 1e-12) -> float:
    """Level E_n obtained by root-finding the template's termination
    condition; independent of the closed form except through the mapping.

    The residual tolerance is scaled by the residual magnitude at the
    bracket ends: the floating-point noise floor of the residual grows
    with the xi coefficients (~ V'/alpha^2), so a fixed absolute
    tolerance is unreachable for very small alpha.
    """
    family = to_nu_family(p)
    lo = 0.0
    hi = max(4.0 * p.alpha * p.alpha, 1.0)
    r_lo = family.residual(lo, n)
    for _ in range(80):
        if family.residual(hi, n) * r_lo < 0.0:
            break
        hi *= 4.0
    tol = tol_rel * max(abs(r_lo), abs(family.residual(hi, n)), 1.0)
    eps = solve_energy(family, n, Branch.PRINCIPAL, (lo, hi), tol=tol)
    return eps / (2.0 * p.m)


def radial_wavefunction(p: PtPotential, n: int):
    """Unnormalized R_n(r) as a callable of r (scalar or ndarray).

    R_n(r) = (sin ar)^(2*p1) (cos ar)^(2*p2) P_n^(ja,jb)(cos 2ar), with
    the exponents and Jacobi indices taken from the template pipeline at
    the closed-form energy.  Vanishes at both ends of the well.
    """
    if n < 0:
        raise DomainError(f"quantum number must be >= 0, got {n}")
    eps = 2.0 * p.m * energy_closed_form(p, n)
    d = derive_constants(to_nu_family(p).coefficients(eps))
    p1, p2, ja, jb = eigenfunction_factors(d)
    alpha = p.alpha
    r_max = p.r_max

    def wavefunction(r):
        r_arr = np.asarray(r, dtype=float)
        if np.any(r_arr <= 0.0) or np.any(r_arr >= r_max):
            raise DomainError(f"r outside the well (0, {r_max})")
        sin_ar = np.sin(alpha * r_arr)
        cos_ar = np.cos(alpha * r_arr)
        value = (sin_ar ** (2.0 * p1) * cos_ar ** (2.0 * p2)
                 * jacobi(n, ja, jb, np.cos(2.0 * alpha * r_arr)))
        return value if np.ndim(r) else float(value)

    return wavefunction


def normalize(p: PtPotential, n: int, panels: int = 48) -> BoundState:
    """Bound state with norm fixed so that the L2 norm of norm*R_n is 1."""
    energy = energy_closed_form(p, n)
    r_fn = radial_wavefunction(p, n)
    try:
        value, err = integrate(lambda r: r_fn(r) ** 2, 0.0, p.r_max, panels, graded=True)
    except NonFinite as exc:
        raise QuadratureFailure(f"normalization integrand not finite: {exc}") from exc
    if not (value > 0.0 and math.isfinite(value)):
        raise QuadratureFailure(f"normalization integral degenerate: {value}")
    if err > 1e-8 * value:
        raise QuadratureFailure(f"normalization error estimate {err} too large for {value}")
    return BoundState(n=n, energy=energy, eps=2.0 * p.m * energy, norm=1.0 / math.sqrt(value))


def normalized_wavefunction(p: PtPotential, n: int, panels: int = 48):
    """(BoundState, callable) pair with the unit-norm radial function."""
    state = normalize(p, n, panels)
    r_fn = radial_wavefunction(p, n)
    scale = state.norm
    return state, lambda r: scale * r_fn(r)


def spectrum_table(m: float, v1: float, v2: float, alphas: list[float],
                   n_max: int) -> list[list[float]]:
    """Closed-form levels as rows n = 0..n_max, one column per alpha."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    if not alphas:
        raise DomainError("alphas must be non-empty")
    potentials = [PtPotential(m, v1, v2, a) for a in alphas]
    return [[energy_closed_form(p, n) for p in potentials] for n in range(n_max + 1)]
