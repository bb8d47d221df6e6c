"""Parametric Nikiforov-Uvarov engine.

Solves any problem that can be cast into the template

    psi'' + (a1 - a2*s)/(s*(1 - a3*s)) * psi'
          + (-x1*s^2 + x2*s - x3)/(s*(1 - a3*s))^2 * psi = 0

by deriving the standard chain of constants a4..a13, evaluating the
polynomial-termination condition that quantizes the spectral parameter,
root-finding energies for a family parameterized by eps, and assembling
the eigenfunction factors

    psi(s) = s^p1 * (1 - a3*s)^p2 * P_n^(ja, jb)(1 - 2*a3*s)

with the a3 -> 0 exponential/Laguerre limit handled separately.

Two admissible sign choices exist for the auxiliary constant k; they give
distinct constant sets and solution families, selected here by `Branch`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import (
    DomainError,
    NegativeDiscriminant,
    NonConvergence,
    NonzeroA3,
    NoSignChange,
    ZeroA3,
)
from .special_functions import jacobi, laguerre


class Branch(Enum):
    """Sign choice for k: PRINCIPAL takes the minus root, SECONDARY the plus."""

    PRINCIPAL = "principal"
    SECONDARY = "secondary"


@dataclass(frozen=True)
class NuCoefficients:
    """The six template inputs: a1, a2, a3 from the first-derivative and
    leading polynomials, x1, x2, x3 from the potential-like polynomial."""

    a1: float
    a2: float
    a3: float
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        values = (self.a1, self.a2, self.a3, self.x1, self.x2, self.x3)
        if not all(math.isfinite(v) for v in values):
            raise DomainError(f"coefficients must be finite, got {values}")
        if self.a3 < 0.0:
            raise DomainError(f"a3 must be >= 0 (a3 = 0 selects the Laguerre limit), got {self.a3}")


@dataclass(frozen=True)
class NuDerived:
    """Derived constants a4..a13 and the k value for one branch.

    Under SECONDARY, a10..a13 hold the starred variants; a4..a9 are
    branch-independent. The source coefficients ride along because the
    downstream formulas still need a2 and a3.
    """

    coeffs: NuCoefficients
    a4: float
    a5: float
    a6: float
    a7: float
    a8: float
    a9: float
    a10: float
    a11: float
    a12: float
    a13: float
    k: float
    branch: Branch


def derive_constants(c: NuCoefficients, b: Branch = Branch.PRINCIPAL) -> NuDerived:
    """Run the constant pipeline a4..a13 for the requested branch.

    Raises NegativeDiscriminant when a8 < 0 or a9 < 0, i.e. when the
    square roots leave the real axis and the method does not apply.
    """
    a4 = 0.5 * (1.0 - c.a1)
    a5 = 0.5 * (c.a2 - 2.0 * c.a3)
    a6 = a5 * a5 + c.x1
    a7 = 2.0 * a4 * a5 - c.x2
    a8 = a4 * a4 + c.x3
    a9 = c.a3 * a7 + c.a3 * c.a3 * a8 + a6
    if a8 < 0.0 or a9 < 0.0:
        raise NegativeDiscriminant(f"need a8 >= 0 and a9 >= 0, got a8={a8}, a9={a9}")
    s8 = math.sqrt(a8)
    s9 = math.sqrt(a9)
    root = 2.0 * math.sqrt(a8 * a9)
    if b is Branch.PRINCIPAL:
        k = -(a7 + 2.0 * c.a3 * a8) - root
        a10 = c.a1 + 2.0 * a4 + 2.0 * s8
        a11 = c.a2 - 2.0 * a5 + 2.0 * (s9 + c.a3 * s8)
        a12 = a4 + s8
        a13 = a5 - (s9 + c.a3 * s8)
    else:
        k = -(a7 + 2.0 * c.a3 * a8) + root
        a10 = c.a1 + 2.0 * a4 - 2.0 * s8
        a11 = c.a2 - 2.0 * a5 + 2.0 * (s9 - c.a3 * s8)
        a12 = a4 - s8
        a13 = a5 - (s9 - c.a3 * s8)
    return NuDerived(c, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, k, b)


def k_values(c: NuCoefficients) -> tuple[float, float]:
    """Both admissible k roots, (principal, secondary)."""
    d = derive_constants(c)
    k2 = -(d.a7 + 2.0 * c.a3 * d.a8) + 2.0 * math.sqrt(d.a8 * d.a9)
    return d.k, k2


def tau_prime(d: NuDerived) -> float:
    """Slope of the linear tau polynomial for the branch.

    The method requires a negative slope for a physical solution family;
    the sign is a validity flag for the caller, not an error here.
    """
    s8 = math.sqrt(d.a8)
    s9 = math.sqrt(d.a9)
    sign = 1.0 if d.branch is Branch.PRINCIPAL else -1.0
    return -2.0 * d.coeffs.a3 - 2.0 * (s9 + sign * d.coeffs.a3 * s8)


def quantization_residual(c: NuCoefficients, n: int, b: Branch = Branch.PRINCIPAL) -> float:
    """Left-hand side of the termination condition; zero at a bound state.

    Principal branch:

        a2*n - (2n+1)*a5 + (2n+1)*(sqrt(a9) + a3*sqrt(a8)) + n(n-1)*a3
            + a7 + 2*a3*a8 + 2*sqrt(a8*a9)

    The secondary branch flips the signs of the a3*sqrt(a8) and
    2*sqrt(a8*a9) terms.  Equivalent to lambda_n - lambda with
    lambda = k + pi' and lambda_n = -n*tau' - n(n-1)/2 * sigma''.
    """
    if n < 0:
        raise DomainError(f"quantum number must be >= 0, got {n}")
    d = derive_constants(c, b)
    s8 = math.sqrt(d.a8)
    s9 = math.sqrt(d.a9)
    sign = 1.0 if b is Branch.PRINCIPAL else -1.0
    return (c.a2 * n - (2.0 * n + 1.0) * d.a5 + (2.0 * n + 1.0) * (s9 + sign * c.a3 * s8)
            + n * (n - 1.0) * c.a3 + d.a7 + 2.0 * c.a3 * d.a8
            + sign * 2.0 * math.sqrt(d.a8 * d.a9))


@dataclass(frozen=True)
class SpectralFamily:
    """Template coefficients whose x1, x2, x3 depend on a spectral parameter.

    xi_map must be deterministic and total on eps_domain; outside that
    interval coefficient evaluation is refused.
    """

    a1: float
    a2: float
    a3: float
    xi_map: Callable[[float], tuple[float, float, float]]
    eps_domain: tuple[float, float] = (-math.inf, math.inf)

    def coefficients(self, eps: float) -> NuCoefficients:
        lo, hi = self.eps_domain
        if not (lo <= eps <= hi):
            raise DomainError(f"eps={eps} outside domain [{lo}, {hi}]")
        x1, x2, x3 = self.xi_map(eps)
        return NuCoefficients(self.a1, self.a2, self.a3, x1, x2, x3)

    def residual(self, eps: float, n: int, b: Branch = Branch.PRINCIPAL) -> float:
        return quantization_residual(self.coefficients(eps), n, b)


def solve_energy(f: SpectralFamily, n: int, b: Branch, bracket: tuple[float, float],
                 tol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of the termination condition in eps over the given bracket.

    Probes three points first: if they are collinear the residual is
    treated as affine in eps and the root is taken in a single linear
    step plus one secant polish.  Otherwise requires a sign change over
    the bracket and closes in with bisection-safeguarded secant steps.
    Terminates when |residual| <= tol.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    lo, hi = bracket
    if not (lo < hi):
        raise DomainError(f"empty bracket {bracket}")
    r_lo = f.residual(lo, n, b)
    r_hi = f.residual(hi, n, b)
    mid = 0.5 * (lo + hi)
    r_mid = f.residual(mid, n, b)
    scale = max(abs(r_lo), abs(r_hi), abs(r_mid), 1.0)

    # affine fast path: midpoint residual collinear with the endpoints
    if abs(r_mid - 0.5 * (r_lo + r_hi)) <= 1e-10 * scale and abs(r_hi - r_lo) > 0.0:
        slope = (r_hi - r_lo) / (hi - lo)
        eps = lo - r_lo / slope
        if lo <= eps <= hi:
            r = f.residual(eps, n, b)
            if r != 0.0 and slope != 0.0:
                polished = eps - r / slope
                if lo <= polished <= hi:
                    r_polished = f.residual(polished, n, b)
                    if abs(r_polished) < abs(r):
                        eps, r = polished, r_polished
            if abs(r) <= tol:
                return eps

    if abs(r_lo) <= tol:
        return lo
    if abs(r_hi) <= tol:
        return hi
    if r_lo * r_hi > 0.0:
        raise NoSignChange(f"residual has the same sign at both ends of {bracket}")

    a, fa = lo, r_lo
    c, fc = hi, r_hi
    x, fx = mid, r_mid
    for it in range(max_iter):
        if abs(fx) <= tol:
            return x
        if fa * fx < 0.0:
            c, fc = x, fx
        else:
            a, fa = x, fx
        width = c - a
        if it % 2 == 0 and fc != fa:
            # secant through the bracket ends, clipped to the interior
            x = a - fa * width / (fc - fa)
            if not (a + 1e-3 * width < x < c - 1e-3 * width):
                x = a + 0.5 * width
        else:
            x = a + 0.5 * width
        fx = f.residual(x, n, b)
    raise NonConvergence(f"no residual <= {tol} within {max_iter} iterations")


def eigenfunction_factors(d: NuDerived) -> tuple[float, float, float, float]:
    """Exponents and Jacobi indices (p1, p2, ja, jb) of the solution factors."""
    a3 = d.coeffs.a3
    if a3 <= 0.0:
        raise ZeroA3("eigenfunction factors need a3 > 0; use the limit form")
    p1 = d.a12
    p2 = -d.a12 - d.a13 / a3
    ja = d.a10 - 1.0
    jb = (d.a11 - d.a10 - 1.0) / a3
    return p1, p2, ja, jb


def evaluate_eigenfunction(d: NuDerived, n: int, s: float) -> float:
    """Unnormalized psi(s) = s^p1 (1-a3*s)^p2 P_n^(ja,jb)(1-2*a3*s)."""
    p1, p2, ja, jb = eigenfunction_factors(d)
    a3 = d.coeffs.a3
    if not (0.0 < s < 1.0 / a3):
        raise DomainError(f"s={s} outside (0, {1.0 / a3})")
    value = s ** p1 * (1.0 - a3 * s) ** p2 * jacobi(n, ja, jb, 1.0 - 2.0 * a3 * s)
    if not math.isfinite(value):
        raise DomainError(f"eigenfunction overflow at s={s}")
    return value


def evaluate_eigenfunction_limit(d: NuDerived, n: int, s: float) -> float:
    """a3 = 0 limit: psi(s) = s^a12 e^(a13*s) L_n^(a10-1)(a11*s)."""
    if d.coeffs.a3 != 0.0:
        raise NonzeroA3(f"limit form needs a3 = 0, got {d.coeffs.a3}")
    if s <= 0.0:
        raise DomainError(f"s must be positive, got {s}")
    return s ** d.a12 * math.exp(d.a13 * s) * laguerre(n, d.a10 - 1.0, d.a11 * s)
