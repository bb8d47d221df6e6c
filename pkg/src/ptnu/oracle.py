"""Independent finite-difference verification of the s-wave spectrum.

Discretizes -R'' + V'(r) R = eps R on a uniform grid over the principal
well with Dirichlet ends (the exact solutions vanish at both singular
endpoints with positive fractional powers), then extracts the lowest
eigenvalues of the symmetric tridiagonal operator by bisection on the
Sturm negative-pivot count.  Second-order accuracy is recovered to
fourth order by Richardson extrapolation over a grid doubling.

Nothing here touches the template pipeline: agreement with the closed
form certifies it through an unrelated computational path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridTooSmall, NonFinite
from .poschl_teller import PtPotential


@dataclass(frozen=True)
class RadialOperator:
    """Symmetric tridiagonal discretization on the interior grid r_i = i*h."""

    n_points: int
    h: float
    diag: np.ndarray
    offdiag: float
    domain: tuple[float, float]


@dataclass(frozen=True)
class ConvergedEigenvalue:
    """One eigenvalue at step h and h/2 with its Richardson combination.

    order_estimate comes from an additional step-2h solve; it should sit
    near 2 for the three-point stencil.
    """

    eps_h: float
    eps_h2: float
    extrapolated: float
    order_estimate: float


def discretize(p: PtPotential, n_points: int) -> RadialOperator:
    """Three-point operator for the reduced equation with eps = 2mE."""
    if n_points < 100:
        raise GridTooSmall(f"need n_points >= 100, got {n_points}")
    length = p.r_max
    h = length / (n_points + 1)
    r = h * np.arange(1, n_points + 1)
    v_prime = p.v1_prime / np.sin(p.alpha * r) ** 2 + p.v2_prime / np.cos(p.alpha * r) ** 2
    return RadialOperator(
        n_points=n_points,
        h=h,
        diag=2.0 / (h * h) + v_prime,
        offdiag=-1.0 / (h * h),
        domain=(0.0, length),
    )


def _sturm_counts(diag_list: list[float], off_sq: float, shifts: np.ndarray,
                  pivmin: float) -> np.ndarray:
    """Number of eigenvalues below each shift, via the negative count of
    the LDL^T pivot recurrence q_i = d_i - x - e^2/q_{i-1}.

    Pivots inside (-pivmin, pivmin) are clamped to -pivmin before they are
    counted or divided by, so an exact zero registers on the negative side
    and never produces a 0/0.
    """
    q = np.where(np.abs(diag_list[0] - shifts) < pivmin, -pivmin, diag_list[0] - shifts)
    counts = (q < 0.0).astype(np.int64)
    with np.errstate(divide="ignore", over="ignore"):
        for d in diag_list[1:]:
            q = d - shifts - off_sq / q
            q = np.where(np.abs(q) < pivmin, -pivmin, q)
            counts += q < 0.0
    return counts


def lowest_eigenvalues(op: RadialOperator, count: int, rel_tol: float = 1e-10) -> list[float]:
    """The `count` smallest eigenvalues, ascending, each bracketed to
    rel_tol relative width by Sturm-count bisection."""
    if not (1 <= count <= op.n_points):
        raise DomainError(f"need 1 <= count <= {op.n_points}, got {count}")
    bound = 2.0 * abs(op.offdiag)
    glo = float(op.diag.min()) - bound
    ghi = float(op.diag.max()) + bound
    lo = np.full(count, glo)
    hi = np.full(count, ghi)
    targets = np.arange(1, count + 1)
    diag_list = op.diag.tolist()
    off_sq = op.offdiag * op.offdiag
    pivmin = 1e-20 * max(1.0, math.sqrt(off_sq))
    for _ in range(200):
        widths = hi - lo
        tolerances = rel_tol * np.maximum(np.maximum(np.abs(lo), np.abs(hi)), 1e-300)
        active = widths > tolerances
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        counts = _sturm_counts(diag_list, off_sq, mid, pivmin)
        go_down = counts >= targets
        hi = np.where(active & go_down, mid, hi)
        lo = np.where(active & ~go_down, mid, lo)
    return list(0.5 * (lo + hi))


def richardson(e_h: float, e_h2: float, order: int = 2) -> float:
    """Eliminate the leading h^order error from a step-halving pair."""
    if not (math.isfinite(e_h) and math.isfinite(e_h2)):
        raise NonFinite(f"need finite inputs, got {e_h}, {e_h2}")
    factor = 2.0 ** order
    return (factor * e_h2 - e_h) / (factor - 1.0)


def converge_eigenvalue(p: PtPotential, index: int, n_points: int) -> ConvergedEigenvalue:
    """Eigenvalue `index` solved at steps 2h, h, h/2 (n_points must be odd
    so the coarse grid is exact), Richardson-combined over the finer pair."""
    if n_points % 2 == 0:
        raise DomainError(f"n_points must be odd for exact step halving, got {n_points}")
    coarse = (n_points - 1) // 2
    fine = 2 * n_points + 1
    e_2h = lowest_eigenvalues(discretize(p, coarse), index + 1)[index]
    e_h = lowest_eigenvalues(discretize(p, n_points), index + 1)[index]
    e_h2 = lowest_eigenvalues(discretize(p, fine), index + 1)[index]
    order = math.log2(abs(e_2h - e_h) / abs(e_h - e_h2))
    return ConvergedEigenvalue(
        eps_h=e_h,
        eps_h2=e_h2,
        extrapolated=richardson(e_h, e_h2),
        order_estimate=order,
    )


def _tridiag_solve(diag: np.ndarray, offdiag: float, rhs: np.ndarray) -> np.ndarray:
    """Thomas elimination with a tiny-pivot guard (matrix may be nearly
    singular on purpose during inverse iteration)."""
    n = len(diag)
    scale = float(np.max(np.abs(diag))) + abs(offdiag)
    floor = 1e-14 * scale + 1e-300
    c_prime = np.empty(n)
    d_prime = np.empty(n)
    pivot = diag[0] if abs(diag[0]) > floor else math.copysign(floor, diag[0] or 1.0)
    c_prime[0] = offdiag / pivot
    d_prime[0] = rhs[0] / pivot
    for i in range(1, n):
        pivot = diag[i] - offdiag * c_prime[i - 1]
        if abs(pivot) < floor:
            pivot = math.copysign(floor, pivot or 1.0)
        c_prime[i] = offdiag / pivot
        d_prime[i] = (rhs[i] - offdiag * d_prime[i - 1]) / pivot
    x = d_prime
    for i in range(n - 2, -1, -1):
        x[i] -= c_prime[i] * x[i + 1]
    return x


def eigenvector(op: RadialOperator, eigenvalue: float, iterations: int = 4) -> np.ndarray:
    """Unit eigenvector by inverse iteration at the converged eigenvalue."""
    rng = np.random.default_rng(8671)
    v = rng.standard_normal(op.n_points)
    v /= np.linalg.norm(v)
    for _ in range(iterations):
        v = _tridiag_solve(op.diag - eigenvalue, op.offdiag, v)
        v /= np.linalg.norm(v)
    if v[np.argmax(np.abs(v))] < 0.0:
        v = -v
    return v


def ode_residual(wavefunction, p: PtPotential, energy: float, samples) -> float:
    """Scaled worst-case defect of R'' + (eps - V')R over the samples.

    The second derivative uses the centered fourth-order five-point
    stencil with step 1e-4 of the well width; samples must keep at least
    1e-3 of the well width away from both singular endpoints.
    """
    length = p.r_max
    margin = 1e-3 * length
    step = 1e-4 * length
    r = np.asarray(samples, dtype=float)
    if r.size == 0:
        raise DomainError("need at least one sample")
    if np.any(r <= margin) or np.any(r >= length - margin):
        raise DomainError(f"samples must lie in ({margin}, {length - margin})")
    eps = 2.0 * p.m * energy
    values = np.asarray(wavefunction(r), dtype=float)
    second = (-wavefunction(r - 2 * step) + 16.0 * wavefunction(r - step)
              - 30.0 * values + 16.0 * wavefunction(r + step)
              - wavefunction(r + 2 * step)) / (12.0 * step * step)
    v_prime = p.v1_prime / np.sin(p.alpha * r) ** 2 + p.v2_prime / np.cos(p.alpha * r) ** 2
    defect = second + (eps - v_prime) * values
    peak = float(np.max(np.abs(values)))
    if peak == 0.0 or not np.all(np.isfinite(defect)):
        raise NonFinite("wavefunction vanished on all samples or defect not finite")
    return float(np.max(np.abs(defect))) / peak
