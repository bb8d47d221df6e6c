"""Jacobi and associated Laguerre polynomials plus composite Gauss quadrature.

Production evaluation goes through the three-term recurrences; the explicit
finite-sum forms are kept as independent small-n oracles for testing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidIndex, NonFinite


def binomial(r: float, k: int) -> float:
    """Binomial coefficient C(r, k) with real r, via log-gamma differences
    (no overflow for large indices).  Requires r - k > -1 so all gamma
    arguments are positive."""
    return math.exp(math.lgamma(r + 1.0) - math.lgamma(k + 1.0) - math.lgamma(r - k + 1.0))


def jacobi(n: int, a: float, b: float, x):
    """P_n^{(a,b)}(x) by the three-term recurrence in n.

    Accepts scalar or ndarray x; requires a > -1 and b > -1.
    """
    if n < 0:
        raise InvalidIndex(f"polynomial degree must be >= 0, got {n}")
    if a <= -1.0 or b <= -1.0:
        raise InvalidIndex(f"Jacobi parameters must exceed -1, got a={a}, b={b}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c0 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c1 = (2.0 * k + a + b - 1.0) * ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b)
        c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p_prev, p = p, (c1 * p - c2 * p_prev) / c0
    return p if p.ndim else float(p)


def _binom_product(r: np.longdouble, k: int) -> np.longdouble:
    """C(r, k) as the product prod_j (r - k + j) / j, kept in extended
    precision for the oracle sums (k stays small, so no overflow)."""
    out = np.longdouble(1.0)
    for j in range(1, k + 1):
        out = out * (r - k + j) / j
    return out


def jacobi_sum(n: int, a: float, b: float, x: float) -> float:
    """Explicit binomial finite-sum form of P_n^{(a,b)}(x); test oracle only.

    P_n = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)

    The alternating terms can exceed the result by orders of magnitude, so
    the sum runs in extended precision to stay trustworthy as an oracle.
    """
    if n < 0 or n > 20:
        raise InvalidIndex(f"finite-sum oracle limited to 0 <= n <= 20, got {n}")
    if a <= -1.0 or b <= -1.0:
        raise InvalidIndex(f"Jacobi parameters must exceed -1, got a={a}, b={b}")
    a_l = np.longdouble(a)
    b_l = np.longdouble(b)
    lo = (np.longdouble(x) - 1) / 2
    hi = (np.longdouble(x) + 1) / 2
    total = np.longdouble(0.0)
    for k in range(n + 1):
        term = _binom_product(n + a_l, n - k) * _binom_product(n + b_l, k)
        total += term * _signed_pow(lo, k) * _signed_pow(hi, n - k)
    return float(total)


def _signed_pow(base: float, p: int) -> float:
    # 0**0 == 1 by polynomial convention
    if p == 0:
        return 1.0
    return base ** p


def laguerre(n: int, a: float, x):
    """Associated Laguerre L_n^{(a)}(x) by the three-term recurrence in n."""
    if n < 0:
        raise InvalidIndex(f"polynomial degree must be >= 0, got {n}")
    if a <= -1.0:
        raise InvalidIndex(f"Laguerre parameter must exceed -1, got a={a}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 1.0 + a - x
    for k in range(2, n + 1):
        p_prev, p = p, ((2.0 * k - 1.0 + a - x) * p - (k - 1.0 + a) * p_prev) / k
    return p if p.ndim else float(p)


def laguerre_sum(n: int, a: float, x: float) -> float:
    """Explicit finite-sum form of L_n^{(a)}(x); test oracle only."""
    if n < 0 or n > 20:
        raise InvalidIndex(f"finite-sum oracle limited to 0 <= n <= 20, got {n}")
    if a <= -1.0:
        raise InvalidIndex(f"Laguerre parameter must exceed -1, got a={a}")
    a_l = np.longdouble(a)
    x_l = np.longdouble(x)
    total = np.longdouble(0.0)
    for k in range(n + 1):
        total += ((-1.0) ** k * _binom_product(n + a_l, n - k)
                  * _signed_pow(x_l, k) / math.factorial(k))
    return float(total)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for integration over a fixed interval."""

    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple[float, float]


def gauss_rule(order: int, lo: float, hi: float) -> QuadratureRule:
    """Gauss-Legendre rule of the given order scaled to [lo, hi]."""
    if order < 1:
        raise InvalidIndex(f"quadrature order must be >= 1, got {order}")
    base_nodes, base_weights = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    return QuadratureRule(mid + half * base_nodes, half * base_weights, (lo, hi))


def _panel_edges(lo: float, hi: float, panels: int, graded: bool) -> np.ndarray:
    """Panel breakpoints; graded mode clusters geometrically toward both ends."""
    if not graded:
        return np.linspace(lo, hi, panels + 1)
    # split panels between the two ends, ratio-2 geometric shrink inward
    per_side = max(panels // 2, 1)
    frac = 0.5 ** np.arange(per_side, 0, -1)  # 2^-K ... 1/2
    left = lo + (hi - lo) * frac
    right = hi - (hi - lo) * frac[::-1]
    edges = np.concatenate(([lo], left, right, [hi]))
    return np.unique(edges)


def composite_rule(lo: float, hi: float, panels: int, order: int = 12,
                   graded: bool = False) -> QuadratureRule:
    """Composite Gauss-Legendre rule; nodes never touch the endpoints."""
    edges = _panel_edges(lo, hi, panels, graded)
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        rule = gauss_rule(order, a, b)
        nodes.append(rule.nodes)
        weights.append(rule.weights)
    return QuadratureRule(np.concatenate(nodes), np.concatenate(weights), (lo, hi))


def _apply(f, nodes: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(nodes), dtype=float)
        if values.shape != nodes.shape:
            values = np.broadcast_to(values, nodes.shape)
    except (TypeError, ValueError):
        values = np.asarray([f(x) for x in nodes], dtype=float)
    return values


def integrate(f, lo: float, hi: float, panels: int, order: int = 12,
              graded: bool = False) -> tuple[float, float]:
    """Integrate f over [lo, hi] with a composite Gauss-Legendre rule.

    Returns (value, err_estimate); the error estimate compares against a
    run with doubled panel count, whose value is the one returned.
    Integrable endpoint singularities are handled by grading: panel widths
    shrink geometrically toward both endpoints and nodes stay interior.
    """
    if panels < 1:
        raise InvalidIndex(f"panel count must be >= 1, got {panels}")

    def one_pass(n_panels: int) -> float:
        rule = composite_rule(lo, hi, n_panels, order=order, graded=graded)
        values = _apply(f, rule.nodes)
        if not np.all(np.isfinite(values)):
            raise NonFinite("integrand returned a non-finite value at an interior node")
        return float(rule.weights @ values)

    coarse = one_pass(panels)
    fine = one_pass(2 * panels)
    return fine, abs(fine - coarse)
