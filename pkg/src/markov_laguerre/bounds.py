"""Finite-n and asymptotic bounds for the squared Markov constant.

The squared constant c_n(alpha)^2 equals the largest root x_n of the monic
reciprocal P_n of Q_n, a polynomial with positive distinct roots.  From its
three leading coefficients b1, b2, b3 one gets the power sums p1, p2, p3 of
the roots (Newton's identities) and the chain of enclosures

    b1/n <= p2/p1 <= p3/p2 <= x_n < p3^(1/3) <= ... ,

which yields two-sided estimates of c_n(alpha)^2 valid for all alpha > -1.
This module evaluates every such bound, the classical ones they are compared
against, the asymptotic-constant bounds, and the residual polynomials that
certify the main two-sided estimate.  Routines that are pure rational
arithmetic accept an exact alpha (int/Fraction) and then return exact values;
the test suite relies on this to check the certifying identities without
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .eigen import build_jacobi, smallest_eigenvalue
from .recurrence import alpha_value, reciprocal_b123

__all__ = [
    "BoundPair",
    "RefinedBounds",
    "PowerSumTriple",
    "IdentityResidual",
    "BoundsReport",
    "largest_root_bounds",
    "power_sums",
    "refined_bounds",
    "dorfler_bounds",
    "laguerre_samuelson",
    "asymptotic_bounds",
    "asymptotic_upper_large_alpha",
    "bessel_zero_enclosure",
    "identity_residuals",
    "residual_sandwich_check",
    "lower_residual_poly",
    "upper_residual_poly",
    "ratio_r",
    "turan_constant",
    "exact_c1_sq",
    "exact_c2_sq",
    "bounds_report",
]


class BoundPair(NamedTuple):
    lower: float
    upper: float


class RefinedBounds(NamedTuple):
    """Two-sided estimate of c_n^2; the lower bound additionally needs
    n > (alpha+1)/6 (``lower_valid``), the two-sided claim needs n >= 3."""

    lower: float
    upper: float
    lower_valid: bool


class PowerSumTriple(NamedTuple):
    """Power sums sum(x_i), sum(x_i^2), sum(x_i^3) of the roots of P_n."""

    p1: float
    p2: float
    p3: float


@dataclass(frozen=True)
class IdentityResidual:
    """Residual-polynomial coefficient values at one alpha.

    ``lower_gap[j-1]`` is the coefficient of n^j (j = 1..5) in the scaled
    gap between p3 and (lower bound)*p2; all five are positive for
    alpha > -1.  ``upper_gap[j]`` is the coefficient of n^j (j = 0..5) in
    the scaled gap between the cubed upper bound and p3.
    ``upper_gap_collapsed`` folds the upper-gap coefficients towards low
    degree assuming n >= 2:

        collapsed[2] = 4 g[5] + 2 g[4] + g[3],
        collapsed[1] = 2 collapsed[2] + g[2],
        collapsed[0] = 2 collapsed[1] + g[1],

    with g = upper_gap; each is positive for alpha > -1, which makes the
    total gap positive for n >= 2.
    """

    lower_gap: tuple
    upper_gap: tuple
    upper_gap_collapsed: tuple


@dataclass(frozen=True)
class BoundsReport:
    """Every implemented finite-n bound next to the exact constant."""

    n: int
    alpha: float
    exact_c_sq: float
    linear: BoundPair
    quadratic: BoundPair
    cubic: BoundPair
    refined: RefinedBounds
    dorfler: BoundPair
    laguerre_samuelson: BoundPair
    turan: float | None


def power_sums(b1, b2, b3) -> PowerSumTriple:
    """Newton's identities: (p1, p2, p3) from the leading coefficients.

    Exact for exact inputs."""
    p1 = b1
    p2 = b1 * b1 - 2 * b2
    p3 = b1 * b1 * b1 - 3 * b1 * b2 + 3 * b3
    return PowerSumTriple(p1, p2, p3)


def largest_root_bounds(b1, b2, b3, n: int):
    """Three (lower, upper) enclosures of the largest root of a monic
    polynomial x^n - b1 x^{n-1} + b2 x^{n-2} - b3 x^{n-3} + ... with positive
    roots, from the first three power sums.

    The cubic upper bound uses p3^(1/3) = (b1^3 - 3 b1 b2 + 3 b3)^(1/3); the
    lower bounds are attained only when all roots coincide.
    """
    b1, b2, b3 = float(b1), float(b2), float(b3)
    p1, p2, p3 = power_sums(b1, b2, b3)
    if p2 <= 0.0:
        raise ValueError(f"p2 = {p2} <= 0: inputs are not from a positive-root polynomial")
    pair_i = BoundPair(b1 / n, b1)
    pair_ii = BoundPair(b1 - 2 * b2 / b1, math.sqrt(p2))
    pair_iii = BoundPair(p3 / p2, p3 ** (1.0 / 3.0))
    return pair_i, pair_ii, pair_iii


def refined_bounds(alpha, n: int) -> RefinedBounds:
    """Main two-sided estimate of c_n(alpha)^2.

    lower = 2 (n + 2a/3)(n - (a+1)/6) / ((a+1)(a+5)),
    upper = (n+1)(n + 2(a+1)/5) / ((a+1) ((a+3)(a+5))^(1/3)).

    ``lower_valid`` reflects n > (a+1)/6; the sandwich claim presumes n >= 3
    (out-of-range requests are computed and flagged, never raised).
    """
    a = float(alpha_value(alpha))
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lower = ((3 * n + 2 * a) * (6 * n - (a + 1))) / (9 * (a + 1) * (a + 5))
    upper = ((n + 1) * (5 * n + 2 * (a + 1))) / (
        5 * (a + 1) * ((a + 3) * (a + 5)) ** (1.0 / 3.0)
    )
    return RefinedBounds(lower, upper, n > (a + 1) / 6)


def dorfler_bounds(alpha, n: int) -> BoundPair:
    """Classical enclosure n^2/((a+1)(a+3)) <= c_n^2 <= n(n+1)/(2(a+1))."""
    a = float(alpha_value(alpha))
    return BoundPair(n * n / ((a + 1) * (a + 3)), n * (n + 1) / (2 * (a + 1)))


def laguerre_samuelson(b1, b2, n: int) -> BoundPair:
    """Enclosure of every root of a degree-n real-root monic polynomial from
    its first two nontrivial coefficients:

        (b1 -+ sqrt((n-1)^2 b1^2 - 2 (n-1) n b2)) / n.
    """
    b1, b2 = float(b1), float(b2)
    disc = (n - 1) ** 2 * b1 * b1 - 2 * (n - 1) * n * b2
    if disc < 0.0:
        raise ValueError(f"negative discriminant {disc}: inputs are not from a real-root polynomial")
    root = math.sqrt(disc)
    return BoundPair((b1 - root) / n, (b1 + root) / n)


def asymptotic_bounds(alpha) -> BoundPair:
    """Bounds for the asymptotic constant c(alpha) = lim c_n(alpha)/n:

        sqrt(2)/sqrt((a+1)(a+5)) <= c(alpha) <= 1/(sqrt(a+1) ((a+3)(a+5))^(1/6)).
    """
    a = float(alpha_value(alpha))
    lower = math.sqrt(2.0 / ((a + 1) * (a + 5)))
    upper = 1.0 / (math.sqrt(a + 1) * ((a + 3) * (a + 5)) ** (1.0 / 6.0))
    return BoundPair(lower, upper)


def asymptotic_upper_large_alpha(alpha) -> float:
    """Upper bound 2/(alpha + 2*pi - 2) for c(alpha), valid for alpha > 1."""
    a = float(alpha_value(alpha))
    if not a > 1.0:
        raise ValueError(f"the bound requires alpha > 1, got {a}")
    return 2.0 / (a + 2.0 * math.pi - 2.0)


def bessel_zero_enclosure(nu: float) -> BoundPair:
    """Enclosure of the first positive zero of the Bessel function J_nu:

        2^(5/6) sqrt(nu+1) ((nu+2)(nu+3))^(1/6) < j_{nu,1} < sqrt(2(nu+1)(nu+3)).
    """
    nu = float(nu)
    if not nu > -1.0:
        raise ValueError(f"nu must be > -1, got {nu}")
    lower = 2.0 ** (5.0 / 6.0) * math.sqrt(nu + 1.0) * ((nu + 2.0) * (nu + 3.0)) ** (1.0 / 6.0)
    upper = math.sqrt(2.0 * (nu + 1.0) * (nu + 3.0))
    return BoundPair(lower, upper)


def ratio_r(alpha) -> float:
    """Ratio of the asymptotic-constant bounds; tends to 1 as alpha -> -1
    and stays below 2 for alpha < 500."""
    lower, upper = asymptotic_bounds(alpha)
    return upper / lower


def turan_constant(n: int) -> float:
    """Exact sharp constant at alpha = 0: c_n(0) = 1/(2 sin(pi/(4n+2)))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 0.5 / math.sin(math.pi / (4 * n + 2))


def exact_c1_sq(alpha) -> float:
    """Closed form c_1(alpha)^2 = 1/(1 + alpha)."""
    return 1.0 / (1.0 + float(alpha_value(alpha)))


def exact_c2_sq(alpha) -> float:
    """Closed form c_2(alpha)^2 = (3(a+2) + sqrt((a+2)(a+10))) / (2(a+1)(a+2))."""
    a = float(alpha_value(alpha))
    return (3 * (a + 2) + math.sqrt((a + 2) * (a + 10))) / (2 * (a + 1) * (a + 2))


# ---------------------------------------------------------------------------
# Residual polynomials certifying the refined_bounds sandwich.
# ---------------------------------------------------------------------------


def _lower_gap_values(a):
    return (
        (1 + a) ** 2 * (10 * a**3 + 100 * a**2 + 321 * a + 1620) / 270,
        (1 + a) * (4 * a**4 + 35 * a**3 + 166 * a**2 + 417 * a + 660) / 36,
        (4 * a**5 + 36 * a**4 + 192 * a**3 + 625 * a**2 + 1527 * a + 1332) / 54,
        (a**4 - a**3 + 157 * a**2 + 579 * a + 780) / 36,
        (a**3 + 7 * a**2 + 136 * a + 280) / 30,
    )


def _upper_gap_values(a):
    return (
        8 * (1 + a) ** 2 * (2 + a) * (4 + a) / 125,
        3 * (1 + a) * (16 * a**3 + 152 * a**2 + 439 * a - 52) / 250,
        (96 * a**4 + 1363 * a**3 + 5656 * a**2 + 9167 * a + 2828) / 500,
        (16 * a**4 + 363 * a**3 + 2506 * a**2 + 7167 * a + 4708) / 250,
        (23 * a**3 + 446 * a**2 + 1657 * a + 2164) / 100,
        3 * (5 * a + 16) / 5,
    )


def identity_residuals(alpha) -> IdentityResidual:
    """Evaluate the residual-polynomial coefficient lists at one alpha.

    Exact for an exact alpha.  ``upper_gap_collapsed`` is produced by the
    low-degree collapse described on :class:`IdentityResidual`; the
    collapse, not any independent closed form, defines it.
    """
    a = alpha_value(alpha)
    g_lower = _lower_gap_values(a)
    g = _upper_gap_values(a)
    c3 = 4 * g[5] + 2 * g[4] + g[3]
    c2 = 2 * c3 + g[2]
    c1 = 2 * c2 + g[1]
    return IdentityResidual(g_lower, g, (c1, c2, c3))


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    m = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (m - len(a))
    b = list(b) + [Fraction(0)] * (m - len(b))
    return [x - y for x, y in zip(a, b)]


def _power_sum_polys(a):
    """p2 and p3 as exact polynomials in n (coefficient lists, constant first)."""
    zero, one = Fraction(0), Fraction(1)
    b1 = [zero, one / (2 * (a + 1)), one / (2 * (a + 1))]
    cubic = _poly_mul(_poly_mul([-one, one], [zero, one]), [one, one])
    c2 = one / (24 * (a + 1) * (a + 2) * (a + 3))
    b2 = [c2 * x for x in _poly_mul(cubic, [2 * (a + 6), 3 * (a + 2)])]
    quartic = _poly_mul(cubic, [-2 * one, one])
    inner = [
        12 * (a + 20),
        5 * (a + 2) * (a + 4) + 8 * (7 * a + 20),
        5 * (a + 2) * (a + 4),
    ]
    c3 = one / (240 * (a + 1) * (a + 2) * (a + 3) * (a + 4) * (a + 5))
    b3 = [c3 * x for x in _poly_mul(quartic, inner)]
    p2 = _poly_sub(_poly_mul(b1, b1), [2 * x for x in b2])
    p3 = _poly_sub(
        _poly_mul(_poly_mul(b1, b1), b1),
        _poly_sub([3 * x for x in _poly_mul(b1, b2)], [3 * x for x in b3]),
    )
    return p2, p3


def _exact_alpha(alpha):
    a = alpha_value(alpha)
    if isinstance(a, Fraction):
        return a, True
    return Fraction(a), False


def lower_residual_poly(alpha):
    """Coefficients in n (n^0 .. n^6) of the scaled lower-bound gap

        (p3 - lower * p2) * (a+1)^3 (a+2)(a+3)(a+4)(a+5),

    where ``lower`` is the refined_bounds lower bound.  The n^6 and n^0
    entries vanish identically and entries 1..5 equal the ``lower_gap``
    values of :func:`identity_residuals`.  Exact (Fraction entries) for an
    exact alpha; a float alpha is lifted to its exact binary value and
    results are rounded once at the end.
    """
    a, exact = _exact_alpha(alpha)
    p2, p3 = _power_sum_polys(a)
    quad = _poly_mul([2 * a / 3, Fraction(1)], [-(a + 1) / 6, Fraction(1)])
    gap = _poly_sub(p3, [2 / ((a + 1) * (a + 5)) * x for x in _poly_mul(quad, p2)])
    scale = (a + 1) ** 3 * (a + 2) * (a + 3) * (a + 4) * (a + 5)
    out = [scale * x for x in gap] + [Fraction(0)] * (7 - len(gap))
    return tuple(out) if exact else tuple(float(x) for x in out)


def upper_residual_poly(alpha):
    """Coefficients in n (n^0 .. n^6) of the scaled upper-bound gap

        (upper^3 - p3) * (a+1)^2 (a+2)(a+3)(a+4)(a+5),

    where ``upper`` is the refined_bounds upper bound (its cube is rational
    in alpha and n).  The n^6 entry vanishes identically and entries 0..5
    equal the ``upper_gap`` values of :func:`identity_residuals`.  Exactness
    policy as in :func:`lower_residual_poly`.
    """
    a, exact = _exact_alpha(alpha)
    _, p3 = _power_sum_polys(a)
    lin = _poly_mul([Fraction(1), Fraction(1)], [2 * (a + 1) / 5, Fraction(1)])
    cube = _poly_mul(_poly_mul(lin, lin), lin)
    ucubed = [x / ((a + 1) ** 3 * (a + 3) * (a + 5)) for x in cube]
    gap = _poly_sub(ucubed, p3)
    scale = (a + 1) ** 2 * (a + 2) * (a + 3) * (a + 4) * (a + 5)
    out = [scale * x for x in gap] + [Fraction(0)] * (7 - len(gap))
    return tuple(out) if exact else tuple(float(x) for x in out)


def residual_sandwich_check(alpha, n: int):
    """Unscaled gaps certifying the refined_bounds sandwich at (alpha, n):

        lower_residual = p3 - lower * p2      (>= 0 for n >= 3, n > (a+1)/6),
        upper_residual = upper^3 - p3         (>= 0 for n >= 2).

    Exact rational arithmetic when alpha is an int or Fraction.
    """
    a = alpha_value(alpha)
    b1, b2, b3 = reciprocal_b123(a, n)
    _, p2, p3 = power_sums(b1, b2, b3)
    lower = 2 * (n + 2 * a / 3) * (n - (a + 1) / 6) / ((a + 1) * (a + 5))
    lower_residual = p3 - lower * p2
    ucubed = ((n + 1) ** 3 * (5 * n + 2 * (a + 1)) ** 3) / (
        125 * (a + 1) ** 3 * (a + 3) * (a + 5)
    )
    return lower_residual, ucubed - p3


def bounds_report(alpha, n: int, tol: float = 1e-13) -> BoundsReport:
    """Compute the exact squared constant and every finite-n bound at (alpha, n)."""
    a = float(alpha_value(alpha))
    res = smallest_eigenvalue(build_jacobi(a, n), tol)
    exact_c_sq = 1.0 / res.value
    b1, b2, b3 = reciprocal_b123(a, n)
    pair_i, pair_ii, pair_iii = largest_root_bounds(b1, b2, b3, n)
    return BoundsReport(
        n=n,
        alpha=a,
        exact_c_sq=exact_c_sq,
        linear=pair_i,
        quadratic=pair_ii,
        cubic=pair_iii,
        refined=refined_bounds(a, n),
        dorfler=dorfler_bounds(a, n),
        laguerre_samuelson=laguerre_samuelson(b1, b2, n),
        turan=turan_constant(n) if a == 0.0 else None,
    )
