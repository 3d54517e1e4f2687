"""Chebyshev-Hermite (probabilists') and Hermite (physicists') polynomials.

Exact construction runs over arbitrary-precision integers/rationals; the
float paths evaluate by forward three-term recurrences on values, never by
expanding coefficients, which keeps them usable far beyond degree 20.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactpoly import ExactPolynomial

PROBABILIST = "he"
PHYSICIST = "h"

_FAMILIES = (PROBABILIST, PHYSICIST)

CHEBYSHEV_HERMITE_FN = "he"
HERMITE_FN = "h"


def _check_family(family):
    if family not in _FAMILIES:
        raise ValueError(f"unknown polynomial family {family!r}; expected 'he' or 'h'")


def _check_order(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"polynomial order must be a nonnegative integer, got {n!r}")


def _he_to_physicist(poly, n):
    # H_n(x) = 2**(n/2) * He_n(sqrt(2) x); exponents (n+k)/2 are integral
    # because He_n only carries coefficients of the same parity as n.
    coeffs = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            coeffs.append(0)
        else:
            coeffs.append(c * 2 ** ((n + k) // 2))
    return ExactPolynomial(coeffs)


def hermite_recurrence(n, family=PROBABILIST):
    """Exact degree-n polynomial built from the three-term recurrence.

    He_{k+1} = x*He_k - k*He_{k-1} starting from He_0 = 1, He_1 = x.  The
    physicists' family is produced from the same run by the exact
    coefficient transform H_n(x) = 2**(n/2) He_n(sqrt(2) x).
    """
    _check_order(n)
    _check_family(family)
    prev = ExactPolynomial((1,))
    if n == 0:
        return prev if family == PROBABILIST else _he_to_physicist(prev, 0)
    cur = ExactPolynomial((0, 1))
    for k in range(1, n):
        prev, cur = cur, ExactPolynomial([0, *cur.coeffs]) - k * prev
    return cur if family == PROBABILIST else _he_to_physicist(cur, n)


def hermite_explicit(n, family=PROBABILIST):
    """Exact degree-n polynomial from the closed coefficient sum.

    Coefficient of x^(n-2j) is (-1)^j n! / (2^j (n-2j)! j!) for He_n and
    (-1)^j n! 2^(n-2j) / ((n-2j)! j!) for H_n.
    """
    _check_order(n)
    _check_family(family)
    coeffs = [0] * (n + 1)
    nfact = math.factorial(n)
    for j in range(n // 2 + 1):
        k = n - 2 * j
        if family == PROBABILIST:
            c = (-1) ** j * nfact // (2**j * math.factorial(k) * math.factorial(j))
        else:
            c = (-1) ** j * nfact * 2**k // (math.factorial(k) * math.factorial(j))
        coeffs[k] = c
    return ExactPolynomial(coeffs)


def _gaussian_moment_exact(k):
    # int x^k e^{-x^2/2} dx in units of sqrt(2*pi): (k-1)!! for even k, 0 odd
    if k % 2:
        return 0
    return math.factorial(k) // (2 ** (k // 2) * math.factorial(k // 2))


def gram_schmidt_construct(n):
    """Orthogonalize 1, x, ..., x^n against the Gaussian weight, exactly.

    Inner products use the exact moments of e^{-x^2/2} with the common
    sqrt(2*pi) factor cancelled; rational arithmetic throughout.  Returns
    the monic orthogonal sequence [q_0, ..., q_n].
    """
    _check_order(n)

    def inner(p, q):
        total = Fraction(0)
        for i, a in enumerate(p.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                if b == 0:
                    continue
                total += Fraction(a) * Fraction(b) * _gaussian_moment_exact(i + j)
        return total

    basis = []
    norms = []
    for k in range(n + 1):
        q = ExactPolynomial.monomial(k)
        for prev, norm in zip(basis, norms):
            coeff = inner(q, prev) / norm
            if coeff != 0:
                q = q - coeff * prev
        basis.append(q)
        norms.append(inner(q, q))
    return basis


def eval_hermite(n, x, family=PROBABILIST):
    """Float value of He_n(x) or H_n(x) via the forward recurrence.

    Overflows to +-inf for large n and |x|, as floats do.
    """
    _check_order(n)
    _check_family(family)
    x = float(x)
    if family == PROBABILIST:
        prev, cur = 1.0, x
        a, b = x, 1.0
    else:
        prev, cur = 1.0, 2.0 * x
        a, b = 2.0 * x, 2.0
    if n == 0:
        return prev
    for k in range(1, n):
        nxt = a * cur - b * k * prev
        if not math.isfinite(nxt):
            # past float range; rescale to recover the sign and report
            # a signed infinity rather than nan from inf - inf
            scale = max(abs(cur), abs(prev))
            return math.copysign(math.inf, a * (cur / scale) - b * k * (prev / scale))
        prev, cur = cur, nxt
    return cur


def eval_hermite_function(n, x, kind=CHEBYSHEV_HERMITE_FN):
    """Weighted Hermite function he_n(x) = e^{-x^2/4} He_n(x) or
    h_n(x) = e^{-x^2/2} H_n(x).

    The recurrence runs on the weighted values themselves, so the
    exponential damping is applied before the polynomial can overflow.
    """
    _check_order(n)
    _check_family(kind)
    x = float(x)
    if kind == CHEBYSHEV_HERMITE_FN:
        prev = math.exp(-x * x / 4.0)
        cur = x * prev
    else:
        prev = math.exp(-x * x / 2.0)
        cur = 2.0 * x * prev
    if n == 0:
        return prev
    for k in range(1, n):
        if kind == CHEBYSHEV_HERMITE_FN:
            prev, cur = cur, x * cur - k * prev
        else:
            prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur


def eval_orthonormal_hermite_function(n, x):
    """he_n(x) / sqrt(sqrt(2*pi) n!), the unit-norm weighted function.

    Values stay O(1) for any n, which makes this the right object for
    root residual checks at high order.
    """
    _check_order(n)
    x = float(x)
    prev = math.exp(-x * x / 4.0) / (2.0 * math.pi) ** 0.25
    if n == 0:
        return prev
    cur = x * prev
    for k in range(1, n):
        prev, cur = cur, (x * cur - math.sqrt(k) * prev) / math.sqrt(k + 1.0)
    return cur


def hermite_derivative(n):
    """Exact derivative of He_n, i.e. n * He_{n-1}; zero polynomial for n=0."""
    _check_order(n)
    if n == 0:
        return ExactPolynomial.zero()
    return n * hermite_recurrence(n - 1)


def generating_function_check(x, t, order):
    """Partial sum sum_{n<=order} He_n(x) t^n / n! next to e^{x t - t^2/2}.

    Returned as (partial_sum, target) for diagnostic comparison; |t| <= 1
    keeps the truncation error negligible by order ~ 40.
    """
    _check_order(order)
    x = float(x)
    t = float(t)
    target = math.exp(x * t - t * t / 2.0)
    prev, cur = 1.0, x
    partial = prev
    term = 1.0  # t^n / n!
    for k in range(1, order + 1):
        term *= t / k
        partial += cur * term
        prev, cur = cur, x * cur - k * prev
    return partial, target


def hermite_ode_residual(n, x):
    """He_n'' - x He_n' + n He_n evaluated at x.

    The residual polynomial is formed in exact arithmetic (it is
    identically zero), so the float result is exactly 0.0.
    """
    _check_order(n)
    p = hermite_recurrence(n)
    dp = p.derivative()
    residual = p.derivative(2) - ExactPolynomial([0, *dp.coeffs]) + n * p
    return residual(float(x))
