"""Hermite-based expansions of densities and functions of Gaussians.

Covers the weighted Fourier-Hermite density expansion, the Gram-Charlier
series, scalar and tensor Wiener-chaos coefficients, exact deconvolution of
polynomial Gaussian mixtures through the inverse blur operator series, and
the numeric check that the weighted Hermite functions are Fourier
eigenfunctions.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactpoly import ExactPolynomial
from .polynomials import eval_hermite, eval_hermite_function, hermite_explicit
from .quadrature import (
    gauss_hermite_rule,
    integrate_cubature,
    integrate_weighted,
    integrate_whole_line,
    tensor_cubature,
)
from .tensors import tensor_component

DENSITY_WEIGHTED = "density-weighted"   # f(x) = e^{-x^2/2} sum a_n He_n(x)
PLAIN_RV = "plain-rv"                   # f(Y) = sum b_n He_n(Y)

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class HermiteSeries:
    """Truncated coefficient sequence against a declared convention."""

    coeffs: tuple
    convention: str

    def __post_init__(self):
        if self.convention not in (DENSITY_WEIGHTED, PLAIN_RV):
            raise ValueError(f"unknown series convention {self.convention!r}")
        if not self.coeffs:
            raise ValueError("series needs at least one coefficient")
        if not all(math.isfinite(c) for c in self.coeffs):
            raise ValueError("series coefficients must be finite")

    @property
    def truncation(self):
        return len(self.coeffs) - 1

    def to_json(self):
        return json.dumps({"convention": self.convention, "coeffs": list(self.coeffs)})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(coeffs=tuple(float(c) for c in data["coeffs"]), convention=data["convention"])


@dataclass(frozen=True)
class StandardizedMoments:
    """Location, scale, and standardized central moments nu_3, nu_4, ..."""

    mu: float
    sigma: float
    nu: tuple = ()

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma!r}")

    def standardized(self, k):
        """nu_k with the fixed values nu_0 = 1, nu_1 = 0, nu_2 = 1."""
        if k == 0:
            return 1.0
        if k == 1:
            return 0.0
        if k == 2:
            return 1.0
        idx = k - 3
        if idx >= len(self.nu):
            raise ValueError(f"standardized moment nu_{k} was not supplied")
        return float(self.nu[idx])


@dataclass(frozen=True)
class WCETensorCoeffs:
    """Symmetric coefficient tensors b^(0) .. b^(N) of a d-dim chaos expansion."""

    dimension: int
    tensors: tuple  # tuple of numpy arrays, tensors[r] has shape (d,) * r


def _default_quad_order(order):
    # keeps polynomial integrands exact with margin
    return 2 * order + 12


def fourier_hermite_coeffs(f, order, quad_order=None):
    """Density-weighted expansion coefficients
    a_n = (1 / (sqrt(2*pi) n!)) int He_n(x) f(x) dx, by whole-line quadrature.

    quad_order must be at least order + 2 (defaults to 2*order + 12).
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    if quad_order is not None and quad_order < order + 2:
        raise ValueError(f"quad_order must be at least {order + 2}, got {quad_order}")
    rule = gauss_hermite_rule(quad_order or _default_quad_order(order))
    coeffs = []
    for n in range(order + 1):
        integral = integrate_whole_line(lambda x: eval_hermite(n, x) * f(x), rule)
        coeffs.append(integral / (SQRT_TWO_PI * math.factorial(n)))
    return HermiteSeries(coeffs=tuple(coeffs), convention=DENSITY_WEIGHTED)


def evaluate_series(series, x):
    """Value of the truncated expansion at x, honoring its convention."""
    x = float(x)
    prev, cur = 1.0, x
    total = series.coeffs[0] * prev
    for n in range(1, len(series.coeffs)):
        total += series.coeffs[n] * cur
        prev, cur = cur, x * cur - n * prev
    if series.convention == DENSITY_WEIGHTED:
        total *= math.exp(-x * x / 2.0)
    return total


def series_tail_indicator(series):
    """|a_N| sqrt(N!): grows along a divergent expansion, shrinks along a
    convergent one.  Reported, never used to clip.
    """
    n = series.truncation
    return abs(series.coeffs[-1]) * math.sqrt(math.factorial(n))


def gram_charlier_density(moments, order, x):
    """Gram-Charlier density approximation around the Gaussian N(mu, sigma^2).

    Up to order 4 the classical closed form
    w(z)/(sqrt(2*pi) sigma) * (1 + nu_3/6 He_3(z) + (nu_4 - 3)/24 He_4(z))
    is used; beyond that each coefficient E[He_n(Z)]/n! is assembled from
    the supplied standardized moments.  Truncated values can go negative
    and are returned as-is.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    z = (float(x) - moments.mu) / moments.sigma
    base = math.exp(-z * z / 2.0) / (SQRT_TWO_PI * moments.sigma)
    if order <= 4:
        correction = 1.0
        if order >= 3:
            correction += moments.standardized(3) / 6.0 * eval_hermite(3, z)
        if order >= 4:
            correction += (moments.standardized(4) - 3.0) / 24.0 * eval_hermite(4, z)
        return base * correction
    correction = 0.0
    for n in range(order + 1):
        expected = 0.0
        for k, c in enumerate(hermite_explicit(n).coeffs):
            if c:
                expected += float(c) * moments.standardized(k)
        correction += expected / math.factorial(n) * eval_hermite(n, z)
    return base * correction


def wce_coeffs_1d(f, order, quad_order=None):
    """Chaos coefficients b_n = E[He_n(Y) f(Y)] / n! for Y ~ N(0, 1).

    E[f(Y)^2] is evaluated first and must be finite.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    rule = gauss_hermite_rule(quad_order or _default_quad_order(order))
    second_moment = integrate_weighted(lambda y: f(y) ** 2, rule) / SQRT_TWO_PI
    if not math.isfinite(second_moment):
        raise ValueError("E[f(Y)^2] is not finite on the quadrature grid")
    coeffs = []
    for n in range(order + 1):
        integral = integrate_weighted(lambda y: eval_hermite(n, y) * f(y), rule)
        coeffs.append(integral / (SQRT_TWO_PI * math.factorial(n)))
    return HermiteSeries(coeffs=tuple(coeffs), convention=PLAIN_RV)


MAX_WCE_DIMENSION = 3
MAX_WCE_ORDER = 4


def wce_coeffs_multi(f, dimension, order, quad_order=None):
    """Rank-n tensors b^(n) = E[He^(n)(Y) f(Y)] / n! for Y ~ N(0, I_d)."""
    if not 1 <= dimension <= MAX_WCE_DIMENSION:
        raise ValueError(f"dimension must be 1..{MAX_WCE_DIMENSION}, got {dimension!r}")
    if not 0 <= order <= MAX_WCE_ORDER:
        raise ValueError(f"order must be 0..{MAX_WCE_ORDER}, got {order!r}")
    rule = tensor_cubature(dimension, quad_order or _default_quad_order(order))
    normalization = (2.0 * math.pi) ** (dimension / 2.0)
    tensors = []
    for rank in range(order + 1):
        tensor = np.empty((dimension,) * rank)
        for indices in itertools.product(range(dimension), repeat=rank):
            integral = integrate_cubature(
                lambda point: tensor_component(indices, point) * f(point), rule
            )
            tensor[indices] = integral / (normalization * math.factorial(rank))
        tensors.append(tensor)
    return WCETensorCoeffs(dimension=dimension, tensors=tuple(tensors))


def wce_reconstruct(coeffs, point):
    """Full contraction sum_n b^(n) . He^(n)(point)."""
    total = 0.0
    for rank, tensor in enumerate(coeffs.tensors):
        for indices in itertools.product(range(coeffs.dimension), repeat=rank):
            b = float(tensor[indices])
            if b:
                total += b * tensor_component(indices, point)
    return total


def gaussian_mixture_deconvolve(g, sigma, max_order=None):
    """Mixing polynomial f with (phi_sigma * f)(y) = g(y), exactly.

    f = sum_j (-sigma^2/2)^j g^(2j) / j!; the series stops on its own once
    2j exceeds deg g, so leaving max_order unset gives the exact result.
    Only polynomial g is accepted (the derivative series has no meaning for
    rougher inputs), and sigma enters at its exact binary value.
    """
    if not isinstance(g, ExactPolynomial):
        raise TypeError("deconvolution requires an ExactPolynomial input")
    s = Fraction(sigma)
    if s <= 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    last = g.degree // 2
    if max_order is not None and max_order < last:
        last = max_order
    factor = -(s * s) / 2
    result = ExactPolynomial.zero()
    for j in range(last + 1):
        result = result + (factor**j * Fraction(1, math.factorial(j))) * g.derivative(2 * j)
    return result


def fourier_eigen_check(n, k_grid, quad_order=None):
    """Max deviation of the numeric Fourier transform of h_n from
    (-i)^n h_n over a grid of frequencies.

    The transform (1/sqrt(2*pi)) int h_n(x) e^{-ikx} dx is split into
    cos/sin parts and computed against the Gaussian weight, where
    h_n(x) e^{x^2/2} = H_n(x).  quad_order must be at least 2n + 10.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if quad_order is not None and quad_order < 2 * n + 10:
        raise ValueError(f"quad_order must be at least {2 * n + 10}, got {quad_order}")
    rule = gauss_hermite_rule(quad_order or max(2 * n + 10, 40))
    eigenvalue = (-1j) ** (n % 4)
    worst = 0.0
    for k in k_grid:
        k = float(k)
        real = integrate_weighted(lambda x: eval_hermite(n, x, "h") * math.cos(k * x), rule)
        imag = -integrate_weighted(lambda x: eval_hermite(n, x, "h") * math.sin(k * x), rule)
        transform = complex(real, imag) / SQRT_TWO_PI
        expected = eigenvalue * eval_hermite_function(n, k, "h")
        worst = max(worst, abs(transform - expected))
    return worst
