"""Gaussian raw moments and the connection problem with Hermite bases.

The basis tags mirror the polynomial sets whose change-of-basis matrices
share coefficients: the physicists' family against powers of 2x, and the
Chebyshev-Hermite family against the Gaussian moment polynomials
E[Y^n](x) for Y ~ N(x, 1).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import ExactPolynomial
from .polynomials import eval_hermite, hermite_explicit

MONOMIAL = "monomial"
TWO_X_MONOMIAL = "2x-monomial"
HE_BASIS = "he"
H_BASIS = "h"
GAUSS_MOMENT = "gauss-moment"


@dataclass(frozen=True)
class ChangeOfBasisMatrix:
    """(n+1)x(n+1) exact matrix; column k expands source-basis element k."""

    from_basis: str
    to_basis: str
    entries: tuple  # row-major tuples of int/Fraction

    @property
    def size(self):
        return len(self.entries)

    def column(self, k):
        return tuple(row[k] for row in self.entries)

    def apply(self, coeffs):
        """Map a coefficient vector from from_basis to to_basis."""
        if len(coeffs) != self.size:
            raise ValueError(f"expected {self.size} coefficients, got {len(coeffs)}")
        return tuple(
            sum(row[j] * coeffs[j] for j in range(self.size)) for row in self.entries
        )

    def to_json(self):
        rows = [[str(e) for e in row] for row in self.entries]
        return json.dumps(rows)


def gaussian_raw_moment(n, mu, sigma):
    """E[Y^n] for Y ~ N(mu, sigma^2) from the closed sum
    sigma^n n! sum_j (mu/sigma)^(n-2j) / (2^j (n-2j)! j!).
    """
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    mu = float(mu)
    sigma = float(sigma)
    ratio = mu / sigma
    total = 0.0
    for j in range(n // 2 + 1):
        k = n - 2 * j
        total += ratio**k / (2**j * math.factorial(k) * math.factorial(j))
    return sigma**n * math.factorial(n) * total


def gaussian_raw_moment_hermite_form(n, mu, sigma):
    """The same moment as (-i sigma)^n He_n(i mu / sigma), kept real.

    He_n has the parity of n, so i^k (-i)^n = (-1)^((n-k)/2) for every
    surviving power k; the imaginary parts cancel analytically and no
    complex arithmetic is needed.
    """
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    mu = float(mu)
    sigma = float(sigma)
    ratio = mu / sigma
    poly = hermite_explicit(n)
    total = 0.0
    for k in range(n % 2, n + 1, 2):
        c = poly.coefficient(k)
        if c:
            total += (-1) ** ((n - k) // 2) * float(c) * ratio**k
    return sigma**n * total


def hermite_in_moments(n):
    """Integer coefficients c_j with He_n = sum_j c_j E[Y^(n-2j)](x),
    c_j = (-1)^j n! / ((n-2j)! j!).
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    nfact = math.factorial(n)
    return [
        (-1) ** j * nfact // (math.factorial(n - 2 * j) * math.factorial(j))
        for j in range(n // 2 + 1)
    ]


def moments_in_hermite(n):
    """Integer coefficients d_j with E[Y^n](x) = sum_j d_j He_(n-2j)(x),
    d_j = n! / ((n-2j)! j!).
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    nfact = math.factorial(n)
    return [
        nfact // (math.factorial(n - 2 * j) * math.factorial(j))
        for j in range(n // 2 + 1)
    ]


def gauss_moment_polynomial(n):
    """E[Y^n](x) for Y ~ N(x, 1) as an exact polynomial in x.

    Its coefficients are the absolute values of the He_n coefficients.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (n + 1)
    nfact = math.factorial(n)
    for j in range(n // 2 + 1):
        k = n - 2 * j
        coeffs[k] = nfact // (2**j * math.factorial(k) * math.factorial(j))
    return ExactPolynomial(coeffs)


def _alternating_column(n, k):
    # expansion of element k with coefficients (-1)^j k! / ((k-2j)! j!)
    col = [0] * (n + 1)
    kfact = math.factorial(k)
    for j in range(k // 2 + 1):
        i = k - 2 * j
        col[i] = (-1) ** j * kfact // (math.factorial(i) * math.factorial(j))
    return col


def _positive_column(n, k):
    # inverse direction: coefficients k! / ((k-2j)! j!)
    col = [0] * (n + 1)
    kfact = math.factorial(k)
    for j in range(k // 2 + 1):
        i = k - 2 * j
        col[i] = kfact // (math.factorial(i) * math.factorial(j))
    return col


def _monomial_column(n, k):
    col = [0] * (n + 1)
    for i, c in enumerate(hermite_explicit(k).coeffs):
        col[i] = c
    return col


def _monomial_inverse_column(n, k):
    # x^k = k! sum_j He_(k-2j) / (2^j (k-2j)! j!)
    col = [0] * (n + 1)
    kfact = math.factorial(k)
    for j in range(k // 2 + 1):
        i = k - 2 * j
        col[i] = kfact // (2**j * math.factorial(i) * math.factorial(j))
    return col


_COLUMN_BUILDERS = {
    (HE_BASIS, MONOMIAL): _monomial_column,
    (MONOMIAL, HE_BASIS): _monomial_inverse_column,
    (H_BASIS, TWO_X_MONOMIAL): _alternating_column,
    (TWO_X_MONOMIAL, H_BASIS): _positive_column,
    (HE_BASIS, GAUSS_MOMENT): _alternating_column,
    (GAUSS_MOMENT, HE_BASIS): _positive_column,
}


def change_of_basis(n, from_basis, to_basis):
    """Exact change-of-basis matrix between two supported polynomial bases.

    Only the pairs with closed-form coefficients are built directly:
    he<->monomial, h<->2x-monomial, he<->gauss-moment.  Chain other
    conversions explicitly with compose().
    """
    if n < 0:
        raise ValueError("matrix order must be nonnegative")
    builder = _COLUMN_BUILDERS.get((from_basis, to_basis))
    if builder is None:
        raise ValueError(f"unsupported basis pair {from_basis!r} -> {to_basis!r}")
    columns = [builder(n, k) for k in range(n + 1)]
    entries = tuple(tuple(columns[k][i] for k in range(n + 1)) for i in range(n + 1))
    return ChangeOfBasisMatrix(from_basis=from_basis, to_basis=to_basis, entries=entries)


def compose(second, first):
    """Matrix for first.from_basis -> second.to_basis, as second @ first."""
    if first.to_basis != second.from_basis:
        raise ValueError(
            f"cannot compose: first maps into {first.to_basis!r} but second "
            f"expects {second.from_basis!r}"
        )
    if first.size != second.size:
        raise ValueError("matrix sizes differ")
    n = first.size
    entries = tuple(
        tuple(sum(second.entries[i][k] * first.entries[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return ChangeOfBasisMatrix(
        from_basis=first.from_basis, to_basis=second.to_basis, entries=entries
    )


def identity_matrix(n, basis):
    entries = tuple(tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1))
    return ChangeOfBasisMatrix(from_basis=basis, to_basis=basis, entries=entries)


def expected_hermite_of_gaussian(n, x):
    """E[He_n(Y)] for Y ~ N(x, 1), which collapses to x^n."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return float(x) ** n


def weierstrass_deconvolution_identity(n, sigma, x):
    """sigma^n He_n(x / sigma): the function whose Gaussian blur at scale
    sigma returns y^n.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    sigma = float(sigma)
    return sigma**n * eval_hermite(n, float(x) / sigma)


def weierstrass_preimage_polynomial(n, sigma):
    """sigma^n He_n(x / sigma) as an exact polynomial; sigma is taken at
    its exact binary value, so dyadic sigmas stay exact.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    s = Fraction(sigma)
    if s <= 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    return s**n * hermite_explicit(n).scale_argument(1 / s)
