"""Dense univariate polynomials with exact integer/rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction


def _as_exact(value):
    """Coerce a coefficient to an exact int or Fraction."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        f = Fraction(value)
        return int(f) if f.denominator == 1 else f
    if isinstance(value, float):
        # floats convert via their exact binary value (0.5 -> 1/2)
        f = Fraction(value)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class ExactPolynomial:
    """Polynomial stored as exact coefficients, constant term first.

    The zero polynomial is represented as a single zero coefficient of
    degree 0; otherwise the leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        cs = [_as_exact(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power, coefficient=1):
        return cls([0] * power + [coefficient])

    @classmethod
    def zero(cls):
        return cls((0,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (0,)

    def leading_coefficient(self):
        return self.coeffs[-1]

    def coefficient(self, power):
        """Coefficient of x**power (0 beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __eq__(self, other):
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPolynomial(out)

    def __neg__(self):
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactPolynomial):
            if self.is_zero() or other.is_zero():
                return ExactPolynomial.zero()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return ExactPolynomial(out)
        scalar = _as_exact(other)
        return ExactPolynomial([scalar * c for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def derivative(self, order=1):
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        for _ in range(order):
            if len(cs) == 1:
                return ExactPolynomial.zero()
            cs = tuple(i * c for i, c in enumerate(cs) if i >= 1)
        return ExactPolynomial(cs)

    def scale_argument(self, factor):
        """Return p(factor * x), exactly."""
        s = _as_exact(factor)
        return ExactPolynomial([c * s**i for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int/Fraction x, float otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = _as_exact(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __repr__(self):
        return f"ExactPolynomial({list(self.coeffs)!r})"

    def coeff_strings(self):
        """Coefficients as decimal strings, constant term first."""
        return [str(c) for c in self.coeffs]

    def to_json(self):
        return json.dumps(self.coeff_strings())

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array of coefficient strings")
        return cls(data)
