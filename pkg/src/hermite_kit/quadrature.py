"""Gauss-Hermite quadrature for the weight e^{-x^2/2} and tensor cubature.

Nodes come from the eigenvalues of the Jacobi matrix of the monic
three-term recurrence (zero diagonal, off-diagonals sqrt(1..N-1)), then get
polished by Newton iteration on the unit-norm weighted Hermite function and
symmetrized about the origin.  Weights use the closed form
sqrt(2*pi) N! / [N He_{N-1}(x_i)]^2 rewritten in the overflow-safe weighted
form e^{-x^2/2} / (N psi_{N-1}(x_i)^2).
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .polynomials import eval_orthonormal_hermite_function

MAX_ORDER = 200
CUBATURE_POINT_BUDGET = 10**7

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

_NEWTON_MAX_ITER = 100
_NODE_RESIDUAL_TOL = 1e-13


class QuadratureRangeWarning(UserWarning):
    """Raised when whole-line reweighting leaves double range at outer nodes."""


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes (ascending) and positive weights for int e^{-x^2/2} f(x) dx."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True, eq=False)
class CubatureRule:
    """Full tensor product of a 1-d rule over d coordinates."""

    dimension: int
    order: int
    points: np.ndarray = field(repr=False)   # shape (order**dimension, dimension)
    weights: np.ndarray = field(repr=False)


def _orthonormal_pair(n, x):
    # (psi_n(x), psi_{n-1}(x)) in one recurrence sweep
    prev = math.exp(-x * x / 4.0) / (2.0 * math.pi) ** 0.25
    if n == 0:
        return prev, 0.0
    cur = x * prev
    for k in range(1, n):
        prev, cur = cur, (x * cur - math.sqrt(k) * prev) / math.sqrt(k + 1.0)
    return cur, prev


def gauss_hermite_rule(N):
    """N-point rule whose nodes are the zeros of He_N.

    Raises ValueError for N outside 1..200 and RuntimeError (with the node
    index) if Newton polishing fails to reach the residual tolerance.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"quadrature order must be a positive integer, got {N!r}")
    if N > MAX_ORDER:
        raise ValueError(f"quadrature order {N} exceeds the supported maximum {MAX_ORDER}")

    if N == 1:
        nodes = np.array([0.0])
    else:
        off_diag = np.sqrt(np.arange(1.0, N))
        nodes = eigh_tridiagonal(np.zeros(N), off_diag, eigvals_only=True)
        nodes.sort()

    polished = []
    for i, x in enumerate(nodes):
        x = float(x)
        for _ in range(_NEWTON_MAX_ITER):
            value, lower = _orthonormal_pair(N, x)
            if abs(value) <= _NODE_RESIDUAL_TOL:
                break
            slope = math.sqrt(N) * lower - 0.5 * x * value
            x -= value / slope
        else:
            raise RuntimeError(f"node {i} of the order-{N} rule did not converge "
                               f"after {_NEWTON_MAX_ITER} Newton iterations")
        polished.append(x)

    # parity of He_N is exact; enforce the same on the float nodes
    nodes = np.array(polished)
    nodes = 0.5 * (nodes - nodes[::-1])

    psi_lower = np.array([eval_orthonormal_hermite_function(N - 1, x) for x in nodes])
    log_w = -np.log(N) - 0.5 * nodes**2 - 2.0 * np.log(np.abs(psi_lower))
    weights = np.exp(log_w)
    return QuadratureRule(order=N, nodes=nodes, weights=weights)


def integrate_weighted(f, rule):
    """sum_i w_i f(x_i), i.e. int e^{-x^2/2} f(x) dx for polynomial-like f.

    Exact (to rounding) whenever f is a polynomial of degree <= 2N-1.
    """
    values = []
    for i, x in enumerate(rule.nodes):
        y = float(f(x))
        if not math.isfinite(y):
            raise ValueError(f"integrand returned non-finite value {y!r} at node index {i} (x={x!r})")
        values.append(y)
    return float(np.dot(rule.weights, values))


def integrate_whole_line(f, rule):
    """int f(x) dx over the real line via f(x) = [f(x) e^{x^2/2}] e^{-x^2/2}.

    Accurate when f(x) e^{x^2/2} is moderate at the outermost nodes.
    """
    with np.errstate(over="ignore"):
        boost = np.exp(0.5 * rule.nodes**2)
    if not np.all(np.isfinite(boost)):
        warnings.warn(
            f"e^(x^2/2) overflows at the outer nodes of the order-{rule.order} rule; "
            "whole-line reweighting is out of range there",
            QuadratureRangeWarning,
            stacklevel=2,
        )
    total = 0.0
    for i, x in enumerate(rule.nodes):
        y = float(f(x))
        if not math.isfinite(y):
            raise ValueError(f"integrand returned non-finite value {y!r} at node index {i} (x={x!r})")
        if y == 0.0:
            # the term is exactly zero even where the boost overflows
            continue
        total += rule.weights[i] * boost[i] * y
    return total


def tensor_cubature(d, N):
    """Tensor-product rule on R^d; exact for per-variable degree <= 2N-1."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d!r}")
    size = N**d
    if size > CUBATURE_POINT_BUDGET:
        raise ValueError(
            f"cubature of order {N} in dimension {d} needs {size} points, "
            f"above the budget of {CUBATURE_POINT_BUDGET}"
        )
    base = gauss_hermite_rule(N)
    points = np.array(list(itertools.product(base.nodes, repeat=d)))
    weights = base.weights
    for _ in range(d - 1):
        weights = np.multiply.outer(weights, base.weights)
    # C-order ravel varies the last axis fastest, matching itertools.product
    return CubatureRule(dimension=d, order=N, points=points, weights=weights.ravel())


def integrate_cubature(f, rule):
    """sum_p W_p f(x_p) approximating int e^{-|x|^2/2} f(x) dx over R^d."""
    values = []
    for i, point in enumerate(rule.points):
        y = float(f(point))
        if not math.isfinite(y):
            raise ValueError(f"integrand returned non-finite value {y!r} at point index {i}")
        values.append(y)
    return float(np.dot(rule.weights, values))
