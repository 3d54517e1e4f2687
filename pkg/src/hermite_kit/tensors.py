"""Rank-n Chebyshev-Hermite tensors on R^d.

A component He^(n)_(a1..an)(x) factorizes into a product of 1-d polynomials,
one per coordinate, with the degree given by how often that coordinate
appears among the indices.  The recursive form built from

    He^(n+1)_(a, rest) = x_a He^(n)_rest - sum_k delta(a, rest_k) He^(n-1)_(rest minus k)

is kept as an independent evaluation path for cross-checking.
"""

from __future__ import annotations

import math

from .polynomials import eval_hermite


def index_multiplicities(indices, dimension):
    """How many times each coordinate 0..d-1 occurs among the indices."""
    counts = [0] * dimension
    for a in indices:
        if not 0 <= a < dimension:
            raise ValueError(f"index {a} outside dimension {dimension}")
        counts[a] += 1
    return tuple(counts)


def tensor_component(indices, point):
    """Value of the rank-len(indices) tensor component at a d-vector."""
    counts = index_multiplicities(indices, len(point))
    value = 1.0
    for degree, x in zip(counts, point):
        if degree:
            value *= eval_hermite(degree, x)
    return value


def tensor_component_recursive(indices, point):
    """Same component evaluated through the rank-lowering recurrence."""
    indices = tuple(indices)
    if not indices:
        return 1.0
    a, rest = indices[0], indices[1:]
    value = float(point[a]) * tensor_component_recursive(rest, point)
    for k, b in enumerate(rest):
        if b == a:
            value -= tensor_component_recursive(rest[:k] + rest[k + 1 :], point)
    return value


def orthogonality_normalization(indices_a, indices_b, dimension):
    """Exact value of the weighted inner product of two tensor components,
    divided by nothing: (2*pi)^(d/2) * prod_i n_i! when the index tuples
    are permutations of each other, else 0.
    """
    counts_a = index_multiplicities(indices_a, dimension)
    counts_b = index_multiplicities(indices_b, dimension)
    if counts_a != counts_b:
        return 0.0
    value = (2.0 * math.pi) ** (dimension / 2.0)
    for c in counts_a:
        value *= math.factorial(c)
    return value
