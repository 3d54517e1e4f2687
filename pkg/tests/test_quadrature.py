"""Gauss-Hermite rules checked against exact Gaussian moments and
independent weight recovery."""

import math

import numpy as np
import pytest

from hermite_kit import (
    gauss_hermite_rule,
    integrate_cubature,
    integrate_weighted,
    integrate_whole_line,
    tensor_cubature,
)

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def exact_gaussian_moment(k):
    """int x^k e^{-x^2/2} dx = sqrt(2*pi) (k-1)!! for even k, 0 for odd."""
    if k % 2:
        return 0.0
    return SQRT_TWO_PI * math.factorial(k) / (2 ** (k // 2) * math.factorial(k // 2))


class TestRuleInvariants:
    @pytest.mark.parametrize("N", [1, 2, 3, 5, 8, 20, 51, 99, 200])
    def test_structure(self, N):
        rule = gauss_hermite_rule(N)
        assert rule.order == N
        assert len(rule.nodes) == N and len(rule.weights) == N
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)
        assert np.max(np.abs(rule.nodes + rule.nodes[::-1])) <= 1e-12
        total = float(np.sum(rule.weights))
        assert abs(total - SQRT_TWO_PI) <= 1e-12 * SQRT_TWO_PI
        if N % 2:
            assert rule.nodes[N // 2] == 0.0

    def test_small_rules_explicitly(self):
        rule = gauss_hermite_rule(1)
        assert rule.nodes[0] == 0.0
        assert rule.weights[0] == pytest.approx(SQRT_TWO_PI, rel=1e-14)
        rule = gauss_hermite_rule(2)
        assert rule.nodes == pytest.approx([-1.0, 1.0], abs=1e-14)
        assert rule.weights == pytest.approx([SQRT_TWO_PI / 2] * 2, rel=1e-14)
        rule = gauss_hermite_rule(3)
        assert rule.nodes == pytest.approx([-math.sqrt(3.0), 0.0, math.sqrt(3.0)], abs=1e-14)

    def test_rejects_bad_orders(self):
        with pytest.raises(ValueError):
            gauss_hermite_rule(0)
        with pytest.raises(ValueError):
            gauss_hermite_rule(201)

    def test_node_residuals_in_weighted_form(self):
        from hermite_kit.polynomials import eval_orthonormal_hermite_function

        for N in (5, 20, 120, 200):
            rule = gauss_hermite_rule(N)
            for x in rule.nodes:
                assert abs(eval_orthonormal_hermite_function(N, x)) <= 1e-13

    def test_interlacing_to_50(self):
        prev = gauss_hermite_rule(1).nodes
        for N in range(2, 51):
            cur = gauss_hermite_rule(N).nodes
            for i, root in enumerate(prev):
                assert cur[i] < root < cur[i + 1]
            prev = cur


class TestExactness:
    def test_polynomial_exactness_to_20(self):
        for N in range(1, 21):
            rule = gauss_hermite_rule(N)
            for k in range(2 * N):
                result = integrate_weighted(lambda x, k=k: x**k, rule)
                expected = exact_gaussian_moment(k)
                if expected == 0.0:
                    assert abs(result) <= 1e-10 * exact_gaussian_moment(k + 1 if k % 2 else k)
                else:
                    assert abs(result - expected) <= 1e-10 * expected

    def test_weight_normalization_example(self):
        rule = gauss_hermite_rule(2)
        assert integrate_weighted(lambda x: 1.0, rule) == pytest.approx(SQRT_TWO_PI, rel=1e-14)
        assert integrate_weighted(lambda x: x * x, rule) == pytest.approx(SQRT_TWO_PI, rel=1e-13)

    def test_fourth_moment_example(self):
        rule = gauss_hermite_rule(3)
        assert integrate_weighted(lambda x: x**4, rule) == pytest.approx(3 * SQRT_TWO_PI, rel=1e-13)

    def test_weights_against_vandermonde_system(self):
        # independent recovery: solve the moment system V w = m exactly
        for N in range(1, 9):
            rule = gauss_hermite_rule(N)
            V = np.vander(rule.nodes, N, increasing=True).T
            m = np.array([exact_gaussian_moment(k) for k in range(N)])
            recovered = np.linalg.solve(V, m)
            assert np.allclose(recovered, rule.weights, rtol=1e-8, atol=0.0)

    def test_orthogonality_reproduced(self):
        for m in range(13):
            for n in range(13):
                rule = gauss_hermite_rule(m + n + 2)
                from hermite_kit import eval_hermite

                result = integrate_weighted(
                    lambda x: eval_hermite(m, x) * eval_hermite(n, x), rule
                )
                expected = SQRT_TWO_PI * math.factorial(n) if m == n else 0.0
                scale = SQRT_TWO_PI * math.sqrt(math.factorial(m) * math.factorial(n))
                assert abs(result - expected) <= 1e-9 * scale


class TestWholeLine:
    def test_weighted_gaussian(self):
        rule = gauss_hermite_rule(5)
        f = lambda x: math.exp(-x * x / 2.0)
        assert integrate_whole_line(f, rule) == pytest.approx(SQRT_TWO_PI, rel=1e-13)

    def test_second_moment(self):
        rule = gauss_hermite_rule(5)
        f = lambda x: x * x * math.exp(-x * x / 2.0)
        assert integrate_whole_line(f, rule) == pytest.approx(SQRT_TWO_PI, rel=1e-13)

    def test_plain_gaussian(self):
        rule = gauss_hermite_rule(20)
        f = lambda x: math.exp(-x * x)
        assert integrate_whole_line(f, rule) == pytest.approx(math.sqrt(math.pi), rel=1e-8)

    def test_monotone_improvement_spot_check(self):
        # no rate is asserted for non-polynomial integrands, only that
        # raising the order improves these spot values
        f = lambda x: math.exp(-x * x)
        errors = [
            abs(integrate_whole_line(f, gauss_hermite_rule(N)) - math.sqrt(math.pi))
            for N in (5, 10, 20, 40)
        ]
        assert errors[0] > errors[1] > errors[2] > errors[3]

    def test_non_finite_integrand_reports_index(self):
        rule = gauss_hermite_rule(5)
        bad = lambda x: math.inf if x == rule.nodes[2] else 1.0
        with pytest.raises(ValueError, match="node index 2"):
            integrate_weighted(bad, rule)

    def test_range_warning_beyond_double_reach(self):
        # e^(x^2/2) only leaves double range past |x| ~ 37.6, beyond any
        # supported order; a synthetic rule exercises the warning path
        from hermite_kit.quadrature import QuadratureRangeWarning, QuadratureRule

        fake = QuadratureRule(
            order=2, nodes=np.array([-40.0, 40.0]), weights=np.array([1.0, 1.0])
        )
        with pytest.warns(QuadratureRangeWarning):
            integrate_whole_line(lambda x: 0.0, fake)


class TestCubature:
    def test_dimension_one_matches_base_rule(self):
        base = gauss_hermite_rule(2)
        cube = tensor_cubature(1, 2)
        assert np.allclose(cube.points[:, 0], base.nodes)
        assert np.allclose(cube.weights, base.weights)

    def test_two_by_two(self):
        cube = tensor_cubature(2, 2)
        assert cube.points.shape == (4, 2)
        assert np.allclose(sorted(np.abs(cube.points).ravel()), np.ones(8))
        assert float(np.sum(cube.weights)) == pytest.approx(2 * math.pi, rel=1e-13)

    def test_product_of_second_moments(self):
        cube = tensor_cubature(2, 3)
        value = integrate_cubature(lambda p: p[0] ** 2 * p[1] ** 2, cube)
        assert value == pytest.approx(2 * math.pi, rel=1e-12)

    def test_weight_normalization_three_dimensions(self):
        cube = tensor_cubature(3, 4)
        total = float(np.sum(cube.weights))
        assert abs(total - (2 * math.pi) ** 1.5) <= 1e-10 * (2 * math.pi) ** 1.5

    def test_matches_iterated_one_dimensional_integrals(self):
        # brute-force oracle: a separable integrand is a product of 1-d results
        rule = gauss_hermite_rule(4)
        one_dim = integrate_weighted(lambda x: x**2 + 1.0, rule)
        cube = tensor_cubature(2, 4)
        sep = integrate_cubature(lambda p: (p[0] ** 2 + 1.0) * (p[1] ** 2 + 1.0), cube)
        assert sep == pytest.approx(one_dim**2, rel=1e-12)

    def test_point_budget_enforced(self):
        with pytest.raises(ValueError, match="budget"):
            tensor_cubature(4, 100)
