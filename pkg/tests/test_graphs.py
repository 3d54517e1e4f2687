"""Matching combinatorics against enumeration, closed forms, and quadrature."""

import itertools
import math
import random

import pytest

from hermite_kit import (
    GraphFileError,
    SimpleGraph,
    complete_graph,
    complete_kpartite,
    count_complete_matches,
    count_j_matches,
    eval_hermite,
    format_edge_list,
    gauss_hermite_rule,
    hermite_product_integral,
    hermite_recurrence,
    integrate_weighted,
    linearization_coeffs,
    match_count_table,
    matching_polynomial,
    parse_edge_list,
    partite_closed_form,
    verify_hermite_matching,
)
from hermite_kit.moments import change_of_basis

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def enumerate_j_matches(graph, j):
    """Literal enumeration oracle: filter all j-subsets of edges for
    pairwise disjointness.  Only for small graphs."""
    count = 0
    for combo in itertools.combinations(sorted(graph.edges), j):
        used = set()
        for u, v in combo:
            if u in used or v in used:
                break
            used.add(u)
            used.add(v)
        else:
            count += 1
    return count


def random_graph(rng, max_vertices=10):
    n = rng.randint(2, max_vertices)
    edges = set()
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < 0.4:
                edges.add((u, v))
    return SimpleGraph(vertex_count=n, edges=frozenset(edges))


class TestMatchCounting:
    def test_known_small_graphs(self):
        c4 = complete_kpartite([2, 2])
        assert count_j_matches(c4, 2) == 2
        assert count_j_matches(c4, 0) == 1
        assert count_j_matches(complete_graph(4), 2) == 3

    def test_against_enumeration_on_random_graphs(self):
        rng = random.Random(1789)
        for _ in range(25):
            graph = random_graph(rng, max_vertices=8)
            table = match_count_table(graph)
            for j in range(len(table) + 1):
                assert count_j_matches(graph, j) == enumerate_j_matches(graph, j)

    def test_structural_counts_on_random_graphs(self):
        rng = random.Random(97)
        for _ in range(50):
            graph = random_graph(rng, max_vertices=10)
            table = match_count_table(graph)
            assert table[0] == 1
            if len(table) > 1:
                assert table[1] == graph.edge_count
            else:
                assert graph.edge_count == 0
            assert len(table) - 1 <= graph.vertex_count // 2
            for j in range(graph.vertex_count // 2 + 1, graph.vertex_count + 2):
                assert count_j_matches(graph, j) == 0

    def test_size_guard(self):
        with pytest.raises(ValueError, match="guard"):
            match_count_table(complete_graph(25))


class TestMatchingPolynomial:
    def test_edgeless_graph(self):
        graph = SimpleGraph(vertex_count=5, edges=frozenset())
        assert matching_polynomial(graph).coeffs == (0, 0, 0, 0, 0, 1)

    def test_cycle_and_complete(self):
        assert matching_polynomial(complete_kpartite([2, 2])).coeffs == (2, 0, -4, 0, 1)
        assert matching_polynomial(complete_graph(4)).coeffs == (3, 0, -6, 0, 1)

    def test_complete_graph_matches_hermite(self):
        for m in (2, 4, 7, 10):
            assert matching_polynomial(complete_graph(m)) == hermite_recurrence(m)

    def test_verify_hermite_matching_range(self):
        for m in (1, 2, 4, 7, 14, 15, 20):
            assert verify_hermite_matching(m)
        with pytest.raises(ValueError):
            verify_hermite_matching(21)


class TestGraphConstruction:
    def test_complete_graph_edge_counts(self):
        assert complete_graph(1).edge_count == 0
        assert complete_graph(4).edge_count == 6
        assert complete_graph(5).edge_count == 10

    def test_kpartite_small_cases(self):
        assert complete_kpartite([1, 1]).edges == complete_graph(2).edges
        assert complete_kpartite([1, 1, 1]).edges == complete_graph(3).edges
        c4 = complete_kpartite([2, 2])
        assert c4.edge_count == 4
        assert (1, 2) not in c4.edges and (3, 4) not in c4.edges

    def test_rejects_loops_and_bad_edges(self):
        with pytest.raises(ValueError):
            SimpleGraph(vertex_count=3, edges=frozenset({(2, 2)}))
        with pytest.raises(ValueError):
            SimpleGraph(vertex_count=3, edges=frozenset({(1, 4)}))


class TestEdgeListFormat:
    def test_round_trip(self):
        graph = complete_kpartite([2, 1, 1])
        parsed = parse_edge_list(format_edge_list(graph))
        assert parsed == graph

    def test_duplicate_edge_reports_line(self):
        text = "3\n1 2\n2 1\n"
        with pytest.raises(GraphFileError, match="line 3"):
            parse_edge_list(text)

    def test_loop_reports_line(self):
        with pytest.raises(GraphFileError, match="line 2"):
            parse_edge_list("3\n2 2\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphFileError, match="line 2"):
            parse_edge_list("3\n1 4\n")

    def test_malformed_tokens(self):
        with pytest.raises(GraphFileError, match="line 1"):
            parse_edge_list("three\n1 2\n")
        with pytest.raises(GraphFileError, match="line 2"):
            parse_edge_list("3\n1 2 3\n")

    def test_empty_file(self):
        with pytest.raises(GraphFileError):
            parse_edge_list("\n\n")


class TestCompleteMatchCounts:
    def test_two_part_factorial(self):
        assert count_complete_matches([3, 3]) == 6
        assert count_complete_matches([4, 4]) == 24
        assert count_complete_matches([3, 4]) == 0
        assert partite_closed_form([2, 2]) == 2

    def test_three_part_cases(self):
        assert count_complete_matches([1, 1, 2]) == 2
        assert partite_closed_form([1, 1, 2]) == 2
        assert count_complete_matches([2, 3, 3]) == 36
        assert partite_closed_form([2, 3, 3]) == 36
        assert partite_closed_form([1, 2, 4]) == 0

    def test_odd_total_is_zero(self):
        assert count_complete_matches([1, 2, 4]) == 0
        assert count_complete_matches([3]) == 0

    def test_degenerate_parts(self):
        assert count_complete_matches([]) == 1
        assert count_complete_matches([0, 0]) == 1
        assert count_complete_matches([0, 2, 2]) == 2

    def test_closed_form_arity_guard(self):
        with pytest.raises(ValueError):
            partite_closed_form([1, 1, 1, 1])

    def test_triple_agreement_small_totals(self):
        # recurrence vs perfect-match counting on the realized graph vs
        # closed forms, for all part multisets with total <= 10
        for k in (1, 2, 3):
            for parts in itertools.combinations_with_replacement(range(1, 11), k):
                total = sum(parts)
                if total > 10:
                    continue
                recurrence = count_complete_matches(parts)
                if total % 2 == 0:
                    brute = count_j_matches(complete_kpartite(parts), total // 2)
                else:
                    brute = 0
                assert recurrence == brute
                if k == 2:
                    assert recurrence == partite_closed_form(parts)
                if k == 3:
                    assert recurrence == partite_closed_form(parts)


class TestProductIntegrals:
    def test_all_zero_orders(self):
        assert hermite_product_integral([0, 0, 0]) == pytest.approx(SQRT_TWO_PI, rel=1e-15)

    def test_orthogonality_pairs(self):
        for n in range(6):
            assert hermite_product_integral([n, n]) == pytest.approx(
                SQRT_TWO_PI * math.factorial(n), rel=1e-15
            )
        assert hermite_product_integral([2, 4]) == 0.0

    def test_example_triple(self):
        assert hermite_product_integral([1, 1, 2]) == pytest.approx(2 * SQRT_TWO_PI, rel=1e-15)

    def test_against_quadrature(self):
        for orders in [(1, 1, 2), (2, 2, 2), (3, 3), (1, 2, 3), (2, 2, 3, 3), (4, 4, 2)]:
            total = sum(orders)
            rule = gauss_hermite_rule(total // 2 + 1)

            def product(x, orders=orders):
                value = 1.0
                for n in orders:
                    value *= eval_hermite(n, x)
                return value

            numeric = integrate_weighted(product, rule)
            combinatorial = hermite_product_integral(orders)
            assert abs(numeric - combinatorial) <= 1e-8 * max(1.0, abs(combinatorial))


class TestLinearization:
    def test_examples(self):
        assert linearization_coeffs(1, 1) == {2: 1, 0: 1}
        assert linearization_coeffs(2, 2) == {4: 1, 2: 4, 0: 2}
        assert linearization_coeffs(0, 5) == {5: 1}

    def test_product_reexpansion_oracle(self):
        # exact product He_m He_n, re-expanded through the basis matrices
        for m in range(11):
            for n in range(11):
                product = hermite_recurrence(m) * hermite_recurrence(n)
                degree = m + n
                to_he = change_of_basis(degree, "monomial", "he")
                monomial_coeffs = [product.coefficient(k) for k in range(degree + 1)]
                he_coeffs = to_he.apply(tuple(monomial_coeffs))
                expected = linearization_coeffs(m, n)
                for l, c in enumerate(he_coeffs):
                    assert c == expected.get(l, 0)

    def test_matches_three_part_counts(self):
        # a(l, m, n) = P(l, m, n) / l! wherever the closed form applies
        for m in range(11):
            for n in range(11):
                coeffs = linearization_coeffs(m, n)
                for l in range(m + n + 1):
                    expected = partite_closed_form([l, m, n]) // math.factorial(l)
                    assert coeffs.get(l, 0) == expected
