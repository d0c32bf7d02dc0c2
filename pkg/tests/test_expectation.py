"""Exact expectation checks.

The recurrence is the arbiter: it must match the brute-force average
exactly at small n, the closed form exactly everywhere it is compared,
and every derived family formula must match its own brute force.  Frozen
small values below were computed by exhaustive simulation.
"""

from fractions import Fraction

import pytest

from pathdom import (
    bruteforce_expected_gamma,
    caro_wei_bound,
    complete_multipartite,
    cycle,
    expected_gamma_complete_multipartite,
    expected_gamma_cycle,
    expected_gamma_limit,
    expected_gamma_path,
    expected_gamma_path_closed_form,
    expected_gamma_path_float,
    expected_gamma_star,
    expected_gamma_wheel,
    path,
    star,
    wheel,
)
from pathdom.errors import ResourceLimitError


class TestPathRecurrence:
    @pytest.mark.parametrize(
        "n,value",
        [
            (1, Fraction(1)),
            (2, Fraction(1)),
            (3, Fraction(5, 3)),  # brute force: average over all 6 orders
            (4, Fraction(2)),  # brute force: average over all 24 orders
            (5, Fraction(37, 15)),
            (7, Fraction(349, 105)),
        ],
    )
    def test_small_values(self, n, value):
        assert expected_gamma_path(n) == value

    def test_empty_path_convention(self):
        assert expected_gamma_path(0) == 0
        assert expected_gamma_path(-3) == 0

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_bruteforce_average(self, n, census_cache):
        assert expected_gamma_path(n) == census_cache.get(n).expectation

    def test_table_invariants(self):
        assert expected_gamma_path(1) == 1
        for n in range(1, 40):
            prefix = sum(expected_gamma_path(i) for i in range(1, n - 1))
            assert expected_gamma_path(n) == 1 + Fraction(2, n) * prefix


class TestClosedForm:
    @pytest.mark.parametrize(
        "n,value", [(1, Fraction(1)), (3, Fraction(5, 3)), (4, Fraction(2))]
    )
    def test_small_values(self, n, value):
        assert expected_gamma_path_closed_form(n) == value

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            expected_gamma_path_closed_form(0)

    @pytest.mark.parametrize("n", list(range(1, 30)) + [64, 100])
    def test_equals_recurrence(self, n):
        assert expected_gamma_path_closed_form(n) == expected_gamma_path(n)

    def test_float_track_agrees(self):
        for n in (10, 100, 500):
            exact = float(expected_gamma_path_closed_form(n))
            assert abs(expected_gamma_path_float(n) - exact) < 1e-8


class TestAsymptotics:
    def test_algebraic_identity(self):
        import math

        assert expected_gamma_limit() == 0.5 - 0.5 * math.exp(-2)

    def test_four_place_prefix(self):
        assert f"{expected_gamma_limit():.10f}".startswith("0.4323")

    def test_per_vertex_convergence(self):
        n = 10_000
        gap = abs(expected_gamma_path_float(n) / n - expected_gamma_limit())
        assert gap < 1e-3


class TestFamilies:
    @pytest.mark.parametrize(
        "n,value",
        [(3, Fraction(1)), (4, Fraction(2)), (5, Fraction(2)), (6, Fraction(8, 3))],
    )
    def test_cycle_values(self, n, value):
        # 4 and 6 confirmed by brute force over 24 and 720 orders
        assert expected_gamma_cycle(n) == value

    def test_cycle_rejects_small(self):
        with pytest.raises(ValueError):
            expected_gamma_cycle(2)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_cycle_matches_bruteforce(self, n):
        assert expected_gamma_cycle(n) == bruteforce_expected_gamma(cycle(n))

    @pytest.mark.parametrize(
        "leaves,value", [(1, Fraction(1)), (2, Fraction(5, 3)), (3, Fraction(5, 2))]
    )
    def test_star_values(self, leaves, value):
        assert expected_gamma_star(leaves) == value

    def test_star_two_leaves_is_three_path(self):
        assert expected_gamma_star(2) == expected_gamma_path(3)

    @pytest.mark.parametrize("leaves", range(1, 6))
    def test_star_matches_bruteforce(self, leaves):
        assert expected_gamma_star(leaves) == bruteforce_expected_gamma(star(leaves))

    def test_star_rejects_zero_leaves(self):
        with pytest.raises(ValueError):
            expected_gamma_star(0)

    @pytest.mark.parametrize(
        "spokes,value", [(3, Fraction(1)), (4, Fraction(9, 5)), (5, Fraction(11, 6))]
    )
    def test_wheel_values(self, spokes, value):
        # brute force over 24, 120 and 720 orders respectively
        assert expected_gamma_wheel(spokes) == value

    @pytest.mark.parametrize("spokes", range(3, 7))
    def test_wheel_matches_bruteforce_and_printed_form_does_not(self, spokes):
        brute = bruteforce_expected_gamma(wheel(spokes))
        assert expected_gamma_wheel(spokes) == brute
        assert expected_gamma_wheel(spokes, as_printed=True) != brute

    def test_wheel_printed_variant_value(self):
        assert expected_gamma_wheel(3, as_printed=True) == Fraction(1, 4)

    def test_wheel_rejects_small(self):
        with pytest.raises(ValueError):
            expected_gamma_wheel(2)

    @pytest.mark.parametrize(
        "parts,value",
        [([1, 1], Fraction(1)), ([2, 2], Fraction(2)), ([1, 3], Fraction(5, 2))],
    )
    def test_multipartite_values(self, parts, value):
        assert expected_gamma_complete_multipartite(parts) == value

    def test_multipartite_cross_family_identities(self):
        assert expected_gamma_complete_multipartite([2, 2]) == expected_gamma_cycle(4)
        assert expected_gamma_complete_multipartite([1, 3]) == expected_gamma_star(3)

    @pytest.mark.parametrize("parts", [[2, 3], [1, 1, 2], [2, 2, 2], [1, 2, 4]])
    def test_multipartite_matches_bruteforce(self, parts):
        assert expected_gamma_complete_multipartite(
            parts
        ) == bruteforce_expected_gamma(complete_multipartite(parts))

    def test_multipartite_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            expected_gamma_complete_multipartite([])
        with pytest.raises(ValueError):
            expected_gamma_complete_multipartite([2, 0])

    def test_bruteforce_cap(self):
        with pytest.raises(ResourceLimitError):
            bruteforce_expected_gamma(path(12))


class TestCaroWei:
    def test_examples(self):
        assert caro_wei_bound(path(3)) == Fraction(4, 3)
        assert caro_wei_bound(path(1)) == 1
        assert caro_wei_bound(cycle(5)) == Fraction(5, 3)

    @pytest.mark.parametrize("n", range(2, 50))
    def test_path_formula(self, n):
        assert caro_wei_bound(path(n)) == Fraction(n + 1, 3)

    @pytest.mark.parametrize("n", range(1, 50))
    def test_expectation_respects_bound(self, n):
        assert expected_gamma_path(n) >= Fraction(n + 1, 3)


def test_expectation_sandwich():
    for n in range(1, 201):
        value = expected_gamma_path(n)
        assert (n + 2) // 3 <= value <= (n + 1) // 2
