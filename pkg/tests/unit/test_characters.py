"""
Unit tests for normalized Jack characters and structure constants.
"""

from fractions import Fraction

import pytest

from jacklab.algebra.characters import (
    a_top_ch,
    c_from_g,
    ch,
    character_table,
    check_degree_bounds,
    g_degree_bound,
    predicted_top_beta_coefficient,
    structure_constants,
    top_coefficient,
    top_degree_allowed,
)
from jacklab.algebra.coeffs import connection_c
from jacklab.algebra.partitions import EMPTY, Partition, all_partitions
from jacklab.algebra.scalars import A, beta, delta, laurent_terms
from jacklab.verify.suites import GOLDEN_STRUCTURE_CONSTANTS

P = Partition.of


def golden(pi, sigma):
    return {
        Partition(mu): sum((c * delta ** k for k, c in enumerate(coefficients)), 0 * delta)
        for mu, coefficients in GOLDEN_STRUCTURE_CONSTANTS[(pi, sigma)].items()
    }


@pytest.mark.unit
class TestCharacters:
    """Test Ch_π(λ)."""

    def test_transposition_on_row(self):
        """Test Ch_(2)((2)) = 2A."""
        assert ch(P(2), P(2)) == 2 * A

    def test_transposition_on_column(self):
        """Test Ch_(2)((1,1)) = −2/A."""
        assert ch(P(2), P(1, 1)) == -2 / A

    def test_three_cycle_on_row(self):
        """Test Ch_(3)((3)) = 6A² and Ch_(2)((3)) = 6A."""
        assert ch(P(3), P(3)) == 6 * A ** 2
        assert ch(P(2), P(3)) == 6 * A

    @pytest.mark.parametrize("lam", [P(1), P(3, 1), P(2, 2, 1)])
    def test_single_box_counts_boxes(self, lam):
        """Test Ch_(1)(λ) = |λ|."""
        assert laurent_terms(ch(P(1), lam)) == {0: lam.size}

    def test_vanishes_on_small_diagrams(self):
        """Test Ch_π(λ) = 0 for |λ| < |π|."""
        assert ch(P(3), P(2)) == 0

    def test_empty_index(self):
        """Test Ch_∅ = 1."""
        assert ch(EMPTY, P(2, 1)) == 1

    def test_a_top(self):
        """Test the A-top coefficient."""
        assert a_top_ch(P(2), P(2)) == 2
        assert a_top_ch(P(2), P(1, 1)) == 0

    def test_character_table(self):
        """Test evaluation on every diagram of one size."""
        table = character_table(P(2), 2)
        assert set(table) == set(all_partitions(2))


@pytest.mark.unit
class TestStructureConstants:
    """Test g^μ_{π,σ}."""

    def test_three_times_two(self):
        """Test Ch_3 Ch_2 = 6δ Ch_3 + Ch_{3,2} + 6 Ch_{2,1} + 6 Ch_4."""
        table = structure_constants(P(3), P(2))
        assert dict(table.items()) == golden((3,), (2,))

    @pytest.mark.slow
    def test_three_times_three(self):
        """Test the expansion of Ch_3 Ch_3."""
        table = structure_constants(P(3), P(3))
        assert dict(table.items()) == golden((3,), (3,))

    def test_symmetric_in_arguments(self):
        """Test g^μ_{π,σ} = g^μ_{σ,π}."""
        assert dict(structure_constants(P(2), P(3)).items()) == dict(
            structure_constants(P(3), P(2)).items()
        )

    def test_max_size_truncates(self):
        """Test that a size cap keeps only the small blocks, unchanged."""
        full = structure_constants(P(3), P(2))
        capped = structure_constants(P(3), P(2), 3)
        assert all(mu.size <= 3 for mu, _ in capped.items())
        assert capped.get(P(3)) == full.get(P(3))

    def test_single_box_product(self):
        """Test Ch_1 Ch_2 = Ch_{2,1} + 2 Ch_2."""
        table = structure_constants(P(1), P(2))
        assert table.get(P(2, 1)) == 1
        assert table.get(P(2)) == 2
        assert len(table) == 2

    @pytest.mark.parametrize("pi, sigma", [(P(2), P(2)), (P(3), P(2)), (P(2, 1), P(2))])
    def test_degree_bounds(self, pi, sigma):
        """Test that every g^μ respects its δ-degree bound."""
        check_degree_bounds(structure_constants(pi, sigma))

    def test_degree_bound_value(self):
        """Test the bound on g^{(3)}_{(3),(2)}."""
        assert g_degree_bound(P(3), P(2), P(3)) == 1


@pytest.mark.unit
class TestTopCoefficients:
    """Test top-degree coefficients and the bridge to c."""

    @pytest.mark.slow
    def test_worked_example(self, worked_triple):
        """Test [δ³] g^{(3,3)}_{(3,2),(3,3)} = 72."""
        assert top_coefficient(*worked_triple) == 72

    def test_top_degree_allowed(self):
        """Test the sub-partition criterion."""
        assert top_degree_allowed(P(3, 2), P(3, 3), P(3, 3))
        assert not top_degree_allowed(P(3), P(3), P(2, 2, 2))
        assert not top_degree_allowed(P(3), P(2), P(2))

    def test_negative_degree(self):
        """Test that a negative d gives a zero top coefficient."""
        assert top_coefficient(P(1), P(1), P(2)) == 0

    def test_c_from_g(self):
        """Test c^{(2)}_{(2),(2)} = β and c^{(1,1)}_{(2),(2)} = 1 + β through g."""
        assert c_from_g(P(2), P(2), P(2)) == beta
        assert c_from_g(P(2), P(2), P(1, 1)) == 1 + beta

    @pytest.mark.parametrize("n", [2, 3])
    def test_c_from_g_matches_linear_solve(self, n):
        """Test the connection formula on all triples of size n."""
        table = connection_c(n)
        for pi in all_partitions(n):
            for sigma in all_partitions(n):
                for lam in all_partitions(n):
                    assert c_from_g(pi, sigma, lam) == table.get(pi, sigma, lam)

    def test_predicted_top(self):
        """Test the predicted leading coefficient of c^{(2)}_{(2),(2)}."""
        assert predicted_top_beta_coefficient(P(2), P(2), P(2)) == Fraction(1)
        assert predicted_top_beta_coefficient(P(1, 1), P(1, 1), P(2)) is None
