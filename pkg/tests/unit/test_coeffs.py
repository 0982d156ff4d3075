"""
Unit tests for connection coefficients c and their logarithmic counterparts h.
"""

from fractions import Fraction

import pytest

from jacklab.algebra.coeffs import (
    ALPHA,
    BETA,
    TripleTable,
    cauchy_c,
    check_leading_factorization,
    connection_c,
    connection_c_alpha,
    connection_h,
    h_as_beta,
    leading_factorization_sides,
)
from jacklab.algebra.partitions import Partition, all_partitions
from jacklab.algebra.scalars import alpha, beta

P = Partition.of


@pytest.mark.unit
class TestConnectionC:
    """Test c^λ_{π,σ}."""

    def test_transpositions(self):
        """Test c^{(2)}_{(2),(2)} = β and c^{(1,1)}_{(2),(2)} = 1 + β."""
        table = connection_c(2)
        assert table.kind == BETA
        assert table.get(P(2), P(2), P(2)) == beta
        assert table.get(P(2), P(2), P(1, 1)) == 1 + beta

    def test_alpha_form(self):
        """Test c^{(1,1)}_{(2),(2)} = α as a rational function."""
        table = connection_c_alpha(2)
        assert table.kind == ALPHA
        assert table.get(P(2), P(2), P(1, 1)) == alpha

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_identity_is_unit(self, n):
        """Test c^λ_{1^n,σ} = [λ = σ]."""
        unit = Partition((1,) * n)
        table = connection_c(n)
        for sigma in all_partitions(n):
            for lam in all_partitions(n):
                assert table.get(unit, sigma, lam) == (1 if lam == sigma else 0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symmetric(self, n):
        """Test invariance under π ↔ σ."""
        assert connection_c(n).is_symmetric()

    def test_cauchy_sum(self):
        """Test the Cauchy-sum formula on one triple."""
        assert cauchy_c(P(2), P(2), P(2)) == alpha - 1

    def test_absent_entries_are_zero(self):
        """Test zero entries of the table."""
        table = connection_c(3)
        assert table.get(P(1, 1, 1), P(3), P(2, 1)) == table.zero()

    def test_items_sorted(self):
        """Test that items come out in a fixed order."""
        keys = [key for key, _ in connection_c(3).items()]
        assert keys == sorted(keys)

    def test_table_symmetry_detects_asymmetry(self):
        """Test is_symmetric on a hand-built table."""
        table = TripleTable(1, BETA, {(P(1), P(1), P(1)): beta})
        assert table.is_symmetric()
        lopsided = TripleTable(2, BETA, {(P(2), P(1, 1), P(2)): beta})
        assert not lopsided.is_symmetric()


@pytest.mark.unit
class TestConnectionH:
    """Test h^λ_{π,σ}."""

    def test_degree_one(self):
        """Test h^{(1)}_{(1),(1)} = 1."""
        assert connection_h(1)[1].get(P(1), P(1), P(1)) == 1

    def test_single_part_equals_c(self):
        """Test h^{(n)}_{π,σ} = c^{(n)}_{π,σ} for n = 3."""
        h = connection_h(3)[3]
        c = connection_c_alpha(3)
        for pi in all_partitions(3):
            for sigma in all_partitions(3):
                assert h.get(pi, sigma, P(3)) == c.get(pi, sigma, P(3))

    def test_logarithm_cancels_products(self):
        """Test h^{(1,1)}_{(1,1),(1,1)} = 0 and h^{(1,1)}_{(2),(2)} = 1."""
        h = connection_h(2)[2]
        assert h.get(P(1, 1), P(1, 1), P(1, 1)) == 0
        assert h.get(P(2), P(2), P(1, 1)) == 1

    def test_as_beta(self):
        """Test conversion of h to β for n = 2."""
        converted = h_as_beta(connection_h(2)[2])
        assert converted[(P(2), P(2), P(2))] == beta

    @pytest.mark.parametrize("n", [2, 3])
    def test_symmetric(self, n):
        """Test invariance of h under π ↔ σ."""
        assert connection_h(n)[n].is_symmetric()


@pytest.mark.unit
class TestLeadingCoefficientIdentity:
    """Test the factorization of [β^d] c through single-part h."""

    def test_sides_on_transpositions(self):
        """Test both sides at π = σ = (2), λ = (2) and λ = (1,1)."""
        assert leading_factorization_sides(P(2), P(2), P(2)) == (Fraction(1), Fraction(1))
        assert leading_factorization_sides(P(2), P(2), P(1, 1)) == (Fraction(0), Fraction(0))

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_triples(self, n):
        """Test the identity for every triple of size n."""
        for pi in all_partitions(n):
            for sigma in all_partitions(n):
                for lam in all_partitions(n):
                    assert check_leading_factorization(pi, sigma, lam)
