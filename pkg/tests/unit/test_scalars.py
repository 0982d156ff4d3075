"""
Unit tests for coefficient rings and conversions.
"""

from fractions import Fraction

import pytest

from jacklab.algebra.scalars import (
    A,
    BETA_RING,
    DELTA_A,
    DELTA_RING,
    GAMMA_A,
    alpha,
    alpha_at_one,
    alpha_to_beta,
    beta,
    beta_to_alpha,
    delta,
    delta_to_laurent,
    format_fraction,
    laurent_terms,
    laurent_to_beta,
    laurent_to_delta,
    poly_coefficients,
    poly_degree,
    poly_to_json,
)
from jacklab.core.exceptions import ConversionError


@pytest.mark.unit
class TestDelta:
    """Test the δ-subring of Laurent polynomials in A."""

    def test_gamma_is_minus_delta(self):
        """Test γ = −δ."""
        assert DELTA_A + GAMMA_A == 0

    def test_delta_squared(self):
        """Test δ² = A² − 2 + A⁻²."""
        assert laurent_terms(delta_to_laurent(delta ** 2)) == {2: 1, 0: -2, -2: 1}

    def test_to_delta(self):
        """Test rewriting A² + 1 + A⁻² in δ."""
        f = A ** 2 + 1 + 1 / A ** 2
        assert laurent_to_delta(f) == delta ** 2 + 3

    def test_not_in_delta_subring(self):
        """Test that A alone is not a δ-polynomial."""
        with pytest.raises(ConversionError, match="not expressible in delta"):
            laurent_to_delta(A + 0)

    def test_roundtrip(self):
        """Test δ → A → δ on a sample polynomial."""
        p = 3 * delta ** 3 - delta + 7
        assert laurent_to_delta(delta_to_laurent(p)) == p


@pytest.mark.unit
class TestAlphaBeta:
    """Test conversions between α and β = α − 1."""

    def test_alpha_to_beta(self):
        """Test α² ↦ (β+1)²."""
        assert alpha_to_beta(alpha ** 2 + 0) == beta ** 2 + 2 * beta + 1

    def test_pole_raises(self):
        """Test that 1/α is not a polynomial in β."""
        with pytest.raises(ConversionError, match="not a polynomial in beta"):
            alpha_to_beta(1 / alpha)

    def test_beta_to_alpha(self):
        """Test β ↦ α − 1."""
        assert beta_to_alpha(beta ** 2) == (alpha - 1) ** 2
        assert alpha_to_beta(beta_to_alpha(2 * beta ** 3 + beta)) == 2 * beta ** 3 + beta

    def test_alpha_at_one(self):
        """Test evaluation at the Schur point."""
        assert alpha_at_one((alpha + 1) / (2 * alpha)) == 1
        assert alpha_at_one(alpha / 3) == Fraction(1, 3)

    def test_laurent_to_beta(self):
        """Test A² ↦ β + 1."""
        assert laurent_to_beta(2 * A ** 2) == 2 * beta + 2
        with pytest.raises(ConversionError):
            laurent_to_beta(A + 0)


@pytest.mark.unit
class TestPolyHelpers:
    """Test univariate polynomial helpers."""

    def test_coefficients(self):
        """Test ascending coefficient lists."""
        p = BETA_RING(0) + beta ** 2 / 2 - 1
        assert poly_coefficients(p) == [Fraction(-1), Fraction(0), Fraction(1, 2)]
        assert poly_to_json(p) == ["-1", "0", "1/2"]
        assert poly_degree(p) == 2

    def test_zero(self):
        """Test the zero polynomial."""
        assert poly_coefficients(DELTA_RING.zero) == []
        assert poly_degree(DELTA_RING.zero) is None

    def test_format_fraction(self):
        """Test exact rational strings."""
        assert format_fraction(Fraction(-1, 2)) == "-1/2"
        assert format_fraction(3) == "3"
