"""
Unit tests for partitions and partition orders.
"""

import pytest

from jacklab.algebra.partitions import (
    EMPTY,
    Partition,
    all_partitions,
    concat,
    degree_d,
    dominance_leq,
    ordered_splittings,
    subpartition_leq,
    subpartitions_of,
    z,
)
from jacklab.core.exceptions import PartitionError

P = Partition.of


@pytest.mark.unit
class TestPartition:
    """Test the Partition value type."""

    def test_rejects_increasing_parts(self):
        """Test that parts must be weakly decreasing."""
        with pytest.raises(PartitionError):
            Partition((1, 2))

    def test_rejects_non_positive_parts(self):
        """Test that zero parts are rejected."""
        with pytest.raises(PartitionError):
            Partition((2, 0))

    def test_of_sorts_parts(self):
        """Test building from unsorted parts."""
        assert P(1, 3, 2) == Partition((3, 2, 1))

    def test_parse(self):
        """Test CLI notation parsing."""
        assert Partition.parse("3,1") == P(3, 1)
        assert Partition.parse("[4, 3]") == P(4, 3)
        assert Partition.parse("") == EMPTY

        with pytest.raises(PartitionError):
            Partition.parse("3,a")

    def test_size_length_multiplicity(self):
        """Test basic statistics."""
        lam = P(3, 3, 1)
        assert lam.size == 7
        assert lam.length == 3
        assert lam.multiplicity(3) == 2
        assert lam.multiplicity(2) == 0

    def test_conjugate(self):
        """Test the transposed diagram."""
        assert P(4, 3).conjugate() == P(2, 2, 2, 1)
        assert P(2, 2, 2, 1).conjugate() == P(4, 3)
        assert EMPTY.conjugate() == EMPTY

    def test_ones(self):
        """Test removing and adding unit parts."""
        assert P(3, 1, 1).without_ones() == P(3)
        assert P(3).padded_to(5) == P(3, 1, 1)


@pytest.mark.unit
class TestEnumeration:
    """Test enumeration of partitions."""

    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 5), (6, 11), (10, 42)])
    def test_counts(self, n, count):
        """Test the partition numbers."""
        assert len(all_partitions(n)) == count

    def test_reverse_lexicographic_order(self):
        """Test the canonical order."""
        assert all_partitions(4) == (P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1))

    def test_negative_rejected(self):
        """Test that negative sizes raise."""
        with pytest.raises(PartitionError):
            all_partitions(-1)


@pytest.mark.unit
class TestStatistics:
    """Test z_λ, degree d and concatenation."""

    def test_z(self):
        """Test centralizer sizes."""
        assert z(P(1, 1, 1)) == 6
        assert z(P(3, 3)) == 18
        assert z(P(3, 2)) == 6
        assert z(P(2, 2, 1)) == 8
        assert z(EMPTY) == 1

    def test_degree_d(self):
        """Test d(π,σ;λ)."""
        assert degree_d(P(2), P(2), P(2)) == 1
        assert degree_d(P(2), P(2), P(1, 1)) == 2
        assert degree_d(P(3, 2), P(3, 3), P(3, 3)) == 3

    def test_concat(self):
        """Test multiset union."""
        assert concat(P(3, 1), P(2)) == P(3, 2, 1)


@pytest.mark.unit
class TestOrders:
    """Test dominance and the sub-partition order."""

    def test_dominance(self):
        """Test dominance comparisons."""
        assert dominance_leq(P(2, 2), P(3, 1))
        assert not dominance_leq(P(3, 1), P(2, 2))
        assert dominance_leq(P(1, 1, 1, 1), P(4))

    def test_dominance_sizes(self):
        """Test that dominance requires equal sizes."""
        with pytest.raises(PartitionError, match="incomparable sizes"):
            dominance_leq(P(2), P(3))

    def test_subpartition(self):
        """Test λ ⪯ μ."""
        assert subpartition_leq(P(2, 1, 1), P(3, 1))
        assert subpartition_leq(P(2, 1, 1), P(2, 2))
        assert not subpartition_leq(P(3, 1), P(2, 2))
        assert not subpartition_leq(P(2), P(3))

    def test_subpartitions_of(self):
        """Test the down-set of μ."""
        assert set(subpartitions_of(P(2, 2))) == {P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)}

    def test_ordered_splittings(self):
        """Test ordered splittings into prescribed sizes."""
        splits = list(ordered_splittings(P(2, 1, 1), [2, 2]))
        assert set(splits) == {(P(2), P(1, 1)), (P(1, 1), P(2))}
        assert list(ordered_splittings(P(3), [2, 1])) == []
