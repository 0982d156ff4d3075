"""
Exact algebra: partitions, coefficient rings, Jack polynomials, characters
and connection coefficients.
"""

from .partitions import Partition, all_partitions, z, degree_d, subpartition_leq, dominance_leq, concat
from .jack import jack, theta, jack_norm, inner_product, monomial_in_powersum
from .characters import ch, a_top_ch, structure_constants, g_degree_bound, c_from_g
from .coeffs import TripleTable, connection_c, connection_h, check_leading_factorization

__all__ = [
    "Partition",
    "all_partitions",
    "z",
    "degree_d",
    "subpartition_leq",
    "dominance_leq",
    "concat",
    "jack",
    "theta",
    "jack_norm",
    "inner_product",
    "monomial_in_powersum",
    "ch",
    "a_top_ch",
    "structure_constants",
    "g_degree_bound",
    "c_from_g",
    "TripleTable",
    "connection_c",
    "connection_h",
    "check_leading_factorization",
]
