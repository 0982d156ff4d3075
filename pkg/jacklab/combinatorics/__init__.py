"""
Matchings, bicoloured graphs and maps, with the statistics built on them.
"""

from .matchings import Matching, enumerate_matchings, reference_matchings, class_G
from .maps import FlagMap, glue, component_labellings, count_rooted_lists, count_oriented_lists_anyface
from .nonorientability import EdgeClass, EtaPolicy, eta, stat_eta, poly_G_eta, is_unhandled
from .embeddings import BicoloredGraph, graph_of_partition, count_embeddings, hat_p
from .handshake import count_P, c_constant

__all__ = [
    "Matching",
    "enumerate_matchings",
    "reference_matchings",
    "class_G",
    "FlagMap",
    "glue",
    "component_labellings",
    "count_rooted_lists",
    "count_oriented_lists_anyface",
    "EdgeClass",
    "EtaPolicy",
    "eta",
    "stat_eta",
    "poly_G_eta",
    "is_unhandled",
    "BicoloredGraph",
    "graph_of_partition",
    "count_embeddings",
    "hat_p",
    "count_P",
    "c_constant",
]
