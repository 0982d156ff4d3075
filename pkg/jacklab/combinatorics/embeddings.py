"""
Bicoloured graphs and their injective embeddings into Young diagrams.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import perm
from typing import Dict, List, Set, Tuple

from jacklab.algebra.partitions import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BicoloredGraph:
    """
    Vertices are numbered separately per colour; every edge is a
    (black, white) pair and parallel edges are allowed.
    """

    black: int
    white: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for b, w in self.edges:
            if not (0 <= b < self.black and 0 <= w < self.white):
                raise ValueError(f"edge ({b}, {w}) outside the vertex sets")

    def degree(self, colour: str, vertex: int) -> int:
        index = 0 if colour == "black" else 1
        return sum(1 for edge in self.edges if edge[index] == vertex)


def graph_of_partition(pi: Partition, conjugate: bool = False) -> BicoloredGraph:
    """
    G_π: one black vertex of degree π_i per part, each edge ending in its own
    white leaf. With ``conjugate`` the colours are exchanged (Ḡ_π).
    """
    edges = []
    leaf = 0
    for centre, part in enumerate(pi):
        for _ in range(part):
            edges.append((centre, leaf))
            leaf += 1
    if conjugate:
        return BicoloredGraph(pi.size, pi.length, tuple((w, b) for b, w in edges))
    return BicoloredGraph(pi.length, pi.size, tuple(edges))


def count_embeddings(G: BicoloredGraph, lam: Partition, negative: bool = False) -> int:
    """
    Number of injective embeddings of G into the diagram of λ.

    Black vertices go to rows and white vertices to columns (the other way
    round when ``negative``); edge (b, w) lands in box (row, column), which
    must belong to λ, and distinct edges land in distinct boxes.
    """
    rows = lam.length
    columns = lam[0] if lam.parts else 0
    # Orient every edge as (row-side vertex, column-side vertex).
    if negative:
        row_count, column_count = G.white, G.black
        edges = [(w, b) for b, w in G.edges]
    else:
        row_count, column_count = G.black, G.white
        edges = list(G.edges)

    incident: Dict[int, List[int]] = {v: [] for v in range(row_count)}
    for u, v in edges:
        incident[u].append(v)
    order = sorted(range(row_count), key=lambda v: -len(incident[v]))
    touched = {v for _, v in edges}

    row_of: Dict[int, int] = {}
    column_of: Dict[int, int] = {}
    used: Set[Tuple[int, int]] = set()

    def place_edges(u: int, pending: List[int]) -> int:
        if not pending:
            return assign(order.index(u) + 1)
        v, rest = pending[0], pending[1:]
        row = row_of[u]
        if v in column_of:
            box = (row, column_of[v])
            if box[1] >= lam[row] or box in used:
                return 0
            used.add(box)
            total = place_edges(u, rest)
            used.discard(box)
            return total
        total = 0
        for column in range(lam[row]):
            box = (row, column)
            if box in used:
                continue
            column_of[v] = column
            used.add(box)
            total += place_edges(u, rest)
            used.discard(box)
            del column_of[v]
        return total

    def assign(position: int) -> int:
        if position == len(order):
            return 1
        u = order[position]
        total = 0
        for row in range(rows):
            row_of[u] = row
            total += place_edges(u, incident[u])
        row_of.pop(u, None)
        return total

    free_columns = column_count - len(touched)
    return assign(0) * columns ** free_columns


def hat_p(pi: Partition, lam: Partition) -> int:
    """
    Σ over maps f from the parts of π to the rows of λ of
    ∏_i λ_i^{falling L_i}, where L_i sums the parts sent to row i.
    """
    if not pi.parts:
        return 1
    total = 0
    for assignment in product(range(lam.length), repeat=pi.length):
        load = [0] * lam.length
        for part, row in zip(pi, assignment):
            load[row] += part
        term = 1
        for row, exponent in enumerate(load):
            term *= perm(lam[row], exponent)
            if not term:
                break
        total += term
    return total
