#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Utilities for tests
"""
from fractions import Fraction
from typing import Tuple

import numpy as np

from treegrade.gen.spaces import triangle_chain
from treegrade.grading.pieces import Piece, TreeGrading, canonical_grading
from treegrade.graph.weighted import EdgePath, WeightedGraph, make_graph, unit_graph

# Random number generator
RNG = np.random.RandomState(1984)

HALF = Fraction(1, 2)


def two_triangles() -> Tuple[WeightedGraph, TreeGrading]:
    """
    G2: triangles 1-2-3 (edges 1, 2, 3) and 4-5-6 (edges 5, 6, 7) with the
    bridge 3-4 (edge 4). All lengths are 1.
    """
    return triangle_chain(2)


def square() -> Tuple[WeightedGraph, TreeGrading]:
    """
    C4: the cycle 1-2-3-4 with unit edges 1..4 (edge 4 joins 4 and 1).
    """
    graph = unit_graph([(1, 2), (2, 3), (3, 4), (4, 1)])
    return graph, canonical_grading(graph)


def theta() -> Tuple[WeightedGraph, TreeGrading]:
    """
    Two vertices joined by three edges of lengths 1, 2 and 3 (rank 2).
    """
    graph = make_graph([1, 2], [(1, 1, 2, 1), (2, 1, 2, 2), (3, 1, 2, 3)])
    return graph, canonical_grading(graph)


def path_graph(n: int = 4) -> Tuple[WeightedGraph, TreeGrading]:
    """
    The path 1 - 2 - ... - n with unit edges; its canonical grading is empty.
    """
    graph = unit_graph([(i, i + 1) for i in range(1, n)])
    return graph, canonical_grading(graph)


def lollipop() -> Tuple[WeightedGraph, TreeGrading]:
    """
    A square 1-2-3-4 with a tail 4-5-6 and the degenerate piece {6}.
    """
    graph = unit_graph([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6)])
    grading = canonical_grading(graph).with_pieces([Piece.point(2, 6)])
    return graph, grading


def loop(graph: WeightedGraph, start, tokens) -> EdgePath:
    return EdgePath.from_tokens(graph, start, tokens)
