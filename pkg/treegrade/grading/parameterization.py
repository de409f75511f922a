#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Parameterizations: collapsing every piece of a graded graph to a point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet

from treegrade.grading.pieces import TreeGrading, require_valid
from treegrade.graph.weighted import WeightedGraph
from treegrade.utils.misc import TreeGradeInternalError, piece_vertex_name
from treegrade.utils.typing import PieceId, Vertex, VertexMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Parameterization(object):
    """
    A parameterization `(T, V_T, q)` of a graded graph.

    Attributes
    ----------
    tree : WeightedGraph
        The tree obtained by contracting every piece.
    piece_vertices : frozenset
        V_T, the contraction images of the pieces.
    q : dict
        Vertex map from the graph onto the tree.
    piece_vertex_of : dict
        Piece id -> its vertex in V_T.
    """

    tree: WeightedGraph
    piece_vertices: FrozenSet[Vertex]
    q: VertexMap
    piece_vertex_of: Dict[PieceId, Vertex]

    def fiber(self, vertex: Vertex) -> FrozenSet[Vertex]:
        return frozenset(x for x, y in self.q.items() if y == vertex)


def parameterize(graph: WeightedGraph, grading: TreeGrading) -> Parameterization:
    """
    Contract each piece to the vertex `y<id>`.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        A valid grading of `graph`.

    Returns
    -------
    parameterization : Parameterization
        The tree, its piece vertices and the quotient map.

    Raises
    ------
    TreeGradePreconditionError
        If the grading is invalid.
    TreeGradeInternalError
        If the contracted graph is not a tree.
    """
    require_valid(graph, grading)

    groups = {piece_vertex_name(p.id): p.vertices for p in grading.pieces}
    tree, q = graph.contract(groups)

    if tree.n_edges != tree.n_vertices - 1 or not tree.is_connected():
        raise TreeGradeInternalError(
            f"contracted graph is not a tree ({tree.n_vertices} vertices, "
            f"{tree.n_edges} edges)"
        )

    piece_vertex_of = {p.id: piece_vertex_name(p.id) for p in grading.pieces}
    for piece in grading.pieces:
        fiber = frozenset(x for x, y in q.items() if y == piece_vertex_of[piece.id])
        if fiber != piece.vertices:
            raise TreeGradeInternalError(f"fiber over piece {piece.id} is {sorted(map(str, fiber))}")

    logger.debug(
        "parameterization tree: %d vertices, %d piece vertices",
        tree.n_vertices,
        len(piece_vertex_of),
    )
    return Parameterization(
        tree=tree,
        piece_vertices=frozenset(piece_vertex_of.values()),
        q=q,
        piece_vertex_of=piece_vertex_of,
    )


if __name__ == "__main__":  # pragma: no cover
    pass
