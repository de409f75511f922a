#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Graded subspaces and their expansions.

The pieces of a connected subgraph Y are the non-empty intersections of Y
with the ambient pieces. An induced piece keeps the id of the ambient piece
it comes from.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable

from treegrade.grading.pieces import Piece, TreeGrading, validate_grading
from treegrade.graph.weighted import WeightedGraph
from treegrade.utils.misc import TreeGradeInputError, TreeGradeInternalError
from treegrade.utils.typing import PieceId

logger = logging.getLogger(__name__)

FULL = "full"
DEGENERATE = "degenerate"
PARTIAL = "partial"


@dataclass(frozen=True)
class GradedSubspace(object):
    """
    A connected subgraph with its induced grading.

    Attributes
    ----------
    graph : WeightedGraph
        The subgraph Y.
    grading : TreeGrading
        Induced pieces, with the ids of the ambient pieces they come from.
    kinds : dict
        Piece id -> "full" (Q = P), "degenerate" (a single vertex of a
        non-degenerate P) or "partial".
    """

    graph: WeightedGraph
    grading: TreeGrading
    kinds: Dict[PieceId, str]

    @property
    def is_sectional(self) -> bool:
        """
        Every induced piece is either a single vertex or a whole piece.
        """
        return all(kind != PARTIAL for kind in self.kinds.values())

    @property
    def is_full(self) -> bool:
        """
        Every induced piece is a whole ambient piece.
        """
        return all(kind == FULL for kind in self.kinds.values())

    @property
    def nondegenerate_ids(self) -> FrozenSet[PieceId]:
        return frozenset(p.id for p in self.grading.nondegenerate)


def _check_inside(graph: WeightedGraph, sub: WeightedGraph) -> None:
    for vertex in sub.vertices:
        graph.check_vertex(vertex)
    for edge in sub.edges:
        if not graph.has_edge(edge.id) or graph.edge(edge.id) != edge:
            raise TreeGradeInputError(f"edge {edge.id} of the subgraph is not an edge of the graph")


def graded_subspace(
    graph: WeightedGraph, grading: TreeGrading, sub: WeightedGraph
) -> GradedSubspace:
    """
    The grading induced on a connected subgraph.

    Parameters
    ----------
    graph : WeightedGraph
        Ambient graph.
    grading : TreeGrading
        Ambient grading.
    sub : WeightedGraph
        Subgraph (vertices and edges of `graph`).

    Returns
    -------
    subspace : GradedSubspace
        The induced grading and the kind of every induced piece.
    """
    _check_inside(graph, sub)
    if not sub.is_connected():
        raise TreeGradeInputError("graded subspaces must be connected")

    sub_vertices = set(sub.vertices)
    sub_edges = set(sub.edge_ids)
    pieces = []
    kinds: Dict[PieceId, str] = {}
    for piece in grading.pieces:
        vertices = piece.vertices & sub_vertices
        if not vertices:
            continue
        edges = piece.edges & sub_edges
        induced = Piece(id=piece.id, edges=frozenset(edges), vertices=frozenset(vertices))
        if induced.vertices == piece.vertices and induced.edges == piece.edges:
            kinds[piece.id] = FULL
        elif induced.degenerate:
            kinds[piece.id] = DEGENERATE
        else:
            kinds[piece.id] = PARTIAL
        pieces.append(induced)

    induced_grading = TreeGrading(pieces)
    report = validate_grading(sub, induced_grading)
    if not report.ok:
        raise TreeGradeInputError(
            f"induced grading is invalid ({report.condition}): {report.message}"
        )
    return GradedSubspace(graph=sub, grading=induced_grading, kinds=kinds)


def expansion(
    graph: WeightedGraph,
    grading: TreeGrading,
    subspace: GradedSubspace,
    expand: Iterable[PieceId],
) -> GradedSubspace:
    """
    Expand a graded subspace at a set of its pieces.

    Every selected piece is replaced by the ambient piece containing it;
    the subgraph grows by those ambient pieces.

    Parameters
    ----------
    graph : WeightedGraph
        Ambient graph.
    grading : TreeGrading
        Ambient grading.
    subspace : GradedSubspace
        The graded subspace `(Y, Q)`.
    expand : iterable of int
        Ids of the pieces of Y to expand.

    Returns
    -------
    expanded : GradedSubspace
        `Y0` with the grading `(Q minus R)` together with the ambient pieces
        meeting R.
    """
    expand_ids = subspace.grading.check_piece_ids(expand)
    for piece_id in expand_ids:
        inner = subspace.grading.piece(piece_id)
        if not grading.has_piece(piece_id):
            raise TreeGradeInputError(f"piece {piece_id} is not inside an ambient piece")
        outer = grading.piece(piece_id)
        if not (inner.vertices <= outer.vertices and inner.edges <= outer.edges):
            raise TreeGradeInputError(f"piece {piece_id} is not inside an ambient piece")

    if not expand_ids:
        return subspace

    edge_ids = set(subspace.graph.edge_ids)
    vertices = set(subspace.graph.vertices)
    for piece_id in expand_ids:
        outer = grading.piece(piece_id)
        edge_ids |= outer.edges
        vertices |= outer.vertices
    expanded_graph = graph.subgraph(edge_ids, vertices, connected=True)

    result = graded_subspace(graph, grading, expanded_graph)
    kept = [p for p in subspace.grading.pieces if p.id not in expand_ids]
    # pieces of Y0 must be exactly (Q - R) + P0
    expected = TreeGrading(kept + [grading.piece(i) for i in expand_ids])
    if result.grading != expected:
        raise TreeGradeInternalError(
            "expanded grading differs from the expected piece family"
        )

    nondegenerate = subspace.nondegenerate_ids
    if nondegenerate <= expand_ids and not result.is_sectional:
        raise TreeGradeInternalError("expansion at all non-degenerate pieces is not sectional")

    logger.debug(
        "expanded %d pieces: %d -> %d edges",
        len(expand_ids),
        subspace.graph.n_edges,
        expanded_graph.n_edges,
    )
    return result


def expansion_is_bijective(
    subspace: GradedSubspace, expanded: GradedSubspace, expand: Iterable[PieceId]
) -> bool:
    """
    Whether the expansion is a bijection on non-degenerate pieces.

    This holds when exactly the non-degenerate pieces of Y are expanded.
    """
    expand_ids = frozenset(expand)
    if expand_ids != subspace.nondegenerate_ids:
        return False
    return expanded.nondegenerate_ids == expand_ids


if __name__ == "__main__":  # pragma: no cover
    pass
