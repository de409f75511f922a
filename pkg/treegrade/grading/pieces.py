#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Pieces, disjoint tree-gradings and their validation.

A tree-grading of a graph is a family of pairwise vertex-disjoint, connected
pieces such that every cycle of the graph lies inside a single piece. The
union of the pieces is the piece-portion; the remaining edges form the
tree-portion, a forest.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

import networkx as nx

from treegrade.graph.algorithms import bridges, two_edge_connected_blocks
from treegrade.graph.enumeration import simple_cycles
from treegrade.graph.weighted import WeightedGraph
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradePreconditionError,
    sorted_vertices,
    vertex_sort_key,
)
from treegrade.utils.typing import EdgeId, PieceId, Vertex

logger = logging.getLogger(__name__)

# Graphs with at most this many vertices are validated by enumerating
# every simple cycle; larger graphs use the bridge criterion.
DEFAULT_ENUMERATION_BOUND: int = 14


@dataclass(frozen=True)
class Piece(object):
    """
    A piece of a tree-grading.

    Parameters
    ----------
    id : int
        Piece id.
    edges : frozenset of int
        Edge ids of the piece (empty for a degenerate piece).
    vertices : frozenset
        Endpoints of the edges, or the single vertex of a degenerate piece.
    """

    id: PieceId
    edges: FrozenSet[EdgeId]
    vertices: FrozenSet[Vertex]

    @property
    def degenerate(self) -> bool:
        return len(self.edges) == 0 and len(self.vertices) == 1

    @property
    def smallest_vertex(self) -> Vertex:
        return min(self.vertices, key=vertex_sort_key)

    @classmethod
    def from_edges(
        cls, graph: WeightedGraph, piece_id: PieceId, edge_ids: Iterable[EdgeId]
    ) -> Piece:
        edge_set = frozenset(edge_ids)
        vertices = set()
        for edge_id in edge_set:
            edge = graph.edge(edge_id)
            vertices.update((edge.u, edge.v))
        return cls(id=piece_id, edges=edge_set, vertices=frozenset(vertices))

    @classmethod
    def point(cls, piece_id: PieceId, vertex: Vertex) -> Piece:
        """
        A degenerate (one-point) piece.
        """
        return cls(id=piece_id, edges=frozenset(), vertices=frozenset((vertex,)))

    def with_id(self, piece_id: PieceId) -> Piece:
        return Piece(id=piece_id, edges=self.edges, vertices=self.vertices)


class TreeGrading(object):
    """
    An ordered family of pieces.

    The grading does not hold a reference to its graph; operations take the
    pair `(graph, grading)`. Validity is checked by `validate_grading`.

    Parameters
    ----------
    pieces : iterable of Piece
        The pieces. Ids must be unique.

    Attributes
    ----------
    pieces : tuple of Piece
        Pieces in ascending id order.
    """

    pieces: Tuple[Piece, ...]

    def __init__(self, pieces: Iterable[Piece] = ()) -> None:
        self.pieces = tuple(sorted(pieces, key=lambda p: p.id))
        self._by_id: Dict[PieceId, Piece] = {}
        self._vertex_owner: Dict[Vertex, PieceId] = {}
        self._edge_owner: Dict[EdgeId, PieceId] = {}
        for piece in self.pieces:
            if piece.id in self._by_id:
                raise TreeGradeInputError(f"duplicate piece id {piece.id}")
            self._by_id[piece.id] = piece
            for vertex in piece.vertices:
                self._vertex_owner.setdefault(vertex, piece.id)
            for edge_id in piece.edges:
                self._edge_owner.setdefault(edge_id, piece.id)

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeGrading):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        return f"TreeGrading(piece_ids={list(self.piece_ids)})"

    @property
    def piece_ids(self) -> Tuple[PieceId, ...]:
        return tuple(p.id for p in self.pieces)

    @property
    def nondegenerate(self) -> Tuple[Piece, ...]:
        return tuple(p for p in self.pieces if not p.degenerate)

    def piece(self, piece_id: PieceId) -> Piece:
        try:
            return self._by_id[piece_id]
        except KeyError:
            raise TreeGradeInputError(f"unknown piece id {piece_id!r}")

    def has_piece(self, piece_id: PieceId) -> bool:
        return piece_id in self._by_id

    def check_piece_ids(self, piece_ids: Iterable[PieceId]) -> FrozenSet[PieceId]:
        ids = frozenset(piece_ids)
        for piece_id in ids:
            self.piece(piece_id)
        return ids

    def piece_of_vertex(self, vertex: Vertex) -> Optional[PieceId]:
        return self._vertex_owner.get(vertex)

    def piece_of_edge(self, edge_id: EdgeId) -> Optional[PieceId]:
        return self._edge_owner.get(edge_id)

    @property
    def piece_edges(self) -> FrozenSet[EdgeId]:
        """
        Edges of the piece-portion.
        """
        return frozenset(self._edge_owner)

    @property
    def piece_vertices(self) -> FrozenSet[Vertex]:
        """
        Vertices of the piece-portion.
        """
        return frozenset(self._vertex_owner)

    def tree_edges(self, graph: WeightedGraph) -> FrozenSet[EdgeId]:
        """
        Edges of the tree-portion (every edge in no piece).
        """
        return frozenset(e for e in graph.edge_ids if e not in self._edge_owner)

    def free_vertices(self, graph: WeightedGraph) -> FrozenSet[Vertex]:
        """
        Vertices of the tree-portion (every vertex in no piece).
        """
        return frozenset(v for v in graph.vertices if v not in self._vertex_owner)

    def check_references(self, graph: WeightedGraph) -> None:
        """
        Raise if a piece names an edge or vertex that is not in `graph`.
        """
        for piece in self.pieces:
            for edge_id in piece.edges:
                if not graph.has_edge(edge_id):
                    raise TreeGradeInputError(
                        f"piece {piece.id} references unknown edge {edge_id}"
                    )
            for vertex in piece.vertices:
                if not graph.has_vertex(vertex):
                    raise TreeGradeInputError(
                        f"piece {piece.id} references unknown vertex {vertex!r}"
                    )

    def renumbered(self, first_id: PieceId = 1) -> TreeGrading:
        """
        Copy with piece ids reassigned by ascending smallest vertex.
        """
        ordered = sorted(self.pieces, key=lambda p: vertex_sort_key(p.smallest_vertex))
        return TreeGrading(p.with_id(first_id + i) for i, p in enumerate(ordered))

    def with_pieces(self, extra: Iterable[Piece]) -> TreeGrading:
        return TreeGrading(self.pieces + tuple(extra))


@dataclass
class GradingReport(object):
    """
    Outcome of `validate_grading`.

    Attributes
    ----------
    ok : bool
        True when the grading is a valid disjoint tree-grading.
    condition : str or None
        Name of the first violated condition.
    witness : Any
        Object exhibiting the violation (piece ids, a vertex, a cycle).
    message : str
        Human readable description.
    method : str
        "enumeration" or "bridges": how cycle containment was checked.
    """

    ok: bool
    condition: Optional[str] = None
    witness: Any = None
    message: str = ""
    method: str = "enumeration"

    def to_dict(self) -> Dict[str, Any]:
        witness = self.witness
        if isinstance(witness, (set, frozenset)):
            witness = sorted_vertices(witness)
        return {
            "ok": self.ok,
            "condition": self.condition,
            "witness": witness,
            "message": self.message,
            "method": self.method,
        }


def canonical_grading(graph: WeightedGraph) -> TreeGrading:
    """
    The minimal grading whose pieces absorb every cycle.

    Pieces are the connected components of the non-bridge subgraph; no
    degenerate pieces are emitted. Ids are 1, 2, ... by ascending smallest
    vertex id.

    Parameters
    ----------
    graph : WeightedGraph
        A connected graph.

    Returns
    -------
    grading : TreeGrading
        The canonical grading.
    """
    pieces = [
        Piece.from_edges(graph, i + 1, block)
        for i, block in enumerate(two_edge_connected_blocks(graph))
    ]
    logger.debug("canonical grading has %d pieces", len(pieces))
    return TreeGrading(pieces)


def _piece_connected(graph: WeightedGraph, piece: Piece) -> bool:
    sub = nx.MultiGraph()
    sub.add_nodes_from(piece.vertices)
    for edge_id in piece.edges:
        edge = graph.edge(edge_id)
        sub.add_edge(edge.u, edge.v, key=edge_id)
    return nx.is_connected(sub)


def validate_grading(
    graph: WeightedGraph,
    grading: TreeGrading,
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND,
) -> GradingReport:
    """
    Check the conditions of a disjoint tree-grading.

    Conditions are checked in order and the first violation is reported:

    * "degenerate-shape": a piece's vertex set is not the endpoint set of
      its edges (or a single vertex for an edgeless piece),
    * "disjointness": two pieces share a vertex,
    * "piece-connectedness": a piece is not connected,
    * "piece-closure": an edge joins two vertices of one piece without
      belonging to it (pieces must be the components of their union),
    * "cycle-containment": a cycle of the graph is not inside one piece.

    Parameters
    ----------
    graph : WeightedGraph
        The ambient graph.
    grading : TreeGrading
        The grading to validate.
    enumeration_bound : int
        Graphs with at most this many vertices are checked by enumerating
        all simple cycles; larger ones use the equivalent bridge criterion.

    Returns
    -------
    report : GradingReport
        The report (never raises on a violation).
    """
    grading.check_references(graph)

    for piece in grading.pieces:
        endpoints = set()
        for edge_id in piece.edges:
            edge = graph.edge(edge_id)
            endpoints.update((edge.u, edge.v))
        if piece.edges and endpoints != set(piece.vertices):
            return GradingReport(
                ok=False,
                condition="degenerate-shape",
                witness=piece.id,
                message=f"vertex set of piece {piece.id} is not the endpoint set of its edges",
            )
        if not piece.edges and len(piece.vertices) != 1:
            return GradingReport(
                ok=False,
                condition="degenerate-shape",
                witness=piece.id,
                message=f"edgeless piece {piece.id} must consist of exactly one vertex",
            )

    owner: Dict[Vertex, PieceId] = {}
    for piece in grading.pieces:
        for vertex in piece.vertices:
            if vertex in owner:
                return GradingReport(
                    ok=False,
                    condition="disjointness",
                    witness=[owner[vertex], piece.id],
                    message=f"pieces {owner[vertex]} and {piece.id} share vertex {vertex!r}",
                )
            owner[vertex] = piece.id

    for piece in grading.pieces:
        if not _piece_connected(graph, piece):
            return GradingReport(
                ok=False,
                condition="piece-connectedness",
                witness=piece.id,
                message=f"piece {piece.id} is not connected",
            )

    for edge in graph.edges:
        pu, pv = owner.get(edge.u), owner.get(edge.v)
        if pu is not None and pu == pv and edge.id not in grading.piece(pu).edges:
            return GradingReport(
                ok=False,
                condition="piece-closure",
                witness=edge.id,
                message=f"edge {edge.id} joins vertices of piece {pu} but is not in it",
            )

    if graph.n_vertices <= enumeration_bound:
        for cycle in simple_cycles(graph):
            holders = {grading.piece_of_edge(e) for e in cycle}
            if len(holders) != 1 or None in holders:
                return GradingReport(
                    ok=False,
                    condition="cycle-containment",
                    witness=sorted(cycle),
                    message="cycle is not contained in one piece",
                    method="enumeration",
                )
        return GradingReport(ok=True, method="enumeration")

    warnings.warn(
        f"graph has {graph.n_vertices} > {enumeration_bound} vertices; "
        "checking cycle containment with the bridge criterion"
    )
    bridge_ids = bridges(graph)
    for block in two_edge_connected_blocks(graph):
        holders = {grading.piece_of_edge(e) for e in block}
        if len(holders) != 1 or None in holders:
            return GradingReport(
                ok=False,
                condition="cycle-containment",
                witness=sorted(block),
                message="a two-edge-connected block is not contained in one piece",
                method="bridges",
            )
    logger.debug("bridge criterion passed (%d bridges)", len(bridge_ids))
    return GradingReport(ok=True, method="bridges")


def require_valid(graph: WeightedGraph, grading: TreeGrading) -> None:
    """
    Raise `TreeGradePreconditionError` unless the grading is valid.
    """
    report = validate_grading(graph, grading)
    if not report.ok:
        raise TreeGradePreconditionError(
            f"invalid grading ({report.condition}): {report.message}",
            witness=report.witness,
        )


if __name__ == "__main__":  # pragma: no cover
    pass
