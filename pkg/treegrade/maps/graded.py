#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Maps between graded graphs.

A map sends vertices to vertices and every edge to a path between the
images of its endpoints, so that edges may be collapsed or subdivided.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Set

from treegrade.grading.parameterization import parameterize
from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import EdgePath, Traversal, WeightedGraph
from treegrade.quotient.metric import MetricQuotient
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradeInternalError,
    TreeGradePreconditionError,
)
from treegrade.utils.typing import EdgeId, PieceId, Vertex, VertexMap

logger = logging.getLogger(__name__)


class GradedMap(object):
    """
    A map of graded graphs given on vertices and edges.

    Parameters
    ----------
    source, target : WeightedGraph
        Domain and codomain.
    source_grading, target_grading : TreeGrading
        Their gradings.
    vertex_map : mapping
        Image of every source vertex.
    edge_map : mapping
        Image path of every source edge, starting at the image of the
        edge's tail and ending at the image of its head.
    """

    source: WeightedGraph
    source_grading: TreeGrading
    target: WeightedGraph
    target_grading: TreeGrading
    vertex_map: VertexMap
    edge_map: Dict[EdgeId, EdgePath]

    def __init__(
        self,
        source: WeightedGraph,
        source_grading: TreeGrading,
        target: WeightedGraph,
        target_grading: TreeGrading,
        vertex_map: Mapping[Vertex, Vertex],
        edge_map: Mapping[EdgeId, EdgePath],
    ) -> None:
        self.source = source
        self.source_grading = source_grading
        self.target = target
        self.target_grading = target_grading
        self.vertex_map = dict(vertex_map)
        self.edge_map = dict(edge_map)

        for vertex in source.vertices:
            if vertex not in self.vertex_map:
                raise TreeGradeInputError(f"vertex {vertex!r} has no image")
            target.check_vertex(self.vertex_map[vertex])
        for vertex in self.vertex_map:
            source.check_vertex(vertex)
        for edge in source.edges:
            if edge.id not in self.edge_map:
                raise TreeGradeInputError(f"edge {edge.id} has no image")
            image = self.edge_map[edge.id]
            if image.start != self.vertex_map[edge.u]:
                raise TreeGradeInputError(
                    f"image of edge {edge.id} starts at {image.start!r}, "
                    f"expected {self.vertex_map[edge.u]!r}"
                )
            end = image.end(target)
            if end != self.vertex_map[edge.v]:
                raise TreeGradeInputError(
                    f"image of edge {edge.id} ends at {end!r}, expected {self.vertex_map[edge.v]!r}"
                )
        for edge_id in self.edge_map:
            source.edge(edge_id)

    def __call__(self, vertex: Vertex) -> Vertex:
        try:
            return self.vertex_map[vertex]
        except KeyError:
            raise TreeGradeInputError(f"unknown vertex {vertex!r}")

    def map_path(self, path: EdgePath) -> EdgePath:
        """
        The image of a path: the concatenation of its edge images.
        """
        self.source.path_vertices(path)
        steps: List[Traversal] = []
        for step in path.steps:
            image = self.edge_map[step.edge]
            if step.forward:
                steps.extend(image.steps)
            else:
                steps.extend(s.reversed() for s in reversed(image.steps))
        mapped = EdgePath(start=self(path.start), steps=tuple(steps))
        self.target.path_vertices(mapped)
        return mapped

    def edge_image_vertices(self, edge_id: EdgeId) -> List[Vertex]:
        return self.target.path_vertices(self.edge_map[edge_id])

    @classmethod
    def identity(cls, graph: WeightedGraph, grading: TreeGrading) -> GradedMap:
        return cls(
            graph,
            grading,
            graph,
            grading,
            {v: v for v in graph.vertices},
            {e.id: EdgePath(e.u, (Traversal(e.id, True),)) for e in graph.edges},
        )

    @classmethod
    def from_quotient(cls, quotient: MetricQuotient) -> GradedMap:
        """
        The collapse map of a metric quotient.
        """
        collapsed = quotient.collapsed_edges
        edge_map = {}
        for edge in quotient.source.edges:
            if edge.id in collapsed:
                edge_map[edge.id] = EdgePath(quotient(edge.u))
            else:
                edge_map[edge.id] = EdgePath(quotient(edge.u), (Traversal(edge.id, True),))
        return cls(
            quotient.source,
            quotient.source_grading,
            quotient.target,
            quotient.target_grading,
            quotient.gamma,
            edge_map,
        )


def compose(first: GradedMap, second: GradedMap) -> GradedMap:
    """
    `second` after `first`.
    """
    if first.target != second.source:
        raise TreeGradeInputError("maps are not composable")
    return GradedMap(
        first.source,
        first.source_grading,
        second.target,
        second.target_grading,
        {v: second(first(v)) for v in first.source.vertices},
        {e: second.map_path(path) for e, path in first.edge_map.items()},
    )


@dataclass
class GradePreservingReport(object):
    """
    Outcome of `check_grade_preserving`.

    Attributes
    ----------
    ok : bool
        Whether every piece maps into a single target piece.
    assignment : dict
        Source piece id -> target piece id.
    injective : bool
        Whether no two pieces are mapped into the same target piece.
    witness : Any
        Offending piece id (or pair of piece ids for non-injectivity).
    message : str
        Description of the first violation.
    """

    ok: bool
    assignment: Dict[PieceId, PieceId] = field(default_factory=dict)
    injective: bool = False
    witness: Any = None
    message: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "assignment": {str(k): v for k, v in sorted(self.assignment.items())},
            "injective": self.injective,
            "witness": self.witness,
            "message": self.message,
        }


def piece_image(f: GradedMap, piece_id: PieceId) -> Set[Vertex]:
    piece = f.source_grading.piece(piece_id)
    image = {f(v) for v in piece.vertices}
    for edge_id in piece.edges:
        image.update(f.edge_image_vertices(edge_id))
    return image


def check_grade_preserving(f: GradedMap) -> GradePreservingReport:
    """
    Check that every piece is mapped into one piece of the target.

    Parameters
    ----------
    f : GradedMap
        The map.

    Returns
    -------
    report : GradePreservingReport
        The piece assignment and whether it is injective.
    """
    assignment: Dict[PieceId, PieceId] = {}
    for piece in f.source_grading.pieces:
        owners = {f.target_grading.piece_of_vertex(v) for v in piece_image(f, piece.id)}
        if len(owners) != 1 or None in owners:
            return GradePreservingReport(
                ok=False,
                witness=piece.id,
                message=f"piece {piece.id} is not mapped into a single target piece",
            )
        assignment[piece.id] = owners.pop()

    seen: Dict[PieceId, PieceId] = {}
    for source_id, target_id in assignment.items():
        if target_id in seen:
            return GradePreservingReport(
                ok=True,
                assignment=assignment,
                injective=False,
                witness=[seen[target_id], source_id],
                message=f"pieces {seen[target_id]} and {source_id} map into piece {target_id}",
            )
        seen[target_id] = source_id
    return GradePreservingReport(ok=True, assignment=assignment, injective=True)


def require_grade_preserving(f: GradedMap) -> GradePreservingReport:
    report = check_grade_preserving(f)
    if not report.ok:
        raise TreeGradePreconditionError(
            f"map is not grade-preserving: {report.message}", witness=report.witness
        )
    return report


def induced_tree_map(f: GradedMap) -> VertexMap:
    """
    The map of parameterization trees commuting with `f`.

    Parameters
    ----------
    f : GradedMap
        A grade-preserving map.

    Returns
    -------
    g : dict
        Vertex map of trees with `g(q1(x)) = q2(f(x))` for every vertex x.
    """
    require_grade_preserving(f)
    q1 = parameterize(f.source, f.source_grading)
    q2 = parameterize(f.target, f.target_grading)
    g: VertexMap = {}
    for vertex in f.source.vertices:
        key = q1.q[vertex]
        value = q2.q[f(vertex)]
        if g.setdefault(key, value) != value:
            raise TreeGradeInternalError(
                f"tree map is not well defined at {key!r}: {g[key]!r} and {value!r}"
            )
    for vertex in q1.piece_vertices:
        if g[vertex] not in q2.piece_vertices:
            raise TreeGradeInternalError(f"piece vertex {vertex!r} maps off the piece vertices")
    return g


@dataclass
class TreePortionReport(object):
    """
    Outcome of `check_tree_portion_preserving`.
    """

    injective: bool
    tree_preserving: bool
    witness: Optional[Any] = None

    @property
    def ok(self) -> bool:
        return self.injective and self.tree_preserving


def check_tree_portion_preserving(f: GradedMap) -> TreePortionReport:
    """
    Check injectivity on vertices and that the tree-portion maps into the
    tree-portion.
    """
    images: Dict[Vertex, Vertex] = {}
    for vertex in f.source.vertices:
        image = f(vertex)
        if image in images:
            return TreePortionReport(False, False, witness=[images[image], vertex])
        images[image] = vertex

    target_pieces = f.target_grading.piece_vertices
    for vertex in f.source_grading.free_vertices(f.source):
        if f(vertex) in target_pieces:
            return TreePortionReport(True, False, witness=vertex)
    for edge_id in f.source_grading.tree_edges(f.source):
        for step in f.edge_map[edge_id].steps:
            if f.target_grading.piece_of_edge(step.edge) is not None:
                return TreePortionReport(True, False, witness=edge_id)
    return TreePortionReport(True, True)


if __name__ == "__main__":  # pragma: no cover
    pass
