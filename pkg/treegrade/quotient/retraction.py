#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Canonical retractions onto closed connected subgraphs.

Every component of the complement of Y is attached to Y at a single vertex
and is mapped onto it.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

import networkx as nx

from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import EdgePath, WeightedGraph
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradePreconditionError,
    sorted_vertices,
)
from treegrade.utils.typing import PieceId, Vertex, VertexMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Retraction(object):
    """
    A retraction of a graph onto a subgraph.

    Attributes
    ----------
    graph : WeightedGraph
        The graph X.
    sub : WeightedGraph
        The subgraph Y.
    r : dict
        The retraction on vertices.
    components : list of frozenset
        Vertex sets of the components of X minus Y.
    """

    graph: WeightedGraph
    sub: WeightedGraph
    r: VertexMap
    components: Tuple[FrozenSet[Vertex], ...]

    def __call__(self, vertex: Vertex) -> Vertex:
        try:
            return self.r[vertex]
        except KeyError:
            raise TreeGradeInputError(f"unknown vertex {vertex!r}")

    def apply_path(self, path: EdgePath) -> EdgePath:
        """
        The image of `path`: steps along edges of Y are kept, every other
        step collapses to its attachment vertex.
        """
        self.graph.path_vertices(path)
        steps = tuple(s for s in path.steps if self.sub.has_edge(s.edge))
        image = EdgePath(start=self(path.start), steps=steps)
        self.sub.path_vertices(image)
        return image

    def is_idempotent(self) -> bool:
        return all(self.r[self.r[v]] == self.r[v] for v in self.graph.vertices)

    def is_non_expansive(self) -> bool:
        return all(
            self.sub.distance(self.r[u], self.r[v]) <= self.graph.distance(u, v)
            for u, v in itertools.combinations(self.graph.vertices, 2)
        )


def complement_components(
    graph: WeightedGraph, sub: WeightedGraph
) -> List[Tuple[FrozenSet[Vertex], FrozenSet[Vertex]]]:
    """
    Components of X minus Y with their attachment vertices.

    An edge outside Y with both endpoints in Y is a component without
    vertices and two attachment points (one for a self-loop).

    Returns
    -------
    components : list of (vertices, attachments)
        In ascending order of the first edge id met.
    """
    incidence = nx.Graph()
    for vertex in graph.vertices:
        if not sub.has_vertex(vertex):
            incidence.add_node(("v", vertex))
    for edge in graph.edges:
        if sub.has_edge(edge.id):
            continue
        incidence.add_node(("e", edge.id))
        for end in (edge.u, edge.v):
            if not sub.has_vertex(end):
                incidence.add_edge(("e", edge.id), ("v", end))

    components = []
    for nodes in nx.connected_components(incidence):
        vertices = frozenset(x for kind, x in nodes if kind == "v")
        attachments = set()
        for kind, x in nodes:
            if kind == "e":
                edge = graph.edge(x)
                attachments.update(end for end in (edge.u, edge.v) if sub.has_vertex(end))
        edge_ids = sorted(x for kind, x in nodes if kind == "e")
        order = edge_ids[0] if edge_ids else -1
        components.append((order, vertices, frozenset(attachments)))
    components.sort(key=lambda item: item[0])
    return [(vertices, attachments) for _, vertices, attachments in components]


def check_retraction_hypothesis(
    graph: WeightedGraph, grading: TreeGrading, sub: WeightedGraph
) -> None:
    """
    Every piece must meet Y in a single vertex or be contained in Y.
    """
    for piece in grading.pieces:
        vertices = {v for v in piece.vertices if sub.has_vertex(v)}
        if len(vertices) <= 1:
            continue
        inside = vertices == set(piece.vertices) and all(
            sub.has_edge(e) for e in piece.edges
        )
        if not inside:
            raise TreeGradePreconditionError(
                f"piece {piece.id} meets the subgraph in a proper subset of more than one vertex",
                witness=piece.id,
            )


def retraction(graph: WeightedGraph, grading: TreeGrading, sub: WeightedGraph) -> Retraction:
    """
    The canonical retraction onto a connected subgraph.

    Parameters
    ----------
    graph : WeightedGraph
        The graph X.
    grading : TreeGrading
        Its grading.
    sub : WeightedGraph
        A connected subgraph Y such that every piece meets Y in at most one
        vertex or lies in Y.

    Returns
    -------
    retraction : Retraction
        The retraction.

    Raises
    ------
    TreeGradePreconditionError
        If a piece meets Y badly or a complement component has several
        attachment vertices.
    """
    for vertex in sub.vertices:
        graph.check_vertex(vertex)
    for edge in sub.edges:
        if not graph.has_edge(edge.id) or graph.edge(edge.id) != edge:
            raise TreeGradeInputError(f"edge {edge.id} of the subgraph is not an edge of the graph")
    if not sub.is_connected():
        raise TreeGradeInputError("retractions need a connected subgraph")
    check_retraction_hypothesis(graph, grading, sub)

    r: VertexMap = {v: v for v in sub.vertices}
    components = []
    for vertices, attachments in complement_components(graph, sub):
        if len(attachments) != 1:
            raise TreeGradePreconditionError(
                "a component of the complement is attached at more than one vertex",
                witness=sorted_vertices(attachments),
            )
        (attachment,) = attachments
        for vertex in vertices:
            r[vertex] = attachment
        if vertices:
            components.append(vertices)

    logger.debug("retraction onto %d vertices, %d components", sub.n_vertices, len(components))
    return Retraction(graph=graph, sub=sub, r=r, components=tuple(components))


def piece_subgraph(graph: WeightedGraph, grading: TreeGrading, piece_id: PieceId) -> WeightedGraph:
    piece = grading.piece(piece_id)
    return graph.subgraph(piece.edges, piece.vertices, connected=True)


def piece_retraction(graph: WeightedGraph, grading: TreeGrading, piece_id: PieceId) -> Retraction:
    """
    The retraction onto a single piece.
    """
    return retraction(graph, grading, piece_subgraph(graph, grading, piece_id))


def separation_points(
    graph: WeightedGraph,
    grading: TreeGrading,
    first: WeightedGraph,
    second: WeightedGraph,
) -> Tuple[Vertex, Vertex]:
    """
    The points through which every path from `first` to `second` passes.

    Returns
    -------
    points : tuple
        `(r1(second), r2(first))` where `r1`, `r2` are the retractions onto
        `first` and `second`.
    """
    if set(first.vertices) & set(second.vertices):
        raise TreeGradeInputError("subgraphs must be disjoint")
    r1 = retraction(graph, grading, first)
    r2 = retraction(graph, grading, second)
    on_first = {r1(v) for v in second.vertices}
    on_second = {r2(v) for v in first.vertices}
    for image in (on_first, on_second):
        if len(image) != 1:
            raise TreeGradePreconditionError(
                "one subgraph does not retract to a single point of the other",
                witness=sorted_vertices(image),
            )
    return on_first.pop(), on_second.pop()


if __name__ == "__main__":  # pragma: no cover
    pass
