#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Collapsing the wire of a string-light graph.

In a string-light graph every non-degenerate piece touches the rest of the
graph at one attachment vertex. Collapsing the complementary tree (the
wire) to a point gives the wedge of the pieces.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Union

import numpy as np

from treegrade.grading.pieces import TreeGrading, canonical_grading, require_valid
from treegrade.graph.weighted import Edge, EdgePath, Traversal, WeightedGraph
from treegrade.homotopy.loops import is_essential, oracle_is_essential
from treegrade.homotopy.sampling import DEFAULT_LOOP_LENGTH, LoopSampler
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.maps.graded import GradedMap
from treegrade.maps.injectivity import DEFAULT_SAMPLES
from treegrade.quotient.retraction import Retraction, piece_retraction
from treegrade.utils.misc import (
    TreeGradeInternalError,
    TreeGradePreconditionError,
    ensure_rng,
)
from treegrade.utils.typing import PieceId, Vertex, VertexMap

logger = logging.getLogger(__name__)

WEDGE_POINT: str = "w0"


@dataclass(frozen=True)
class WireCollapse(object):
    """
    Result of `string_light_collapse`.

    Attributes
    ----------
    wedge : WeightedGraph
        The wedge Y of the non-degenerate pieces at `w0`.
    map : GradedMap
        The collapse X -> Y (Y carries its canonical grading).
    attachments : dict
        Non-degenerate piece id -> attachment vertex.
    wire : WeightedGraph
        The wire of X.
    sampled : int
        Number of sampled essential loops that stayed essential.
    """

    wedge: WeightedGraph
    map: GradedMap
    attachments: Dict[PieceId, Vertex]
    wire: WeightedGraph
    sampled: int

    def report(self) -> Dict[str, Any]:
        return {
            "attachments": {str(k): v for k, v in sorted(self.attachments.items())},
            "wire_edges": sorted(self.wire.edge_ids),
            "sampled": self.sampled,
        }


def attachment_points(graph: WeightedGraph, grading: TreeGrading) -> Dict[PieceId, Vertex]:
    """
    The attachment vertex of every non-degenerate piece.

    Raises
    ------
    TreeGradePreconditionError
        If a piece touches the rest of the graph at more than one vertex.
    """
    attachments: Dict[PieceId, Vertex] = {}
    for piece in grading.nondegenerate:
        touching = set()
        for vertex in piece.vertices:
            for step in graph.incident(vertex):
                if step.edge not in piece.edges:
                    touching.add(vertex)
        if len(touching) > 1:
            raise TreeGradePreconditionError(
                f"piece {piece.id} is attached at more than one vertex", witness=piece.id
            )
        attachments[piece.id] = touching.pop() if touching else piece.smallest_vertex
    return attachments


def wire_subgraph(
    graph: WeightedGraph, grading: TreeGrading, attachments: Dict[PieceId, Vertex]
) -> WeightedGraph:
    interior = set()
    piece_edges = set()
    for piece in grading.nondegenerate:
        interior |= piece.vertices - {attachments[piece.id]}
        piece_edges |= piece.edges
    vertices = [v for v in graph.vertices if v not in interior]
    edges = [e.id for e in graph.edges if e.id not in piece_edges]
    return graph.subgraph(edges, vertices, connected=True)


def retraction_factors(collapse: GradedMap, r: Retraction) -> bool:
    """
    Whether `r` factors through `collapse`.

    Vertices with one image under `collapse` must have one image under `r`,
    and every edge must be sent by `r` to the steps of its collapsed image
    that run along the subgraph of `r`.
    """
    induced: Dict[Vertex, Vertex] = {}
    for vertex in collapse.source.vertices:
        image = collapse(vertex)
        if induced.setdefault(image, r(vertex)) != r(vertex):
            return False
    for edge in collapse.source.edges:
        path = EdgePath(edge.u, (Traversal(edge.id, True),))
        kept = tuple(s for s in collapse.edge_map[edge.id].steps if r.sub.has_edge(s.edge))
        if r.apply_path(path).steps != kept:
            return False
    return True


def string_light_collapse(
    graph: WeightedGraph,
    grading: TreeGrading,
    samples: int = DEFAULT_SAMPLES,
    max_length: int = DEFAULT_LOOP_LENGTH,
    seed: Union[int, np.random.RandomState] = 1984,
) -> WireCollapse:
    """
    Collapse the wire of a string-light graph to the wedge point `w0`.

    The factoring retractions are checked: the retraction onto every piece
    must be constant on the wire and on the other pieces, so that it factors
    through the collapse. Injectivity on fundamental groups is then checked
    on sampled essential loops.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        A valid string-light grading.
    samples : int
        Number of essential loops to sample.
    max_length : int
        Length bound of sampled loops.
    seed : int or np.random.RandomState
        Sampler seed.

    Returns
    -------
    collapse : WireCollapse
        The wedge, the collapse map and its certificates.
    """
    require_valid(graph, grading)
    attachments = attachment_points(graph, grading)
    wire = wire_subgraph(graph, grading, attachments)

    vertex_map: VertexMap = {v: WEDGE_POINT for v in wire.vertices}
    wedge_vertices = {WEDGE_POINT}
    wedge_edges = []
    for piece in grading.nondegenerate:
        for vertex in piece.vertices:
            if vertex != attachments[piece.id]:
                if vertex == WEDGE_POINT:
                    raise TreeGradePreconditionError(
                        f"vertex name {WEDGE_POINT!r} is reserved for the wedge point"
                    )
                vertex_map[vertex] = vertex
                wedge_vertices.add(vertex)
        for edge_id in sorted(piece.edges):
            edge = graph.edge(edge_id)
            wedge_edges.append(Edge(edge.id, vertex_map[edge.u], vertex_map[edge.v], edge.length))
    wedge = WeightedGraph(wedge_vertices, wedge_edges)

    edge_map = {}
    for edge in graph.edges:
        if edge.id in wire.edge_ids:
            edge_map[edge.id] = EdgePath(WEDGE_POINT)
        else:
            edge_map[edge.id] = EdgePath(vertex_map[edge.u], (Traversal(edge.id, True),))
    wedge_grading = canonical_grading(wedge)
    collapse = GradedMap(graph, grading, wedge, wedge_grading, vertex_map, edge_map)

    for piece_id in attachments:
        if not retraction_factors(collapse, piece_retraction(graph, grading, piece_id)):
            raise TreeGradeInternalError(
                f"retraction onto piece {piece_id} does not factor through the collapse"
            )

    source_structure = SpanningStructure(graph, grading)
    sampler = LoopSampler(graph, max_length=max_length, seed=ensure_rng(seed))
    essential = sampler.sample_where(
        lambda loop: is_essential(
            graph, grading, loop, structure=source_structure, verify=False
        ).essential,
        samples,
    )
    for loop in essential:
        image = collapse.map_path(loop)
        if not oracle_is_essential(wedge, image):
            raise TreeGradeInternalError(
                f"essential loop {loop} maps to the inessential loop {image}"
            )

    logger.debug(
        "collapsed a wire of %d edges onto a wedge of %d pieces",
        wire.n_edges,
        len(attachments),
    )
    return WireCollapse(
        wedge=wedge,
        map=collapse,
        attachments=attachments,
        wire=wire,
        sampled=len(essential),
    )


if __name__ == "__main__":  # pragma: no cover
    pass
