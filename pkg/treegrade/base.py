#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
A graph together with its tree-grading.
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Any, Dict, Iterable, Optional

from treegrade.covers.ball import DEFAULT_RADIUS, CoverBall
from treegrade.grading.parameterization import Parameterization, parameterize
from treegrade.grading.pieces import GradingReport, TreeGrading, canonical_grading, validate_grading
from treegrade.graph.algorithms import cycle_rank
from treegrade.graph.weighted import EdgePath, WeightedGraph
from treegrade.homotopy.loops import EssentialResult, PhiSequence, is_essential, phi
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.quotient.metric import MetricQuotient, metric_quotient
from treegrade.quotient.retraction import Retraction, piece_retraction
from treegrade.utils.typing import PieceId, Vertex

logger = logging.getLogger(__name__)


class GradedSpace(object):
    """
    A graph with a tree-grading.

    Derived structures (validation report, parameterization, spanning
    structure) are computed on first use and cached.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading, optional
        Its grading. Defaults to the canonical grading.
    """

    def __init__(self, graph: WeightedGraph, grading: Optional[TreeGrading] = None) -> None:
        self.graph: WeightedGraph = graph
        self.grading: TreeGrading = canonical_grading(graph) if grading is None else grading

    def __repr__(self) -> str:
        return (
            f"GradedSpace(n_vertices={self.graph.n_vertices}, "
            f"n_edges={self.graph.n_edges}, n_pieces={len(self.grading)})"
        )

    @cached_property
    def report(self) -> GradingReport:
        return validate_grading(self.graph, self.grading)

    @property
    def is_valid(self) -> bool:
        return self.report.ok

    @cached_property
    def parameterization(self) -> Parameterization:
        return parameterize(self.graph, self.grading)

    @cached_property
    def structure(self) -> SpanningStructure:
        return SpanningStructure(self.graph, self.grading)

    @property
    def rank(self) -> int:
        return cycle_rank(self.graph)

    def piece_ranks(self) -> Dict[PieceId, int]:
        return {
            piece.id: len(self.structure.piece_generators(piece.id))
            for piece in self.grading.pieces
        }

    def quotient(self, keep: Iterable[PieceId]) -> MetricQuotient:
        return metric_quotient(self.graph, self.grading, keep)

    def retraction(self, piece_id: PieceId) -> Retraction:
        return piece_retraction(self.graph, self.grading, piece_id)

    def is_essential(self, loop: EdgePath, base: Optional[Vertex] = None) -> EssentialResult:
        return is_essential(self.graph, self.grading, loop, base=base, structure=self.structure)

    def phi(
        self,
        loop: EdgePath,
        filtration: Iterable[Iterable[PieceId]],
        base: Optional[Vertex] = None,
    ) -> PhiSequence:
        return phi(self.graph, self.grading, loop, filtration, base)

    def cover_ball(self, base: Vertex, radius: int = DEFAULT_RADIUS) -> CoverBall:
        return CoverBall(self.graph, self.structure, base, radius)

    def summary(self) -> Dict[str, Any]:
        return {
            "n_vertices": self.graph.n_vertices,
            "n_edges": self.graph.n_edges,
            "n_pieces": len(self.grading),
            "cycle_rank": self.rank,
        }


if __name__ == "__main__":  # pragma: no cover
    pass
