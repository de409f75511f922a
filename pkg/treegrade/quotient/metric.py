#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Metric quotients collapsing a family of pieces.

The quotient keeping the pieces `Q` is the graph obtained by contracting
every other piece `P` to the vertex `y<P>`. Kept pieces keep their ids and
edge ids; collapsed pieces become degenerate pieces with the same id, so
that the quotient is again a graded graph and quotients can be chained.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set

from treegrade.grading.pieces import Piece, TreeGrading, require_valid
from treegrade.graph.weighted import EdgePath, WeightedGraph
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradeInternalError,
    piece_vertex_name,
    sorted_vertices,
)
from treegrade.utils.typing import PieceId, Vertex, VertexMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricQuotient(object):
    """
    The collapse map from a graded graph onto one of its metric quotients.

    Attributes
    ----------
    source : WeightedGraph
        The graph X.
    source_grading : TreeGrading
        Its grading.
    keep : frozenset of int
        Ids of the pieces that survive.
    target : WeightedGraph
        The quotient graph X_Q.
    target_grading : TreeGrading
        Kept pieces plus one degenerate piece per collapsed piece.
    gamma : dict
        The collapse map on vertices.
    registry : dict
        Collapsed piece id -> its vertex in X_Q.
    """

    source: WeightedGraph
    source_grading: TreeGrading
    keep: FrozenSet[PieceId]
    target: WeightedGraph
    target_grading: TreeGrading
    gamma: VertexMap
    registry: Dict[PieceId, Vertex]

    def __call__(self, vertex: Vertex) -> Vertex:
        try:
            return self.gamma[vertex]
        except KeyError:
            raise TreeGradeInputError(f"unknown vertex {vertex!r}")

    @property
    def collapsed(self) -> FrozenSet[PieceId]:
        return frozenset(self.registry)

    @property
    def collapsed_edges(self) -> FrozenSet[int]:
        return frozenset(
            e for pid in self.registry for e in self.source_grading.piece(pid).edges
        )

    def fibers(self) -> List[FrozenSet[Vertex]]:
        """
        The partition of the source vertices into fibers of the collapse.
        """
        classes: Dict[Vertex, Set[Vertex]] = {}
        for vertex in self.source.vertices:
            classes.setdefault(self.gamma[vertex], set()).add(vertex)
        return [frozenset(classes[y]) for y in sorted_vertices(classes)]

    def project_path(self, path: EdgePath) -> EdgePath:
        """
        The image of a path: steps through collapsed pieces are dropped,
        all other steps keep their edge and orientation.
        """
        self.source.path_vertices(path)
        dropped = self.collapsed_edges
        steps = tuple(s for s in path.steps if s.edge not in dropped)
        projected = EdgePath(start=self(path.start), steps=steps)
        self.target.path_vertices(projected)
        return projected

    def factor(self, vertex_map: Mapping[Vertex, Vertex]) -> VertexMap:
        """
        Factor a vertex map that is constant on every fiber through the
        collapse.

        Returns
        -------
        induced : dict
            The map `h` on quotient vertices with `h(gamma(v)) = vertex_map[v]`.
        """
        induced: VertexMap = {}
        for vertex in self.source.vertices:
            image = self.gamma[vertex]
            value = vertex_map[vertex]
            if image in induced and induced[image] != value:
                raise TreeGradeInputError(
                    f"map is not constant on the fiber over {image!r}"
                )
            induced[image] = value
        return induced

    def is_non_expansive(self) -> bool:
        return all(
            self.target.distance(self.gamma[u], self.gamma[v]) <= self.source.distance(u, v)
            for u, v in itertools.combinations(self.source.vertices, 2)
        )


def metric_quotient(
    graph: WeightedGraph,
    grading: TreeGrading,
    keep: Iterable[PieceId],
) -> MetricQuotient:
    """
    Collapse every piece outside `keep`.

    Parameters
    ----------
    graph : WeightedGraph
        A graph.
    grading : TreeGrading
        A valid grading of `graph`.
    keep : iterable of int
        Ids of the pieces to keep.

    Returns
    -------
    quotient : MetricQuotient
        The quotient and its collapse map.
    """
    require_valid(graph, grading)
    keep_ids = grading.check_piece_ids(keep)

    collapsed = [p for p in grading.pieces if p.id not in keep_ids]
    registry = {p.id: piece_vertex_name(p.id) for p in collapsed}
    groups = {registry[p.id]: p.vertices for p in collapsed}
    target, gamma = graph.contract(groups)

    for edge in target.edges:
        if edge.is_loop and not graph.edge(edge.id).is_loop:
            raise TreeGradeInternalError(f"collapsing created a self-loop from edge {edge.id}")

    pieces = [p for p in grading.pieces if p.id in keep_ids]
    pieces.extend(Piece.point(pid, vertex) for pid, vertex in registry.items())
    target_grading = TreeGrading(pieces)

    logger.debug(
        "quotient keeping %s: %d -> %d vertices",
        sorted(keep_ids),
        graph.n_vertices,
        target.n_vertices,
    )
    return MetricQuotient(
        source=graph,
        source_grading=grading,
        keep=keep_ids,
        target=target,
        target_grading=target_grading,
        gamma=gamma,
        registry=registry,
    )


def bonding_map(quotient: MetricQuotient, keep: Iterable[PieceId]) -> MetricQuotient:
    """
    The induced collapse from X_Q onto X_R for `R` a subset of `Q`.

    Its composition with the collapse onto X_Q is the collapse onto X_R.
    """
    keep_ids = frozenset(keep)
    if not keep_ids <= quotient.keep:
        raise TreeGradeInputError(
            f"pieces {sorted(keep_ids - quotient.keep)} are not kept by the quotient"
        )
    return metric_quotient(quotient.target, quotient.target_grading, keep_ids)


def compose_vertex_maps(first: Mapping[Vertex, Vertex], second: Mapping[Vertex, Vertex]) -> VertexMap:
    """
    `second` after `first`.
    """
    return {vertex: second[image] for vertex, image in first.items()}


def chain_pseudometric_oracle(
    graph: WeightedGraph,
    partition: Sequence[Iterable[Vertex]],
    a: Vertex,
    b: Vertex,
    max_chain: Optional[int] = None,
) -> Fraction:
    """
    Quotient pseudometric by exhaustive search over chains.

    The value is the minimum of `d(a_1, b_1) + ... + d(a_n, b_n)` over all
    chains with `a_1 ~ a`, `b_i ~ a_(i+1)` and `b_n ~ b`, where `~` is the
    partition. An optimal chain enters every class at most once, so the
    search runs over sequences of distinct classes.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    partition : sequence of vertex sets
        The identification; vertices missing from it are singletons.
    a, b : Vertex
        Representatives of the two classes.
    max_chain : int, optional
        Bound on the number of chain links (defaults to the number of
        classes).

    Returns
    -------
    rho : Fraction
        The exact infimum.
    """
    graph.check_vertex(a)
    graph.check_vertex(b)
    classes: List[FrozenSet[Vertex]] = []
    seen: Set[Vertex] = set()
    for block in partition:
        block = frozenset(block)
        for vertex in block:
            graph.check_vertex(vertex)
            if vertex in seen:
                raise TreeGradeInputError(f"vertex {vertex!r} is in two classes")
        seen |= block
        if block:
            classes.append(block)
    classes.extend(frozenset((v,)) for v in graph.vertices if v not in seen)

    class_of = {v: i for i, block in enumerate(classes) for v in block}
    first, last = class_of[a], class_of[b]
    if first == last:
        return Fraction(0)

    # cheapest single link between two classes
    link = [
        [
            min(graph.distance(x, y) for x in classes[i] for y in classes[j])
            for j in range(len(classes))
        ]
        for i in range(len(classes))
    ]

    if max_chain is None:
        max_chain = len(classes)
    middle = [i for i in range(len(classes)) if i not in (first, last)]
    best = link[first][last]
    for n_between in range(1, min(len(middle), max_chain - 1) + 1):
        for route in itertools.permutations(middle, n_between):
            total = link[first][route[0]]
            for i, j in zip(route, route[1:]):
                total += link[i][j]
                if total >= best:
                    break
            else:
                total += link[route[-1]][last]
                if total < best:
                    best = total
    return best


if __name__ == "__main__":  # pragma: no cover
    pass
