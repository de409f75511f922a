#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Spanning trees adapted to a grading and the generators they induce.

The global spanning tree is the union of a spanning tree of every piece and
the whole tree-portion. Each edge outside it is a generator of the
fundamental group and belongs to exactly one piece.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List

import networkx as nx

from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import EdgePath, Traversal, WeightedGraph
from treegrade.utils.misc import TreeGradeInternalError
from treegrade.utils.typing import EdgeId, PieceId, Vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator(object):
    """
    A generator of the fundamental group.

    Traversing `edge` forwards reads the generator with exponent +1.

    Attributes
    ----------
    edge : int
        The non-tree edge.
    piece : int
        Id of the piece owning the edge.
    index : int
        Position among the generators of that piece (from 1).
    """

    edge: EdgeId
    piece: PieceId
    index: int

    @property
    def name(self) -> str:
        return f"g{self.edge}"


class SpanningStructure(object):
    """
    Spanning forest data of a graded graph.

    Parameters
    ----------
    graph : WeightedGraph
        A connected graph.
    grading : TreeGrading
        A valid grading of `graph`.

    Attributes
    ----------
    piece_trees : dict
        Piece id -> edge ids of its spanning tree (Kruskal, ties broken by
        ascending edge id).
    forest : frozenset of int
        Tree-portion edge ids.
    tree : frozenset of int
        Edge ids of the global spanning tree.
    generators : dict
        Non-tree edge id -> Generator.
    """

    graph: WeightedGraph
    grading: TreeGrading
    piece_trees: Dict[PieceId, FrozenSet[EdgeId]]
    forest: FrozenSet[EdgeId]
    tree: FrozenSet[EdgeId]
    generators: Dict[EdgeId, Generator]

    def __init__(self, graph: WeightedGraph, grading: TreeGrading) -> None:
        self.graph = graph
        self.grading = grading
        self.piece_trees = {}
        for piece in grading.pieces:
            sub = nx.MultiGraph()
            sub.add_nodes_from(piece.vertices)
            for edge_id in sorted(piece.edges):
                edge = graph.edge(edge_id)
                sub.add_edge(edge.u, edge.v, key=edge_id, order=edge_id)
            self.piece_trees[piece.id] = frozenset(
                key
                for _, _, key in nx.minimum_spanning_edges(
                    sub, algorithm="kruskal", weight="order", keys=True, data=False
                )
            )
        self.forest = grading.tree_edges(graph)
        tree = set(self.forest)
        for edges in self.piece_trees.values():
            tree |= edges
        self.tree = frozenset(tree)
        if len(self.tree) != graph.n_vertices - 1:
            raise TreeGradeInternalError(
                f"spanning structure has {len(self.tree)} edges for {graph.n_vertices} vertices"
            )

        self.generators = {}
        counts: Dict[PieceId, int] = {}
        for edge_id in graph.edge_ids:
            if edge_id in self.tree:
                continue
            owner = grading.piece_of_edge(edge_id)
            if owner is None:
                raise TreeGradeInternalError(f"non-tree edge {edge_id} lies in no piece")
            counts[owner] = counts.get(owner, 0) + 1
            self.generators[edge_id] = Generator(edge=edge_id, piece=owner, index=counts[owner])

        self._tree_graph = nx.Graph()
        self._tree_graph.add_nodes_from(graph.vertices)
        for edge_id in self.tree:
            edge = graph.edge(edge_id)
            self._tree_graph.add_edge(edge.u, edge.v, id=edge_id)
        logger.debug(
            "spanning structure: %d tree edges, %d generators",
            len(self.tree),
            len(self.generators),
        )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def piece_generators(self, piece_id: PieceId) -> List[Generator]:
        return [g for g in self.generators.values() if g.piece == piece_id]

    def owner(self, edge_id: EdgeId) -> PieceId:
        return self.generators[edge_id].piece

    def is_generator(self, edge_id: EdgeId) -> bool:
        return edge_id in self.generators

    def tree_path(self, u: Vertex, v: Vertex) -> EdgePath:
        """
        The unique path from `u` to `v` inside the spanning tree.
        """
        self.graph.check_vertex(u)
        self.graph.check_vertex(v)
        vertices = nx.shortest_path(self._tree_graph, u, v)
        steps = []
        for a, b in zip(vertices, vertices[1:]):
            edge = self.graph.edge(self._tree_graph[a][b]["id"])
            steps.append(Traversal(edge.id, edge.u == a))
        return EdgePath(start=u, steps=tuple(steps))

    def generator_loop(self, edge_id: EdgeId, base: Vertex) -> EdgePath:
        """
        The based loop representing a generator: in-tree path to the tail,
        the edge, in-tree path back.
        """
        edge = self.graph.edge(edge_id)
        out = self.tree_path(base, edge.u)
        back = self.tree_path(edge.v, base)
        return out.concat(EdgePath(edge.u, (Traversal(edge_id, True),))).concat(back)


def spanning_structure(graph: WeightedGraph, grading: TreeGrading) -> SpanningStructure:
    return SpanningStructure(graph, grading)


if __name__ == "__main__":  # pragma: no cover
    pass
