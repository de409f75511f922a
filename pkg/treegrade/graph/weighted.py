#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Exact-arithmetic weighted multigraphs and combinatorial paths.

A `WeightedGraph` is the ambient space of every construction in this
package: the vertex set equipped with the length (shortest-path) metric,
where every edge carries a positive `Fraction` length. Interior points of
edges are not modelled.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from treegrade.utils.misc import (
    TreeGradeInputError,
    parse_rational,
    sorted_vertices,
    vertex_sort_key,
)
from treegrade.utils.typing import EdgeId, Vertex, VertexMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge(object):
    """
    An edge of a weighted multigraph.

    Parameters
    ----------
    id : int
        Edge id (unique within a graph).
    u, v : Vertex
        Endpoints. `u == v` denotes a self-loop. Traversing the edge
        from `u` to `v` is the forward orientation.
    length : Fraction
        Positive edge length.
    """

    id: EdgeId
    u: Vertex
    v: Vertex
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, vertex: Vertex) -> Vertex:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise TreeGradeInputError(f"vertex {vertex!r} is not an endpoint of edge {self.id}")


@dataclass(frozen=True)
class Traversal(object):
    """
    A directed traversal of an edge.

    Parameters
    ----------
    edge : int
        Edge id.
    forward : bool
        True when the edge is traversed from `u` to `v`.
    """

    edge: EdgeId
    forward: bool = True

    def reversed(self) -> Traversal:
        return Traversal(self.edge, not self.forward)

    def token(self) -> Union[int, str]:
        """
        Serialized form: the edge id for a forward traversal,
        `"~<id>"` for a backward one.
        """
        return self.edge if self.forward else f"~{self.edge}"

    def __str__(self) -> str:
        return str(self.token())


@dataclass(frozen=True)
class EdgePath(object):
    """
    A combinatorial path: a start vertex and a sequence of traversals.

    The empty sequence is the constant path at `start`. Endpoint
    compatibility is checked against a graph by
    `WeightedGraph.path_vertices`.
    """

    start: Vertex
    steps: Tuple[Traversal, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Traversal]:
        return iter(self.steps)

    @property
    def is_constant(self) -> bool:
        return len(self.steps) == 0

    def edges(self) -> List[EdgeId]:
        return [step.edge for step in self.steps]

    def tokens(self) -> List[Union[int, str]]:
        return [step.token() for step in self.steps]

    def vertices(self, graph: WeightedGraph) -> List[Vertex]:
        return graph.path_vertices(self)

    def end(self, graph: WeightedGraph) -> Vertex:
        return graph.path_vertices(self)[-1]

    def reversed(self, graph: WeightedGraph) -> EdgePath:
        return EdgePath(
            start=self.end(graph),
            steps=tuple(step.reversed() for step in reversed(self.steps)),
        )

    def concat(self, other: EdgePath) -> EdgePath:
        """
        Concatenation. The caller is responsible for `other.start`
        being the end vertex of this path.
        """
        return EdgePath(start=self.start, steps=self.steps + other.steps)

    def __str__(self) -> str:
        return f"{self.start}:" + ",".join(str(s) for s in self.steps)

    @classmethod
    def from_tokens(
        cls,
        graph: WeightedGraph,
        start: Vertex,
        tokens: Iterable[Union[int, str]],
    ) -> EdgePath:
        """
        Build a path from edge tokens.

        A plain edge id is traversed away from the current vertex (forward
        for self-loops); `"~<id>"` forces the backward orientation.

        Parameters
        ----------
        graph : WeightedGraph
            The graph the path lives in.
        start : Vertex
            Start vertex.
        tokens : iterable of int or str
            Edge tokens.

        Returns
        -------
        path : EdgePath
            The validated path.
        """
        graph.check_vertex(start)
        current = start
        steps = []
        for token in tokens:
            forced_backward = False
            if isinstance(token, str):
                text = token.strip()
                if text.startswith("~"):
                    forced_backward = True
                    text = text[1:]
                try:
                    edge_id = int(text)
                except ValueError:
                    raise TreeGradeInputError(f"invalid edge token {token!r}")
            else:
                edge_id = int(token)
            edge = graph.edge(edge_id)
            if forced_backward:
                if edge.v != current:
                    raise TreeGradeInputError(
                        f"edge {edge_id} cannot be traversed backwards from {current!r}"
                    )
                step = Traversal(edge_id, False)
            elif edge.u == current:
                step = Traversal(edge_id, True)
            elif edge.v == current:
                step = Traversal(edge_id, False)
            else:
                raise TreeGradeInputError(
                    f"edge {edge_id} is not incident to {current!r}"
                )
            steps.append(step)
            current = graph.traverse(current, step)
        return cls(start=start, steps=tuple(steps))


class EdgeLoop(EdgePath):
    """
    An `EdgePath` whose end vertex equals its start vertex.
    """

    @classmethod
    def close(cls, graph: WeightedGraph, path: EdgePath) -> EdgeLoop:
        """
        Promote a path to a loop, checking endpoint closure.
        """
        end = path.end(graph)
        if end != path.start:
            raise TreeGradeInputError(
                f"path from {path.start!r} ends at {end!r} and is not a loop"
            )
        return cls(start=path.start, steps=path.steps)

    @classmethod
    def from_tokens(cls, graph, start, tokens) -> EdgeLoop:
        return cls.close(graph, EdgePath.from_tokens(graph, start, tokens))

    @classmethod
    def constant(cls, vertex: Vertex) -> EdgeLoop:
        return cls(start=vertex, steps=())


class WeightedGraph(object):
    """
    A finite multigraph with exact positive rational edge lengths.

    Parameters
    ----------
    vertices : iterable of Vertex
        Vertex ids (ints, or strings for contraction vertices).
    edges : iterable of Edge
        Edges. Multi-edges and self-loops are permitted.
    connected : bool
        Whether to require the graph to be connected (true for every
        ambient space).

    Attributes
    ----------
    vertices : tuple
        Vertex ids in ascending order.
    edges : tuple of Edge
        Edges in ascending id order.
    """

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[Edge],
        connected: bool = True,
    ) -> None:
        vertex_set = set(vertices)
        if len(vertex_set) == 0:
            raise TreeGradeInputError("a graph needs at least one vertex")

        self._vertices: Tuple[Vertex, ...] = tuple(sorted_vertices(vertex_set))
        self._edges: Dict[EdgeId, Edge] = {}

        for edge in sorted(edges, key=lambda e: e.id):
            if edge.id in self._edges:
                raise TreeGradeInputError(f"duplicate edge id {edge.id}")
            if edge.u not in vertex_set or edge.v not in vertex_set:
                raise TreeGradeInputError(
                    f"edge {edge.id} has an undeclared endpoint ({edge.u!r}, {edge.v!r})"
                )
            length = parse_rational(edge.length)
            if length <= 0:
                raise TreeGradeInputError(
                    f"edge {edge.id} has non-positive length {length}"
                )
            self._edges[edge.id] = Edge(edge.id, edge.u, edge.v, length)

        multigraph = nx.MultiGraph()
        multigraph.add_nodes_from(self._vertices)
        for edge in self._edges.values():
            multigraph.add_edge(
                edge.u, edge.v, key=edge.id, length=edge.length, order=edge.id
            )
        self._nx = nx.freeze(multigraph)

        self._incidence: Dict[Vertex, List[Traversal]] = {v: [] for v in self._vertices}
        for edge in self._edges.values():
            self._incidence[edge.u].append(Traversal(edge.id, True))
            self._incidence[edge.v].append(Traversal(edge.id, False))

        if connected and not nx.is_connected(self._nx):
            raise TreeGradeInputError("graph is not connected")

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(self._edges.values())

    @property
    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return tuple(self._edges.keys())

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def nx_graph(self) -> nx.MultiGraph:
        """
        Frozen networkx view (edge keys are edge ids).
        """
        return self._nx

    def is_connected(self) -> bool:
        return nx.is_connected(self._nx)

    def has_vertex(self, vertex: Vertex) -> bool:
        return vertex in self._incidence

    def check_vertex(self, vertex: Vertex) -> None:
        if not self.has_vertex(vertex):
            raise TreeGradeInputError(f"unknown vertex {vertex!r}")

    def has_edge(self, edge_id: EdgeId) -> bool:
        return edge_id in self._edges

    def edge(self, edge_id: EdgeId) -> Edge:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise TreeGradeInputError(f"unknown edge id {edge_id!r}")

    def incident(self, vertex: Vertex) -> List[Traversal]:
        """
        All traversals leaving `vertex` (a self-loop contributes both
        orientations), in ascending edge id order.
        """
        self.check_vertex(vertex)
        return list(self._incidence[vertex])

    def traverse(self, vertex: Vertex, step: Traversal) -> Vertex:
        """
        Vertex reached by applying `step` at `vertex`.
        """
        edge = self.edge(step.edge)
        tail, head = (edge.u, edge.v) if step.forward else (edge.v, edge.u)
        if tail != vertex:
            raise TreeGradeInputError(
                f"traversal {step} does not start at {vertex!r}"
            )
        return head

    def path_vertices(self, path: EdgePath) -> List[Vertex]:
        """
        The visited vertex sequence of `path` (length `len(path) + 1`).
        """
        self.check_vertex(path.start)
        visited = [path.start]
        for step in path.steps:
            visited.append(self.traverse(visited[-1], step))
        return visited

    @cached_property
    def _distances(self) -> Dict[Vertex, Dict[Vertex, Fraction]]:
        logger.debug("computing all-pairs distances on %d vertices", self.n_vertices)
        return {
            source: {target: Fraction(value) for target, value in lengths.items()}
            for source, lengths in nx.all_pairs_dijkstra_path_length(
                self._nx, weight="length"
            )
        }

    def distance(self, u: Vertex, v: Vertex) -> Fraction:
        """
        Exact shortest-path length between `u` and `v`.
        """
        self.check_vertex(u)
        self.check_vertex(v)
        try:
            return self._distances[u][v]
        except KeyError:
            raise TreeGradeInputError(f"vertices {u!r} and {v!r} are not connected")

    def subgraph(
        self,
        edge_ids: Iterable[EdgeId],
        vertices: Iterable[Vertex] = (),
        connected: bool = False,
    ) -> WeightedGraph:
        """
        The sub-structure made of the given edges, their endpoints and
        the extra `vertices`.
        """
        edges = [self.edge(e) for e in edge_ids]
        vertex_set = set(vertices)
        for vertex in vertex_set:
            self.check_vertex(vertex)
        for edge in edges:
            vertex_set.update((edge.u, edge.v))
        return WeightedGraph(vertex_set, edges, connected=connected)

    def contract(
        self,
        groups: Mapping[Vertex, Iterable[Vertex]],
        connected: bool = True,
    ) -> Tuple[WeightedGraph, VertexMap]:
        """
        Contract pairwise disjoint vertex groups, each to a named vertex.

        Edges with both endpoints in one group disappear; all other edges
        keep their id and length.

        Parameters
        ----------
        groups : mapping
            New vertex name -> vertices contracted onto it.

        Returns
        -------
        contracted : WeightedGraph
            The contracted graph.
        vertex_map : dict
            Old vertex -> new vertex.
        """
        vertex_map: VertexMap = {}
        for name, members in groups.items():
            for vertex in members:
                self.check_vertex(vertex)
                if vertex in vertex_map:
                    raise TreeGradeInputError(
                        f"vertex {vertex!r} belongs to two contraction groups"
                    )
                vertex_map[vertex] = name
        for vertex in self._vertices:
            if vertex not in vertex_map:
                if vertex in groups:
                    raise TreeGradeInputError(
                        f"contraction name {vertex!r} collides with a vertex"
                    )
                vertex_map[vertex] = vertex

        grouped = {vertex for members in groups.values() for vertex in members}
        edges = []
        for edge in self._edges.values():
            u, v = vertex_map[edge.u], vertex_map[edge.v]
            if u == v and edge.u in grouped:
                continue
            edges.append(Edge(edge.id, u, v, edge.length))

        contracted = WeightedGraph(set(vertex_map.values()), edges, connected=connected)
        return contracted, vertex_map

    def __repr__(self) -> str:
        return f"WeightedGraph(n_vertices={self.n_vertices}, n_edges={self.n_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.values())))


def make_graph(
    vertices: Sequence[Vertex],
    edges: Sequence[Tuple[EdgeId, Vertex, Vertex, Union[str, int, Fraction]]],
    connected: bool = True,
) -> WeightedGraph:
    """
    Convenience constructor from `(id, u, v, length)` tuples.
    """
    return WeightedGraph(
        vertices,
        [Edge(eid, u, v, parse_rational(length)) for eid, u, v, length in edges],
        connected=connected,
    )


def unit_graph(
    edges: Sequence[Tuple[Vertex, Vertex]],
    vertices: Optional[Sequence[Vertex]] = None,
    first_id: int = 1,
) -> WeightedGraph:
    """
    Graph with unit edge lengths and consecutive edge ids.
    """
    if vertices is None:
        vertices = sorted({v for pair in edges for v in pair}, key=vertex_sort_key)
    return make_graph(
        vertices,
        [(first_id + i, u, v, 1) for i, (u, v) in enumerate(edges)],
    )


if __name__ == "__main__":  # pragma: no cover
    pass
