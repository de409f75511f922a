#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Balls in the universal cover of a graded graph.

A cover vertex is a pair `(v, w)` of a graph vertex and a reduced word over
the generators of a spanning structure: the class of the path from the base
point to `v` that runs through the tree, crossing generator edges as `w`
prescribes. The cover is a tree; a ball is the part within a given
combinatorial distance of the root `(base, ())`.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Set, Tuple

from treegrade.graph.algorithms import path_diameter
from treegrade.graph.weighted import EdgePath, Traversal, WeightedGraph
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.homotopy.words import free_reduce
from treegrade.utils.misc import (
    TreeGradeBallTooSmallError,
    TreeGradeInputError,
    TreeGradeInternalError,
)
from treegrade.utils.typing import Letter, Vertex

logger = logging.getLogger(__name__)

DEFAULT_RADIUS: int = 12

CoverVertex = Tuple[Vertex, Tuple[Letter, ...]]


def format_cover_vertex(vertex: CoverVertex) -> str:
    base, word = vertex
    letters = " ".join(f"g{g}" if e == 1 else f"g{g}^-1" for g, e in word)
    return f"{base}|{letters}" if letters else f"{base}|1"


class CoverBall(object):
    """
    The ball of radius `radius` around the base lift in the universal cover.

    Membership and distances are computed on demand; `vertices` enumerates
    the whole ball.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    structure : SpanningStructure
        Spanning structure fixing the generators.
    base : Vertex
        Base point; the root of the ball is `(base, ())`.
    radius : int
        Combinatorial radius R >= 0.
    """

    graph: WeightedGraph
    structure: SpanningStructure
    base: Vertex
    radius: int

    def __init__(
        self,
        graph: WeightedGraph,
        structure: SpanningStructure,
        base: Vertex,
        radius: int = DEFAULT_RADIUS,
    ) -> None:
        graph.check_vertex(base)
        if radius < 0:
            raise TreeGradeInputError("radius must be non-negative")
        self.graph = graph
        self.structure = structure
        self.base = base
        self.radius = radius
        self._vertices: Optional[Set[CoverVertex]] = None

    @property
    def root(self) -> CoverVertex:
        return (self.base, ())

    def step(self, vertex: CoverVertex, traversal: Traversal) -> CoverVertex:
        """
        The end of the lift of `traversal` starting at `vertex`.
        """
        at, word = vertex
        head = self.graph.traverse(at, traversal)
        if self.structure.is_generator(traversal.edge):
            letter = (traversal.edge, 1 if traversal.forward else -1)
            word = tuple(free_reduce(word + (letter,)))
        return (head, word)

    def neighbors(self, vertex: CoverVertex) -> List[Tuple[Traversal, CoverVertex]]:
        return [(t, self.step(vertex, t)) for t in self.graph.incident(vertex[0])]

    def path_from_root(self, vertex: CoverVertex) -> EdgePath:
        """
        Projection of the unique reduced path from the root to `vertex`.
        """
        at, word = vertex
        self.graph.check_vertex(at)
        path = EdgePath(self.base)
        current = self.base
        for generator, exponent in word:
            if generator not in self.structure.generators:
                raise TreeGradeInputError(f"unknown generator {generator!r}")
            edge = self.graph.edge(generator)
            tail, head = (edge.u, edge.v) if exponent == 1 else (edge.v, edge.u)
            path = path.concat(self.structure.tree_path(current, tail))
            path = path.concat(EdgePath(tail, (Traversal(generator, exponent == 1),)))
            current = head
        return path.concat(self.structure.tree_path(current, at))

    def depth(self, vertex: CoverVertex) -> int:
        return len(self.path_from_root(vertex))

    def contains(self, vertex: CoverVertex) -> bool:
        return self.depth(vertex) <= self.radius

    def check(self, vertex: CoverVertex) -> None:
        if not self.contains(vertex):
            raise TreeGradeBallTooSmallError(self.radius, format_cover_vertex(vertex))

    def vertices(self) -> Set[CoverVertex]:
        """
        All vertices of the ball (breadth-first from the root).
        """
        if self._vertices is None:
            seen = {self.root}
            queue = deque([(self.root, 0)])
            while queue:
                vertex, depth = queue.popleft()
                if depth == self.radius:
                    continue
                for _, nxt in self.neighbors(vertex):
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append((nxt, depth + 1))
            self._vertices = seen
            logger.debug("cover ball of radius %d has %d vertices", self.radius, len(seen))
        return set(self._vertices)

    def edges(self) -> List[Tuple[CoverVertex, int, CoverVertex]]:
        """
        Lifted edges inside the ball as `(tail, edge id, head)`, each once.
        """
        inside = self.vertices()
        lifted = []
        for vertex in inside:
            for traversal, nxt in self.neighbors(vertex):
                if traversal.forward and nxt in inside:
                    lifted.append((vertex, traversal.edge, nxt))
        return lifted

    def is_tree(self) -> bool:
        return len(self.edges()) == len(self.vertices()) - 1

    def has_unique_lifting(self) -> bool:
        """
        At every ball vertex the lifts of the incident traversals end at
        pairwise distinct cover vertices, and each is undone by the reversed
        traversal.
        """
        for vertex in self.vertices():
            steps = self.graph.incident(vertex[0])
            targets = [self.step(vertex, t) for t in steps]
            if len(set(targets)) != len(targets):
                return False
            for traversal, nxt in zip(steps, targets):
                if self.step(nxt, traversal.reversed()) != vertex:
                    return False
        return True


def cover_ball(
    graph: WeightedGraph,
    structure: SpanningStructure,
    base: Vertex,
    radius: int = DEFAULT_RADIUS,
) -> CoverBall:
    return CoverBall(graph, structure, base, radius)


@dataclass(frozen=True)
class LiftedPath(object):
    """
    A path in the cover together with its projection.

    Attributes
    ----------
    path : EdgePath
        The projected path.
    vertices : tuple
        Cover vertices visited by the lift.
    """

    path: EdgePath
    vertices: Tuple[CoverVertex, ...]

    @property
    def start(self) -> CoverVertex:
        return self.vertices[0]

    @property
    def end(self) -> CoverVertex:
        return self.vertices[-1]

    @property
    def closes(self) -> bool:
        return self.start == self.end

    def projection(self) -> List[Vertex]:
        return [v for v, _ in self.vertices]


def lift_path(
    ball: CoverBall, path: EdgePath, start: Optional[CoverVertex] = None
) -> LiftedPath:
    """
    The unique lift of `path` starting at `start`.

    Parameters
    ----------
    ball : CoverBall
        The cover ball.
    path : EdgePath
        A path in the base graph.
    start : cover vertex, optional
        Starting lift (defaults to `(path.start, ())`).

    Returns
    -------
    lift : LiftedPath
        The lift.

    Raises
    ------
    TreeGradeBallTooSmallError
        If the lift leaves the ball.
    """
    ball.graph.path_vertices(path)
    if start is None:
        start = (path.start, ())
    if start[0] != path.start:
        raise TreeGradeInputError(
            f"lift starts over {start[0]!r} but the path starts at {path.start!r}"
        )
    ball.check(start)
    visited = [start]
    for traversal in path.steps:
        nxt = ball.step(visited[-1], traversal)
        ball.check(nxt)
        visited.append(nxt)
    return LiftedPath(path=path, vertices=tuple(visited))


def reduced_cover_path(ball: CoverBall, a: CoverVertex, b: CoverVertex) -> EdgePath:
    """
    Projection of the unique reduced path from `a` to `b`.
    """
    to_a = ball.path_from_root(a)
    to_b = ball.path_from_root(b)
    shared = 0
    for step_a, step_b in zip(to_a.steps, to_b.steps):
        if step_a != step_b:
            break
        shared += 1
    meet = ball.graph.path_vertices(to_a)[shared]
    back = EdgePath(meet, to_a.steps[shared:]).reversed(ball.graph)
    forward = EdgePath(meet, to_b.steps[shared:])
    reduced = back.concat(forward)
    if back.start != a[0] or ball.graph.path_vertices(reduced)[-1] != b[0]:
        raise TreeGradeInternalError("reduced cover path has wrong endpoints")
    return reduced


def lifted_distance(ball: CoverBall, a: CoverVertex, b: CoverVertex) -> Fraction:
    """
    The lifted path-diameter distance between two ball vertices.

    Parameters
    ----------
    ball : CoverBall
        The cover ball.
    a, b : cover vertex
        Vertices of the ball.

    Returns
    -------
    distance : Fraction
        Diameter of the projection of the reduced path from `a` to `b`.
    """
    ball.check(a)
    ball.check(b)
    reduced = reduced_cover_path(ball, a, b)
    current = a
    for traversal in reduced.steps:
        current = ball.step(current, traversal)
        ball.check(current)
    if current != b:
        raise TreeGradeInternalError("reduced cover path does not reach its end vertex")
    return path_diameter(ball.graph, reduced)


def ball_pairs(ball: CoverBall) -> Iterator[Tuple[CoverVertex, CoverVertex]]:
    ordered = sorted(ball.vertices(), key=format_cover_vertex)
    return itertools.combinations(ordered, 2)


if __name__ == "__main__":  # pragma: no cover
    pass
