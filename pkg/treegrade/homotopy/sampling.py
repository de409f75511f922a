#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Seeded random based loops.
"""
from __future__ import annotations

import logging
from typing import Callable, List, Optional, Union

import networkx as nx
import numpy as np

from treegrade.graph.weighted import EdgeLoop, Traversal, WeightedGraph
from treegrade.utils.misc import TreeGradeInputError, ensure_rng
from treegrade.utils.typing import Vertex

logger = logging.getLogger(__name__)

DEFAULT_LOOP_LENGTH: int = 12
MAX_ATTEMPTS: int = 1000


class LoopSampler(object):
    """
    Random loops of bounded combinatorial length.

    A loop is a random walk of at most `max_length // 2` steps from the base
    point closed up by a shortest (fewest edges) return path, so its length
    never exceeds `max_length`.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    base : Vertex, optional
        Base point. Defaults to the smallest vertex.
    max_length : int
        Upper bound on the number of edges of a loop.
    seed : int or np.random.RandomState
        Random seed.
    """

    graph: WeightedGraph
    base: Vertex
    max_length: int
    rng: np.random.RandomState

    def __init__(
        self,
        graph: WeightedGraph,
        base: Optional[Vertex] = None,
        max_length: int = DEFAULT_LOOP_LENGTH,
        seed: Union[int, np.random.RandomState] = 1984,
    ) -> None:
        if max_length < 0:
            raise TreeGradeInputError("max_length must be non-negative")
        self.graph = graph
        self.base = graph.vertices[0] if base is None else base
        graph.check_vertex(self.base)
        self.max_length = max_length
        self.rng = ensure_rng(seed)

    def _return_path(self, vertex: Vertex) -> List[Traversal]:
        nx_graph = self.graph.nx_graph
        route = nx.shortest_path(nx_graph, vertex, self.base)
        steps = []
        for a, b in zip(route, route[1:]):
            keys = sorted(nx_graph[a][b])
            edge = self.graph.edge(keys[self.rng.randint(len(keys))])
            steps.append(Traversal(edge.id, edge.u == a))
        return steps

    def sample(self) -> EdgeLoop:
        n_steps = self.rng.randint(0, self.max_length // 2 + 1)
        current = self.base
        steps: List[Traversal] = []
        for _ in range(n_steps):
            options = self.graph.incident(current)
            if not options:
                break
            step = options[self.rng.randint(len(options))]
            steps.append(step)
            current = self.graph.traverse(current, step)
        steps.extend(self._return_path(current))
        return EdgeLoop(start=self.base, steps=tuple(steps))

    def sample_many(self, n_loops: int) -> List[EdgeLoop]:
        return [self.sample() for _ in range(n_loops)]

    def sample_where(
        self,
        predicate: Callable[[EdgeLoop], bool],
        n_loops: int,
        max_attempts: int = MAX_ATTEMPTS,
    ) -> List[EdgeLoop]:
        """
        Up to `n_loops` loops satisfying `predicate`, drawn within
        `max_attempts` tries.
        """
        loops: List[EdgeLoop] = []
        for _ in range(max_attempts):
            if len(loops) == n_loops:
                break
            loop = self.sample()
            if predicate(loop):
                loops.append(loop)
        if len(loops) < n_loops:
            logger.info("found %d of %d requested loops", len(loops), n_loops)
        return loops


if __name__ == "__main__":  # pragma: no cover
    pass
