#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Oracle-equivalence suites over seeded random and example spaces.

Every suite compares an algorithm with an independent check (brute-force
enumeration, chain search, a structure-blind free-group computation) or
with an exact identity, and records failures instead of stopping.
"""
from __future__ import annotations

import itertools
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple, Union

import numpy as np
import progressbar

from treegrade.base import GradedSpace
from treegrade.covers.ball import CoverBall, lift_path, lifted_distance
from treegrade.gen.spaces import (
    DEFAULT_SEED,
    random_space,
    shrinking_circles,
    triangle_chain,
    wedge_arc,
)
from treegrade.grading.pieces import Piece, TreeGrading, canonical_grading, validate_grading
from treegrade.graph.algorithms import cycle_rank
from treegrade.graph.enumeration import simple_paths
from treegrade.graph.weighted import EdgePath, Traversal, WeightedGraph, make_graph
from treegrade.homotopy.loops import is_essential, oracle_is_essential, phi
from treegrade.homotopy.sampling import DEFAULT_LOOP_LENGTH, LoopSampler
from treegrade.maps.graded import GradedMap
from treegrade.maps.injectivity import DEFAULT_SAMPLES, check_piecewise_injectivity
from treegrade.quotient.metric import chain_pseudometric_oracle, metric_quotient
from treegrade.utils.misc import TreeGradeError, ensure_rng

logger = logging.getLogger(__name__)

DEFAULT_GRAPHS: int = 50
DEFAULT_LOOPS: int = 50

MAX_VERTICES: int = 12
MAX_EDGES: int = 18
LENGTH_BOUND: int = 3

# exhaustive oracles are run on graphs up to this size
ORACLE_VERTICES: int = 8
# radius of the balls on which all pairs and triples are compared
PAIR_RADIUS: int = 2
COVER_RADIUS: int = 12
# ball vertex pairs sampled from lifts inside the COVER_RADIUS ball
PAIR_SAMPLES: int = 200
MIN_MAPS: int = 20
# failures kept per suite in the summary
MAX_REPORTED: int = 5


@dataclass
class SuiteResult(object):
    """
    Outcome of one suite.

    Attributes
    ----------
    name : str
        Suite name.
    checked : int
        Number of individual checks performed.
    failures : list of str
        Descriptions of failed checks.
    """

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "n_failures": len(self.failures),
            "failures": self.failures[:MAX_REPORTED],
        }


def path_length(graph: WeightedGraph, path: EdgePath) -> Fraction:
    return sum((graph.edge(step.edge).length for step in path.steps), Fraction(0))


def attach_triangle(
    graph: WeightedGraph, grading: TreeGrading, vertex: int
) -> Tuple[WeightedGraph, TreeGrading]:
    """
    `graph` with a unit triangle hung on a bridge at `vertex`. The grading
    gains the triangle as a new piece; old ids are kept.
    """
    a, b, c = (max(graph.vertices) + i for i in (1, 2, 3))
    first = max(graph.edge_ids) + 1 if graph.n_edges else 1
    edges = [(e.id, e.u, e.v, e.length) for e in graph.edges]
    edges += [
        (first, vertex, a, 1),
        (first + 1, a, b, 1),
        (first + 2, b, c, 1),
        (first + 3, c, a, 1),
    ]
    extended = make_graph(list(graph.vertices) + [a, b, c], edges)
    piece_id = max(grading.piece_ids, default=0) + 1
    triangle = Piece.from_edges(extended, piece_id, (first + 1, first + 2, first + 3))
    return extended, grading.with_pieces([triangle])


def wrapping_map(k: int) -> GradedMap:
    """
    The chain of `k` triangles into the chain of `k + 1`, shifted by one
    triangle. The first edge of every triangle runs once around its image
    triangle and then along the image edge, so generators map to squares.
    """
    source, source_grading = triangle_chain(k)
    target, target_grading = triangle_chain(k + 1)
    edge_map = {}
    for edge in source.edges:
        tokens = [edge.id + 4]
        if edge.id % 4 == 1:
            tokens = [edge.id + 4, edge.id + 5, edge.id + 6, edge.id + 4]
        edge_map[edge.id] = EdgePath.from_tokens(target, edge.u + 3, tokens)
    return GradedMap(
        source,
        source_grading,
        target,
        target_grading,
        {v: v + 3 for v in source.vertices},
        edge_map,
    )


def inclusion_map(space: GradedSpace, vertex: int) -> GradedMap:
    target, target_grading = attach_triangle(space.graph, space.grading, vertex)
    return GradedMap(
        space.graph,
        space.grading,
        target,
        target_grading,
        {v: v for v in space.graph.vertices},
        {e.id: EdgePath(e.u, (Traversal(e.id, True),)) for e in space.graph.edges},
    )


class SelfTest(object):
    """
    Runner of the oracle-equivalence suites.

    Parameters
    ----------
    seed : int or np.random.RandomState
        Seed of the random spaces and loop samplers.
    n_graphs : int
        Number of random spaces.
    n_loops : int
        Loops sampled per space.
    verbose : bool
        Show a progress bar per suite.
    """

    def __init__(
        self,
        seed: Union[int, np.random.RandomState] = DEFAULT_SEED,
        n_graphs: int = DEFAULT_GRAPHS,
        n_loops: int = DEFAULT_LOOPS,
        verbose: bool = False,
    ) -> None:
        self.seed = seed
        self.n_graphs = n_graphs
        self.n_loops = n_loops
        self.verbose = verbose
        self.rng = ensure_rng(seed)
        self.spaces: List[GradedSpace] = self._build_spaces()

    def _build_spaces(self) -> List[GradedSpace]:
        examples = [
            triangle_chain(1),
            triangle_chain(2),
            triangle_chain(3),
            triangle_chain(3, layout="comb"),
            shrinking_circles(3),
            shrinking_circles(3, shrinking=True),
        ]
        spaces = [GradedSpace(graph, grading) for graph, grading in examples]
        for _ in range(self.n_graphs):
            n = self.rng.randint(2, MAX_VERTICES + 1)
            m = self.rng.randint(n - 1, min(MAX_EDGES, n + 6) + 1)
            graph, grading = random_space(
                int(self.rng.randint(0, 2**31 - 1)), n, m, LENGTH_BOUND
            )
            spaces.append(GradedSpace(graph, grading))
        return spaces

    def _sampler(self, graph: WeightedGraph, base=None) -> LoopSampler:
        return LoopSampler(
            graph,
            base=base,
            max_length=DEFAULT_LOOP_LENGTH,
            seed=int(self.rng.randint(0, 2**31 - 1)),
        )

    def _run_suite(
        self, name: str, body: Callable[[GradedSpace, SuiteResult], None]
    ) -> SuiteResult:
        result = SuiteResult(name)
        if self.verbose:
            pbar = progressbar.ProgressBar(max_value=len(self.spaces), prefix=f"{name} ")
        for i, space in enumerate(self.spaces):
            try:
                body(space, result)
            except TreeGradeError as exc:
                result.failures.append(f"space {i}: {type(exc).__name__}: {exc}")
            if self.verbose:
                pbar.update(i + 1)
        if self.verbose:
            pbar.finish()
        logger.info("%s: %d checks, %d failures", name, result.checked, len(result.failures))
        return result

    def distance(self, space: GradedSpace, result: SuiteResult) -> None:
        graph = space.graph
        small = graph.n_vertices <= ORACLE_VERTICES
        for u, v in itertools.combinations(graph.vertices, 2):
            d = graph.distance(u, v)
            result.check(d == graph.distance(v, u), f"asymmetric distance {u}, {v}")
            if small:
                best = min(path_length(graph, p) for p in simple_paths(graph, u, v))
                result.check(d == best, f"d({u}, {v}) = {d}, shortest simple path {best}")

    def grading(self, space: GradedSpace, result: SuiteResult) -> None:
        report = validate_grading(space.graph, space.grading)
        result.check(report.ok, f"canonical grading rejected: {report.message}")

    def parameterization(self, space: GradedSpace, result: SuiteResult) -> None:
        p = space.parameterization
        result.check(
            p.tree.n_edges == p.tree.n_vertices - 1 and p.tree.is_connected(),
            "parameterization is not a tree",
        )
        for piece in space.grading.pieces:
            fiber = p.fiber(p.piece_vertex_of[piece.id])
            result.check(fiber == piece.vertices, f"fiber of piece {piece.id} differs")

    def quotient(self, space: GradedSpace, result: SuiteResult) -> None:
        graph, grading = space.graph, space.grading
        if graph.n_vertices > ORACLE_VERTICES:
            return
        ids = grading.piece_ids
        for size in range(len(ids) + 1):
            for keep in itertools.combinations(ids, size):
                q = metric_quotient(graph, grading, keep)
                partition = [p.vertices for p in grading.pieces if p.id not in keep]
                for a, b in itertools.combinations(graph.vertices, 2):
                    expected = chain_pseudometric_oracle(graph, partition, a, b)
                    actual = q.target.distance(q(a), q(b))
                    result.check(
                        actual == expected,
                        f"keep {list(keep)}: d({a}, {b}) = {actual}, chains give {expected}",
                    )

    def retraction(self, space: GradedSpace, result: SuiteResult) -> None:
        for piece in space.grading.pieces:
            r = space.retraction(piece.id)
            result.check(r.is_idempotent(), f"retraction onto {piece.id} not idempotent")
            result.check(
                all(r(v) == v for v in piece.vertices),
                f"retraction onto {piece.id} moves a point of the piece",
            )
            result.check(
                all(len({r(v) for v in component}) == 1 for component in r.components),
                f"retraction onto {piece.id} not constant on a component",
            )
            result.check(r.is_non_expansive(), f"retraction onto {piece.id} expands")

    def rank(self, space: GradedSpace, result: SuiteResult) -> None:
        total = sum(space.piece_ranks().values())
        result.check(
            total == cycle_rank(space.graph),
            f"piece ranks sum to {total}, cycle rank is {cycle_rank(space.graph)}",
        )

    def essential(self, space: GradedSpace, result: SuiteResult) -> None:
        sampler = self._sampler(space.graph)
        for loop in sampler.sample_many(self.n_loops):
            verdict = is_essential(
                space.graph, space.grading, loop, structure=space.structure, verify=True
            )
            oracle = oracle_is_essential(space.graph, loop)
            result.check(verdict.essential == oracle, f"loop {loop}: {verdict.essential}")

    def phi(self, space: GradedSpace, result: SuiteResult) -> None:
        ids = list(space.grading.piece_ids)
        order = [ids[i] for i in self.rng.permutation(len(ids))]
        sizes = sorted(self.rng.randint(0, len(ids) + 1, size=3).tolist())
        filtration = [order[:s] for s in sizes]
        sampler = self._sampler(space.graph)
        for loop in sampler.sample_many(self.n_loops):
            verdict = space.is_essential(loop)
            sequence = phi(space.graph, space.grading, loop, filtration)
            result.check(sequence.is_coherent(), f"loop {loop}: incoherent words")
            for level, word in zip(sequence.levels, sequence.words):
                if not verdict.essential:
                    result.check(word.is_identity, f"loop {loop}: inessential, {word}")
                elif verdict.witness <= level:
                    result.check(not word.is_identity, f"loop {loop}: lost at {sorted(level)}")

    def covers(self, space: GradedSpace, result: SuiteResult) -> None:
        graph = space.graph
        base = graph.vertices[0]
        ball = CoverBall(graph, space.structure, base, COVER_RADIUS)
        reached = set()
        for loop in self._sampler(graph, base).sample_many(self.n_loops):
            lift = lift_path(ball, loop)
            reached.update(lift.vertices)
            result.check(
                [v for v, _ in lift.vertices] == graph.path_vertices(loop),
                f"loop {loop}: lift does not project onto the loop",
            )
            result.check(
                lift.closes != oracle_is_essential(graph, loop),
                f"loop {loop}: lift closes is {lift.closes}",
            )

        reached_list = sorted(reached, key=repr)
        pairs = self.rng.randint(len(reached_list), size=(PAIR_SAMPLES, 2)) if reached else []
        for i, j in pairs:
            a, b = reached_list[i], reached_list[j]
            distance = lifted_distance(ball, a, b)
            result.check(
                distance == lifted_distance(ball, b, a),
                f"lifted distance asymmetric at {a}, {b}",
            )
            result.check(
                distance >= graph.distance(a[0], b[0]),
                f"lifted distance below the base distance at {a}, {b}",
            )

        small = CoverBall(graph, space.structure, base, PAIR_RADIUS)
        vertices = sorted(small.vertices(), key=repr)
        d = {}
        for a, b in itertools.product(vertices, repeat=2):
            d[a, b] = lifted_distance(small, a, b)
        for a, b in itertools.combinations(vertices, 2):
            result.check(d[a, b] == d[b, a], f"lifted distance asymmetric at {a}, {b}")
            result.check(d[a, b] > 0, f"lifted distance vanishes at {a}, {b}")
            result.check(
                d[a, b] >= graph.distance(a[0], b[0]),
                f"lifted distance below the base distance at {a}, {b}",
            )
        for a, b, c in itertools.permutations(vertices, 3):
            result.check(d[a, c] <= d[a, b] + d[b, c], f"triangle inequality at {a}, {b}, {c}")

    def injectivity(self) -> SuiteResult:
        result = SuiteResult("injectivity")
        candidates = [s for s in self.spaces if len(s.grading.nondegenerate) > 0]
        maps: List[Tuple[str, GradedMap]] = [
            (f"wrapping of {k} triangles", wrapping_map(k)) for k in (1, 2, 3)
        ]
        for space in itertools.islice(itertools.cycle(candidates), max(MIN_MAPS, len(candidates))):
            vertex = space.graph.vertices[self.rng.randint(space.graph.n_vertices)]
            try:
                maps.append((f"inclusion at {vertex}", inclusion_map(space, vertex)))
            except TreeGradeError as exc:
                result.failures.append(f"inclusion at {vertex}: {exc}")
        for name, f in maps:
            try:
                report = check_piecewise_injectivity(
                    f,
                    samples=DEFAULT_SAMPLES,
                    seed=int(self.rng.randint(0, 2**31 - 1)),
                )
            except TreeGradeError as exc:
                result.failures.append(f"{name}: {exc}")
                continue
            result.check(report.ok, f"{name}: piece {report.witness} fails")
            result.check(
                report.sampled >= DEFAULT_SAMPLES,
                f"{name}: {report.sampled} of {DEFAULT_SAMPLES} essential loops sampled",
            )
        result.check(len(maps) >= MIN_MAPS, f"only {len(maps)} maps checked")
        return result

    def wedge_arc(self) -> SuiteResult:
        result = SuiteResult("wedge_arc")
        graph, grading, cover = wedge_arc()
        result.check(cycle_rank(graph) == 2, "base cycle rank is not 2")
        result.check(cycle_rank(cover.graph) == 3, "cover cycle rank is not 3")
        cover_grading = canonical_grading(cover.graph)
        result.check(len(cover_grading) == 1, "cover has a non-trivial canonical grading")
        for piece in grading.pieces:
            lifted = cover.graph.subgraph(cover.preimage_edges(piece.edges))
            result.check(
                lifted.is_connected() and cycle_rank(lifted) == 1,
                f"preimage of piece {piece.id} is not a single circle",
            )
        return result

    def run(self) -> Dict[str, Any]:
        """
        Run every suite.

        Returns
        -------
        summary : dict
            Seed, number of spaces, per-suite results and the overall verdict.
        """
        suites: List[SuiteResult] = []
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for name in (
                "distance",
                "grading",
                "parameterization",
                "quotient",
                "retraction",
                "rank",
                "essential",
                "phi",
                "covers",
            ):
                suites.append(self._run_suite(name, getattr(self, name)))
            suites.append(self.injectivity())
            suites.append(self.wedge_arc())
        return {
            "seed": self.seed if isinstance(self.seed, int) else None,
            "graphs": self.n_graphs,
            "loops": self.n_loops,
            "passed": all(s.passed for s in suites),
            "suites": [s.to_json() for s in suites],
        }


def selftest(
    seed: int = DEFAULT_SEED,
    n_graphs: int = DEFAULT_GRAPHS,
    n_loops: int = DEFAULT_LOOPS,
    verbose: bool = False,
) -> Dict[str, Any]:
    return SelfTest(seed, n_graphs, n_loops, verbose).run()


if __name__ == "__main__":  # pragma: no cover
    pass
