#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Fundamental group injectivity of grade-preserving maps.

A grade-preserving map that sends distinct pieces into distinct target
pieces is injective on fundamental groups exactly when its restriction to
every piece is. Piece restrictions are decided by folding; the conclusion
for the whole map is checked on sampled essential loops.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

import numpy as np

from treegrade.graph.weighted import EdgePath
from treegrade.homotopy.loops import is_essential, loop_word
from treegrade.homotopy.sampling import DEFAULT_LOOP_LENGTH, LoopSampler
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.maps.folding import free_hom_injective
from treegrade.maps.graded import GradedMap, require_grade_preserving
from treegrade.utils.misc import (
    TreeGradeInternalError,
    TreeGradePreconditionError,
    ensure_rng,
    vertex_sort_key,
)
from treegrade.utils.typing import Letter, PieceId

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES: int = 100


@dataclass
class InjectivityReport(object):
    """
    Outcome of `check_piecewise_injectivity`.

    Attributes
    ----------
    assignment : dict
        Source piece id -> target piece id.
    piece_injective : dict
        Source piece id -> whether its restriction is injective.
    images : dict
        Source piece id -> image words of the piece's generators.
    sampled : int
        Number of sampled essential loops checked.
    """

    assignment: Dict[PieceId, PieceId]
    piece_injective: Dict[PieceId, bool]
    images: Dict[PieceId, List[List[Letter]]] = field(default_factory=dict)
    sampled: int = 0

    @property
    def ok(self) -> bool:
        return all(self.piece_injective.values())

    @property
    def witness(self) -> Optional[PieceId]:
        failed = [p for p, good in self.piece_injective.items() if not good]
        return failed[0] if failed else None

    def to_json(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "assignment": {str(k): v for k, v in sorted(self.assignment.items())},
            "piece_injective": {str(k): v for k, v in sorted(self.piece_injective.items())},
            "witness": self.witness,
            "sampled": self.sampled,
        }


def piece_generator_images(
    f: GradedMap,
    source_structure: SpanningStructure,
    target_structure: SpanningStructure,
    piece_id: PieceId,
) -> List[List[Letter]]:
    """
    Words in the target of the images of a piece's generators, based at the
    piece's smallest vertex.
    """
    piece = f.source_grading.piece(piece_id)
    base = min(piece.vertices, key=vertex_sort_key)
    images = []
    for generator in source_structure.piece_generators(piece_id):
        loop = source_structure.generator_loop(generator.edge, base)
        image = f.map_path(loop)
        word = loop_word(f.target, f.target_grading, target_structure, image)
        images.append(word.letters())
    return images


def check_piecewise_injectivity(
    f: GradedMap,
    samples: int = DEFAULT_SAMPLES,
    max_length: int = DEFAULT_LOOP_LENGTH,
    seed: Union[int, np.random.RandomState] = 1984,
) -> InjectivityReport:
    """
    Check injectivity of `f` on fundamental groups through its pieces.

    Parameters
    ----------
    f : GradedMap
        A grade-preserving map with injective piece assignment.
    samples : int
        Number of essential loops to sample when every piece restriction is
        injective.
    max_length : int
        Combinatorial length bound of sampled loops.
    seed : int or np.random.RandomState
        Seed of the loop sampler.

    Returns
    -------
    report : InjectivityReport
        Piece assignment, per-piece verdicts and the number of checked loops.

    Raises
    ------
    TreeGradePreconditionError
        If `f` is not grade-preserving or maps two pieces into one.
    TreeGradeInternalError
        If a sampled essential loop maps to an inessential one although
        every piece restriction is injective.
    """
    grades = require_grade_preserving(f)
    if not grades.injective:
        raise TreeGradePreconditionError(
            "two pieces are mapped into the same target piece", witness=grades.witness
        )

    source_structure = SpanningStructure(f.source, f.source_grading)
    target_structure = SpanningStructure(f.target, f.target_grading)
    report = InjectivityReport(assignment=grades.assignment, piece_injective={})
    for piece in f.source_grading.pieces:
        images = piece_generator_images(f, source_structure, target_structure, piece.id)
        report.images[piece.id] = images
        report.piece_injective[piece.id] = free_hom_injective(len(images), images)
    if not report.ok:
        logger.info("restriction to piece %s is not injective", report.witness)
        return report

    # loops based on a piece reach a generator within a few steps
    pieces = f.source_grading.nondegenerate
    base = pieces[0].smallest_vertex if pieces else None
    sampler = LoopSampler(f.source, base=base, max_length=max_length, seed=ensure_rng(seed))
    essential = sampler.sample_where(
        lambda loop: is_essential(
            f.source, f.source_grading, loop, structure=source_structure, verify=False
        ).essential,
        samples,
    )
    for loop in essential:
        image = f.map_path(loop)
        verdict = is_essential(
            f.target, f.target_grading, image, structure=target_structure, verify=False
        )
        if not verdict.essential:
            raise TreeGradeInternalError(
                f"essential loop {loop} maps to the inessential loop {image}"
            )
    report.sampled = len(essential)
    return report


def map_preserves_essential(f: GradedMap, loop: EdgePath) -> bool:
    source = is_essential(f.source, f.source_grading, loop, verify=False)
    target = is_essential(f.target, f.target_grading, f.map_path(loop), verify=False)
    return target.essential or not source.essential


if __name__ == "__main__":  # pragma: no cover
    pass
