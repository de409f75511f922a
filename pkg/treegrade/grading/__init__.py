#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tree-gradings: pieces, validation, parameterizations and graded subspaces.
"""
from .parameterization import Parameterization, parameterize
from .paths import is_tree_efficient, piece_visits, piece_visits_contiguous, tree_runs
from .pieces import (
    DEFAULT_ENUMERATION_BOUND,
    GradingReport,
    Piece,
    TreeGrading,
    canonical_grading,
    require_valid,
    validate_grading,
)
from .subspace import GradedSubspace, expansion, expansion_is_bijective, graded_subspace
