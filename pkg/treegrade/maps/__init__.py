#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Grade-preserving maps, folding and injectivity on fundamental groups.
"""
from .folding import (
    FoldedGraph,
    InjectivityEvidence,
    abelianization_rank,
    find_kernel_element,
    free_hom_injective,
    injectivity_evidence,
    parse_word,
)
from .graded import (
    GradedMap,
    GradePreservingReport,
    TreePortionReport,
    check_grade_preserving,
    check_tree_portion_preserving,
    compose,
    induced_tree_map,
    piece_image,
    require_grade_preserving,
)
from .injectivity import (
    DEFAULT_SAMPLES,
    InjectivityReport,
    check_piecewise_injectivity,
    map_preserves_essential,
    piece_generator_images,
)
from .string_light import (
    WEDGE_POINT,
    WireCollapse,
    attachment_points,
    string_light_collapse,
    wire_subgraph,
)
