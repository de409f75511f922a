#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Generators of example and random graded graphs.
"""
from .spaces import (
    DEFAULT_SEED,
    GENERATORS,
    CyclicCover,
    SpaceSpec,
    cyclic_cover,
    random_space,
    shrinking_circles,
    shrinking_circles_bijection,
    triangle_chain,
    wedge_arc,
)
