#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Fundamental group words, loop reduction and the essential-loop decision.
"""
from .loops import (
    EssentialResult,
    PhiSequence,
    as_loop,
    check_filtration,
    is_essential,
    loop_word,
    oracle_is_essential,
    phi,
    project_word,
    tree_efficient_reduce,
)
from .sampling import DEFAULT_LOOP_LENGTH, LoopSampler
from .spanning import Generator, SpanningStructure, spanning_structure
from .words import FreeProductWord, Syllable, free_reduce, invert_word
