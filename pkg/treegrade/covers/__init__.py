#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Balls in universal covers and the lifted path-diameter distance.
"""
from .ball import (
    DEFAULT_RADIUS,
    CoverBall,
    LiftedPath,
    ball_pairs,
    cover_ball,
    format_cover_vertex,
    lift_path,
    lifted_distance,
    reduced_cover_path,
)
