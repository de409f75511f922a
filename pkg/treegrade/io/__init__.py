#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
JSON and DOT input/output.
"""
from .dot import cover_ball_to_dot, graph_to_dot, parameterization_to_dot
from .serialization import (
    dumps,
    filtration_from_json,
    filtration_to_json,
    grading_from_json,
    grading_to_json,
    graph_from_json,
    graph_to_json,
    load_json,
    loop_from_json,
    loop_to_json,
    map_from_json,
    map_to_json,
    space_from_json,
    space_to_json,
    vertex_map_to_json,
)
