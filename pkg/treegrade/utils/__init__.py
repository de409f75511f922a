#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Top level of the utilities module.
"""
from .misc import (
    TreeGradeBallTooSmallError,
    TreeGradeError,
    TreeGradeInputError,
    TreeGradeInternalError,
    TreeGradeInvalidOptionError,
    TreeGradeInvalidParameterTypeError,
    TreeGradeMissingParameterError,
    TreeGradePreconditionError,
    TreeGradeSchemaError,
    ensure_rng,
    format_rational,
    parse_rational,
)
