#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Miscellaneous utilities
"""
import numbers
import re
from fractions import Fraction
from typing import Any, Iterable, List, Union

import numpy as np


class TreeGradeError(Exception):
    """
    Base class for all errors raised by treegrade.
    """


class TreeGradeInputError(TreeGradeError):
    """
    Error for flagging invalid user input (unknown vertices, invalid paths,
    malformed words, ...).
    """


class TreeGradeInvalidParameterTypeError(TreeGradeInputError):
    """
    Error for flagging an invalid parameter type.
    """

    def __init__(
        self,
        parameter_name: str,
        required_parameter_type: Union[type, Iterable[type]],
        actual_parameter_type: type,
        *args,
    ) -> None:

        if isinstance(required_parameter_type, Iterable):
            rqpt = ", ".join([f"{pt}" for pt in required_parameter_type])
        else:
            rqpt = required_parameter_type
        message = f"`{parameter_name}` was expected to be {rqpt}, but is {actual_parameter_type}"

        super().__init__(message, *args)


class TreeGradeInvalidOptionError(TreeGradeInputError):
    """
    Error for invalid option.
    """

    def __init__(self, parameter_name, valid_options, value, *args) -> None:

        rqop = ", ".join([f"{op}" for op in valid_options])
        message = f"`{parameter_name}` was expected to be in {rqop}, but is {value}"

        super().__init__(message, *args)


class TreeGradeMissingParameterError(TreeGradeInputError):
    """
    Error for flagging a missing parameter
    """

    def __init__(self, parameter_name: Union[str, List[str]], *args) -> None:

        if isinstance(parameter_name, Iterable) and not isinstance(parameter_name, str):
            message = ", ".join([f"`{pn}`" for pn in parameter_name])
            message = f"{message} were not given"
        else:
            message = f"`{parameter_name}` was not given."
        super().__init__(message, *args)


class TreeGradeSchemaError(TreeGradeInputError):
    """
    Error for malformed JSON documents.

    Parameters
    ----------
    path : str
        JSON path of the offending element (e.g. `$.edges[3].len`).
    message : str
        What is wrong with it.
    """

    def __init__(self, path: str, message: str, *args) -> None:
        self.path = path
        super().__init__(f"{path}: {message}", *args)


class TreeGradePreconditionError(TreeGradeInputError):
    """
    Error for a documented hypothesis that does not hold for the input.

    Parameters
    ----------
    message : str
        Which hypothesis failed.
    witness : Any
        An object demonstrating the failure (a piece id, a vertex set, ...).
    """

    def __init__(self, message: str, witness: Any = None, *args) -> None:
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {witness})"
        super().__init__(message, *args)


class TreeGradeBallTooSmallError(TreeGradeInputError):
    """
    Error raised when a query leaves a universal-cover ball.
    """

    def __init__(self, radius: int, vertex: Any, *args) -> None:
        self.radius = radius
        self.vertex = vertex
        message = f"ball of radius {radius} is too small: {vertex} lies outside"
        super().__init__(message, *args)


class TreeGradeInternalError(TreeGradeError):
    """
    Error for a failed internal invariant. Seeing this is a bug.
    """


def ensure_rng(
    seed: Union[numbers.Integral, np.random.RandomState]
) -> np.random.RandomState:
    """
    Ensure random number generator is a np.random.RandomState instance

    Parameters
    ----------
    seed : int or np.random.RandomState
        An integer to serve as the seed for the random number generator or a
        `np.random.RandomState` instance.

    Returns
    -------
    rng : np.random.RandomState
        A random number generator.
    """

    if isinstance(seed, numbers.Integral):
        rng = np.random.RandomState(int(seed))
        return rng
    elif isinstance(seed, np.random.RandomState):
        rng = seed
        return rng
    else:
        raise TreeGradeInvalidParameterTypeError(
            parameter_name="seed",
            required_parameter_type=(int, np.random.RandomState),
            actual_parameter_type=type(seed),
        )


RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parse a rational number given as `"p/q"`, `"p"` or an integer.

    Floats are rejected so that no inexact value can enter a computation.

    Parameters
    ----------
    value : str, int or Fraction
        The value to parse.

    Returns
    -------
    rational : Fraction
        The exact value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TreeGradeInvalidParameterTypeError(
            parameter_name="rational",
            required_parameter_type=(str, int, Fraction),
            actual_parameter_type=type(value),
        )
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        match = RATIONAL_PATTERN.match(value)
        if match is None:
            raise TreeGradeInputError(f"`{value}` is not a rational of the form p/q")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise TreeGradeInputError(f"`{value}` has a zero denominator")
        return Fraction(numerator, denominator)
    raise TreeGradeInvalidParameterTypeError(
        parameter_name="rational",
        required_parameter_type=(str, int, Fraction),
        actual_parameter_type=type(value),
    )


def format_rational(value: Fraction) -> str:
    """
    Format a rational as `"p/q"` (always with an explicit denominator).
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def vertex_sort_key(vertex: Any) -> tuple:
    """
    Sort key putting integer vertex ids (ascending) before string ids.
    """
    if isinstance(vertex, numbers.Integral) and not isinstance(vertex, bool):
        return (0, int(vertex), "")
    return (1, 0, str(vertex))


def sorted_vertices(vertices: Iterable[Any]) -> List[Any]:
    return sorted(vertices, key=vertex_sort_key)


def piece_vertex_name(piece_id: int) -> str:
    """
    Name of the vertex a piece is contracted to.
    """
    return f"y{piece_id}"
