"""Computations on finite commutative Moufang loops."""

from ._core import (
    BoundExceededError,
    InputError,
    Loop,
    PreconditionError,
    TheoremViolationError,
    classify,
    fixture_non_moufang,
)

__all__ = [
    "BoundExceededError",
    "InputError",
    "Loop",
    "PreconditionError",
    "TheoremViolationError",
    "classify",
    "fixture_non_moufang",
]
