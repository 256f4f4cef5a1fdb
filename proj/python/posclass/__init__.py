"""Schur expansions of positroid classes."""

from ._core import (
    PosclassError,
    affine_stanley,
    cylindric_schur,
    expand,
    expand_stats,
    interval,
    schur_module,
    three_row,
    toric,
    toric_window,
    trace,
    verify,
)

__all__ = [
    "PosclassError",
    "affine_stanley",
    "cylindric_schur",
    "expand",
    "expand_stats",
    "interval",
    "schur_module",
    "three_row",
    "toric",
    "toric_window",
    "trace",
    "verify",
]
