"""Exact computations with exponential Riordan arrays and their moments."""

from ._core import (
    claims,
    excedance_cycle_polynomial,
    families,
    hankel,
    moments,
    production,
    realize,
    verify,
)

__all__ = [
    "claims",
    "excedance_cycle_polynomial",
    "families",
    "hankel",
    "moments",
    "production",
    "realize",
    "verify",
]
