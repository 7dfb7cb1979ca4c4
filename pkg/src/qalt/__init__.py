"""Exact-arithmetic link invariants and the deg Q < det obstruction."""

from .poly import (
    GaussianInt,
    HalfLaurent,
    IntLaurent,
    breadth_t,
    chebyshev_S,
    eval_at_s_equals_i,
    sigma,
)

__all__ = [
    "GaussianInt",
    "HalfLaurent",
    "IntLaurent",
    "breadth_t",
    "chebyshev_S",
    "eval_at_s_equals_i",
    "sigma",
]
