"""Exact Clebsch-Gordan decompositions and Green rings of minimal Hopf quivers."""

from ._core import (
    QuiverContext,
    RingTagMismatch,
    decompose,
    decompose_oracle,
    fib2,
    fib3,
    from_poly,
    gr_mul,
    tensor_dims,
    to_poly,
    verify_presentation,
    verify_sweep,
)

__all__ = [
    "QuiverContext",
    "RingTagMismatch",
    "decompose",
    "decompose_oracle",
    "fib2",
    "fib3",
    "from_poly",
    "gr_mul",
    "tensor_dims",
    "to_poly",
    "verify_presentation",
    "verify_sweep",
]
