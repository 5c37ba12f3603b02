"""Exact computational models for rank-3 Jordan algebras, their rank
stratification, the associated hermitian Lie algebras, and the dual-pair
momentum maps that realize the strata by reduction."""

from .scalars import Scalar, RingMismatch
from .cayley_dickson import CDNumber, cd_mul, cd_conj, cd_real, cd_norm, cd_associator
from .jordan import (
    JordanElement,
    jordan_mul,
    trace,
    trace_form,
    det,
    sharp,
    sigma,
    jordan_rank,
    quadratic_rep,
    pfaffian,
)

__all__ = [
    "Scalar",
    "RingMismatch",
    "CDNumber",
    "cd_mul",
    "cd_conj",
    "cd_real",
    "cd_norm",
    "cd_associator",
    "JordanElement",
    "jordan_mul",
    "trace",
    "trace_form",
    "det",
    "sharp",
    "sigma",
    "jordan_rank",
    "quadratic_rep",
    "pfaffian",
]
