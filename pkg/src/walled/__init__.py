"""Irreps of the algebra of permutation operators partially transposed on the last factor."""

from .irreps import (
    DegenerateGramError,
    EmbeddingContext,
    chi,
    degenerate_basis,
    f_ab,
    f_ab_inverse,
    f_c,
    generators,
    gram,
    irrep_transposed,
    irrep_untransposed,
    represent,
)
from .kernels import BACKEND
from .permgroup import Partition, Permutation, classify, compose, enumerate_sab

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegenerateGramError",
    "EmbeddingContext",
    "Partition",
    "Permutation",
    "chi",
    "classify",
    "compose",
    "degenerate_basis",
    "enumerate_sab",
    "f_ab",
    "f_ab_inverse",
    "f_c",
    "generators",
    "gram",
    "irrep_transposed",
    "irrep_untransposed",
    "represent",
]
