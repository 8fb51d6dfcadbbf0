"""Exact f/h-vector calculus for relative simplicial complexes and Minkowski sums."""

from ._relsr import (
    betti,
    cyclic_f_vector,
    is_buchsbaum,
    is_cohen_macaulay,
    nb_f_bound,
    schenzel,
    stats,
)

__all__ = [
    "betti",
    "cyclic_f_vector",
    "is_buchsbaum",
    "is_cohen_macaulay",
    "nb_f_bound",
    "schenzel",
    "stats",
]
