"""Exact computations with the generalised checkerboard lattices L(k, m, n)."""

from .core import (
    LatticeParams,
    LatticeVector,
    contains,
    coset_representative,
    det_lattice,
    gram_matrix,
    inner,
    latitude,
    normalize_params,
    signature,
)

__all__ = [
    "LatticeParams",
    "LatticeVector",
    "contains",
    "coset_representative",
    "det_lattice",
    "gram_matrix",
    "inner",
    "latitude",
    "normalize_params",
    "signature",
]
__version__ = "0.1.0"
