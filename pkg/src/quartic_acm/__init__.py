"""Exact-arithmetic toolkit for rank-2 aCM bundle data on quartic surfaces:
pfaffian/determinantal representations, degree-8 point-scheme tests and
Picard-lattice stability verdicts."""

from .algebra import ExactMatrix, Polynomial, monomial_basis, poly_parse
from .pfaffian import SkewPolyMatrix, determinant, pfaffian, validate_shape
from .picard import CohomologyFlags, PicardLattice
from .schemes import PointScheme
from .surface import QuarticSurface

__all__ = [
    "ExactMatrix",
    "Polynomial",
    "monomial_basis",
    "poly_parse",
    "SkewPolyMatrix",
    "determinant",
    "pfaffian",
    "validate_shape",
    "CohomologyFlags",
    "PicardLattice",
    "PointScheme",
    "QuarticSurface",
]

__version__ = "0.1.0"
