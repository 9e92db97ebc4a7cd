"""MDS generalized Reed-Solomon codes with one-dimensional Euclidean hull."""

from .code import Certificate, CertificationError, LinearCode, certify, hull_dim, min_distance
from .constructions import (ConstructionError, HullCode, PreconditionError, build_ab,
                            build_generalized, construct, dualize, eval_set)
from .gf import GF, FieldError
from .grs import GrsSpec, grs_dual, grs_generator
from .poly import Poly

__all__ = [
    "GF", "FieldError", "Poly", "LinearCode", "Certificate", "CertificationError", "certify",
    "hull_dim", "min_distance", "GrsSpec", "grs_generator", "grs_dual", "HullCode",
    "ConstructionError", "PreconditionError", "build_ab", "build_generalized", "construct",
    "dualize", "eval_set",
]
