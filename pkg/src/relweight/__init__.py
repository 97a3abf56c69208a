"""Exact weight and relative weight filtrations of nilpotent operators.

Surface homology, curve systems, pants graphs and representation dimension
counts are built on top of the filtration machinery.
"""
from .filtered import Filtration, FilteredMap
from .linalg import LinearMap, Subspace, echelonize
from .nilwf import (
    CertifiedNonexistent,
    Exists,
    Inconclusive,
    NilpotentOperator,
    construct_relative,
    monodromy_filtration,
    relative_wf_curve_formula,
    verify_relative,
    weight_filtration,
)

__version__ = "0.1.0"

__all__ = [
    "Filtration", "FilteredMap", "LinearMap", "Subspace", "echelonize",
    "NilpotentOperator", "weight_filtration", "monodromy_filtration",
    "construct_relative", "verify_relative", "relative_wf_curve_formula",
    "Exists", "CertifiedNonexistent", "Inconclusive",
]
