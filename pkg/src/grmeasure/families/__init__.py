"""Constructed module families and dimension-vector arithmetic."""

from __future__ import annotations

from .bimodule import BimoduleSpec, bimodule_preprojective_dims
from .coxeter import cartan_matrix, coxeter_matrix, preprojective_dim_sequence, tau_inverse_dim
from .kronecker import (
    KRONECKER2,
    TubeHandle,
    is_kronecker2,
    kronecker_indec_inventory,
    kronecker_preinjective,
    kronecker_preprojective,
    kronecker_quiver,
    kronecker_regular,
    subspace_quiver,
)
from .polys import TubeParameter, monic_irreducibles, parse_parameter
from .tubes import four_subspace_tube_module, m_filtration, pruefer_measure, unique_m_filtration_certificate

__all__ = [
    "BimoduleSpec",
    "KRONECKER2",
    "TubeHandle",
    "TubeParameter",
    "bimodule_preprojective_dims",
    "cartan_matrix",
    "coxeter_matrix",
    "four_subspace_tube_module",
    "is_kronecker2",
    "kronecker_indec_inventory",
    "kronecker_preinjective",
    "kronecker_preprojective",
    "kronecker_quiver",
    "kronecker_regular",
    "m_filtration",
    "monic_irreducibles",
    "parse_parameter",
    "preprojective_dim_sequence",
    "pruefer_measure",
    "subspace_quiver",
    "tau_inverse_dim",
    "unique_m_filtration_certificate",
]
