"""Gabriel-Roiter measures, submodules, filtrations and the checks built on them."""

from __future__ import annotations

from .engine import (
    GRFiltration,
    SubmoduleLattice,
    all_gr_filtrations,
    gr_filtration,
    gr_measure,
    gr_submodules,
    is_gr_inclusion,
    is_piling,
    is_piling_oracle,
)
from .measure import GRMeasure, format_measure, measure_compare, measure_to_rational
from .registry import IndecRegistry, InventoryItem, register_indecomposables

__all__ = [
    "GRFiltration",
    "GRMeasure",
    "IndecRegistry",
    "InventoryItem",
    "SubmoduleLattice",
    "all_gr_filtrations",
    "format_measure",
    "gr_filtration",
    "gr_measure",
    "gr_submodules",
    "is_gr_inclusion",
    "is_piling",
    "is_piling_oracle",
    "measure_compare",
    "measure_to_rational",
    "register_indecomposables",
]

from .bounds import (  # noqa: E402
    AlgebraBounds,
    Verdict,
    algebra_bounds,
    check_gr_bound,
    is_irreducible_bounded,
    complement_length_check,
    sing_additivity_check,
    submodule_interval_check,
)
from .takeoff import TakeoffTerm, successor_bound, takeoff_prefix  # noqa: E402

__all__ += [
    "AlgebraBounds",
    "TakeoffTerm",
    "Verdict",
    "algebra_bounds",
    "check_gr_bound",
    "is_irreducible_bounded",
    "complement_length_check",
    "sing_additivity_check",
    "submodule_interval_check",
    "successor_bound",
    "takeoff_prefix",
]
