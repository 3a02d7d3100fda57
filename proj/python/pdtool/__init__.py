"""Exact cohomology of finite groups, periodicity, Swan counts and connectivity estimates."""

from ._core import (
    CapacityError,
    Group,
    InconsistencyError,
    classify_hreps,
    cohomology,
    count_free_invertible_spectra,
    explain_isov_connectivity,
    has_noncyclic_abelian_subgroup,
    homology,
    is_periodic_via_abelian,
    is_periodic_via_sylow,
    is_unit_degree,
    isov_space_connectivity,
    period,
    periodicity_report,
    run_cli,
    smith_normal_form,
    sylow_order,
)

__all__ = [
    "CapacityError",
    "Group",
    "InconsistencyError",
    "classify_hreps",
    "cohomology",
    "count_free_invertible_spectra",
    "explain_isov_connectivity",
    "has_noncyclic_abelian_subgroup",
    "homology",
    "is_periodic_via_abelian",
    "is_periodic_via_sylow",
    "is_unit_degree",
    "isov_space_connectivity",
    "period",
    "periodicity_report",
    "run_cli",
    "smith_normal_form",
    "sylow_order",
]
