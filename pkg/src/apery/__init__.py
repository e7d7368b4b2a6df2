"""Exact invariants of numerical semigroups: Apéry sets and tables, tangent cones, Hilbert data."""

from .cone import (
    ConeDecomposition,
    LadderProfile,
    cone_decomposition,
    cone_hilbert_series,
    is_tangent_cone_cm,
    ladder_profile,
    landings,
    nondecreasing_check,
)
from .errors import BadParameter, GcdNotOne, NotAMember, NotMinimal, SemigroupError, UncoveredCase
from .families import (
    Discrepancy,
    DiscrepancyReport,
    FamilySpec,
    Prediction,
    make_almost_maximal,
    make_symmetric,
    make_unbounded,
    predict,
    verify_family,
)
from .semigroup import (
    ElementProfile,
    Factorization,
    NumericalSemigroup,
    apery_set,
    contains,
    element_profile,
    factorizations,
    frobenius,
    is_homogeneous,
    is_symmetric,
    length_set,
    new_semigroup,
    order,
)
from .table import (
    AperyTable,
    HilbertSeries,
    apery_table,
    hilbert_function,
    hilbert_function_direct,
    hilbert_series,
    ideal_power_member,
    reduction_number,
)

__all__ = [
    "AperyTable",
    "BadParameter",
    "ConeDecomposition",
    "Discrepancy",
    "DiscrepancyReport",
    "ElementProfile",
    "Factorization",
    "FamilySpec",
    "GcdNotOne",
    "HilbertSeries",
    "LadderProfile",
    "NotAMember",
    "NotMinimal",
    "NumericalSemigroup",
    "Prediction",
    "SemigroupError",
    "UncoveredCase",
    "apery_set",
    "apery_table",
    "cone_decomposition",
    "cone_hilbert_series",
    "contains",
    "element_profile",
    "factorizations",
    "frobenius",
    "hilbert_function",
    "hilbert_function_direct",
    "hilbert_series",
    "ideal_power_member",
    "is_homogeneous",
    "is_symmetric",
    "is_tangent_cone_cm",
    "ladder_profile",
    "landings",
    "length_set",
    "make_almost_maximal",
    "make_symmetric",
    "make_unbounded",
    "new_semigroup",
    "nondecreasing_check",
    "order",
    "predict",
    "reduction_number",
    "verify_family",
]
