"""Exact computation of factorization invariants of numerical semigroups and
verification of the structural identities of parametrized families
P_n = <w_1 n + r_1, ..., w_k n + r_k>.

Everything is arbitrary-precision integer / exact rational arithmetic.
"""

from .semigroup import AperySet, Semigroup
from .factorizations import (
    FactorizationGraphSummary,
    Relation,
    betti_bound,
    betti_elements,
    connects_under_relations,
    delta_of_element,
    delta_set_up_to,
    factorization_graph,
    factorizations,
    length_set,
    max_min_length,
    minimal_presentation,
    verify_minimal_presentation,
)
from .weighted import (
    RecurrenceCheck,
    WeightedRecurrenceReport,
    WOrdering,
    delta_w_of_element,
    max_delta_w,
    min_delta_w,
    rational_gcd,
    verify_weighted_recurrences,
    w_ordering,
    weighted_delta_profile,
    weighted_delta_union_up_to,
    weighted_extreme_tables,
    weighted_extremes,
    weighted_length,
    weighted_length_set,
)
from .parametric import (
    BettiBijectionReport,
    FastAperyCheck,
    LinearFamily,
    PFTransportReport,
    PolynomialFamily,
    SCAN_INVARIANTS,
    TransportReport,
    VerificationError,
    apery_at_multiple,
    betti_bijection,
    family_delta,
    family_from_spec,
    fast_apery,
    pf_transport,
    phi,
    scan,
    transport_presentation,
    verify_fast_apery,
)
from .quasipoly import FitMismatch, QuasiPolynomial, detect, fit, leading_coefficient

__version__ = "1.0.0"

__all__ = [
    "AperySet",
    "BettiBijectionReport",
    "FactorizationGraphSummary",
    "FastAperyCheck",
    "FitMismatch",
    "LinearFamily",
    "PFTransportReport",
    "PolynomialFamily",
    "QuasiPolynomial",
    "RecurrenceCheck",
    "Relation",
    "SCAN_INVARIANTS",
    "Semigroup",
    "TransportReport",
    "VerificationError",
    "WOrdering",
    "WeightedRecurrenceReport",
    "apery_at_multiple",
    "betti_bijection",
    "betti_bound",
    "betti_elements",
    "connects_under_relations",
    "delta_of_element",
    "delta_set_up_to",
    "delta_w_of_element",
    "detect",
    "factorization_graph",
    "factorizations",
    "family_delta",
    "family_from_spec",
    "fast_apery",
    "fit",
    "leading_coefficient",
    "length_set",
    "max_delta_w",
    "max_min_length",
    "min_delta_w",
    "minimal_presentation",
    "pf_transport",
    "phi",
    "rational_gcd",
    "scan",
    "transport_presentation",
    "verify_fast_apery",
    "verify_minimal_presentation",
    "verify_weighted_recurrences",
    "w_ordering",
    "weighted_delta_profile",
    "weighted_delta_union_up_to",
    "weighted_extreme_tables",
    "weighted_extremes",
    "weighted_length",
    "weighted_length_set",
]
