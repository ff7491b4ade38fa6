"""Finite bounded lattices, closure/interior operators, and uninorm construction."""

from .lattice import BoundedLattice, IntervalSpec, build_lattice
from .unary import (
    CLOSURE,
    INTERIOR,
    UnaryOpTable,
    dualize_operator,
    identity_operator,
    pointwise_leq_on,
    range_avoids,
    validate_unary,
)
from .binop import (
    FullBinOpTable,
    PartialBinOpTable,
    TCONORM,
    TNORM,
    check_associativity_partitioned,
    classify,
    join_tconorm,
    meet_tnorm,
    strictness_check,
    validate_partial,
    validate_uninorm,
)
from .construct import (
    ConstructionSpec,
    Family,
    RegionLabel,
    check_characteristic,
    check_hypotheses,
    construct,
    reference_karacal_mesiar,
    region_of,
    structural_class_predicate,
)
from .documents import (
    export_dot,
    parse_binop,
    parse_lattice,
    parse_operator,
    render_table,
    serialize_binop,
    serialize_lattice,
    serialize_operator,
)
from .search import (
    SearchConstraints,
    brute_force_uninorms,
    enumerate_admissible_pairs,
    enumerate_partial_binops,
    enumerate_unary,
)

__all__ = [
    "BoundedLattice",
    "IntervalSpec",
    "build_lattice",
    "CLOSURE",
    "INTERIOR",
    "UnaryOpTable",
    "validate_unary",
    "identity_operator",
    "pointwise_leq_on",
    "range_avoids",
    "dualize_operator",
    "PartialBinOpTable",
    "FullBinOpTable",
    "TNORM",
    "TCONORM",
    "validate_partial",
    "validate_uninorm",
    "check_associativity_partitioned",
    "classify",
    "strictness_check",
    "join_tconorm",
    "meet_tnorm",
    "ConstructionSpec",
    "Family",
    "RegionLabel",
    "check_hypotheses",
    "check_characteristic",
    "construct",
    "region_of",
    "reference_karacal_mesiar",
    "structural_class_predicate",
    "parse_lattice",
    "serialize_lattice",
    "parse_operator",
    "serialize_operator",
    "parse_binop",
    "serialize_binop",
    "render_table",
    "export_dot",
    "SearchConstraints",
    "enumerate_unary",
    "enumerate_admissible_pairs",
    "enumerate_partial_binops",
    "brute_force_uninorms",
]
