"""Capability of finite 2-generated p-groups of nilpotency class two."""

from .capability import (
    CapabilityVerdict,
    Reason,
    Status,
    classify_capable,
    corollary2_check,
    cross_validate,
    lemma3_reduce,
    theorem_a_check,
    theorem_b_decide,
    witness_search,
)
from .errors import ConsistencyError, InputError, ParseError, PgcapError, ResourceError
from .families import (
    FamilyParams,
    build_extraspecial,
    build_family,
    capability_condition,
    enumerate_2gen_class2,
)
from .isomorphism import are_isomorphic, fingerprint
from .kernel import KERNEL
from .pcgroup import (
    PcPresentation,
    check_consistency,
    format_presentation,
    parse_presentation,
    read_presentation,
    write_presentation,
)
from .structure import (
    center,
    derived_subgroup,
    frattini,
    lower_central_series,
    minimal_generators,
    nilpotency_class,
    quotient,
    upper_central_series,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityVerdict",
    "ConsistencyError",
    "FamilyParams",
    "InputError",
    "KERNEL",
    "ParseError",
    "PcPresentation",
    "PgcapError",
    "Reason",
    "ResourceError",
    "Status",
    "are_isomorphic",
    "build_extraspecial",
    "build_family",
    "capability_condition",
    "center",
    "check_consistency",
    "classify_capable",
    "corollary2_check",
    "cross_validate",
    "derived_subgroup",
    "enumerate_2gen_class2",
    "fingerprint",
    "format_presentation",
    "frattini",
    "lemma3_reduce",
    "lower_central_series",
    "minimal_generators",
    "nilpotency_class",
    "parse_presentation",
    "quotient",
    "read_presentation",
    "theorem_a_check",
    "theorem_b_decide",
    "upper_central_series",
    "witness_search",
    "write_presentation",
]
