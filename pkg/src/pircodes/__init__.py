"""Binary t-server PIR codes: verification, constructions, search, and bounds.

A t-server PIR code is an [n, k] binary linear code in which every
information symbol has t mutually disjoint recovering sets, so any of t
groups of code symbols can reproduce it. This package certifies that
property exactly, builds codes from subset collections, applies the
standard lengthening/extension transformations, searches for
small-blocklength codes by lexicographic growth, and carries reference
blocklength tables for comparison.
"""

from .gf2 import BitVector, GenMatrix, is_systematic, min_distance, rank
from .verify import (
    PirCertificate,
    RecoveringSet,
    Verdict,
    check_certificate,
    enumerate_recovering_sets,
    verify_pir,
)
from .steiner import (
    Collection,
    StCertificate,
    StVerdict,
    StWitness,
    build_systematic,
    check_property_st,
    check_steiner_cover,
    collection_from_matrix,
    st_recovering_sets,
)
from .constructions import (
    concat_availability,
    direct_sum,
    even_extend,
    lengthen_extend,
    lengthen_extend_odd,
    puncture,
    s5_lengthen,
    shorten,
)
from .search import (
    SearchConfig,
    SearchReport,
    grow_once,
    lexical_next,
    run_campaign,
    run_lexical_growth,
)
from .bounds import (
    BoundsEntry,
    compare_found,
    pir_lower_bound,
    reference_table,
    upper_bound_t6,
)

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "GenMatrix",
    "is_systematic",
    "min_distance",
    "rank",
    "PirCertificate",
    "RecoveringSet",
    "Verdict",
    "check_certificate",
    "enumerate_recovering_sets",
    "verify_pir",
    "Collection",
    "StCertificate",
    "StVerdict",
    "StWitness",
    "build_systematic",
    "check_property_st",
    "check_steiner_cover",
    "collection_from_matrix",
    "st_recovering_sets",
    "concat_availability",
    "direct_sum",
    "even_extend",
    "lengthen_extend",
    "lengthen_extend_odd",
    "puncture",
    "s5_lengthen",
    "shorten",
    "SearchConfig",
    "SearchReport",
    "grow_once",
    "lexical_next",
    "run_campaign",
    "run_lexical_growth",
    "BoundsEntry",
    "compare_found",
    "pir_lower_bound",
    "reference_table",
    "upper_bound_t6",
]
