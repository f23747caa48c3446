"""Exact toolkit for extremal hypergraph families.

Builds structured families (sunflowers, multiplicity constructions,
level-intersecting families, inversive-plane duals), computes largest
pattern-free subfamilies by exact search, and evaluates the closed-form
bounds and matrix identities governing them, emitting machine-checkable
certificates throughout.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundsReport,
    RegionVerdict,
    alpha_of,
    bounds_eval,
    classify_region,
    format_region_csv,
    necessary_f2_check,
    region_grid,
)
from .certify import Certificate
from .constructions import (
    build_fdk,
    build_level_intersecting,
    build_sunflower,
    merge_families,
    pad_family,
    take_subfamily,
    verify_uniform_pattern,
)
from .core import (
    Even,
    Family,
    Uneven,
    VennProfile,
    a_from_b,
    b_from_a,
    eip_extract,
    evenness_classify,
    hypergraphs_isomorphic,
    is_pattern_copy,
    is_sunflower,
    venn_profile,
)
from .errors import HFreeError
from .geometry import (
    InversivePlane,
    build_plane,
    dual_family,
    incidence_counts,
    verify_3design,
)
from .linalg import (
    MatrixSuite,
    a_from_d,
    bdw_identity_check,
    binom_ext,
    build_matrix_suite,
    d_from_b,
    is_feasible,
    vdm_identity_check,
)
from .oracle import (
    ConflictHypergraph,
    OracleResult,
    Pattern,
    bvector_pattern,
    conflict_hypergraph,
    ex_exact,
    hfree_extract,
    homogeneous_extract,
    isomorphism_pattern,
    max_independent_spencer,
    sunflower_extract,
    sunflower_pattern,
)
from .storage import dumps_family, load_family, loads_family, save_family

__all__ = [
    "__version__",
    "BoundsReport",
    "Certificate",
    "ConflictHypergraph",
    "Even",
    "Family",
    "HFreeError",
    "InversivePlane",
    "MatrixSuite",
    "OracleResult",
    "Pattern",
    "RegionVerdict",
    "Uneven",
    "VennProfile",
    "a_from_b",
    "a_from_d",
    "alpha_of",
    "b_from_a",
    "bdw_identity_check",
    "binom_ext",
    "bounds_eval",
    "build_fdk",
    "build_level_intersecting",
    "build_matrix_suite",
    "build_plane",
    "build_sunflower",
    "bvector_pattern",
    "classify_region",
    "conflict_hypergraph",
    "d_from_b",
    "dual_family",
    "dumps_family",
    "eip_extract",
    "evenness_classify",
    "ex_exact",
    "format_region_csv",
    "hfree_extract",
    "homogeneous_extract",
    "hypergraphs_isomorphic",
    "incidence_counts",
    "is_feasible",
    "is_pattern_copy",
    "is_sunflower",
    "isomorphism_pattern",
    "load_family",
    "loads_family",
    "max_independent_spencer",
    "merge_families",
    "necessary_f2_check",
    "pad_family",
    "region_grid",
    "save_family",
    "sunflower_extract",
    "sunflower_pattern",
    "take_subfamily",
    "vdm_identity_check",
    "venn_profile",
    "verify_3design",
    "verify_uniform_pattern",
]
