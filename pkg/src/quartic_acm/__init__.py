"""Exact-arithmetic toolkit for line bundles on quartic-type K3 lattices.

Computes intersection numbers, Euler characteristics, effectivity, Zariski
reduction, and full cohomology signatures of divisor classes on even
hyperbolic lattices polarized by a class of square 4; classifies initialized
ACM line bundles by their numeric invariants; and cross-checks the
classification against a brute-force twist-vanishing oracle over certified
finite windows.
"""

from .acm import (
    CASE_PATTERNS,
    Classification,
    TheoremCase,
    TwistWindow,
    classify_numeric,
    is_acm_oracle,
    is_initialized,
    lemma22_sufficient,
    twist_window,
)
from .catalog import (
    CATALOG_NAMES,
    LatticeLoadError,
    builtin,
    lattice_from_dict,
    load_lattice,
    read_lattice_file,
)
from .cohomology import (
    ZariskiDecomposition,
    cohomology,
    is_base_point_free,
    is_k_connected,
    is_nef,
    zariski_reduce,
)
from .cone import (
    Root,
    is_effective,
    is_irreducible_class,
    isotropic_primitives,
    roots_up_to_degree,
)
from .lattice import (
    AdmissibilityReport,
    CohomologySignature,
    DivisorClass,
    PolarizedK3Lattice,
    validate_admissible,
)
from .verify import ClassRecord, VerificationReport, enumerate_effective, verify_theorem

__all__ = [
    "AdmissibilityReport",
    "CASE_PATTERNS",
    "CATALOG_NAMES",
    "ClassRecord",
    "Classification",
    "CohomologySignature",
    "DivisorClass",
    "LatticeLoadError",
    "PolarizedK3Lattice",
    "Root",
    "TheoremCase",
    "TwistWindow",
    "VerificationReport",
    "ZariskiDecomposition",
    "builtin",
    "classify_numeric",
    "cohomology",
    "enumerate_effective",
    "is_acm_oracle",
    "is_base_point_free",
    "is_effective",
    "is_initialized",
    "is_irreducible_class",
    "is_k_connected",
    "is_nef",
    "isotropic_primitives",
    "lattice_from_dict",
    "lemma22_sufficient",
    "load_lattice",
    "read_lattice_file",
    "roots_up_to_degree",
    "twist_window",
    "validate_admissible",
    "verify_theorem",
    "zariski_reduce",
]

__version__ = "0.1.0"
