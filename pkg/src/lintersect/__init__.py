"""lintersect: exact tools for restricted-intersection set families.

Binomial supports of annihilator polynomials, shadow/non-shadow censuses,
the multilevel and coefficient-sensitive intersection bounds, rank-verified
independence witnesses, and exhaustive extremal search at desk scale.
"""

from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    TheoremId,
    abs_bound,
    check_abs_classic,
    check_almost_initial,
    check_coeff_sensitive,
    check_consecutive,
    check_modular_multilevel,
    check_multilevel,
    check_nonmodular_support,
    unattainability_margin,
)
from .ffpoly import (
    BinomialExpansion,
    Poly,
    annihilator_poly,
    bsupp,
    falling_factorial,
    is_almost_initial,
    is_prime,
    to_binomial_basis,
)
from .search import (
    SearchProblem,
    SearchResult,
    admissible_vertices,
    make_problem,
    max_family,
    sharpness_sweep,
    unattainability_sweep,
)
from .setfam import (
    LevelStats,
    SetFamily,
    check_L_intersecting,
    check_sizes,
    family,
    intersection_profile,
    nonshadow_count,
    nonshadows,
    parse_family,
    format_family,
    shadow,
    union_of_levels,
)
from .witness import (
    Certificate,
    GramWitness,
    MultilinearPoly,
    WitnessFamily,
    build_witness,
    filter_poly,
    gram_witness,
    incidence_independence,
    triangular_polys,
    verify_independence,
    verify_independence_evaluation,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinomialExpansion",
    "BoundReport",
    "Certificate",
    "GramWitness",
    "LevelStats",
    "MultilinearPoly",
    "Poly",
    "SearchProblem",
    "SearchResult",
    "SetFamily",
    "TheoremId",
    "WitnessFamily",
    "abs_bound",
    "admissible_vertices",
    "annihilator_poly",
    "bsupp",
    "build_witness",
    "check_L_intersecting",
    "check_abs_classic",
    "check_almost_initial",
    "check_coeff_sensitive",
    "check_consecutive",
    "check_modular_multilevel",
    "check_multilevel",
    "check_nonmodular_support",
    "check_sizes",
    "falling_factorial",
    "family",
    "filter_poly",
    "format_family",
    "gram_witness",
    "incidence_independence",
    "intersection_profile",
    "is_almost_initial",
    "is_prime",
    "make_problem",
    "max_family",
    "nonshadow_count",
    "nonshadows",
    "parse_family",
    "shadow",
    "sharpness_sweep",
    "to_binomial_basis",
    "triangular_polys",
    "unattainability_margin",
    "unattainability_sweep",
    "union_of_levels",
    "verify_independence",
    "verify_independence_evaluation",
]
