"""Bockstein bases of abelian and nilpotent groups, and the dimension
calculus built on them.

The package computes the Bockstein basis (the set of coefficient groups
among Q, Z/p, Z/p^inf and Z_(p) attached to a group), evaluates
cohomological-dimension profiles by the sup formula over that basis, and
cross-checks the algebra against a brute-force oracle for finite groups
given as multiplication tables.
"""

from .abelian import (
    AbelianGroup,
    Adic,
    Atom,
    BocksteinBasis,
    Cyclic,
    Decomposition,
    Divisibility,
    Localized,
    LocalizedAt,
    Pruefer,
    Q,
    Z,
    basis_of_abelian,
    decompose,
    divisibility,
    finite_cyclic,
    tensor_with,
    tor_with,
)
from .catalog import CatalogEntry, build, default_entries, resolve
from .dimension import (
    INF,
    DimensionProfile,
    PrimeFamily,
    RULES,
    RuleViolation,
    dim_at_most_one,
    dim_of_abelian,
    sup_over_basis,
    validate_profile,
)
from .errors import InvalidTableError, NotNilpotentError, UnwitnessedTowerError
from .homology import CorollaryReport, corollary_report, first_homology
from .kernels import backend_name
from .nilpotent import (
    AbelianDesc,
    BasisSplit,
    FiniteDesc,
    GroupDesc,
    GroupPredicates,
    TowerDesc,
    basis_from_divisibility,
    basis_of,
    group_predicates,
    nilpotency_class,
    ntd_equal,
    ntd_issubset,
    split_top,
    split_torsion_divisible,
    tower,
)
from .oracle import (
    FiniteGroup,
    SubgroupSet,
    abelian_invariants,
    abelianization,
    basis_of_table,
    center,
    direct_product,
    lower_central_layers,
    lower_central_series,
    normal_closure,
    power_map,
    primary_decomposition,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    validate_table,
)
from .primes import PrimeSet, is_prime, prime_factors, primes_up_to
from .suites import SUITE_ORDER, SuiteFailure, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianDesc",
    "AbelianGroup",
    "Adic",
    "Atom",
    "BasisSplit",
    "BocksteinBasis",
    "CatalogEntry",
    "CorollaryReport",
    "Cyclic",
    "Decomposition",
    "DimensionProfile",
    "Divisibility",
    "FiniteDesc",
    "FiniteGroup",
    "GroupDesc",
    "GroupPredicates",
    "INF",
    "InvalidTableError",
    "Localized",
    "LocalizedAt",
    "NotNilpotentError",
    "PrimeFamily",
    "PrimeSet",
    "Pruefer",
    "Q",
    "RULES",
    "RuleViolation",
    "SUITE_ORDER",
    "SubgroupSet",
    "SuiteFailure",
    "SuiteResult",
    "TowerDesc",
    "UnwitnessedTowerError",
    "Z",
    "abelian_invariants",
    "abelianization",
    "backend_name",
    "basis_from_divisibility",
    "basis_of",
    "basis_of_abelian",
    "basis_of_table",
    "build",
    "center",
    "corollary_report",
    "decompose",
    "default_entries",
    "dim_at_most_one",
    "dim_of_abelian",
    "direct_product",
    "divisibility",
    "finite_cyclic",
    "first_homology",
    "group_predicates",
    "is_prime",
    "lower_central_layers",
    "lower_central_series",
    "nilpotency_class",
    "normal_closure",
    "ntd_equal",
    "ntd_issubset",
    "power_map",
    "primary_decomposition",
    "prime_factors",
    "primes_up_to",
    "quotient",
    "resolve",
    "run_all",
    "run_suite",
    "split_top",
    "split_torsion_divisible",
    "subgroup_as_group",
    "subgroup_closure",
    "sup_over_basis",
    "tensor_with",
    "tor_with",
    "tower",
    "validate_profile",
    "validate_table",
]
