"""Mechanical verification of a family of partition and overpartition identities.

Both sides of each identity are computed two independent ways: brute-force
enumeration under the combinatorial rules, and exact truncated q-series
arithmetic (infinite products, a q-difference recursion, and a formal
Appell-style limit).  Verifiers report agreement or the first
counterexample.
"""

from ._backend import BACKEND
from .appell import (
    FormalLimit,
    RSequence,
    StabilizationError,
    appell_limit,
    build_R,
    check_functional_equation,
    closed_product_F_coefficient,
    congruence_product_series,
    theorem_product,
)
from .overpartitions import (
    Overpartition,
    count_Dk,
    count_pj,
    count_rj,
    enumerate_overpartitions,
    is_Dk_admissible,
    specialize_overpartition,
)
from .partitions import (
    count_B,
    count_C,
    count_schur_gap,
    count_schur_product,
    enumerate_partitions,
)
from .series import (
    BivariateSeries,
    Monomial,
    QSeries,
    pochhammer_inf,
    specialize_a,
    substitute_q_power,
)
from .verify import (
    VerificationReport,
    golden_example_n10,
    verify_all,
    verify_corollary,
    verify_machinery,
    verify_overpartition,
    verify_schur,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BivariateSeries",
    "FormalLimit",
    "Monomial",
    "Overpartition",
    "QSeries",
    "RSequence",
    "StabilizationError",
    "VerificationReport",
    "appell_limit",
    "build_R",
    "check_functional_equation",
    "closed_product_F_coefficient",
    "congruence_product_series",
    "count_B",
    "count_C",
    "count_Dk",
    "count_pj",
    "count_rj",
    "count_schur_gap",
    "count_schur_product",
    "enumerate_overpartitions",
    "enumerate_partitions",
    "golden_example_n10",
    "is_Dk_admissible",
    "pochhammer_inf",
    "specialize_a",
    "specialize_overpartition",
    "substitute_q_power",
    "theorem_product",
    "verify_all",
    "verify_corollary",
    "verify_machinery",
    "verify_overpartition",
    "verify_schur",
]
