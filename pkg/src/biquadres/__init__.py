"""Residue sets of biquadratic polynomials modulo primes.

Core objects: a brute-force oracle for the residue set of a*x^4+c*x^2+e
mod p, closed forms for the sum of the distinct residues, the partition
of (Z/p)* by quadratic characters of consecutive elements, and the
classification of the set of residue sums S(p).
"""

from .classification import (
    DispatchRoute,
    SumSetClassification,
    SumSetKind,
    canonical_set,
    classify,
    classify_by_residue_class,
    set_of_sums_bruteforce,
)
from .closed_form import (
    COROLLARY_TABLE,
    MASTER_TABLE,
    MasterTableRow,
    VWPair,
    fraction_mod,
    quartic_residue_count,
    quartic_residue_count_formula,
    sum_of_residues,
    sum_of_residues_small_prime,
    vw_from_corollary_table,
    vw_from_master_table,
)
from .errors import DegenerateLeading, NotPrime, SmallPrime, WrongModulus, ZeroInverse
from .modular import (
    FieldElement,
    PrimeModulus,
    is_prime,
    legendre_symbol,
    mod_inverse,
    mod_pow,
    power_residue_symbol,
    primes_in_range,
)
from .residue_sets import (
    BiquadraticPoly,
    ResiduePartition,
    ResidueSummary,
    a00_generation_list,
    faulhaber_check,
    partition,
    residue_set,
    restricted_residue_set,
    subtraction_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BiquadraticPoly",
    "COROLLARY_TABLE",
    "DegenerateLeading",
    "DispatchRoute",
    "FieldElement",
    "MASTER_TABLE",
    "MasterTableRow",
    "NotPrime",
    "PrimeModulus",
    "ResiduePartition",
    "ResidueSummary",
    "SmallPrime",
    "SumSetClassification",
    "SumSetKind",
    "VWPair",
    "WrongModulus",
    "ZeroInverse",
    "a00_generation_list",
    "canonical_set",
    "classify",
    "classify_by_residue_class",
    "faulhaber_check",
    "fraction_mod",
    "is_prime",
    "legendre_symbol",
    "mod_inverse",
    "mod_pow",
    "partition",
    "power_residue_symbol",
    "primes_in_range",
    "quartic_residue_count",
    "quartic_residue_count_formula",
    "residue_set",
    "restricted_residue_set",
    "set_of_sums_bruteforce",
    "subtraction_sum",
    "sum_of_residues",
    "sum_of_residues_small_prime",
    "vw_from_corollary_table",
    "vw_from_master_table",
]
