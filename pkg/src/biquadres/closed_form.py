"""Closed forms for the sum of distinct residues of a*x^4 + c*x^2 + e.

Two independent routes produce the coefficient pair (V, W) with
sum = V*c^2 + W*e mod p for monic polynomials with p not dividing c:

  * vw_from_master_table derives V and W from an eight-row table of
    partition statistics (pair-class sums, class sizes, middle-element
    membership), keyed by p mod 8 and the quadratic character of c.
  * vw_from_corollary_table looks the same pair up as hard-coded fractions.

The two must agree for every prime p >= 7; the test suite checks this, and
checks both against the brute-force oracle. Non-monic and p | c inputs are
reduced to the monic case, and p in {3, 5} has its own explicit table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateLeading, SmallPrime, WrongModulus
from .modular import FieldElement, legendre_symbol, mod_inverse
from .residue_sets import BiquadraticPoly, residue_set


@dataclass(frozen=True)
class MasterTableRow:
    """One row of the eight-case summary table, keyed by (p mod 8, chi(c)).

    The two cardinality columns are stored as offsets: the pair class
    (i, j) has (p + card_aij_offset) / 4 elements and a_i minus {-1} has
    (p + card_ai_minus_offset) / 2 elements.
    """

    p_mod8: int
    chi_c: int
    i_index: int
    j_index: int
    middle_in_aij: bool
    subtraction_sum_sign: int
    card_aij_offset: int
    card_ai_minus_offset: int

    def card_aij(self, p):
        return (p + self.card_aij_offset) // 4

    def card_ai_minus(self, p):
        return (p + self.card_ai_minus_offset) // 2


MASTER_TABLE = (
    MasterTableRow(1, +1, 0, 0, True, +1, -5, -3),
    MasterTableRow(3, +1, 0, 1, True, -1, +1, -1),
    MasterTableRow(5, +1, 0, 0, False, +1, -5, -3),
    MasterTableRow(7, +1, 0, 1, False, -1, +1, -1),
    MasterTableRow(1, -1, 1, 1, False, +1, -1, -1),
    MasterTableRow(3, -1, 1, 0, False, -1, -3, -3),
    MasterTableRow(5, -1, 1, 1, True, +1, -1, -1),
    MasterTableRow(7, -1, 1, 0, True, -1, -3, -3),
)

_MASTER_BY_KEY = {(row.p_mod8, row.chi_c): row for row in MASTER_TABLE}

# The same eight cases reduced to explicit fractions (V, W).
COROLLARY_TABLE = {
    (1, +1): (Fraction(-9, 64), Fraction(5, 8)),
    (3, +1): (Fraction(-7, 64), Fraction(7, 8)),
    (5, +1): (Fraction(-1, 64), Fraction(1, 8)),
    (7, +1): (Fraction(1, 64), Fraction(3, 8)),
    (1, -1): (Fraction(-1, 64), Fraction(5, 8)),
    (3, -1): (Fraction(1, 64), Fraction(-1, 8)),
    (5, -1): (Fraction(-9, 64), Fraction(9, 8)),
    (7, -1): (Fraction(-7, 64), Fraction(3, 8)),
}


@dataclass(frozen=True)
class VWPair:
    """Reduced coefficients of sum = V*c^2 + W*e mod p."""

    v: FieldElement
    w: FieldElement


def _require_large(p):
    if p.p < 7:
        raise SmallPrime(f"closed forms here need p >= 7, got {p.p}")


def _check_chi(chi):
    if chi not in (1, -1):
        raise ValueError(f"chi must be +1 or -1, got {chi}")


def vw_from_master_table(p, chi_c):
    """Derive (V, W) from the summary-table row for (p mod 8, chi_c).

    V = -1/2 * (pair-class sum - (-1/4 if the middle element is in the
    class)); W = |a_i \\ {-1}| - 1/2 * (|class| - (1 if middle in class))
    + 1. All arithmetic mod p.
    """
    _require_large(p)
    _check_chi(chi_c)
    row = _MASTER_BY_KEY[(p.p_mod8, chi_c)]
    inv2 = mod_inverse(p.element(2))
    inv32 = mod_inverse(p.element(32))
    pair_sum = inv32 if row.subtraction_sum_sign > 0 else -inv32
    if row.middle_in_aij:
        pair_sum = pair_sum + mod_inverse(p.element(4))
    v = -inv2 * pair_sum
    dup_count = p.element(row.card_aij(p.p))
    if row.middle_in_aij:
        dup_count = dup_count - 1
    w = p.element(row.card_ai_minus(p.p)) - inv2 * dup_count + 1
    return VWPair(v, w)


def fraction_mod(fr, p):
    """A Fraction reduced into the field, via modular inverse."""
    return p.element(fr.numerator) * mod_inverse(p.element(fr.denominator))


def vw_from_corollary_table(p, chi_c):
    """Look (V, W) up as fractions and reduce them mod p."""
    _require_large(p)
    _check_chi(chi_c)
    v_frac, w_frac = COROLLARY_TABLE[(p.p_mod8, chi_c)]
    return VWPair(fraction_mod(v_frac, p), fraction_mod(w_frac, p))


def quartic_residue_count(p):
    """|R_p(x^4)| by counting distinct fourth powers, the oracle way."""
    return residue_set(BiquadraticPoly(1, 0, 0), p).cardinality


def quartic_residue_count_formula(p):
    """|R_p(x^4)| as (p-1)/gcd(4, p-1) + 1; cross-check for the count."""
    return (p.p - 1) // gcd(4, p.p - 1) + 1


def sum_of_residues(f, p):
    """Closed-form sum of the distinct values of f mod p, for p >= 7.

    Dispatch: for p | c the sum is |R_p(x^4)| * e (the x^4 residue set
    shifted by e; its unshifted sum vanishes). Otherwise scale to the
    monic case via R(a*x^4+c*x^2+e) = a * R(x^4 + (c/a)*x^2 + e/a) and
    apply V*c^2 + W*e with chi taken from the scaled c.
    """
    _require_large(p)
    pp = p.p
    a = f.a % pp
    if a == 0:
        raise DegenerateLeading("leading coefficient is 0 mod p")
    c = f.c % pp
    e = f.e % pp
    if c == 0:
        return p.element(quartic_residue_count(p) * e)
    ainv = pow(a, pp - 2, pp)
    scaled_c = ainv * c % pp
    scaled_e = ainv * e % pp
    chi = legendre_symbol(scaled_c, p)
    vw = vw_from_master_table(p, chi)
    return p.element(a) * (vw.v * (scaled_c * scaled_c) + vw.w * scaled_e)


# For p in {3, 5} and p not dividing c, the sum of distinct residues of
# x^4 + c*x^2 + e is u*c^2 + u*e with u tabulated by (p, chi(c)).
_SMALL_PRIME_COEFF = {
    (3, 1): (2, 2),
    (3, -1): (0, 1),
    (5, 1): (2, 2),
    (5, -1): (3, 3),
}


def sum_of_residues_small_prime(f, p):
    """Explicit sum table for the excluded primes p = 3 and p = 5.

    Only monic input is supported. For p | c there is no tabulated form;
    the brute-force oracle answers directly.
    """
    if p.p not in (3, 5):
        raise WrongModulus(f"small-prime table covers p in {{3, 5}}, got {p.p}")
    if f.a % p.p != 1:
        raise ValueError("small-prime table covers monic polynomials only")
    c = f.c % p.p
    e = f.e % p.p
    if c == 0:
        return residue_set(f, p).sum_mod_p
    chi = legendre_symbol(c, p)
    vc, ve = _SMALL_PRIME_COEFF[(p.p, chi)]
    return p.element(vc * c * c + ve * e)
