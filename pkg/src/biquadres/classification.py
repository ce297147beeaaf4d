"""Classification of the set of residue sums S(p).

S(p) collects the sums of the distinct values of x^4 + c*x^2 as c runs
over Z_p. For p >= 7 it always equals one of four canonical sets: the
whole field, the squares, the fourth powers, or the squares that are not
fourth powers together with 0. Which one is decided by a single quadratic
character (of 7 when p = 3 mod 4, of 3 when p = 1 mod 4) plus p mod 8,
or equivalently by the residue class of p mod 28 / mod 24. For p in
{3, 5} the set is simply enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import SmallPrime
from .modular import legendre_symbol
from .residue_sets import BiquadraticPoly, ResidueSummary, residue_set


class SumSetKind(Enum):
    FULL_FIELD = "full_field"
    SQUARES = "squares"
    FOURTH_POWERS = "fourth_powers"
    SQUARES_MINUS_FOURTH_POWERS_WITH_ZERO = "squares_minus_fourth_powers_with_zero"
    EXPLICIT_SMALL_PRIME = "explicit_small_prime"


@dataclass(frozen=True)
class DispatchRoute:
    """Which branch decided the classification, and on what evidence.

    Only the fields of the branch actually taken are populated; the rest
    stay None.
    """

    minus_one_in_sum_set: bool
    seven_is_qr: bool | None = None
    three_is_qr: bool | None = None
    p_mod28: int | None = None
    p_mod24: int | None = None


@dataclass(frozen=True)
class SumSetClassification:
    kind: SumSetKind
    witness_set: ResidueSummary
    dispatch_route: DispatchRoute


def set_of_sums_bruteforce(p):
    """S(p) computed entirely by the oracle, one c at a time."""
    sums = {residue_set(BiquadraticPoly(1, c, 0), p).sum_mod_p.value for c in range(p.p)}
    return ResidueSummary.from_values(sums, p)


def canonical_set(kind, p):
    """Materialize one of the four canonical sets by direct enumeration."""
    pp = p.p
    if kind is SumSetKind.FULL_FIELD:
        return ResidueSummary.from_values(range(pp), p)
    squares = {x * x % pp for x in range(pp)}
    if kind is SumSetKind.SQUARES:
        return ResidueSummary.from_values(squares, p)
    fourths = {s * s % pp for s in squares}
    if kind is SumSetKind.FOURTH_POWERS:
        return ResidueSummary.from_values(fourths, p)
    if kind is SumSetKind.SQUARES_MINUS_FOURTH_POWERS_WITH_ZERO:
        return ResidueSummary.from_values((squares - fourths) | {0}, p)
    raise ValueError(f"no canonical set for {kind}")


def classify(p):
    """Name S(p) via the quadratic-character dichotomies.

    p = 3 mod 4: full field when 7 is a QR, else the squares. p = 1 mod 4:
    the squares when 3 is a QR; otherwise the fourth powers for p = 5 mod
    8 and squares-minus-fourth-powers-with-zero for p = 1 mod 8. For p in
    {3, 5} no canonical kind applies and the literal set is carried.
    """
    if p.p in (3, 5):
        witness = set_of_sums_bruteforce(p)
        route = DispatchRoute(minus_one_in_sum_set=(p.p - 1) in witness.as_set())
        return SumSetClassification(SumSetKind.EXPLICIT_SMALL_PRIME, witness, route)
    if p.p_mod4 == 3:
        seven_is_qr = legendre_symbol(7, p) == 1
        kind = SumSetKind.FULL_FIELD if seven_is_qr else SumSetKind.SQUARES
        route = DispatchRoute(minus_one_in_sum_set=seven_is_qr, seven_is_qr=seven_is_qr)
    else:
        three_is_qr = legendre_symbol(3, p) == 1
        if three_is_qr:
            kind = SumSetKind.SQUARES
        elif p.p_mod8 == 5:
            kind = SumSetKind.FOURTH_POWERS
        else:
            kind = SumSetKind.SQUARES_MINUS_FOURTH_POWERS_WITH_ZERO
        route = DispatchRoute(minus_one_in_sum_set=three_is_qr, three_is_qr=three_is_qr)
    return SumSetClassification(kind, canonical_set(kind, p), route)


_MOD28_FULL = frozenset({3, 19, 27})
_MOD28_SQUARES = frozenset({7, 11, 15, 23})
_MOD24_SQUARES = frozenset({1, 13})
_MOD24_FOURTHS = frozenset({5, 21})
_MOD24_MIXED = frozenset({9, 17})


def classify_by_residue_class(p):
    """Name S(p) from the residue class of p alone, no symbol computation.

    Uses p mod 28 when p = 3 mod 4 and p mod 24 when p = 1 mod 4.
    """
    if p.p < 7:
        raise SmallPrime(f"residue-class table starts at p = 7, got {p.p}")
    if p.p_mod4 == 3:
        r = p.p % 28
        kind = SumSetKind.FULL_FIELD if r in _MOD28_FULL else SumSetKind.SQUARES
        route = DispatchRoute(minus_one_in_sum_set=r in _MOD28_FULL, p_mod28=r)
    else:
        r = p.p % 24
        if r in _MOD24_SQUARES:
            kind = SumSetKind.SQUARES
        elif r in _MOD24_FOURTHS:
            kind = SumSetKind.FOURTH_POWERS
        else:
            kind = SumSetKind.SQUARES_MINUS_FOURTH_POWERS_WITH_ZERO
        route = DispatchRoute(minus_one_in_sum_set=r in _MOD24_SQUARES, p_mod24=r)
    return SumSetClassification(kind, canonical_set(kind, p), route)
