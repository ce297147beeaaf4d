"""Brute-force residue sets and the consecutive-pair partition of (Z/p)*.

residue_set is the independent oracle for the whole package: it evaluates a
polynomial at every point of Z_p and collects the distinct outputs. The
partition machinery splits the nonzero residues into the four classes
determined by the quadratic characters of a and a+1, and exposes the
statistics (class sizes, power sums) that the closed forms are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SmallPrime
from .modular import FieldElement, PrimeModulus


@lru_cache(maxsize=64)
def _power_tables(p):
    """(x^2 table, x^4 table) for x = 0..p-1, cached per prime."""
    squares = tuple(x * x % p for x in range(p))
    quartics = tuple(s * s % p for s in squares)
    return squares, quartics


@dataclass(frozen=True)
class BiquadraticPoly:
    """Coefficients (a, c, e) of a*x^4 + c*x^2 + e."""

    a: int
    c: int
    e: int

    @classmethod
    def monic(cls, c, e=0):
        return cls(1, c, e)

    def evaluate(self, x, p):
        s = x * x % p
        return (self.a * s * s + self.c * s + self.e) % p


@dataclass(frozen=True)
class ResidueSummary:
    """A residue set with its cardinality and sum, all mod p.

    elements holds canonical ints in strictly ascending order; the modulus
    rides along so the values stay interpretable.
    """

    modulus: PrimeModulus
    elements: tuple
    cardinality: int
    sum_mod_p: FieldElement

    @classmethod
    def from_values(cls, values, modulus):
        return cls._from_canonical({int(v) % modulus.p for v in values}, modulus)

    @classmethod
    def _from_canonical(cls, values, modulus):
        """Build from a set of already-reduced ints, skipping re-reduction."""
        elements = tuple(sorted(values))
        total = FieldElement(sum(elements), modulus)
        return cls(modulus, elements, len(elements), total)

    def as_set(self):
        return frozenset(self.elements)


def residue_set(f, p):
    """All distinct values of f(x) mod p over x = 0..p-1. The oracle."""
    pp = p.p
    squares, quartics = _power_tables(pp)
    a = f.a % pp
    c = f.c % pp
    e = f.e % pp
    values = {(a * q + c * s + e) % pp for s, q in zip(squares, quartics)}
    return ResidueSummary._from_canonical(values, p)


def restricted_residue_set(beta, constant, domain, p):
    """Distinct values of t^2 + beta*t + constant for t in domain."""
    pp = p.p
    b = int(beta) % pp
    g = int(constant) % pp
    values = {(t * t + b * t + g) % pp for t in map(int, domain)}
    return ResidueSummary._from_canonical(values, p)


@dataclass(frozen=True)
class ResiduePartition:
    """The nonzero residues split by the quadratic characters of a and a+1.

    a0 and a1 are the quadratic residues and non-residues. For i, j in
    {0, 1}, the class (i, j) holds every a with a in a_i whose successor
    a+1 is in a_j; 0 and p-1 belong to no class.
    """

    modulus: PrimeModulus
    a0: frozenset
    a1: frozenset
    a00: frozenset
    a01: frozenset
    a10: frozenset
    a11: frozenset

    def pair_class(self, i, j):
        if i not in (0, 1) or j not in (0, 1):
            raise ValueError(f"class indices must be 0 or 1, got ({i}, {j})")
        return getattr(self, f"a{i}{j}")


@lru_cache(maxsize=64)
def _partition_cached(p):
    squares, _ = _power_tables(p)
    a0 = frozenset(squares[1:])
    a1 = frozenset(range(1, p)) - a0
    classes = {(i, j): set() for i in (0, 1) for j in (0, 1)}
    for a in range(1, p - 1):
        i = 0 if a in a0 else 1
        j = 0 if a + 1 in a0 else 1
        classes[(i, j)].add(a)
    return a0, a1, tuple(frozenset(classes[(i, j)]) for i in (0, 1) for j in (0, 1))


def partition(p):
    """Full ResiduePartition of Z_p."""
    a0, a1, (a00, a01, a10, a11) = _partition_cached(p.p)
    return ResiduePartition(p, a0, a1, a00, a01, a10, a11)


def subtraction_sum(p, i, j):
    """Sum of a^2 + a over the pair class (i, j), mod p.

    For p >= 7 this always equals 32^-1 for the classes (0,0) and (1,1)
    and -(32^-1) for (0,1) and (1,0); the closed forms rely on that.
    """
    if p.p < 7:
        raise SmallPrime(f"subtraction sums are only asserted for p >= 7, got {p.p}")
    members = partition(p).pair_class(i, j)
    return FieldElement(sum(a * a + a for a in members), p)


def a00_generation_list(p):
    """The length p-1 list [((w^-1 - w) / 2)^2 mod p] for w = 1..p-1.

    For p >= 7 the list covers each element of the (0,0) pair class exactly
    four times; the only other values that can appear are 0 and -1.
    """
    pp = p.p
    inv2 = (pp + 1) // 2
    out = []
    for w in range(1, pp):
        winv = pow(w, pp - 2, pp)
        half_diff = (winv - w) * inv2 % pp
        out.append(FieldElement(half_diff * half_diff, p))
    return out


def faulhaber_check(p, k):
    """Sum of i^k for i = 1..p-1, mod p. Zero for k in {1, 2, 4}, p >= 7."""
    if k not in (1, 2, 4):
        raise ValueError(f"k must be one of 1, 2, 4, got {k}")
    pp = p.p
    return FieldElement(sum(pow(i, k, pp) for i in range(1, pp)), p)
