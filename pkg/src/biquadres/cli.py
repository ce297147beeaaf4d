"""Command-line front end and prime-range verification harness.

Subcommands: sum, vw, set-of-sums, classify, partition-stats, verify.
Every record can be printed as a human-readable line (default) or as one
JSON object per line (--format json). Exit codes: 0 on success/match,
1 on a verification mismatch, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

from .classification import (
    SumSetKind,
    classify,
    classify_by_residue_class,
    set_of_sums_bruteforce,
)
from .closed_form import (
    COROLLARY_TABLE,
    quartic_residue_count,
    quartic_residue_count_formula,
    sum_of_residues,
    sum_of_residues_small_prime,
    vw_from_corollary_table,
    vw_from_master_table,
)
from .modular import PrimeModulus, is_prime, legendre_symbol, mod_inverse, primes_in_range
from .residue_sets import (
    BiquadraticPoly,
    a00_generation_list,
    faulhaber_check,
    partition,
    residue_set,
    subtraction_sum,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# verify sweeps cost O(sum p^2); keep the range at desk scale
MAX_VERIFY_BOUND = 100_000
# below this, verify tries every e instead of sampling
EXHAUSTIVE_E_LIMIT = 61

_KIND_ORDER = tuple(SumSetKind)


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _load_prime(value, minimum):
    if value < minimum or not is_prime(value):
        return None
    return PrimeModulus(value)


def _render(record, fmt):
    if fmt == "json":
        print(json.dumps(record))
        return
    parts = []
    for key, value in record.items():
        if isinstance(value, (list, tuple)):
            value = "[" + ",".join(str(v) for v in value) + "]"
        parts.append(f"{key}={value}")
    print(" ".join(parts))


def cmd_sum(args):
    pm = _load_prime(args.p, 3)
    if pm is None:
        return _fail("--p must be a prime >= 3")
    f = BiquadraticPoly(args.a, args.c, args.e)
    if pm.p in (3, 5):
        if args.a % pm.p != 1:
            return _fail("for p in {3, 5} only monic polynomials (a = 1) are supported")
        closed = sum_of_residues_small_prime(f, pm)
    else:
        if args.a % pm.p == 0:
            return _fail("--a must be nonzero mod p")
        closed = sum_of_residues(f, pm)
    brute = residue_set(f, pm).sum_mod_p
    match = closed == brute
    _render(
        {
            "p": pm.p,
            "a": args.a,
            "c": args.c,
            "e": args.e,
            "closed_form_sum": closed.value,
            "brute_force_sum": brute.value,
            "match": match,
        },
        args.format,
    )
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_vw(args):
    pm = _load_prime(args.p, 7)
    if pm is None:
        return _fail("--p must be a prime >= 7")
    master = vw_from_master_table(pm, args.chi)
    corollary = vw_from_corollary_table(pm, args.chi)
    v_frac, w_frac = COROLLARY_TABLE[(pm.p_mod8, args.chi)]
    match = master.v == corollary.v and master.w == corollary.w
    _render(
        {
            "p": pm.p,
            "chi": args.chi,
            "v_fraction": str(v_frac),
            "w_fraction": str(w_frac),
            "v_master": master.v.value,
            "w_master": master.w.value,
            "v_corollary": corollary.v.value,
            "w_corollary": corollary.w.value,
            "match": match,
        },
        args.format,
    )
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_set_of_sums(args):
    pm = _load_prime(args.p, 3)
    if pm is None:
        return _fail("--p must be a prime >= 3")
    summary = set_of_sums_bruteforce(pm)
    _render(
        {
            "p": pm.p,
            "elements": list(summary.elements),
            "cardinality": summary.cardinality,
            "sum_mod_p": summary.sum_mod_p.value,
        },
        args.format,
    )
    return EXIT_OK


def cmd_classify(args):
    pm = _load_prime(args.p, 3)
    if pm is None:
        return _fail("--p must be a prime >= 3")
    result = classify(pm)
    brute = set_of_sums_bruteforce(pm)
    route = result.dispatch_route
    match = result.witness_set.elements == brute.elements
    _render(
        {
            "p": pm.p,
            "kind": result.kind.value,
            "minus_one_in_sum_set": route.minus_one_in_sum_set,
            "seven_is_qr": route.seven_is_qr,
            "three_is_qr": route.three_is_qr,
            "p_mod28": route.p_mod28,
            "p_mod24": route.p_mod24,
            "witness": list(result.witness_set.elements),
            "bruteforce": list(brute.elements),
            "match": match,
        },
        args.format,
    )
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_partition_stats(args):
    pm = _load_prime(args.p, 7)
    if pm is None:
        return _fail("--p must be a prime >= 7")
    part = partition(pm)
    middle = (pm.p - 1) // 2
    record = {"p": pm.p}
    for i in (0, 1):
        for j in (0, 1):
            record[f"card_a{i}{j}"] = len(part.pair_class(i, j))
    for i in (0, 1):
        for j in (0, 1):
            record[f"sub_sum_a{i}{j}"] = subtraction_sum(pm, i, j).value
    for i in (0, 1):
        for j in (0, 1):
            record[f"middle_in_a{i}{j}"] = middle in part.pair_class(i, j)
    _render(record, args.format)
    return EXIT_OK


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a prime-range sweep; elapsed_ms is informational only
    and never printed, so identical arguments give identical output."""

    prime_range: tuple
    cases_checked: int
    mismatches: tuple
    elapsed_ms: int


def _mismatch(check_name, p, expected, got, c=None, e=None, a=None):
    return {
        "check_name": check_name,
        "p": p,
        "c": c,
        "e": e,
        "a": a,
        "expected": expected,
        "got": got,
    }


def _set_mismatches(check_name, p, expected_set, got_set, **where):
    """Encode a set difference as integers: the smallest missing and the
    smallest unexpected element, -1 standing for none."""
    if expected_set == got_set:
        return []
    missing = min(expected_set - got_set, default=-1)
    extra = min(got_set - expected_set, default=-1)
    return [_mismatch(check_name, p, missing, extra, **where)]


def _e_values(p, e_samples, seed):
    if p <= EXHAUSTIVE_E_LIMIT:
        return list(range(p))
    values = {0, 1, 2, p - 1}
    rng = random.Random(f"{seed}:{p}")
    for _ in range(e_samples):
        values.add(rng.randrange(p))
    return sorted(values)


def _a_samples(pm):
    """1, the smallest quadratic residue > 1, the smallest non-residue."""
    samples = [1]
    for target in (1, -1):
        for a in range(2, pm.p):
            if legendre_symbol(a, pm) == target:
                samples.append(a)
                break
    return samples


def _check_small_prime(pm, cases, mismatches):
    for c in range(pm.p):
        for e in range(pm.p):
            f = BiquadraticPoly(1, c, e)
            expected = residue_set(f, pm).sum_mod_p.value
            got = sum_of_residues_small_prime(f, pm).value
            cases += 1
            if expected != got:
                mismatches.append(_mismatch("small_prime_sum", pm.p, expected, got, c=c, e=e, a=1))
    return cases


def _check_sums(pm, e_samples, seed, cases, mismatches):
    e_values = _e_values(pm.p, e_samples, seed)
    for a in _a_samples(pm):
        for c in range(pm.p):
            for e in e_values:
                f = BiquadraticPoly(a, c, e)
                expected = residue_set(f, pm).sum_mod_p.value
                got = sum_of_residues(f, pm).value
                cases += 1
                if expected != got:
                    mismatches.append(_mismatch("closed_form_sum", pm.p, expected, got, c=c, e=e, a=a))
    return cases


def _check_vw(pm, cases, mismatches):
    for chi in (1, -1):
        master = vw_from_master_table(pm, chi)
        corollary = vw_from_corollary_table(pm, chi)
        for name, got, expected in (
            ("vw_v", master.v.value, corollary.v.value),
            ("vw_w", master.w.value, corollary.w.value),
        ):
            cases += 1
            if expected != got:
                mismatches.append(_mismatch(name, pm.p, expected, got, c=chi))
    return cases


def _expected_pair_class_cards(p):
    quarter = {(i, j): (p - 1) // 4 for i in (0, 1) for j in (0, 1)}
    if p % 8 in (1, 5):
        quarter[(0, 0)] = (p - 5) // 4
    else:
        quarter = {(i, j): (p - 3) // 4 for i in (0, 1) for j in (0, 1)}
        quarter[(0, 1)] = (p + 1) // 4
    return quarter


def _check_partition_stats(pm, cases, mismatches):
    part = partition(pm)
    expected_cards = _expected_pair_class_cards(pm.p)
    inv32 = mod_inverse(pm.element(32))
    for i in (0, 1):
        for j in (0, 1):
            cases += 1
            expected = expected_cards[(i, j)]
            got = len(part.pair_class(i, j))
            if expected != got:
                mismatches.append(_mismatch(f"card_a{i}{j}", pm.p, expected, got))
            cases += 1
            expected_sum = inv32.value if i == j else (-inv32).value
            got_sum = subtraction_sum(pm, i, j).value
            if expected_sum != got_sum:
                mismatches.append(_mismatch(f"sub_sum_a{i}{j}", pm.p, expected_sum, got_sum))
    return cases


def _check_a00_generation(pm, cases, mismatches):
    part = partition(pm)
    counts = {}
    for value in a00_generation_list(pm):
        counts[value.value] = counts.get(value.value, 0) + 1
    a00 = part.a00
    cases += 1
    for member in sorted(a00):
        if counts.get(member, 0) != 4:
            mismatches.append(_mismatch("a00_multiplicity", pm.p, 4, counts.get(member, 0), c=member))
            break
    cases += 1
    allowed = a00 | {0, pm.p - 1}
    stray = sorted(set(counts) - allowed)
    if stray:
        mismatches.append(_mismatch("a00_stray_value", pm.p, -1, stray[0]))
    cases += 1
    minus_one_expected = legendre_symbol(-1, pm) == 1
    minus_one_got = (pm.p - 1) in counts
    if minus_one_expected != minus_one_got:
        mismatches.append(_mismatch("a00_minus_one", pm.p, int(minus_one_expected), int(minus_one_got)))
    return cases


def _check_faulhaber(pm, cases, mismatches):
    for k in (1, 2, 4):
        cases += 1
        got = faulhaber_check(pm, k).value
        if got != 0:
            mismatches.append(_mismatch("faulhaber_zero", pm.p, 0, got, e=k))
    return cases


def _check_quartic_count(pm, cases, mismatches):
    cases += 1
    expected = quartic_residue_count_formula(pm)
    got = quartic_residue_count(pm)
    if expected != got:
        mismatches.append(_mismatch("quartic_count", pm.p, expected, got))
    return cases


def _check_classification(pm, cases, mismatches):
    result = classify(pm)
    brute = set_of_sums_bruteforce(pm)
    cases += 1
    mismatches.extend(
        _set_mismatches("classified_sum_set", pm.p, brute.as_set(), result.witness_set.as_set())
    )
    if pm.p >= 7:
        cases += 1
        by_class = classify_by_residue_class(pm)
        if result.kind is not by_class.kind:
            mismatches.append(
                _mismatch(
                    "classification_dispatch",
                    pm.p,
                    _KIND_ORDER.index(result.kind),
                    _KIND_ORDER.index(by_class.kind),
                )
            )
    return cases


def check_prime(p, e_samples, seed):
    """All per-prime verification checks; returns (cases, mismatches)."""
    pm = PrimeModulus(p)
    cases = 0
    mismatches = []
    if p in (3, 5):
        cases = _check_small_prime(pm, cases, mismatches)
        cases = _check_classification(pm, cases, mismatches)
        return cases, mismatches
    cases = _check_sums(pm, e_samples, seed, cases, mismatches)
    cases = _check_vw(pm, cases, mismatches)
    cases = _check_partition_stats(pm, cases, mismatches)
    cases = _check_a00_generation(pm, cases, mismatches)
    cases = _check_faulhaber(pm, cases, mismatches)
    cases = _check_quartic_count(pm, cases, mismatches)
    cases = _check_classification(pm, cases, mismatches)
    return cases, mismatches


def verify_range(lo, hi, e_samples=0, seed=0, jobs=1):
    """Run every check over all primes in [lo, hi], merged in prime order."""
    start = time.monotonic()
    primes = primes_in_range(lo, hi)
    cases = 0
    mismatches = []
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_prime, primes, repeat(e_samples), repeat(seed)))
    else:
        results = [check_prime(p, e_samples, seed) for p in primes]
    for prime_cases, prime_mismatches in results:
        cases += prime_cases
        mismatches.extend(prime_mismatches)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return VerifyReport((lo, hi), cases, tuple(mismatches), elapsed_ms)


def cmd_verify(args):
    if args.min < 3 or args.min > args.max or args.max > MAX_VERIFY_BOUND:
        return _fail(f"need 3 <= min <= max <= {MAX_VERIFY_BOUND}")
    if args.e_samples < 0:
        return _fail("--e-samples must be nonnegative")
    if args.jobs < 1:
        return _fail("--jobs must be at least 1")
    report = verify_range(args.min, args.max, args.e_samples, args.seed, args.jobs)
    for record in report.mismatches:
        _render(record, args.format)
    _render(
        {
            "min": args.min,
            "max": args.max,
            "primes_checked": len(primes_in_range(args.min, args.max)),
            "cases_checked": report.cases_checked,
            "mismatch_count": len(report.mismatches),
        },
        args.format,
    )
    return EXIT_OK if not report.mismatches else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="biquadres",
        description="Residue sums of biquadratic polynomials mod p: "
        "closed forms, brute-force oracle, and sum-set classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_sum = sub.add_parser("sum", help="closed-form vs brute-force sum of distinct residues")
    p_sum.add_argument("--p", type=int, required=True)
    p_sum.add_argument("--a", type=int, default=1)
    p_sum.add_argument("--c", type=int, required=True)
    p_sum.add_argument("--e", type=int, default=0)
    add_format(p_sum)
    p_sum.set_defaults(handler=cmd_sum)

    p_vw = sub.add_parser("vw", help="V/W coefficients from both tables")
    p_vw.add_argument("--p", type=int, required=True)
    p_vw.add_argument("--chi", type=int, required=True, choices=(1, -1))
    add_format(p_vw)
    p_vw.set_defaults(handler=cmd_vw)

    p_sos = sub.add_parser("set-of-sums", help="brute-force S(p)")
    p_sos.add_argument("--p", type=int, required=True)
    add_format(p_sos)
    p_sos.set_defaults(handler=cmd_set_of_sums)

    p_cls = sub.add_parser("classify", help="name the canonical set S(p) equals")
    p_cls.add_argument("--p", type=int, required=True)
    add_format(p_cls)
    p_cls.set_defaults(handler=cmd_classify)

    p_ps = sub.add_parser("partition-stats", help="pair-class sizes and power sums")
    p_ps.add_argument("--p", type=int, required=True)
    add_format(p_ps)
    p_ps.set_defaults(handler=cmd_partition_stats)

    p_ver = sub.add_parser("verify", help="sweep a prime range, checking every closed form")
    p_ver.add_argument("--min", type=int, required=True)
    p_ver.add_argument("--max", type=int, required=True)
    p_ver.add_argument("--e-samples", type=int, default=0)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1)
    add_format(p_ver)
    p_ver.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
