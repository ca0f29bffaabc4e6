"""Acceptance gate.  One test per criterion; each prints a PASS/FAIL line
with its measured runtime.  Also runnable directly:

    python3 tests/test_acceptance.py
"""
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kdiff.catalog import divisor_entry, verify_all  # noqa: E402
from kdiff.certificates import Verdict, certify_infinite_area  # noqa: E402
from kdiff.cli import run  # noqa: E402
from kdiff.divisor import MarkingMap, pullback_coefficient, pullback_coefficient_expanded  # noqa: E402
from kdiff.extremality import (  # noqa: E402
    extremal_hypothesis,
    kappa_difference,
    merging_coefficient,
    teichmueller_ratio,
)
from kdiff.origami import perms  # noqa: E402
from kdiff.origami.enumeration import enumerate_origamis  # noqa: E402
from kdiff.origami.lyapunov import lyapunov_sum, orbit_lyapunov, varying_test  # noqa: E402
from kdiff.origami.orbits import split_into_orbits  # noqa: E402
from kdiff.origami.surface import Origami  # noqa: E402
from kdiff.signature import kappa_mu, parse_signature, validate_signature  # noqa: E402
from oracles import naive_class_counts  # noqa: E402
from strategies import random_infinite_area, random_signature  # noqa: E402

RESULTS: list[str] = []  # printed by the terminal-summary hook in conftest.py
SEED = 20240601
DESK_SQUARES = 8  # H(1,1,1,1) already shows five distinct sums here


def _report(number, name, ok, elapsed, limit, detail=""):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number}: {name} ({elapsed:.2f}s, limit {limit:g}s)"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    assert ok, detail
    assert within, f"runtime {elapsed:.2f}s over {limit}s"


def _timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


# 1 -------------------------------------------------------------------------

SPOT_VALUES = {
    "k=1 g=3 mu=4^odd": Fraction(18, 5),
    "k=1 g=3 mu=2,1,1": Fraction(49, 36),
    "k=1 g=3 mu=2,2^odd": Fraction(44, 9),
    "k=1 g=4 mu=6^even": Fraction(180, 7),
    "k=2 g=3 mu=9,-1^irr": Fraction(63, 44),
}


def _catalog_soundness():
    certs = verify_all()
    divisor_certs = [c for c in certs if c.witness.kind == "DisjointDivisor"]
    bad = [c.stratum.pretty() for c in divisor_certs if not c.coefficient or c.verdict is not Verdict.AFFINE]
    wrong = {}
    for text, value in SPOT_VALUES.items():
        got = next(c.coefficient for c in certs if c.stratum == parse_signature(text)
                   and c.witness.kind == "DisjointDivisor")
        if got != value:
            wrong[text] = str(got)
    ok = len(divisor_certs) == 49 and not bad and not wrong
    return ok, f"[{len(divisor_certs)} divisor entries, zero: {bad}, spot mismatches: {wrong}]"


def test_criterion_1_catalog_soundness():
    ok, detail, elapsed = _timed(_catalog_soundness)
    _report(1, "catalog soundness", ok, elapsed, 1.0, detail)


# 2 -------------------------------------------------------------------------


def _formula_equivalence():
    rng = random.Random(SEED)
    failures = 0
    for _ in range(1000):
        s = random_signature(rng)
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 6))
        b = [Fraction(rng.randint(-40, 40), rng.randint(1, 6)) for _ in range(s.n)]
        compact = pullback_coefficient(s, MarkingMap.all_points(s.n), a, b)
        display = pullback_coefficient_expanded(s, a, b)
        failures += compact != display
    return failures == 0, f"[{failures} mismatches in 1000]"


def test_criterion_2_formula_equivalence():
    ok, detail, elapsed = _timed(_formula_equivalence)
    _report(2, "pullback formula equivalence", ok, elapsed, 1.0, detail)


# 3 -------------------------------------------------------------------------


def _merging_algebra():
    rng = random.Random(SEED + 3)
    done = failures = 0
    while done < 1000:
        s = random_signature(rng, max_n=6)
        if s.n < 2:
            continue
        i, j = rng.sample(range(1, s.n + 1), 2)
        total = s.orders[i - 1] + s.orders[j - 1] + s.k
        if total == 0:
            continue
        done += 1
        diff = kappa_difference(s, i, j)
        ratio = teichmueller_ratio(s, i, j)
        ok = merging_coefficient(s, i, j) == -total * diff and ratio == Fraction(-1, total)
        if extremal_hypothesis(s, i, j):
            ok = ok and ratio < 0
        failures += not ok
    return failures == 0, f"[{failures} failures in 1000]"


def test_criterion_3_merging_algebra():
    ok, detail, elapsed = _timed(_merging_algebra)
    _report(3, "merging-zeros algebra", ok, elapsed, 1.0, detail)


# 4 -------------------------------------------------------------------------


def _infinite_area_sign():
    rng = random.Random(SEED + 4)
    failures = 0
    for _ in range(1000):
        s = random_infinite_area(rng)
        w = certify_infinite_area(s).witness
        m1 = s.orders[w.position - 1]
        failures += not (w.a >= 0 and (w.a == 0) == (m1 == -s.k))
    return failures == 0, f"[{failures} failures in 1000]"


def test_criterion_4_infinite_area():
    ok, detail, elapsed = _timed(_infinite_area_sign)
    _report(4, "infinite-area coefficient sign", ok, elapsed, 1.0, detail)


# 5 -------------------------------------------------------------------------


def _origami_oracle():
    hand = lyapunov_sum(Origami.from_cycles("(1,2)", "(1,3)", 3))
    ok = (hand.kappa_term, hand.sv_term) == (Fraction(2, 9), Fraction(10, 9))
    seen = {}
    for text, expected in (("H(2)", Fraction(4, 3)), ("H(1,1)", Fraction(3, 2))):
        target = parse_signature(text)
        values = set()
        for N in range(1, 7):
            for orbit in split_into_orbits(enumerate_origamis(N, target)):
                values.add(orbit_lyapunov(orbit).L)
        seen[text] = [str(v) for v in sorted(values)]
        ok = ok and values == {expected}
    return ok, f"[{seen}]"


def test_criterion_5_origami_oracle():
    ok, detail, elapsed = _timed(_origami_oracle)
    _report(5, "Lyapunov sums of H(2) and H(1,1)", ok, elapsed, 60.0, detail)


# 6 -------------------------------------------------------------------------


def _varying_detection():
    rep = varying_test(parse_signature("H(1,1,1,1)"), DESK_SQUARES)
    (cert,) = rep.certificates
    values = [str(v) for v in sorted(v for vals in rep.values().values() for v in vals)]
    ok = rep.varying and cert.verdict is Verdict.ETA_NONTRIVIAL
    return ok, f"[N<={DESK_SQUARES}, L values {values}, verdict {cert.verdict.value}]"


def test_criterion_6_varying_detection():
    ok, detail, elapsed = _timed(_varying_detection)
    _report(6, "varying detection in H(1,1,1,1)", ok, elapsed, 600.0, detail)


# 7 -------------------------------------------------------------------------


def _enumeration_oracle():
    mismatches = []
    checked = 0
    for N in range(1, 6):
        naive = naive_class_counts(N)
        for g in range(1, 4):
            for orders in perms.partitions(2 * g - 2) if g > 1 else [()]:
                got = len(enumerate_origamis(N, validate_signature(g, 1, orders)))
                checked += 1
                if got != naive.get(tuple(orders), 0):
                    mismatches.append((N, orders, got, naive.get(tuple(orders), 0)))
    return not mismatches, f"[{checked} (N, stratum) pairs, mismatches {mismatches}]"


def test_criterion_7_enumeration_oracle():
    ok, detail, elapsed = _timed(_enumeration_oracle)
    _report(7, "enumeration vs naive count", ok, elapsed, 60.0, detail)


# 8 -------------------------------------------------------------------------

COMMANDS = [
    ["stratum", "info", "k=1 g=3 mu=2,1,1", "--json"],
    ["certify", "H(4)^odd", "--json"],
    ["catalog", "list"],
    ["catalog", "verify", "--json"],
    ["extremal", "report", "k=2 g=3 mu=5,3,1,-1", "--json"],
    ["origami", "orbit", "(1,2)", "(1,3)"],
    ["origami", "lyapunov", "(1,2,3)", "(1,2)", "--json"],
]
PARALLEL = [
    ["origami", "enumerate", "--squares", "6", "--stratum", "H(2,2)", "--json"],
    ["origami", "varying", "--stratum", "H(1,1)", "--max-squares", "6", "--json"],
]


def _subprocess_output(argv, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    proc = subprocess.run([sys.executable, "-m", "kdiff.cli", *argv], capture_output=True, env=env)
    return proc.returncode, proc.stdout


def _determinism():
    diffs = []
    for argv in COMMANDS:
        first = run(argv)
        if first.exit_code or run(argv) != first:
            diffs.append(argv)
            continue
        if _subprocess_output(argv, 1) != _subprocess_output(argv, 2):
            diffs.append(argv)
    for argv in PARALLEL:
        outputs = {run(argv + ["--jobs", str(j)]) for j in (1, 2, 4)}
        if len(outputs) != 1:
            diffs.append(argv)
    return not diffs, f"[{len(COMMANDS) + len(PARALLEL)} commands, differing: {diffs}]"


def test_criterion_8_determinism():
    ok, detail, elapsed = _timed(_determinism)
    _report(8, "byte-reproducible output", ok, elapsed, 120.0, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
