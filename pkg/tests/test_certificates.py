from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kdiff.certificates import (
    HN,
    Certificate,
    DisjointDivisor,
    InfiniteArea,
    Verdict,
    certify_affine,
    certify_auto,
    certify_disjoint_divisor,
    certify_eta_nontrivial,
    certify_hn,
    certify_infinite_area,
    certify_low_genus,
    certify_with_divisor,
)
from kdiff.divisor import MarkingMap
from kdiff.errors import (
    MinusKEntry,
    NotApplicable,
    NotHNStratum,
    NotInfiniteArea,
    WrongVerdict,
)
from kdiff.signature import parse_signature, validate_signature
from strategies import infinite_area_signatures, signatures

H4_ODD = parse_signature("H(4)^odd")
H42_EVEN = parse_signature("k=1 g=4 mu=4,2^even")


def test_disjoint_divisor_examples():
    c = certify_with_divisor(parse_signature("k=1 g=3 mu=2,2^odd"), "Z_3", 11, (), MarkingMap(()))
    assert c.verdict is Verdict.TRIVIAL and c.coefficient == Fraction(44, 9)
    c = certify_with_divisor(parse_signature("k=1 g=4 mu=6^even"), "Theta_4", 30, (60,), MarkingMap((1,)))
    assert c.coefficient == Fraction(180, 7)
    assert any("disjoint" in a for a in c.assumptions)


def test_zero_class_is_inconclusive():
    c = certify_with_divisor(H4_ODD, "0", 0, (), MarkingMap(()))
    assert c.verdict is Verdict.INCONCLUSIVE and c.coefficient == 0


def test_zero_coefficient_cannot_be_trivial():
    with pytest.raises(ValueError):
        Certificate(H4_ODD, Verdict.TRIVIAL, DisjointDivisor("D", Fraction(0)))


def test_affine_upgrade():
    trivial = certify_with_divisor(H4_ODD, "H", 9, (), MarkingMap(()))
    affine = certify_affine(trivial)
    assert affine.verdict is Verdict.AFFINE
    assert certify_affine(affine) is affine
    with pytest.raises(WrongVerdict):
        certify_affine(certify_with_divisor(H4_ODD, "0", 0, (), MarkingMap(())))


@pytest.mark.parametrize(
    "g, k, orders, a",
    [(2, 1, [4, -2], 4), (2, 2, [7, -3], 2), (1, 2, [2, -2], 0)],
)
def test_infinite_area_examples(g, k, orders, a):
    c = certify_infinite_area(validate_signature(g, k, orders))
    assert c.verdict is Verdict.AFFINE
    assert c.witness.a == a


def test_infinite_area_picks_most_negative_first():
    c = certify_infinite_area(validate_signature(2, 1, [6, -2, -2]))
    assert c.witness.position == 2


def test_finite_area_refused():
    with pytest.raises(NotInfiniteArea):
        certify_infinite_area(H4_ODD)


def test_low_genus():
    assert certify_low_genus(validate_signature(1, 1, [1, -1])).verdict is Verdict.AFFINE
    assert certify_low_genus(validate_signature(0, 1, [1, -3])).verdict is Verdict.AFFINE
    assert certify_low_genus(parse_signature("k=1 g=5 mu=8^hyp")).verdict is Verdict.AFFINE
    with pytest.raises(MinusKEntry):
        certify_low_genus(validate_signature(2, 2, [5, 3, -2, -2]))
    with pytest.raises(NotApplicable):
        certify_low_genus(H4_ODD)


def test_hn_needs_l():
    c = certify_hn(H42_EVEN)
    assert c.verdict is Verdict.INCONCLUSIVE
    assert c.witness.kappa_over_12 == Fraction(28, 45)
    assert certify_hn(H42_EVEN, Fraction(28, 45)).verdict is Verdict.INCONCLUSIVE
    assert certify_hn(H42_EVEN, Fraction(1, 2)).verdict is Verdict.TRIVIAL
    with pytest.raises(NotHNStratum):
        certify_hn(H4_ODD)


def test_eta_nontrivial():
    s = validate_signature(3, 1, [1, 1, 1, 1])
    assert certify_eta_nontrivial(s, "generic", [1, 2, 2]).verdict is Verdict.ETA_NONTRIVIAL
    single = certify_eta_nontrivial(s, "generic", [Fraction(3, 2)])
    assert single.verdict is Verdict.INCONCLUSIVE
    assert "not a proof" in single.notes[0]


@pytest.mark.parametrize(
    "text, verdict, kind",
    [
        ("k=1 g=2 mu=4,-2", Verdict.AFFINE, "InfiniteArea"),
        ("k=1 g=2 mu=2", Verdict.AFFINE, "LowGenus"),
        ("H(4)^odd", Verdict.AFFINE, "DisjointDivisor"),
        ("k=1 g=4 mu=4,2^even", Verdict.INCONCLUSIVE, "HN"),
        ("k=1 g=3 mu=1,1,1,1", Verdict.INCONCLUSIVE, "LowGenus"),
    ],
)
def test_auto(text, verdict, kind):
    c = certify_auto(parse_signature(text))
    assert (c.verdict, c.witness.kind) == (verdict, kind)


@given(infinite_area_signatures())
def test_infinite_area_coefficient_sign(s):
    c = certify_infinite_area(s)
    m1 = s.orders[c.witness.position - 1]
    assert c.witness.a >= 0
    assert (c.witness.a == 0) == (m1 == -s.k)


@given(signatures(), st.integers(-20, 20), st.sampled_from(["a", "b", "c"]))
def test_json_round_trip(s, a, which):
    if which == "a":
        cert = certify_with_divisor(s, "D", a, (), MarkingMap(()))
    elif which == "b":
        cert = certify_auto(s, Fraction(a, 7))
    else:
        cert = certify_eta_nontrivial(s, "generic", [Fraction(a, 3), Fraction(1, 2)])
    back = Certificate.from_json(cert.to_json())
    assert back == cert
    assert back.to_json() == cert.to_json()


def test_json_round_trip_for_every_witness_kind():
    certs = [
        certify_infinite_area(validate_signature(2, 1, [4, -2])),
        certify_low_genus(validate_signature(2, 1, [2])),
        certify_hn(H42_EVEN, Fraction(1, 3)),
        certify_affine(certify_with_divisor(H4_ODD, "H", 9, (), MarkingMap(()))),
    ]
    kinds = {c.witness.kind for c in certs}
    assert kinds == {"InfiniteArea", "LowGenus", "HN", "DisjointDivisor"}
    for c in certs:
        assert Certificate.from_json(c.to_json()) == c


def test_negative_infinite_area_witness_rejected():
    with pytest.raises(ValueError):
        Certificate(H4_ODD, Verdict.AFFINE, InfiniteArea(Fraction(-1), 1, ""))


def test_affine_paths():
    # affinity comes only from a trivial ring, infinite area or low genus
    for text in ["k=1 g=2 mu=4,-2", "k=1 g=2 mu=2", "H(4)^odd", "k=2 g=3 mu=9,-1^irr"]:
        c = certify_auto(parse_signature(text))
        assert c.verdict is Verdict.AFFINE
        assert c.witness.kind in {"InfiniteArea", "LowGenus", "DisjointDivisor", "HN"}
    assert HN.kind == "HN"
