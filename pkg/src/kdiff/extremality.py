"""Merging two zeros: the boundary coefficient, the kappa difference and
the intersection ratio against Teichmueller curves.

For k in {1, 2}, modulo the other boundary divisors,

    12 lambda - D_h - kappa_mu eta = c * [closure of P{mu'}],
    c = (m_i+m_j+k) (1/k - 1/(m_i+k) - 1/(m_j+k) + 1/(m_i+m_j+k)),

and on a Teichmueller curve C in P{mu'} the ratio
(C . P{mu'}) / (C . eta) equals (kappa_mu' - kappa_mu) / c = -1/(m_i+m_j+k).
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from kdiff.errors import InvalidPositions, MergedMinusK, MinusKEntry, UnsupportedK
from kdiff.signature import Signature, check_no_minus_k, kappa_mu, validate_signature


@dataclass(frozen=True)
class MergeReport:
    source: Signature
    pair: tuple[int, int]  # 1-based positions
    merged: Signature
    coefficient: Optional[Fraction]
    kappa_difference: Optional[Fraction]
    ratio: Optional[Fraction]
    extremal_hypothesis: bool


def merge_zeros(s: Signature, i: int, j: int) -> Signature:
    """mu' = (m_i + m_j, remaining entries in order); component dropped."""
    if i == j or not (1 <= i <= s.n and 1 <= j <= s.n):
        raise InvalidPositions(f"positions ({i}, {j}) invalid for n={s.n}")
    merged = s.orders[i - 1] + s.orders[j - 1]
    if merged == -s.k:
        raise MergedMinusK(f"merged order {merged} equals -k")
    if merged == 0:
        warnings.warn("merged order 0 is a regular point, outside the k-differential setting", stacklevel=2)
    rest = [m for p, m in enumerate(s.orders, start=1) if p not in (i, j)]
    return validate_signature(s.g, s.k, [merged] + rest, allow_zero=True)


def _check(s: Signature, i: int, j: int) -> None:
    if s.k not in (1, 2):
        raise UnsupportedK(f"k={s.k}: merging calculus only for abelian and quadratic differentials")
    if i == j or not (1 <= i <= s.n and 1 <= j <= s.n):
        raise InvalidPositions(f"positions ({i}, {j}) invalid for n={s.n}")
    check_no_minus_k(s)
    if s.orders[i - 1] + s.orders[j - 1] == -s.k:
        raise MergedMinusK(f"merged order equals -k in {s}")


def merging_coefficient(s: Signature, i: int, j: int) -> Fraction:
    """Coefficient of the merged-stratum divisor, as a closed form."""
    _check(s, i, j)
    k = s.k
    mi, mj = s.orders[i - 1], s.orders[j - 1]
    return (mi + mj + k) * (
        Fraction(1, k) - Fraction(1, mi + k) - Fraction(1, mj + k) + Fraction(1, mi + mj + k)
    )


def kappa_difference(s: Signature, i: int, j: int) -> Fraction:
    """kappa_mu' - kappa_mu, evaluated from the definition of kappa."""
    _check(s, i, j)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        merged = merge_zeros(s, i, j)
    return kappa_mu(merged) - kappa_mu(s)


def teichmueller_ratio(s: Signature, i: int, j: int) -> Fraction:
    """-1/(m_i+m_j+k), checked against kappa_difference / merging_coefficient."""
    _check(s, i, j)
    ratio = Fraction(-1, s.orders[i - 1] + s.orders[j - 1] + s.k)
    coeff = merging_coefficient(s, i, j)
    if coeff != 0 and kappa_difference(s, i, j) / coeff != ratio:  # pragma: no cover
        raise AssertionError("merging identity violated")
    return ratio


def extremal_hypothesis(s: Signature, i: int, j: int) -> bool:
    """Whether merging positions i, j is covered by the extremality theorem:
    k=1 with all orders >= 1, or k=2 with all orders >= -1 and m_i or m_j > 0."""
    mi, mj = s.orders[i - 1], s.orders[j - 1]
    if s.k == 1:
        return all(m >= 1 for m in s.orders)
    if s.k == 2:
        return all(m >= -1 for m in s.orders) and (mi > 0 or mj > 0)
    return False


def extremality_report(s: Signature) -> list[MergeReport]:
    """One report per unordered pair of positions.

    Pairs outside the theorem's hypotheses are still reported, flagged; if
    the merged order is -k the numeric fields are None.
    """
    if s.k not in (1, 2):
        raise UnsupportedK(f"k={s.k}: merging calculus only for abelian and quadratic differentials")
    check_no_minus_k(s)
    reports = []
    for i, j in itertools.combinations(range(1, s.n + 1), 2):
        hyp = extremal_hypothesis(s, i, j)
        if s.orders[i - 1] + s.orders[j - 1] == -s.k:
            rest = [m for p, m in enumerate(s.orders, start=1) if p not in (i, j)]
            merged = Signature(s.g, s.k, (-s.k, *rest))
            reports.append(MergeReport(s, (i, j), merged, None, None, None, False))
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            merged = merge_zeros(s, i, j)
        coeff = merging_coefficient(s, i, j)
        diff = kappa_difference(s, i, j)
        ratio = teichmueller_ratio(s, i, j)
        reports.append(MergeReport(s, (i, j), merged, coeff, diff, ratio, hyp))
    return reports


__all__ = [
    "MergeReport",
    "MinusKEntry",
    "extremal_hypothesis",
    "extremality_report",
    "kappa_difference",
    "merge_zeros",
    "merging_coefficient",
    "teichmueller_ratio",
]
