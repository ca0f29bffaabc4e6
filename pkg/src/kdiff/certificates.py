"""Triviality and affinity certificates for strata.

A certificate records a verdict together with the exact number that
witnesses it.  Geometric inputs that are not recomputed here (disjointness
of a divisor from a stratum, ampleness of kappa + sum psi) are listed in
``assumptions``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from types import SimpleNamespace
from typing import Any, Optional, Union

from kdiff.divisor import MarkingMap, pullback_coefficient
from kdiff.errors import (
    MinusKEntry,
    NotApplicable,
    NotHNStratum,
    NotInfiniteArea,
    ParseError,
    WrongVerdict,
)
from kdiff.signature import (
    Component,
    Signature,
    check_no_minus_k,
    format_signature,
    is_infinite_area,
    kappa_mu,
    parse_signature,
)


class Verdict(str, enum.Enum):
    TRIVIAL = "TrivialTautologicalRing"
    AFFINE = "Affine"
    ETA_NONTRIVIAL = "EtaNontrivial"
    INCONCLUSIVE = "Inconclusive"


AMPLE_ASSUMPTION = "kappa + sum psi_i is ample on the Deligne-Mumford compactification"
HOMOLOGY_NOTE = "H_d(stratum, Z) = 0 for d > dim; H_dim(stratum, Z) is torsion free"


@dataclass(frozen=True)
class DisjointDivisor:
    name: str
    coefficient: Fraction
    kind = "DisjointDivisor"


@dataclass(frozen=True)
class InfiniteArea:
    a: Fraction
    position: int  # 1-based position of the chosen pole of order <= -k
    trivial_class: str
    kind = "InfiniteArea"


@dataclass(frozen=True)
class LowGenus:
    reason: str
    kind = "LowGenus"


@dataclass(frozen=True)
class HN:
    required: str
    kappa_over_12: Fraction
    L: Optional[Fraction] = None
    kind = "HN"


@dataclass(frozen=True)
class Varying:
    component: str
    values: tuple[Fraction, ...]
    kind = "Varying"


Witness = Union[DisjointDivisor, InfiniteArea, LowGenus, HN, Varying]
_WITNESS_TYPES = {w.kind: w for w in (DisjointDivisor, InfiniteArea, LowGenus, HN, Varying)}


@dataclass(frozen=True)
class Certificate:
    stratum: Signature
    verdict: Verdict
    witness: Witness
    assumptions: tuple[str, ...] = ()
    reference: str = ""
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        w = self.witness
        if isinstance(w, DisjointDivisor) and w.coefficient == 0 and self.verdict is not Verdict.INCONCLUSIVE:
            raise ValueError("a disjoint-divisor witness needs a nonzero coefficient")
        if isinstance(w, InfiniteArea) and w.a < 0:
            raise ValueError("infinite-area witness must have a >= 0")

    @property
    def coefficient(self) -> Optional[Fraction]:
        return getattr(self.witness, "coefficient", None)

    def to_dict(self) -> dict:
        values = {}
        for f in fields(self.witness):
            values[f.name] = _encode(getattr(self.witness, f.name))
        return {
            "stratum": format_signature(self.stratum),
            "verdict": self.verdict.value,
            "witness": {"kind": self.witness.kind, **values},
            "assumptions": list(self.assumptions),
            "reference": self.reference,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        wd = dict(d["witness"])
        wtype = _WITNESS_TYPES.get(wd.pop("kind", None))
        if wtype is None:
            raise ParseError(f"unknown witness kind in {d['witness']!r}")
        kwargs = {}
        for f in fields(wtype):
            kwargs[f.name] = _decode(f.name, wd.get(f.name))
        return cls(
            stratum=parse_signature(d["stratum"], allow_zero=True),
            verdict=Verdict(d["verdict"]),
            witness=wtype(**kwargs),
            assumptions=tuple(d.get("assumptions", ())),
            reference=d.get("reference", ""),
            notes=tuple(d.get("notes", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


_RATIONAL_FIELDS = {"coefficient", "a", "kappa_over_12", "L"}


def _encode(value: Any):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_encode(v) for v in value]
    return value


def _decode(name: str, value: Any):
    if value is None:
        return None
    if name in _RATIONAL_FIELDS:
        return Fraction(value)
    if name == "values":
        return tuple(Fraction(v) for v in value)
    return value


# ---------------------------------------------------------------------------


def certify_disjoint_divisor(s: Signature, entry) -> Certificate:
    """Certificate from an effective divisor disjoint from the stratum.

    ``entry`` needs ``divisor_name``, ``a``, ``b``, ``marking`` and
    ``section`` attributes (a catalog entry or anything shaped like one).
    A nonzero pullback coefficient forces eta, hence the whole tautological
    ring, to vanish.
    """
    coeff = pullback_coefficient(s, entry.marking, entry.a, entry.b)
    witness = DisjointDivisor(entry.divisor_name, coeff)
    section = getattr(entry, "section", "")
    if coeff == 0:
        return Certificate(s, Verdict.INCONCLUSIVE, witness, reference=section)
    assumptions = (f"divisor {entry.divisor_name} is disjoint from the stratum [section {section}]",)
    return Certificate(s, Verdict.TRIVIAL, witness, assumptions, reference=section)


def certify_affine(c: Certificate) -> Certificate:
    """Upgrade a trivial-tautological-ring certificate to affinity."""
    if c.verdict is Verdict.AFFINE:
        return c
    if c.verdict is not Verdict.TRIVIAL:
        raise WrongVerdict(f"cannot derive affinity from verdict {c.verdict.value}")
    return replace(
        c,
        verdict=Verdict.AFFINE,
        assumptions=c.assumptions + (AMPLE_ASSUMPTION,),
        notes=c.notes + (HOMOLOGY_NOTE,),
    )


def infinite_area_pole(s: Signature) -> int:
    """1-based position of the most negative entry (first one on ties)."""
    low = min(s.orders)
    return s.orders.index(low) + 1


def certify_infinite_area(s: Signature) -> Certificate:
    """Affinity of a stratum with a pole of order >= k.

    With m_1 <= -k, k(kappa + sum psi) = (2g-2+n)(m_1+k) psi_1, so
    kappa + sum psi + a psi_1 is trivial with a = -(2g-2+n)(m_1+k)/k >= 0,
    and that class is still ample.
    """
    if not is_infinite_area(s):
        raise NotInfiniteArea(f"{s} has no entry <= -k")
    pos = infinite_area_pole(s)
    m1 = s.orders[pos - 1]
    a = Fraction(-(2 * s.g - 2 + s.n) * (m1 + s.k), s.k)
    trivial = "kappa + " + " + ".join(f"psi{i}" for i in range(1, s.n + 1))
    if a:
        trivial += f" + {a}*psi{pos}"
    witness = InfiniteArea(a, pos, trivial)
    return Certificate(
        s,
        Verdict.AFFINE,
        witness,
        assumptions=(AMPLE_ASSUMPTION, "ample plus nef is ample"),
        reference="infinite area",
        notes=(HOMOLOGY_NOTE,),
    )


def certify_low_genus(s: Signature) -> Certificate:
    if s.g == 0:
        reason = "genus 0: the stratum is a moduli space of pointed rational curves (trivial Chow ring)"
        return _low_genus_cert(s, reason, "genus 0")
    if s.g == 1:
        reason = "genus 1: psi_i = 0 on M_{1,n}, hence eta = (m_i+k) psi_i = 0"
        return _low_genus_cert(s, reason, "genus 1")
    if s.g == 2 or s.component is Component.HYP:
        check_no_minus_k(s)
        if s.g == 2:
            reason = "genus 2: lambda = 0 on M_2, hence kappa_mu eta = 12 lambda = 0"
            ref = "genus 2"
        else:
            reason = "hyperelliptic: lambda = 0 on the hyperelliptic locus, hence kappa_mu eta = 0"
            ref = "hyperelliptic strata"
        if kappa_mu(s) == 0:
            return Certificate(s, Verdict.INCONCLUSIVE, LowGenus(reason + " (but kappa_mu = 0)"), reference=ref)
        return _low_genus_cert(s, reason, ref)
    raise NotApplicable(f"{s}: low-genus criterion needs g <= 2 or a hyperelliptic component")


def _low_genus_cert(s, reason, ref):
    return Certificate(
        s,
        Verdict.AFFINE,
        LowGenus(reason),
        assumptions=(AMPLE_ASSUMPTION,),
        reference=ref,
        notes=("tautological ring trivial", HOMOLOGY_NOTE),
    )


def certify_hn(s: Signature, L: Optional[Fraction] = None) -> Certificate:
    """Two relations lambda = (kappa_mu/12) eta and lambda = L_mu eta force
    eta = 0 whenever L_mu != kappa_mu/12.  L_mu must be supplied."""
    from kdiff.catalog import hn_entry

    entry = hn_entry(s)
    if entry is None:
        raise NotHNStratum(f"{s} is not one of the Harder-Narasimhan strata")
    target = kappa_mu(s) / 12
    required = f"L_mu != {target}"
    L = None if L is None else Fraction(L)
    witness = HN(required, target, L)
    if L is None or L == target:
        return Certificate(s, Verdict.INCONCLUSIVE, witness, reference=entry.section)
    assumptions = ("lambda = L_mu eta holds on the whole stratum (Harder-Narasimhan filtration)",)
    return Certificate(s, Verdict.TRIVIAL, witness, assumptions, reference=entry.section)


def certify_eta_nontrivial(s: Signature, component: str, values) -> Certificate:
    """Two Teichmueller curves with distinct Lyapunov sums: eta is nontrivial."""
    values = tuple(sorted(set(Fraction(v) for v in values)))
    if len(values) < 2:
        return Certificate(
            s,
            Verdict.INCONCLUSIVE,
            Varying(component, values),
            reference="varying strata",
            notes=("consistent with nonvarying (not a proof)",),
        )
    return Certificate(
        s,
        Verdict.ETA_NONTRIVIAL,
        Varying(component, values),
        assumptions=("the stratum component is irreducible",),
        reference="varying strata",
        notes=("varying => eta nontrivial on this stratum",),
    )


def certify_auto(s: Signature, L: Optional[Fraction] = None) -> Certificate:
    """Pick the first applicable criterion: infinite area, low genus or
    hyperelliptic, the disjoint-divisor catalog, Harder-Narasimhan."""
    from kdiff.catalog import divisor_entry, hn_entry

    if is_infinite_area(s):
        return certify_infinite_area(s)
    if s.g <= 2 or s.component is Component.HYP:
        try:
            return certify_low_genus(s)
        except MinusKEntry:
            pass
    entry = divisor_entry(s)
    if entry is not None:
        cert = certify_disjoint_divisor(s, entry)
        return certify_affine(cert) if cert.verdict is Verdict.TRIVIAL else cert
    if hn_entry(s) is not None:
        cert = certify_hn(s, L)
        return certify_affine(cert) if cert.verdict is Verdict.TRIVIAL else cert
    return Certificate(s, Verdict.INCONCLUSIVE, LowGenus("no applicable criterion"), reference="")


def certify_with_divisor(s: Signature, name: str, a, b, marking: MarkingMap) -> Certificate:
    """Certificate from a user-supplied divisor class assumed disjoint from s."""
    entry = SimpleNamespace(
        divisor_name=name, a=Fraction(a), b=tuple(b), marking=marking, section="user supplied"
    )
    return certify_disjoint_divisor(s, entry)
