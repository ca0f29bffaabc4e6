"""Catalog of nonvarying strata with their disjoint effective divisors.

The data lives in ``data/catalog.txt``, one pipe-separated record per
stratum, so edits stay reviewable line by line.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from kdiff.certificates import (
    Certificate,
    Verdict,
    certify_affine,
    certify_disjoint_divisor,
    certify_hn,
    certify_low_genus,
)
from kdiff.divisor import MarkingMap, format_class, linear_class, parse_class, split_linear
from kdiff.errors import CatalogContradiction, DataFileCorrupt, KdiffError
from kdiff.signature import Component, Signature, parse_signature


@dataclass(frozen=True)
class Ambient:
    genus: int
    marked: int
    spin: Optional[str] = None  # "+" or "-" for spin moduli spaces

    def __str__(self):
        base = f"M_{{{self.genus},{self.marked}}}" if self.marked else f"M_{self.genus}"
        return base if self.spin is None else f"S_{self.genus}^{self.spin} over {base}"


@dataclass(frozen=True)
class CatalogEntry:
    stratum: Signature
    section: str
    kind: str = "divisor"  # divisor | hn
    ambient: Optional[Ambient] = None
    divisor_name: str = ""
    a: Fraction = Fraction(0)
    b: tuple[Fraction, ...] = ()
    marking: MarkingMap = MarkingMap(())
    ambient_note: str = ""

    @property
    def is_hn(self) -> bool:
        return self.kind == "hn"

    @property
    def low_genus(self) -> bool:
        return self.stratum.g <= 2 or self.stratum.component is Component.HYP

    def class_text(self) -> str:
        return format_class(linear_class(self.a, self.b))


def _parse_ambient(text: str, lineno: int) -> Ambient:
    try:
        fields = dict(tok.split("=", 1) for tok in text.split())
        return Ambient(int(fields["g"]), int(fields["n"]), fields.get("spin"))
    except (KeyError, ValueError):
        raise DataFileCorrupt(f"line {lineno}: bad ambient {text!r}") from None


def _parse_record(line: str, lineno: int) -> CatalogEntry:
    cols = [c.strip() for c in line.split("|")]
    if len(cols) != 8:
        raise DataFileCorrupt(f"line {lineno}: expected 8 columns, got {len(cols)}")
    section, stratum, ambient, name, cls, marking, kind, note = cols
    try:
        s = parse_signature(stratum)
    except KdiffError as exc:
        raise DataFileCorrupt(f"line {lineno}: {exc}") from exc
    if kind == "hn":
        return CatalogEntry(s, section, "hn")
    if kind != "divisor":
        raise DataFileCorrupt(f"line {lineno}: unknown kind {kind!r}")

    amb = _parse_ambient(ambient, lineno)
    try:
        a, b = split_linear(parse_class(cls))
        positions = () if marking == "-" else tuple(int(p) for p in marking.split(","))
    except (KdiffError, ValueError) as exc:
        raise DataFileCorrupt(f"line {lineno}: {exc}") from exc
    mark = MarkingMap(positions)
    if len(b) > mark.arity:
        raise DataFileCorrupt(f"line {lineno}: psi{len(b)} used with marking arity {mark.arity}")
    b = b + (Fraction(0),) * (mark.arity - len(b))
    try:
        mark.check(s)
    except KdiffError as exc:
        raise DataFileCorrupt(f"line {lineno}: {exc}") from exc
    if amb.marked != mark.arity:
        raise DataFileCorrupt(f"line {lineno}: ambient has {amb.marked} points, marking has {mark.arity}")
    if amb.genus != s.g and note != "ambient-genus":
        raise DataFileCorrupt(f"line {lineno}: ambient genus {amb.genus} != stratum genus {s.g}")
    return CatalogEntry(s, section, "divisor", amb, name, a, b, mark, note)


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_parse_record(line, lineno))
    return entries


@lru_cache(maxsize=1)
def _load() -> tuple[CatalogEntry, ...]:
    text = resources.files("kdiff.data").joinpath("catalog.txt").read_text(encoding="utf-8")
    return tuple(parse_catalog(text))


def load_catalog() -> list[CatalogEntry]:
    return list(_load())


def hn_entry(s: Signature) -> Optional[CatalogEntry]:
    return next((e for e in _load() if e.is_hn and e.stratum == s), None)


def divisor_entry(s: Signature) -> Optional[CatalogEntry]:
    return next((e for e in _load() if not e.is_hn and e.stratum == s), None)


def verify_entry(entry: CatalogEntry) -> Certificate:
    if entry.is_hn:
        return certify_hn(entry.stratum)
    if entry.low_genus:
        return certify_low_genus(entry.stratum)
    cert = certify_disjoint_divisor(entry.stratum, entry)
    if cert.verdict is not Verdict.TRIVIAL:
        raise CatalogContradiction(
            f"{entry.stratum.pretty()} with {entry.divisor_name}: pullback coefficient is zero"
        )
    return certify_affine(cert)


def verify_all(entries: Optional[list[CatalogEntry]] = None) -> list[Certificate]:
    """One certificate per catalog entry, in catalog order."""
    if entries is None:
        entries = load_catalog()
    return [verify_entry(e) for e in entries]
