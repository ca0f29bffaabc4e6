"""Formal tautological divisor classes on a stratum and their reduction to
multiples of eta.

On the open stratum (all m_i != -k) the relations

    eta = (m_i + k) psi_i,    12 lambda = kappa = kappa_mu eta

express lambda, kappa and every psi_i as rational multiples of eta.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from kdiff.errors import MarkingMismatch, ParseError, UnreducibleGenerator
from kdiff.signature import Signature, check_no_minus_k, kappa_mu, parse_rational


class Generator(NamedTuple):
    kind: str  # lambda | kappa | eta | psi | boundary
    label: int | str | None = None

    def __str__(self):
        if self.kind == "psi":
            return f"psi{self.label}"
        if self.kind == "boundary":
            return f"[{self.label}]"
        return self.kind


LAMBDA = Generator("lambda")
KAPPA = Generator("kappa")
ETA = Generator("eta")


def psi(i: int) -> Generator:
    if i < 1:
        raise ValueError("psi indices are 1-based")
    return Generator("psi", i)


def boundary(name: str) -> Generator:
    return Generator("boundary", name)


def _gen_order(gen: Generator):
    rank = {"lambda": 0, "psi": 1, "kappa": 2, "eta": 3, "boundary": 4}[gen.kind]
    label = gen.label if gen.label is not None else ""
    return (rank, str(type(label)), label)


@dataclass(frozen=True)
class DivisorClass:
    """Rational combination of generators; zero coefficients are dropped."""

    terms: tuple[tuple[Generator, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict) -> "DivisorClass":
        items = [(g, Fraction(c)) for g, c in coeffs.items() if Fraction(c) != 0]
        return cls(tuple(sorted(items, key=lambda t: _gen_order(t[0]))))

    @classmethod
    def of(cls, gen: Generator, coeff=1) -> "DivisorClass":
        return cls.from_dict({gen: coeff})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, gen: Generator) -> Fraction:
        return self.as_dict().get(gen, Fraction(0))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        out = self.as_dict()
        for g, c in other.terms:
            out[g] = out.get(g, Fraction(0)) + c
        return DivisorClass.from_dict(out)

    def __neg__(self):
        return DivisorClass.from_dict({g: -c for g, c in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return DivisorClass.from_dict({g: scalar * c for g, c in self.terms})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_class(self)


def linear_class(a, b: Sequence = (), kappa=0) -> DivisorClass:
    """a*lambda + sum_j b_j*psi_j (+ kappa coefficient)."""
    coeffs = {LAMBDA: a, KAPPA: kappa}
    for j, bj in enumerate(b, start=1):
        coeffs[psi(j)] = bj
    return DivisorClass.from_dict(coeffs)


@dataclass(frozen=True)
class MarkingMap:
    """Marked point j (1-based) sits at position ``positions[j-1]`` of mu."""

    positions: tuple[int, ...]

    @classmethod
    def all_points(cls, n: int) -> "MarkingMap":
        return cls(tuple(range(1, n + 1)))

    @property
    def arity(self) -> int:
        return len(self.positions)

    def check(self, s: Signature) -> None:
        if len(set(self.positions)) != len(self.positions):
            raise MarkingMismatch(f"marking {self.positions} is not injective")
        for p in self.positions:
            if not 1 <= p <= s.n:
                raise MarkingMismatch(f"marking position {p} outside 1..{s.n}")

    def __str__(self):
        return ",".join(str(p) for p in self.positions) or "-"


def reduce_to_eta(s: Signature, c: DivisorClass, marking: MarkingMap | None = None) -> Fraction:
    """The rational r with c = r * eta on the open stratum.

    ``psi(j)`` refers to marked point j under ``marking`` (all points by
    default).
    """
    if marking is None:
        marking = MarkingMap.all_points(s.n)
    marking.check(s)
    km = kappa_mu(s)
    total = Fraction(0)
    for gen, coeff in c.terms:
        if gen.kind == "lambda":
            total += coeff * km / 12
        elif gen.kind == "kappa":
            total += coeff * km
        elif gen.kind == "eta":
            total += coeff
        elif gen.kind == "psi":
            if gen.label > marking.arity:
                raise MarkingMismatch(f"psi{gen.label} has no marked point (arity {marking.arity})")
            m = s.orders[marking.positions[gen.label - 1] - 1]
            total += coeff / (m + s.k)
        else:
            raise UnreducibleGenerator(f"boundary generator {gen} cannot be reduced to eta")
    return total


def pullback_coefficient(s: Signature, marking: MarkingMap, a, b: Sequence) -> Fraction:
    """Coefficient of eta in the pullback of a*lambda + sum b_j psi_j.

    Evaluated as a*kappa_mu/12 + sum_j b_j/(m_{sigma(j)}+k) and checked
    against the expanded all-points formula with b padded by zeros.
    """
    check_no_minus_k(s)
    marking.check(s)
    if len(b) != marking.arity:
        raise MarkingMismatch(f"{len(b)} psi coefficients for a marking of arity {marking.arity}")
    a = Fraction(a)
    b = [Fraction(x) for x in b]
    compact = a * kappa_mu(s) / 12
    for bj, pos in zip(b, marking.positions):
        compact += bj / (s.orders[pos - 1] + s.k)

    full = [Fraction(0)] * s.n
    for bj, pos in zip(b, marking.positions):
        full[pos - 1] = bj
    expanded = pullback_coefficient_expanded(s, a, full)
    if compact != expanded:  # pragma: no cover - algebraic identity
        raise AssertionError(f"pullback forms disagree: {compact} != {expanded}")
    return compact


def pullback_coefficient_expanded(s: Signature, a, b: Sequence) -> Fraction:
    """(1/12)((2g-2+n) a / k + sum_i (12 b_i - a)/(m_i + k)) for a full marking."""
    check_no_minus_k(s)
    if len(b) != s.n:
        raise MarkingMismatch(f"expanded formula needs {s.n} psi coefficients, got {len(b)}")
    a = Fraction(a)
    inner = Fraction((2 * s.g - 2 + s.n) * a, s.k)
    for m, bi in zip(s.orders, b):
        inner += (12 * Fraction(bi) - a) / (m + s.k)
    return inner / 12


# ---------------------------------------------------------------------------
# text format:  a*lambda + b1*psi1 + ... [+ c*kappa]
# ---------------------------------------------------------------------------

_TERM = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?(?P<gen>lambda|kappa|eta|psi(?P<idx>\d+)|\[(?P<bd>[^\]]+)\])$"
)


def _split_terms(text: str) -> Iterable[tuple[int, str]]:
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty divisor class")
    if text[0] not in "+-":
        text = "+" + text
    for sign, body in re.findall(r"([+-])([^+-]+)", text):
        yield (1 if sign == "+" else -1), body
    if re.sub(r"[+-][^+-]+", "", text):
        raise ParseError(f"bad divisor class {text!r}")


def parse_class(text: str) -> DivisorClass:
    coeffs: dict = {}
    if text.strip() == "0":
        return DivisorClass()
    for sign, body in _split_terms(text):
        m = _TERM.match(body)
        if not m:
            raise ParseError(f"bad divisor term {body!r}")
        coef = parse_rational(m["coef"]) if m["coef"] else Fraction(1)
        if m["idx"]:
            gen = psi(int(m["idx"]))
        elif m["bd"]:
            gen = boundary(m["bd"])
        else:
            gen = Generator(m["gen"])
        coeffs[gen] = coeffs.get(gen, Fraction(0)) + sign * coef
    return DivisorClass.from_dict(coeffs)


def format_class(c: DivisorClass) -> str:
    if not c.terms:
        return "0"
    parts = []
    for gen, coeff in c.terms:
        mag = abs(coeff)
        body = str(gen) if mag == 1 else f"{mag}*{gen}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def split_linear(c: DivisorClass) -> tuple[Fraction, tuple[Fraction, ...]]:
    """(a, (b_1..b_r)) of a class a*lambda + sum b_j psi_j; r = largest psi index."""
    extra = [g for g, _ in c.terms if g.kind not in ("lambda", "psi")]
    if extra:
        raise ParseError(f"class {c} has terms other than lambda and psi")
    d = c.as_dict()
    r = max((g.label for g in d if g.kind == "psi"), default=0)
    return d.get(LAMBDA, Fraction(0)), tuple(d.get(psi(j), Fraction(0)) for j in range(1, r + 1))
