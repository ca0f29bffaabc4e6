"""Signatures of strata of k-differentials and their basic invariants.

A signature is the data ``(g, k, mu, component)`` with
``sum(mu) == k * (2g - 2)``. Orders keep their input order because
marking maps refer to positions; equality ignores that order.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from kdiff.errors import DegreeMismatch, InvalidSignature, MinusKEntry, ParseError


class Component(str, enum.Enum):
    GENERIC = "generic"
    HYP = "hyp"
    NONHYP = "nonhyp"
    ODD = "odd"
    EVEN = "even"
    REG = "reg"
    IRR = "irr"


@dataclass(frozen=True, eq=False)
class Signature:
    g: int
    k: int
    orders: tuple[int, ...]
    component: Component = Component.GENERIC

    @property
    def n(self) -> int:
        return len(self.orders)

    def _key(self):
        return (self.g, self.k, tuple(sorted(self.orders)), self.component)

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return format_signature(self)

    def with_component(self, component) -> "Signature":
        return Signature(self.g, self.k, self.orders, Component(component))

    def without_zeros(self) -> "Signature":
        """Drop orders equal to 0 (regular marked points)."""
        return Signature(self.g, self.k, tuple(m for m in self.orders if m != 0), self.component)

    def pretty(self) -> str:
        mu = ",".join(str(m) for m in self.orders)
        label = "" if self.component is Component.GENERIC else f"^{self.component.value}"
        return f"P^{self.k}_{self.g}({mu}){label}"


def validate_signature(
    g: int,
    k: int,
    orders: Iterable[int],
    component: Component | str = Component.GENERIC,
    allow_zero: bool = False,
) -> Signature:
    """Check the degree condition and return the signature.

    Orders equal to zero are only accepted with ``allow_zero=True``; that
    path is used for square-tiled surfaces with regular marked points and
    for the result of merging a zero with a simple pole.
    """
    orders = tuple(int(m) for m in orders)
    if k < 1:
        raise InvalidSignature(f"k must be >= 1, got {k}")
    if g < 0:
        raise InvalidSignature(f"g must be >= 0, got {g}")
    try:
        component = Component(component)
    except ValueError:
        raise InvalidSignature(f"unknown component label {component!r}") from None
    if not allow_zero and 0 in orders:
        raise InvalidSignature("zeros of order 0 are not allowed here")
    if not orders and g != 1:
        raise InvalidSignature("empty signature is only possible in genus 1")
    total = sum(orders)
    expected = k * (2 * g - 2)
    if total != expected:
        raise DegreeMismatch(
            f"sum of orders {total} != k(2g-2) = {k}*(2*{g}-2) = {expected}"
        )
    return Signature(g, k, orders, component)


def check_no_minus_k(s: Signature) -> None:
    for i, m in enumerate(s.orders, start=1):
        if m == -s.k:
            raise MinusKEntry(f"entry m_{i} = {m} equals -k in {s}")


def kappa_mu(s: Signature) -> Fraction:
    """(2g-2+n)/k - sum 1/(m_i+k)."""
    check_no_minus_k(s)
    value = Fraction(2 * s.g - 2 + s.n, s.k)
    for m in s.orders:
        value -= Fraction(1, m + s.k)
    return value


def dimension(s: Signature) -> int:
    # Primitive-component convention; informational only.
    if s.k == 1:
        return 2 * s.g - 2 + s.n
    return 2 * s.g - 3 + s.n


def is_infinite_area(s: Signature) -> bool:
    return bool(s.orders) and min(s.orders) <= -s.k


# ---------------------------------------------------------------------------
# text format:  k=<k> g=<g> mu=<m1,m2,...>[^<component>]
# ---------------------------------------------------------------------------

_SHORT = re.compile(r"^\s*([HQ])\(([^)]*)\)(?:\^(\w+))?\s*$")


def _parse_orders(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"bad order list {text!r}") from None


def parse_signature(text: str, allow_zero: bool = False) -> Signature:
    """Parse ``k=1 g=3 mu=4^odd``; also accepts the shorthand ``H(4)^odd``."""
    short = _SHORT.match(text)
    if short:
        letter, body, comp = short.groups()
        k = 1 if letter == "H" else 2
        orders = _parse_orders(body)
        total = sum(orders)
        if total % (2 * k):
            raise DegreeMismatch(f"sum of orders {total} is not k(2g-2) for k={k}")
        g = total // (2 * k) + 1
        return validate_signature(g, k, orders, comp or Component.GENERIC, allow_zero)

    fields = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("k", "g", "mu"):
            raise ParseError(f"bad signature token {token!r} in {text!r}")
        fields[key] = value
    if set(fields) != {"k", "g", "mu"}:
        raise ParseError(f"signature needs k=, g= and mu= fields: {text!r}")
    mu, _, comp = fields["mu"].partition("^")
    try:
        g, k = int(fields["g"]), int(fields["k"])
    except ValueError:
        raise ParseError(f"non-integer g or k in {text!r}") from None
    return validate_signature(g, k, _parse_orders(mu), comp or Component.GENERIC, allow_zero)


def format_signature(s: Signature) -> str:
    mu = ",".join(str(m) for m in s.orders)
    label = "" if s.component is Component.GENERIC else f"^{s.component.value}"
    return f"k={s.k} g={s.g} mu={mu}{label}"


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``; decimal literals are rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"bad rational literal {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
