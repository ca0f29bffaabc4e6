"""Exact sums of Lyapunov exponents of arithmetic Teichmueller curves.

For the orbit of a square-tiled surface in a stratum of abelian
differentials,

    L = kappa_mu / 12 + (1 / |orbit|) * sum over the orbit of sum h / w,

where (w, h) runs over the horizontal cylinders.  Two orbits in one
connected component with different L show that the component is varying,
hence eta is nontrivial there.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from kdiff.certificates import Certificate, certify_eta_nontrivial
from kdiff.errors import MeromorphicUnsupported, NotApplicable
from kdiff.origami.components import origami_component
from kdiff.origami.enumeration import enumerate_origamis
from kdiff.origami.orbits import OrbitData, sl2_orbit, split_into_orbits
from kdiff.origami.surface import Origami, horizontal_cylinders, stratum_of
from kdiff.signature import Component, Signature, kappa_mu


@dataclass(frozen=True)
class LyapunovReport:
    stratum: Signature
    orbit_size: int
    L: Fraction
    kappa_term: Fraction
    sv_term: Fraction

    def __post_init__(self):
        if self.L != self.kappa_term + self.sv_term:
            raise ValueError("L must equal kappa_term + sv_term")


def orbit_lyapunov(orbit: OrbitData) -> LyapunovReport:
    s = stratum_of(orbit.key)
    if not s.orders:
        raise NotApplicable("the torus has no zeros; L is only defined on strata with zeros")
    kappa_term = kappa_mu(s) / 12
    total = sum((horizontal_cylinders(o).modulus_sum() for o in orbit.representatives), Fraction(0))
    sv_term = total / orbit.size
    return LyapunovReport(s, orbit.size, kappa_term + sv_term, kappa_term, sv_term)


def lyapunov_sum(o: Origami) -> LyapunovReport:
    """L for the Teichmueller curve generated by ``o``."""
    o.check_connected()
    return orbit_lyapunov(sl2_orbit(o))


@dataclass(frozen=True)
class OrbitSummary:
    N: int
    component: Component
    key: Origami
    size: int
    L: Fraction


@dataclass(frozen=True)
class VaryingReport:
    target: Signature
    max_squares: int
    orbits: tuple[OrbitSummary, ...]
    certificates: tuple[Certificate, ...] = field(default=())

    def values(self) -> dict[Component, tuple[Fraction, ...]]:
        out = defaultdict(set)
        for orb in self.orbits:
            out[orb.component].add(orb.L)
        return {c: tuple(sorted(v)) for c, v in sorted(out.items(), key=lambda t: t[0].value)}

    @property
    def varying(self) -> bool:
        return any(len(v) > 1 for v in self.values().values())


def varying_test(target: Signature, max_squares: int, jobs: int = 1) -> VaryingReport:
    """Enumerate every orbit with at most ``max_squares`` squares and compare
    their Lyapunov sums within each connected component.

    Orbits are grouped by :func:`origami_component` (hyperelliptic, spin
    parity); a labeled target keeps only its own component.
    """
    if target.k != 1:
        raise NotApplicable("square-tiled surfaces only realize abelian differentials")
    if any(m < 0 for m in target.orders):
        raise MeromorphicUnsupported(f"{target} has poles")
    if not target.orders:
        raise NotApplicable("the torus has no zeros")
    summaries = []
    generic = target.with_component(Component.GENERIC)
    for N in range(1, max_squares + 1):
        for orbit in split_into_orbits(enumerate_origamis(N, generic, jobs=jobs)):
            comp = origami_component(orbit.key)
            if target.component is not Component.GENERIC and comp is not target.component:
                continue
            rep = orbit_lyapunov(orbit)
            summaries.append(OrbitSummary(N, comp, orbit.key, orbit.size, rep.L))
    report = VaryingReport(target, max_squares, tuple(summaries))
    certs = tuple(
        certify_eta_nontrivial(target.with_component(comp), comp.value, values)
        for comp, values in report.values().items()
    )
    return VaryingReport(target, max_squares, report.orbits, certs)
