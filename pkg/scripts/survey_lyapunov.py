"""Empirical Lyapunov sums over small square-tiled surfaces.

For every abelian stratum of the nonvarying catalog (and the strata that
need an L_mu for the Harder-Narasimhan criterion) list the distinct sums
per component up to a square budget, next to kappa_mu/12.

    python3 scripts/survey_lyapunov.py --max-squares 8 --jobs 4
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from kdiff.catalog import load_catalog
from kdiff.origami.lyapunov import varying_test
from kdiff.signature import kappa_mu


@dataclass(frozen=True)
class SurveyConfig:
    max_squares: int = 8
    jobs: int = 1
    include_hn: bool = True


def abelian_targets(cfg: SurveyConfig):
    seen = []
    for e in load_catalog():
        if e.stratum.k != 1 or (e.is_hn and not cfg.include_hn):
            continue
        generic = e.stratum.with_component("generic")
        if generic not in seen:
            seen.append(generic)
    return seen


def survey(cfg: SurveyConfig) -> list[str]:
    lines = [f"{'stratum':22} {'kappa/12':>9}  component: distinct L (orbits)  [seconds]"]
    for s in abelian_targets(cfg):
        start = time.perf_counter()
        rep = varying_test(s, cfg.max_squares, jobs=cfg.jobs)
        elapsed = time.perf_counter() - start
        counts = {}
        for orb in rep.orbits:
            counts[orb.component] = counts.get(orb.component, 0) + 1
        parts = [
            f"{c.value}: {{{', '.join(str(v) for v in vals)}}} ({counts[c]})"
            for c, vals in rep.values().items()
        ] or ["no origamis within budget"]
        lines.append(f"{s.pretty():22} {str(kappa_mu(s) / 12):>9}  {'; '.join(parts)}  [{elapsed:.1f}]")
    return lines


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-squares", type=int, default=SurveyConfig.max_squares)
    p.add_argument("--jobs", type=int, default=SurveyConfig.jobs)
    p.add_argument("--no-hn", action="store_true", help="skip the Harder-Narasimhan strata")
    args = p.parse_args()
    cfg = SurveyConfig(args.max_squares, args.jobs, not args.no_hn)
    for line in survey(cfg):
        print(line)


if __name__ == "__main__":
    main()
