"""Merging coefficients and Teichmueller ratios for every holomorphic
abelian stratum up to a given genus, plus the quadratic strata with at
worst simple poles (``--quadratic``)."""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from kdiff.extremality import extremality_report
from kdiff.origami.perms import partitions
from kdiff.signature import validate_signature


@dataclass(frozen=True)
class TableConfig:
    max_genus: int = 4
    quadratic: bool = False
    max_poles: int = 2


def strata(cfg: TableConfig):
    for g in range(2, cfg.max_genus + 1):
        for mu in partitions(2 * g - 2):
            yield validate_signature(g, 1, mu)
        if not cfg.quadratic:
            continue
        for poles in range(cfg.max_poles + 1):
            for mu in partitions(4 * g - 4 + poles):
                yield validate_signature(g, 2, list(mu) + [-1] * poles)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-genus", type=int, default=TableConfig.max_genus)
    p.add_argument("--quadratic", action="store_true")
    args = p.parse_args()
    cfg = TableConfig(args.max_genus, args.quadratic)
    for s in strata(cfg):
        seen = set()
        for r in extremality_report(s):
            i, j = r.pair
            key = tuple(sorted((s.orders[i - 1], s.orders[j - 1])))
            if key in seen:
                continue
            seen.add(key)
            flag = "" if r.extremal_hypothesis else "  (outside hypotheses)"
            print(f"{s.pretty():20} merge {key[0]:>2},{key[1]:<2} -> {r.merged.pretty():20} "
                  f"c={str(r.coefficient):>8}  ratio={r.ratio}{flag}")


if __name__ == "__main__":
    main()
