"""SL(2,Z)-orbits of square-tiled surfaces."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from kdiff.origami.surface import Origami


@dataclass(frozen=True)
class OrbitData:
    """Canonical representatives of one orbit, sorted."""

    representatives: tuple[Origami, ...]

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def key(self) -> Origami:
        """Least representative; identifies the orbit."""
        return self.representatives[0]

    def __contains__(self, o: Origami) -> bool:
        return o.canonical() in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.representatives)


def _sort_key(o: Origami):
    return (o.h, o.v)


def sl2_orbit(o: Origami) -> OrbitData:
    """Closure of ``o`` under the shear and the quarter turn, up to relabeling."""
    start = o.canonical()
    seen = {start}
    queue = [start]
    for cur in queue:
        for nxt in (cur.shear().canonical(), cur.rotate().canonical()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return OrbitData(tuple(sorted(seen, key=_sort_key)))


def split_into_orbits(origamis) -> list[OrbitData]:
    """Partition canonical origamis into orbits, ordered by their least member."""
    remaining = set(origamis)
    out = []
    for o in sorted(remaining, key=_sort_key):
        if o not in remaining:
            continue
        orbit = sl2_orbit(o)
        remaining.difference_update(orbit.representatives)
        out.append(orbit)
    return out
