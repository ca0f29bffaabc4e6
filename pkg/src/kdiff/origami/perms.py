"""Permutations of ``{0, ..., n-1}`` stored as tuples of images.

``compose(p, q)`` applies ``q`` first, then ``p``. Cycle notation on the
command line and in reports is 1-based, e.g. ``(1,2)(3)``.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from kdiff.errors import ParseError

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of ``p`` (fixed points included), each starting at its minimum."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(cycs: Iterable[Sequence[int]], n: int) -> Perm:
    img = list(range(n))
    seen = set()
    for c in cycs:
        for a, b in zip(c, tuple(c[1:]) + (c[0],)):
            if a in seen or not 0 <= a < n:
                raise ParseError(f"bad cycle {tuple(x + 1 for x in c)} for n={n}")
            seen.add(a)
            img[a] = b
    return tuple(img)


def standard_perm(partition: Sequence[int]) -> Perm:
    """The permutation whose cycles are consecutive blocks of the given lengths."""
    img = []
    start = 0
    for length in partition:
        img.extend(range(start + 1, start + length))
        img.append(start)
        start += length
    return tuple(img)


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n in decreasing lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation such as ``(1,2)(3)``.

    Without ``n`` the degree is the largest label mentioned; ``()`` alone is
    the identity on one element when ``n`` is not given.
    """
    text = text.replace(" ", "")
    if _CYCLE.sub("", text):
        raise ParseError(f"bad cycle notation {text!r}")
    cycs = []
    for body in _CYCLE.findall(text):
        if not body:
            continue
        try:
            cycs.append(tuple(int(t) - 1 for t in body.split(",")))
        except ValueError:
            raise ParseError(f"bad cycle notation {text!r}") from None
    if n is None:
        n = max((x + 1 for c in cycs for x in c), default=1)
    return from_cycles(cycs, n)


def format_cycles(p: Sequence[int]) -> str:
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles(p))
