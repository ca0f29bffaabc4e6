"""Exhaustive enumeration of square-tiled surfaces in a given stratum.

Every relabeling class has a member whose horizontal permutation is the
standard permutation of its cycle type, so it is enough to fix ``h`` to one
representative per partition of N and scan all ``v``.  The scan is
vectorized with numpy; only the survivors are canonicalized in Python.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np

from kdiff.errors import NotApplicable
from kdiff.origami import perms
from kdiff.origami.surface import Origami
from kdiff.signature import Component, Signature

_CHUNK = 1 << 18


@lru_cache(maxsize=4)
def all_permutations(n: int) -> np.ndarray:
    """Array of shape (n!, n) holding every permutation of range(n)."""
    table = np.zeros((1, 0), dtype=np.int8)
    for m in range(n):
        # insert the new symbol m at every position of the perms of range(m)
        blocks = [np.insert(table, pos, m, axis=1) for pos in range(m + 1)]
        table = np.concatenate(blocks, axis=0)
    table.setflags(write=False)
    return table


def corner_profile(target: Signature, N: int) -> tuple[int, ...] | None:
    """Sorted per-square cycle lengths the commutator must have, or None if
    the stratum needs more than N squares."""
    lengths = [m + 1 for m in target.orders if m != 0]
    if sum(lengths) > N:
        return None
    lengths += [1] * (N - sum(lengths))
    per_square = []
    for length in lengths:
        per_square.extend([length] * length)
    return tuple(sorted(per_square))


def _commutator_cycle_lengths(h: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Per-square cycle length of v^-1 h^-1 v h for each row of V."""
    N = h.shape[0]
    hinv = np.argsort(h).astype(np.intp)
    vinv = np.argsort(V, axis=1).astype(np.intp)
    step = hinv[V[:, h]]
    comm = np.take_along_axis(vinv, step, axis=1)
    ident = np.arange(N)
    lengths = np.zeros(comm.shape, dtype=np.int16)
    cur = comm
    for j in range(1, N + 1):
        hit = (cur == ident) & (lengths == 0)
        lengths[hit] = j
        cur = np.take_along_axis(comm, cur, axis=1)
    return lengths


def _scan_partition(args) -> set:
    partition, N, profile = args
    h = np.array(perms.standard_perm(partition), dtype=np.intp)
    h_tuple = tuple(int(x) for x in h)
    want = np.array(profile, dtype=np.int16)
    table = all_permutations(N)
    found = set()
    for start in range(0, table.shape[0], _CHUNK):
        V = table[start:start + _CHUNK].astype(np.intp)
        lengths = np.sort(_commutator_cycle_lengths(h, V), axis=1)
        rows = np.nonzero((lengths == want).all(axis=1))[0]
        for r in rows:
            o = Origami(h_tuple, tuple(int(x) for x in V[r]))
            if o.is_connected():
                found.add(o.canonical())
    return found


def enumerate_origamis(N: int, target: Signature, jobs: int = 1) -> list[Origami]:
    """All connected origamis with N squares in ``target``, one canonical
    representative per relabeling class, sorted.

    ``target`` must be a k=1 signature; zeros of order 0 in it are ignored.
    A component label (hyp, nonhyp, odd, even) filters by
    :func:`origami_component`.  The result does not depend on ``jobs``.
    """
    if target.k != 1:
        raise NotApplicable("square-tiled surfaces only realize abelian differentials")
    if target.component in (Component.REG, Component.IRR):
        raise NotApplicable(
            f"component {target.component.value!r} belongs to quadratic differentials"
        )
    if N < 1:
        raise ValueError("N must be positive")
    profile = corner_profile(target, N)
    if profile is None:
        return []
    tasks = [(p, N, profile) for p in perms.partitions(N)]
    found = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_partition, tasks):
                found |= part
    else:
        for task in tasks:
            found |= _scan_partition(task)
    result = sorted(found, key=lambda o: (o.h, o.v))
    if target.component is not Component.GENERIC:
        from kdiff.origami.components import origami_component

        result = [o for o in result if origami_component(o) is target.component]
    return result
