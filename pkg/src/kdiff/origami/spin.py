"""Spin parity of a square-tiled surface with even zero orders.

Closed curves are drawn through square centres, crossing edges at their
midpoints.  The fundamental cycles of a spanning tree of this dual graph
are simple, so the quadratic form ``q(c) = ind(c) + 1 (mod 2)`` is read off
from their turning.  Together with the mod 2 intersection form they span
H_1(S; F_2) (the radical of the form is the kernel), and the parity is the
Arf invariant computed by symplectic reduction.
"""
from __future__ import annotations

from kdiff.errors import OddOrderZero
from kdiff.origami.perms import inverse
from kdiff.origami.surface import Origami, cone_orders

# moves: 0 right, 1 up, 2 left, 3 down (counterclockwise quarter turns)
RIGHT, UP, LEFT, DOWN = range(4)


def _step(o: Origami, hinv, vinv, x: int, d: int) -> int:
    if d == RIGHT:
        return o.h[x]
    if d == UP:
        return o.v[x]
    if d == LEFT:
        return hinv[x]
    return vinv[x]


def _dual_edge(o: Origami, x: int, d: int) -> tuple[str, int]:
    """Edge crossed when leaving square x in direction d.

    ('v', i) is the vertical edge on the left of square i and ('h', i) the
    horizontal edge at the bottom of square i.
    """
    if d == RIGHT:
        return ("v", o.h[x])
    if d == LEFT:
        return ("v", x)
    if d == UP:
        return ("h", o.v[x])
    return ("h", x)


def _primal_edge(o: Origami, hinv, vinv, x: int, d: int) -> tuple[str, int]:
    """Edge traversed by the path pushed to the lower-left corners."""
    if d == RIGHT:
        return ("h", x)
    if d == UP:
        return ("v", x)
    if d == LEFT:
        return ("h", hinv[x])
    return ("v", vinv[x])


def _fundamental_cycles(o: Origami) -> list[list[tuple[int, int]]]:
    """Closed walks [(square, direction), ...] through square centres."""
    hinv, vinv = inverse(o.h), inverse(o.v)
    parent = {0: None}  # square -> (previous square, direction taken)
    order = [0]
    tree = set()
    for x in order:
        for d in (RIGHT, UP):
            y = _step(o, hinv, vinv, x, d)
            if y not in parent:
                parent[y] = (x, d)
                order.append(y)
                tree.add((x, d))

    def path_from_root(x):
        walk = []
        while parent[x] is not None:
            px, d = parent[x]
            walk.append((px, d))
            x = px
        return walk[::-1]

    def reverse(walk):
        out = []
        for x, d in reversed(walk):
            y = _step(o, hinv, vinv, x, d)
            out.append((y, (d + 2) % 4))
        return out

    cycles = []
    for x in range(o.N):
        for d in (RIGHT, UP):
            if (x, d) in tree:
                continue
            y = _step(o, hinv, vinv, x, d)
            to_x = path_from_root(x)
            to_y = path_from_root(y)
            # drop the common prefix so the walk visits each square once
            i = 0
            while i < min(len(to_x), len(to_y)) and to_x[i] == to_y[i]:
                i += 1
            walk = to_x[i:] + [(x, d)] + reverse(to_y[i:])
            cycles.append(walk)
    return cycles


def _index(walk) -> int:
    turning = 0
    for (_, d_in), (_, d_out) in zip(walk, walk[1:] + walk[:1]):
        turn = (d_out - d_in) % 4
        turning += {0: 0, 1: 1, 3: -1}[turn]
    assert turning % 4 == 0
    return turning // 4


def _chains(o: Origami, walk):
    hinv, vinv = inverse(o.h), inverse(o.v)
    dual, primal = set(), set()
    for x, d in walk:
        dual ^= {_dual_edge(o, x, d)}
        primal ^= {_primal_edge(o, hinv, vinv, x, d)}
    return dual, primal


def _arf(q: list[int], form: list[list[int]]) -> int:
    """Arf invariant of the quadratic form given on a spanning set.

    Vectors are bitmasks over the spanning set; ``form`` is the symmetric
    intersection matrix and ``q`` the values on the spanning vectors.
    """
    n = len(q)

    def B(a, b):
        total = 0
        for i in range(n):
            if a >> i & 1:
                for j in range(n):
                    if b >> j & 1:
                        total ^= form[i][j]
        return total

    def Q(a):
        total = 0
        bits = [i for i in range(n) if a >> i & 1]
        for idx, i in enumerate(bits):
            total ^= q[i]
            for j in bits[idx + 1:]:
                total ^= form[i][j]
        return total

    vectors = [1 << i for i in range(n)]
    arf = 0
    while vectors:
        a = vectors.pop()
        partner = next((b for b in vectors if B(a, b)), None)
        if partner is None:
            # a lies in the radical; q must vanish there
            if Q(a):
                raise OddOrderZero("quadratic form does not descend to homology")
            continue
        vectors.remove(partner)
        arf ^= Q(a) & Q(partner)
        vectors = [x ^ (a if B(x, partner) else 0) ^ (partner if B(x, a) else 0) for x in vectors]
    return arf


def spin_parity(o: Origami) -> int:
    """Arf invariant (0 even, 1 odd) of the spin structure of ``o``."""
    orders = cone_orders(o)
    if any(m % 2 for m in orders):
        raise OddOrderZero(f"spin parity needs even zero orders, got {orders}")
    walks = _fundamental_cycles(o)
    q = [(_index(w) + 1) % 2 for w in walks]
    chains = [_chains(o, w) for w in walks]
    form = [[len(di & pj) % 2 for (_, pj) in chains] for (di, _) in chains]
    return _arf(q, form)
