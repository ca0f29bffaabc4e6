"""Connected-component labels of square-tiled surfaces.

A surface in H(2g-2) or H(g-1,g-1) lies in the hyperelliptic component
iff it has an involution with derivative -1 and 2g+2 fixed points.  On an
origami such an involution is the rotation by pi of the square tiling, so
it is a relabeling conjugating (h, v) to (h^-1, v^-1).  In H(g-1,g-1)
the involution must in addition exchange the two zeros.
"""
from __future__ import annotations

from kdiff.origami import perms
from kdiff.origami.spin import spin_parity
from kdiff.origami.surface import Origami, stratum_of
from kdiff.signature import Component


def rotation_involutions(o: Origami) -> list[tuple[int, ...]]:
    """All relabelings s with s h s^-1 = h^-1 and s v s^-1 = v^-1."""
    o.check_connected()
    hinv, vinv = perms.inverse(o.h), perms.inverse(o.v)
    found = []
    for target in range(o.N):
        s = {0: target}
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for y, sy in ((o.h[x], hinv[s[x]]), (o.v[x], vinv[s[x]])):
                if y in s:
                    if s[y] != sy:
                        ok = False
                        break
                else:
                    s[y] = sy
                    stack.append(y)
        if ok:
            found.append(tuple(s[i] for i in range(o.N)))
    return found


def _fixed_points(o: Origami, s: tuple[int, ...]) -> tuple[int, int]:
    """(all fixed points, fixed zeros) of the rotation ``s``.

    Fixed points are counted at square centres, edge midpoints and corners.
    """
    comm = o.commutator()
    corner_of = {}
    for idx, cyc in enumerate(perms.cycles(comm)):
        for x in cyc:
            corner_of[x] = idx
    hinv, vinv = perms.inverse(o.h), perms.inverse(o.v)
    centres = sum(1 for x in range(o.N) if s[x] == x)
    # the left edge of x goes to the right edge of s(x), i.e. left edge of h(s(x))
    vertical = sum(1 for x in range(o.N) if o.h[s[x]] == x)
    horizontal = sum(1 for x in range(o.N) if o.v[s[x]] == x)
    # top-right corner of x goes to the bottom-left corner of s(x)
    images = {}
    for x in range(o.N):
        images[corner_of[x]] = corner_of[hinv[vinv[s[x]]]]
    cycles = perms.cycles(comm)
    fixed = [c for c, d in images.items() if c == d]
    zeros = sum(1 for c in fixed if len(cycles[c]) > 1)
    return centres + vertical + horizontal + len(fixed), zeros


def fixed_point_count(o: Origami, s: tuple[int, ...]) -> int:
    return _fixed_points(o, s)[0]


def is_hyperelliptic(o: Origami) -> bool:
    """True iff ``o`` lies in a hyperelliptic component.

    For two zeros the involution must also swap them; a hyperelliptic curve
    whose zeros are both Weierstrass points belongs to another component.
    """
    stratum = stratum_of(o)
    for s in rotation_involutions(o):
        total, zeros = _fixed_points(o, s)
        if total == 2 * stratum.g + 2 and (stratum.n == 1 or zeros == 0):
            return True
    return False


def has_hyperelliptic_component(orders: tuple[int, ...], g: int) -> bool:
    orders = tuple(sorted(m for m in orders if m != 0))
    return g >= 3 and orders in ((2 * g - 2,), (g - 1, g - 1))


def origami_component(o: Origami) -> Component:
    """Component label of the stratum component containing ``o``.

    Strata of genus <= 2 and strata without hyperelliptic or spin
    components get ``generic``.
    """
    s = stratum_of(o)
    hyp_possible = has_hyperelliptic_component(s.orders, s.g)
    if hyp_possible and is_hyperelliptic(o):
        return Component.HYP
    if s.g >= 3 and all(m % 2 == 0 for m in s.orders):
        return Component.ODD if spin_parity(o) else Component.EVEN
    if hyp_possible:
        return Component.NONHYP
    return Component.GENERIC
