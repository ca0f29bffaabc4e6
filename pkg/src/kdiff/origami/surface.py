"""Square-tiled surfaces: a pair of permutations on the squares.

``h[i]`` is the square glued to the right of square ``i`` and ``v[i]`` the
square glued on top of it.  Squares are 0-based internally.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kdiff.errors import NotConnected, ParseError
from kdiff.origami import perms
from kdiff.origami.perms import Perm
from kdiff.signature import Signature, validate_signature


@dataclass(frozen=True)
class Origami:
    h: Perm
    v: Perm

    def __post_init__(self):
        if len(self.h) != len(self.v):
            raise ParseError("h and v act on different numbers of squares")
        if not (perms.is_permutation(self.h) and perms.is_permutation(self.v)):
            raise ParseError("h and v must be permutations")

    @property
    def N(self) -> int:
        return len(self.h)

    @classmethod
    def from_cycles(cls, h: str, v: str, n: int | None = None) -> "Origami":
        if n is None:
            n = max(len(perms.parse_cycles(h)), len(perms.parse_cycles(v)))
        return cls(perms.parse_cycles(h, n), perms.parse_cycles(v, n))

    def cycle_strings(self) -> tuple[str, str]:
        return perms.format_cycles(self.h), perms.format_cycles(self.v)

    def __str__(self):
        h, v = self.cycle_strings()
        return f"h={h} v={v}"

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in (self.h[x], self.v[x]):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.N

    def check_connected(self) -> None:
        if not self.is_connected():
            raise NotConnected(f"origami {self} is not connected")

    def commutator(self) -> Perm:
        """v^-1 h^-1 v h: maps a square to the one sharing its top-right corner
        after a loop around that corner."""
        h, v = self.h, self.v
        hi, vi = perms.inverse(h), perms.inverse(v)
        return tuple(vi[hi[v[h[x]]]] for x in range(self.N))

    def relabel(self, sigma: Perm) -> "Origami":
        """Conjugate by ``sigma``: square ``i`` gets the new label ``sigma[i]``."""
        h = [0] * self.N
        v = [0] * self.N
        for i in range(self.N):
            h[sigma[i]] = sigma[self.h[i]]
            v[sigma[i]] = sigma[self.v[i]]
        return Origami(tuple(h), tuple(v))

    def _bfs_labels(self, start: int) -> list[int]:
        label = [-1] * self.N
        label[start] = 0
        order = [start]
        nxt = 1
        for x in order:
            for y in (self.h[x], self.v[x]):
                if label[y] < 0:
                    label[y] = nxt
                    nxt += 1
                    order.append(y)
        return label

    def canonical(self) -> "Origami":
        """Lexicographically least relabeling among the BFS relabelings."""
        self.check_connected()
        best = None
        for start in range(self.N):
            lab = self._bfs_labels(start)
            h = [0] * self.N
            v = [0] * self.N
            for i in range(self.N):
                h[lab[i]] = lab[self.h[i]]
                v[lab[i]] = lab[self.v[i]]
            key = (tuple(h), tuple(v))
            if best is None or key < best:
                best = key
        return Origami(*best)

    def automorphism_count(self) -> int:
        """Number of relabelings fixing (h, v); they act freely when connected."""
        can = self.canonical()
        count = 0
        for start in range(self.N):
            lab = self._bfs_labels(start)
            if self.relabel(tuple(lab)) == can:
                count += 1
        return count

    # SL(2,Z) generators.  Both act on the same surface up to relabeling:
    # the shear (x, y) -> (x + y, y) and the quarter turn.
    def shear(self) -> "Origami":
        return Origami(self.h, perms.compose(self.v, perms.inverse(self.h)))

    def rotate(self) -> "Origami":
        return Origami(perms.inverse(self.v), self.h)


def cone_orders(o: Origami) -> tuple[int, ...]:
    """Orders of all corners, regular ones (order 0) included, descending."""
    o.check_connected()
    return tuple(sorted((len(c) - 1 for c in perms.cycles(o.commutator())), reverse=True))


def stratum_of(o: Origami) -> Signature:
    """The stratum of abelian differentials containing ``o``.

    Each cycle of length l of the commutator is a cone point of angle
    2*pi*l, i.e. a zero of order l - 1.  Regular corners are dropped.
    """
    orders = tuple(m for m in cone_orders(o) if m > 0)
    g = sum(orders) // 2 + 1
    return validate_signature(g, 1, orders)


@dataclass(frozen=True)
class CylinderDecomposition:
    cylinders: tuple[tuple[int, int], ...]  # (width, height)

    @property
    def area(self) -> int:
        return sum(w * h for w, h in self.cylinders)

    def modulus_sum(self) -> Fraction:
        """Sum of height / width over the cylinders."""
        return sum((Fraction(h, w) for w, h in self.cylinders), Fraction(0))


def horizontal_cylinders(o: Origami) -> CylinderDecomposition:
    """Maximal horizontal cylinders.

    Rows are the cycles of ``h``.  A row continues into the row above it
    when every top corner along it is regular, i.e. ``v h = h v`` on the
    row; otherwise a cone point sits on the boundary and the cylinder ends.
    """
    o.check_connected()
    rows = perms.cycles(o.h)
    row_of = {}
    for r, cyc in enumerate(rows):
        for x in cyc:
            row_of[x] = r
    above = {}
    for r, cyc in enumerate(rows):
        if all(o.v[o.h[x]] == o.h[o.v[x]] for x in cyc):
            above[r] = row_of[o.v[cyc[0]]]
    below = {b: a for a, b in above.items()}

    out = []
    done = set()
    for r in range(len(rows)):
        if r in done or r in below:
            continue
        height = 0
        cur = r
        while True:
            done.add(cur)
            height += 1
            if cur not in above:
                break
            cur = above[cur]
        out.append((len(rows[r]), height))
    # rows left over form closed chains: a torus cover with no cone point
    for r in range(len(rows)):
        if r in done:
            continue
        height = 0
        cur = r
        while cur not in done:
            done.add(cur)
            height += 1
            cur = above[cur]
        out.append((len(rows[r]), height))
    return CylinderDecomposition(tuple(sorted(out)))
