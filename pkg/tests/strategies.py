"""Generators of valid stable signatures (2g-2+n > 0), shared by the
property tests and the acceptance suite."""
from __future__ import annotations

import random

from hypothesis import assume, strategies as st

from kdiff.signature import Component, Signature, validate_signature


def _finish(g, k, head, holomorphic=False, allow_minus_k=False):
    last = k * (2 * g - 2) - sum(head)
    bad = {0} if allow_minus_k else {0, -k}
    if last in bad or (holomorphic and last < 1):
        return None
    if 2 * g - 2 + len(head) + 1 <= 0:
        return None  # M_{0,n} with n <= 2 is not a moduli space
    return validate_signature(g, k, head + [last])


@st.composite
def signatures(draw, ks=(1, 2), max_g=6, max_n=5, holomorphic=False):
    """Valid signatures with no entry equal to 0 or -k."""
    k = draw(st.sampled_from(ks))
    g = draw(st.integers(2 if holomorphic else 0, max_g))
    n = draw(st.integers(1, max_n))
    lo = 1 if holomorphic else -3 * k
    hi = max(k * (2 * g - 2), 0) + 3 * k
    entry = st.integers(lo, hi).filter(lambda m: m not in (0, -k))
    head = [draw(entry) for _ in range(n - 1)]
    s = _finish(g, k, head, holomorphic)
    assume(s is not None)
    return s


@st.composite
def infinite_area_signatures(draw, ks=(1, 2, 3), max_g=5):
    """Signatures with at least one entry <= -k; entries equal to -k allowed."""
    k = draw(st.sampled_from(ks))
    g = draw(st.integers(0, max_g))
    pole = draw(st.integers(-4 * k, -k))
    rest = [draw(st.integers(-4 * k, 4 * k * g + 4).filter(bool)) for _ in range(draw(st.integers(0, 3)))]
    s = _finish(g, k, [pole] + rest, allow_minus_k=True)
    assume(s is not None)
    return s


def random_signature(rng: random.Random, ks=(1, 2), max_g=6, max_n=5, holomorphic=False) -> Signature:
    """Rejection sampler mirroring :func:`signatures`, for timed loops."""
    while True:
        k = rng.choice(ks)
        g = rng.randint(2 if holomorphic else 0, max_g)
        n = rng.randint(1, max_n)
        lo = 1 if holomorphic else -3 * k
        hi = max(k * (2 * g - 2), 0) + 3 * k
        head = []
        while len(head) < n - 1:
            m = rng.randint(lo, hi)
            if m not in (0, -k):
                head.append(m)
        s = _finish(g, k, head, holomorphic)
        if s is not None:
            return s


def random_infinite_area(rng: random.Random, ks=(1, 2, 3), max_g=5) -> Signature:
    while True:
        k = rng.choice(ks)
        g = rng.randint(0, max_g)
        head = [rng.randint(-4 * k, -k)]
        for _ in range(rng.randint(0, 3)):
            m = rng.randint(-4 * k, 4 * k * g + 4)
            if m:
                head.append(m)
        s = _finish(g, k, head, allow_minus_k=True)
        if s is not None:
            return s


components = st.sampled_from(list(Component))
