"""
Group-ring elements of B_n and the finite-type behaviour of Lawrence-Krammer
derivative matrices at the base point (t, q) = (-1, 1).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Mapping

from .braid import BraidWord, double_indices, index_bijection, random_word
from .laurent import LaurentPoly
from .lk import LKContext
from .matrix import LambdaMatrix

__all__ = [
    "GroupRingElement",
    "IdealSample",
    "DepthError",
    "lk_of_group_ring",
    "derivative_invariant",
    "lowest_degree_at_basepoint",
    "clearing_shift",
    "sample_ideal",
    "finite_type_check",
    "double_index_permutation_matrix",
]

BASEPOINT = (-1, 1)


class DepthError(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElement:
    """Integer combination of braid words, keyed by letter tuples."""

    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {w: c for w, c in self.terms.items() if c})

    @classmethod
    def word(cls, w: BraidWord, coeff: int = 1) -> GroupRingElement:
        return cls(w.n, {w.letters: coeff})

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(self.n, out)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        out: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(self.n, out)


@dataclass(frozen=True)
class IdealSample:
    """A product of ``depth`` factors gamma (s_m - s_m^-1) gamma'; lies in I^depth."""

    depth: int
    element: GroupRingElement


def lk_of_group_ring(ctx: LKContext, e: GroupRingElement) -> LambdaMatrix:
    total = LambdaMatrix.zeros(ctx.N)
    for w, c in e.terms.items():
        total = total + ctx.matrix(BraidWord(e.n, w)).scale(c)
    return total


def derivative_invariant(ctx: LKContext, w: BraidWord | GroupRingElement, k: int, l: int) -> list[list[int]]:
    """d^k/dt^k d^l/dq^l of K(w), evaluated at (-1, 1), as an integer matrix."""
    if k < 0 or l < 0:
        raise ValueError("derivative orders must be nonnegative")
    M = lk_of_group_ring(ctx, w) if isinstance(w, GroupRingElement) else ctx.matrix(w)
    values = M.derivative(k, l).eval(*BASEPOINT)
    out = []
    for row in values:
        if any(v.denominator != 1 for v in row):
            raise ArithmeticError("non-integer derivative value")
        out.append([int(v) for v in row])
    return out


def clearing_shift(p: LaurentPoly) -> tuple[int, int]:
    """Smallest (A, B) >= 0 making t^A q^B p a polynomial."""
    if not p:
        return (0, 0)
    a, b = p.min_exponents()
    return (max(0, -a), max(0, -b))


def lowest_degree_at_basepoint(p: LaurentPoly) -> float:
    """
    Lowest total degree of p expanded in u = t + 1, v = q - 1.

    Negative exponents are cleared first by a monomial t^A q^B, a unit in the
    local ring at (-1, 1), which leaves the valuation unchanged. Returns
    math.inf for the zero polynomial.
    """
    if not p:
        return math.inf
    A, B = clearing_shift(p)
    # t^a = sum_r C(a,r) u^r (-1)^(a-r); q^b = sum_s C(b,s) v^s
    expanded: dict[tuple[int, int], int] = {}
    for (a, b), c in p.items():
        a, b = a + A, b + B
        for r in range(a + 1):
            cr = c * math.comb(a, r) * (-1) ** (a - r)
            for s in range(b + 1):
                key = (r, s)
                expanded[key] = expanded.get(key, 0) + cr * math.comb(b, s)
    degrees = [r + s for (r, s), c in expanded.items() if c]
    return min(degrees) if degrees else math.inf


def sample_ideal(n: int, depth: int, rng: random.Random, max_conj: int = 4) -> IdealSample:
    element = GroupRingElement(n, {(): 1})
    for _ in range(depth):
        m = rng.randint(1, n - 1)
        g1 = random_word(n, rng.randint(0, max_conj), rng)
        g2 = random_word(n, rng.randint(0, max_conj), rng)
        factor = GroupRingElement(n, {g1.letters + (m,) + g2.letters: 1}) - GroupRingElement(
            n, {g1.letters + (-m,) + g2.letters: 1}
        )
        element = element * factor
    return IdealSample(depth, element)


def finite_type_check(ctx: LKContext, samples: list[IdealSample], k: int, l: int) -> bool:
    """
    The order-(k+l) derivative invariant vanishes on every sample, and every
    entry of K(sample) has valuation at least k+l+1 at the base point.
    """
    order = k + l
    for s in samples:
        if s.depth < order + 1:
            raise DepthError(f"sample depth {s.depth} too small for order {order}")
    for s in samples:
        if any(any(x for x in row) for row in derivative_invariant(ctx, s.element, k, l)):
            return False
        M = lk_of_group_ring(ctx, s.element)
        if any(lowest_degree_at_basepoint(x) < order + 1 for row in M.tolist() for x in row):
            return False
    return True


def double_index_permutation_matrix(w: BraidWord) -> list[list[int]]:
    """Row b(i,j) has a 1 in column b of the sorted image pair of (i, j)."""
    perm = w.underlying_permutation()
    pairs = double_indices(w.n)
    out = [[0] * len(pairs) for _ in pairs]
    for r, (i, j) in enumerate(pairs):
        a, b = sorted((perm[i - 1], perm[j - 1]))
        out[r][index_bijection(w.n, a, b) - 1] = 1
    return out

