"""
The bifork algebra in standard-bifork coordinates.

An element is sum c * X*_{i,j} X_{k,l}, stored as {((i, j), (k, l)): c}.
Braids act on the left through the dual fork index and on the right through
the fork index; products use the closed-form pairing table. ``realize`` maps
coordinates to actual N x N matrices and is the oracle for all of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .braid import BraidWord, double_indices, index_bijection
from .laurent import ONE, ZERO, LaurentPoly, _add_into
from .lk import LKContext, dual_fork_image, fork_image, pairing_table_entry
from .matrix import LambdaMatrix

__all__ = [
    "DualForkCoords",
    "BiforkCoords",
    "left_act_generator",
    "right_act_generator",
    "left_act_bifork",
    "expand",
    "multiply",
    "realize",
    "realize_dual",
    "linear_independence_check",
    "random_coords",
]

Pair = tuple[int, int]


def _clean(coeffs: Mapping) -> dict:
    return {k: v for k, v in coeffs.items() if v}


@dataclass(frozen=True)
class DualForkCoords:
    n: int
    coeffs: Mapping[Pair, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    @classmethod
    def basis(cls, n: int, i: int, j: int) -> DualForkCoords:
        return cls(n, {(i, j): ONE})


@dataclass(frozen=True)
class BiforkCoords:
    n: int
    coeffs: Mapping[tuple[Pair, Pair], LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    @classmethod
    def basis(cls, n: int, dual: Pair, fork: Pair) -> BiforkCoords:
        return cls(n, {(dual, fork): ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: BiforkCoords) -> BiforkCoords:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return BiforkCoords(self.n, out)

    def scale(self, c: LaurentPoly) -> BiforkCoords:
        return BiforkCoords(self.n, {k: c * v for k, v in self.coeffs.items()})

    def to_record(self) -> dict:
        return {f"{a[0]},{a[1]},{b[0]},{b[1]}": str(v) for (a, b), v in sorted(self.coeffs.items())}


def _combine(images) -> dict:
    # images: iterable of (coefficient, {key: poly}); accumulate via raw terms
    acc: dict = {}
    for c, img in images:
        for k, v in img.items():
            acc.setdefault(k, {})
            _add_into(acc[k], (c * v)._terms)
    return {k: LaurentPoly._raw(t) for k, t in acc.items() if t}


def left_act_generator(sign: int, m: int, d: DualForkCoords) -> DualForkCoords:
    """sigma_m^{sign} applied on the left to a combination of dual forks."""
    return DualForkCoords(
        d.n, _combine((c, dual_fork_image(d.n, i, j, m, sign)) for (i, j), c in d.coeffs.items())
    )


def left_act_bifork(sign: int, m: int, u: BiforkCoords) -> BiforkCoords:
    images = []
    for (dual, fork), c in u.coeffs.items():
        img = dual_fork_image(u.n, dual[0], dual[1], m, sign)
        images.append((c, {(k, fork): v for k, v in img.items()}))
    return BiforkCoords(u.n, _combine(images))


def right_act_generator(sign: int, m: int, u: BiforkCoords) -> BiforkCoords:
    """sigma_m^{sign} applied on the right, through the fork index."""
    images = []
    for (dual, fork), c in u.coeffs.items():
        img = fork_image(u.n, fork[0], fork[1], m, sign)
        images.append((c, {(dual, k): v for k, v in img.items()}))
    return BiforkCoords(u.n, _combine(images))


def expand(beta: BraidWord, gamma: BraidWord, interleave: bool = False) -> BiforkCoords:
    """
    Coordinates of beta X*_{1,2} X_{1,2} gamma.

    Left letters are consumed innermost first (right to left), right letters
    left to right. With ``interleave`` the two streams alternate, which must
    not change the result since the actions commute.
    """
    if beta.n != gamma.n:
        raise ValueError("strand counts differ")
    u = BiforkCoords.basis(beta.n, (1, 2), (1, 2))
    lefts = [(1 if x > 0 else -1, abs(x)) for x in reversed(beta.letters)]
    rights = [(1 if x > 0 else -1, abs(x)) for x in gamma.letters]
    if not interleave:
        for s, m in lefts:
            u = left_act_bifork(s, m, u)
        for s, m in rights:
            u = right_act_generator(s, m, u)
        return u
    for k in range(max(len(lefts), len(rights))):
        if k < len(rights):
            u = right_act_generator(*rights[k], u)
        if k < len(lefts):
            u = left_act_bifork(*lefts[k], u)
    return u


def multiply(u: BiforkCoords, v: BiforkCoords) -> BiforkCoords:
    """(X*_a X_b)(X*_c X_d) = (X_b X*_c) X*_a X_d, extended bilinearly."""
    if u.n != v.n:
        raise ValueError("strand counts differ")
    n = u.n
    acc: dict = {}
    for (a, b), cu in u.coeffs.items():
        for (c, d), cv in v.coeffs.items():
            s = pairing_table_entry(n, b[0], b[1], c[0], c[1])
            if not s:
                continue
            key = (a, d)
            acc.setdefault(key, {})
            _add_into(acc[key], (s * cu * cv)._terms)
    return BiforkCoords(n, {k: LaurentPoly._raw(t) for k, t in acc.items() if t})


def realize_dual(ctx: LKContext, d: DualForkCoords) -> LambdaMatrix:
    out = LambdaMatrix.zeros(ctx.N, 1)
    for (i, j), c in d.coeffs.items():
        out = out + ctx.dual_fork(i, j).scale(c)
    return out


def realize(ctx: LKContext, u: BiforkCoords) -> LambdaMatrix:
    """sum c * X*_{i,j} (column) times the b(k,l)-th basis row."""
    J = ctx.form_J
    rows = [[ZERO] * ctx.N for _ in range(ctx.N)]
    for ((i, j), (k, l)), c in u.coeffs.items():
        col = index_bijection(ctx.n, i, j) - 1
        dst = index_bijection(ctx.n, k, l) - 1
        for r in range(ctx.N):
            x = J[r, col]
            if x:
                rows[r][dst] = rows[r][dst] + c * x
    return LambdaMatrix(rows)


def random_coords(n: int, rng: random.Random, density: float = 0.3, spread: int = 2) -> BiforkCoords:
    pairs = double_indices(n)
    coeffs = {}
    for a in pairs:
        for b in pairs:
            if rng.random() < density:
                terms = {
                    (rng.randint(-spread, spread), rng.randint(-spread, spread)): rng.choice([-2, -1, 1, 2])
                    for _ in range(rng.randint(1, 3))
                }
                coeffs[(a, b)] = LaurentPoly(terms)
    return BiforkCoords(n, coeffs)


def linear_independence_check(n: int, trials: int = 5, seed: int = 0) -> bool:
    """
    Standard biforks are independent iff J is nonsingular (J A J = 0 forces
    A = 0). Checks det J != 0 and that random nonzero coordinates realize to
    nonzero matrices.
    """
    if n > 5:
        raise ValueError("linear independence check is limited to n <= 5")
    ctx = LKContext(n)
    if ctx.N <= 6:
        nonsingular = bool(ctx.form_J.determinant())
    else:
        nonsingular = bool(LambdaMatrix(ctx.form_J.map(LaurentPoly.substitute_q_one).tolist()).determinant())
    if not nonsingular:
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        u = random_coords(n, rng)
        if u.is_zero():
            continue
        if realize(ctx, u).is_zero():
            return False
    return True
