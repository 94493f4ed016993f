"""
Exact arithmetic in the Laurent polynomial ring Z[t^±1, q^±1].

A polynomial is a sparse map from exponent pairs (a, b) to nonzero Python
integers, standing for sum c_{a,b} t^a q^b. Zero coefficients are purged after
every operation, so structural equality is ring equality.

The module-level helpers prefixed with an underscore work on raw term dicts
keyed by exponent tuples of any length. The linear algebra module reuses them
for polynomials in z over the same ring (keys (z, a, b)).
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "UnitMonomial",
    "InexactDivisionError",
    "ZeroPointError",
    "PolyParseError",
    "ZERO",
    "ONE",
    "T",
    "Q",
    "parse_poly",
]

Terms = dict  # tuple[int, ...] -> int


class InexactDivisionError(ArithmeticError):
    """Raised when a division in the ring leaves a nonzero remainder."""


class ZeroPointError(ValueError):
    """Raised when a Laurent polynomial is evaluated with t=0 or q=0."""


class PolyParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# raw term-dict helpers (any number of variables)
# ---------------------------------------------------------------------------

def _add_into(acc: Terms, other: Mapping, scale: int = 1) -> None:
    for e, c in other.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def _addmul_into(acc: Terms, p: Mapping, r: Mapping) -> None:
    """acc += p*r, leaving zero coefficients in place (caller purges)."""
    get = acc.get
    if len(p) > len(r):
        p, r = r, p
    for ep, cp in p.items():
        if len(ep) == 2:
            a0, a1 = ep
            for (b0, b1), cr in r.items():
                k = (a0 + b0, a1 + b1)
                acc[k] = get(k, 0) + cp * cr
        else:
            for er, cr in r.items():
                k = tuple(x + y for x, y in zip(ep, er))
                acc[k] = get(k, 0) + cp * cr


def _purge(acc: Terms) -> Terms:
    return {e: c for e, c in acc.items() if c}


def _mul(p: Mapping, r: Mapping) -> Terms:
    if not p or not r:
        return {}
    acc: Terms = {}
    _addmul_into(acc, p, r)
    return _purge(acc)


def _sub(p: Mapping, r: Mapping) -> Terms:
    acc = dict(p)
    _add_into(acc, r, -1)
    return acc


def _exact_div(p: Mapping, d: Mapping) -> Terms:
    """
    Quotient s with s*d == p, by leading-term elimination in lex order.

    Lex order on exponent tuples is a total group order, so the leading term
    of a product is the product of leading terms. Every quotient term must lie
    between lead(p)/lead(d) and trail(p)/trail(d); leaving that window means
    the division is inexact.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return {}
    d_lead = max(d)
    d_lc = d[d_lead]
    floor = tuple(x - y for x, y in zip(min(p), min(d)))
    if len(d) == 1:
        out = {}
        for e, c in p.items():
            qc, rem = divmod(c, d_lc)
            if rem:
                raise InexactDivisionError("coefficient not divisible")
            out[tuple(x - y for x, y in zip(e, d_lead))] = qc
        return out
    rem = dict(p)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: Terms = {}
    d_items = list(d.items())
    while rem:
        neg = heapq.heappop(heap)
        e = tuple(-x for x in neg)
        c = rem.get(e)
        if not c:
            continue
        shift = tuple(x - y for x, y in zip(e, d_lead))
        if shift < floor:
            raise InexactDivisionError("nonzero remainder")
        qc, r = divmod(c, d_lc)
        if r:
            raise InexactDivisionError("leading coefficient not divisible")
        quot[shift] = qc
        for ed, cd in d_items:
            k = tuple(x + y for x, y in zip(shift, ed))
            v = rem.get(k, 0) - qc * cd
            if v:
                if k not in rem:
                    heapq.heappush(heap, tuple(-x for x in k))
                rem[k] = v
            else:
                rem.pop(k, None)
        # heap may still hold stale keys; they are skipped above
    return quot


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitMonomial:
    """A unit sign * t^a * q^b of the ring."""

    sign: int
    a: int
    b: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly._raw({(self.a, self.b): self.sign})

    def inverse(self) -> UnitMonomial:
        return UnitMonomial(self.sign, -self.a, -self.b)

    def __mul__(self, other: UnitMonomial) -> UnitMonomial:
        return UnitMonomial(self.sign * other.sign, self.a + other.a, self.b + other.b)


Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial in t and q with integer coefficients.

    >>> p = (1 - Q) * (1 - Q)
    >>> str(p)
    '1*t^0*q^0 + -2*t^0*q^1 + 1*t^0*q^2'
    >>> p.bar() == (1 - Q.inv()) ** 2
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | int | None = None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, int):
            self._terms = {(0, 0): terms} if terms else {}
        else:
            clean = {}
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = clean.get((int(a), int(b)), 0) + int(c)
            self._terms = _purge(clean)
        self._hash = None

    @classmethod
    def _raw(cls, terms: Terms) -> LaurentPoly:
        # trusted constructor: terms are already canonical and owned by us
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 1) -> LaurentPoly:
        return cls._raw({(a, b): c} if c else {})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(x: Coercible) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other: Coercible) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly._raw(_sub(self._terms, other._terms))

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other: Coercible) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> LaurentPoly:
        """Inverse of a unit; raises InexactDivisionError otherwise."""
        if not self.is_unit():
            raise InexactDivisionError(f"{self} is not a unit")
        (a, b), c = next(iter(self._terms.items()))
        return LaurentPoly._raw({(-a, -b): c})

    def exact_div(self, d: Coercible) -> LaurentPoly:
        d = self._coerce(d)
        return LaurentPoly._raw(_exact_div(self._terms, d._terms))

    # -- involution, evaluation, calculus --------------------------------
    def bar(self) -> LaurentPoly:
        """Substitute t -> 1/t and q -> 1/q."""
        return LaurentPoly._raw({(-a, -b): c for (a, b), c in self._terms.items()})

    def eval(self, t0, q0) -> Fraction:
        t0, q0 = Fraction(t0), Fraction(q0)
        if t0 == 0 or q0 == 0:
            raise ZeroPointError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * t0 ** a * q0 ** b
        return total

    def partial(self, var: str) -> LaurentPoly:
        if var == "t":
            return LaurentPoly._raw(
                {(a - 1, b): c * a for (a, b), c in self._terms.items() if a}
            )
        if var == "q":
            return LaurentPoly._raw(
                {(a, b - 1): c * b for (a, b), c in self._terms.items() if b}
            )
        raise ValueError(f"unknown variable {var!r}")

    def substitute_q_one(self) -> LaurentPoly:
        acc: Terms = {}
        for (a, _), c in self._terms.items():
            acc[(a, 0)] = acc.get((a, 0), 0) + c
        return LaurentPoly._raw(_purge(acc))

    # -- units --------------------------------------------------------------
    def normalize_up_to_units(self) -> tuple[LaurentPoly, UnitMonomial]:
        """
        Canonical associate: shift the lex-smallest exponent to (0, 0) and make
        its coefficient positive. Returns (p_hat, u) with self == u * p_hat.
        """
        if not self._terms:
            raise ValueError("zero has no unit normalization")
        a, b = min(self._terms)
        sign = 1 if self._terms[(a, b)] > 0 else -1
        unit = UnitMonomial(sign, a, b)
        hat = {(x - a, y - b): c * sign for (x, y), c in self._terms.items()}
        return LaurentPoly._raw(hat), unit

    def min_exponents(self) -> tuple[int, int]:
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def max_exponents(self) -> tuple[int, int]:
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def has_q(self) -> bool:
        return any(b for _, b in self._terms)

    # -- text ---------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^{a}*q^{b}" for (a, b), c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_poly(text)


_FACTOR = re.compile(r"^(?:(\d+)|([tq])(?:\^([+-]?\d+))?)$")


def _parse_term(chunk: str) -> tuple[tuple[int, int], int]:
    chunk = chunk.replace(" ", "")
    sign = 1
    while chunk[:1] in ("+", "-"):
        sign = -sign if chunk[0] == "-" else sign
        chunk = chunk[1:]
    coeff, exps = sign, {"t": 0, "q": 0}
    for factor in chunk.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise PolyParseError(f"cannot parse factor {factor!r}")
        if m.group(1) is not None:
            coeff *= int(m.group(1))
        else:
            exps[m.group(2)] += int(m.group(3) or 1)
    return (exps["t"], exps["q"]), coeff


def parse_poly(text: str) -> LaurentPoly:
    """
    Parse the textual form ``c*t^a*q^b + ...``. Factors may be omitted or
    repeated (``-t^-1``, ``3*q``), and ``0`` is the zero polynomial.

    >>> parse_poly("-1*t^1*q^2 + 1*t^0*q^0") == 1 - T * Q ** 2
    True
    """
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial text")
    acc: Terms = {}
    for chunk in re.split(r"\s+\+\s+", text):
        if not chunk.strip():
            raise PolyParseError("empty term")
        key, c = _parse_term(chunk)
        acc[key] = acc.get(key, 0) + c
    return LaurentPoly._raw(_purge(acc))


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
T = LaurentPoly.monomial(1, 0)
Q = LaurentPoly.monomial(0, 1)
