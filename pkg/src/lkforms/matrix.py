"""
Dense matrices over Z[t^±1, q^±1] with fraction-free elimination.

Products skip zero entries, so multiplying by the (very sparse) generator
matrices of a representation is cheap even though storage is dense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    _addmul_into,
    _exact_div,
    _mul,
    _purge,
    _sub,
    parse_poly,
)

__all__ = [
    "LambdaMatrix",
    "CharPoly",
    "DimensionError",
    "bareiss_det",
    "charpoly_equal_up_to_units",
]


class DimensionError(ValueError):
    pass


class LambdaMatrix:
    """Immutable rows x cols matrix of LaurentPoly entries."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly | int]]):
        self._e = tuple(tuple(LaurentPoly._coerce(x) for x in row) for row in entries)
        self.rows = len(self._e)
        self.cols = len(self._e[0]) if self._e else 0
        if any(len(row) != self.cols for row in self._e):
            raise DimensionError("ragged rows")

    @classmethod
    def _raw(cls, entries: tuple[tuple[LaurentPoly, ...], ...], cols: int | None = None):
        obj = cls.__new__(cls)
        obj._e = entries
        obj.rows = len(entries)
        obj.cols = len(entries[0]) if entries else (cols or 0)
        return obj

    @classmethod
    def identity(cls, n: int) -> LambdaMatrix:
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> LambdaMatrix:
        cols = rows if cols is None else cols
        return cls._raw(tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)), cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[LaurentPoly]]) -> LambdaMatrix:
        return cls([list(r) for r in zip(*columns)])

    # -- access ---------------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[LaurentPoly, ...]:
        return tuple(row[j] for row in self._e)

    def tolist(self) -> list[list[LaurentPoly]]:
        return [list(row) for row in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for row in self._e for x in row)

    def nonzero_columns(self) -> list[int]:
        return [j for j in range(self.cols) if any(row[j] for row in self._e)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        return f"LambdaMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._e)

    # -- arithmetic -------------------------------------------------------------
    def _check_same(self, other: LambdaMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: LambdaMatrix) -> LambdaMatrix:
        self._check_same(other)
        return LambdaMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._e, other._e)),
            self.cols,
        )

    def __sub__(self, other: LambdaMatrix) -> LambdaMatrix:
        self._check_same(other)
        return LambdaMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._e, other._e)),
            self.cols,
        )

    def __neg__(self) -> LambdaMatrix:
        return self.map(lambda x: -x)

    def scale(self, c: LaurentPoly | int) -> LambdaMatrix:
        c = LaurentPoly._coerce(c)
        return self.map(lambda x: c * x)

    def __mul__(self, other):
        if isinstance(other, LambdaMatrix):
            return self.matmul(other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other: LambdaMatrix) -> LambdaMatrix:
        return self.matmul(other)

    def matmul(self, other: LambdaMatrix) -> LambdaMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        b_rows = [[(j, x._terms) for j, x in enumerate(row) if x] for row in other._e]
        out = []
        for row in self._e:
            acc: list[dict] = [{} for _ in range(other.cols)]
            for k, a in enumerate(row):
                if not a:
                    continue
                at = a._terms
                for j, bt in b_rows[k]:
                    _addmul_into(acc[j], at, bt)
            out.append(tuple(LaurentPoly._raw(_purge(d)) if d else ZERO for d in acc))
        return LambdaMatrix._raw(tuple(out), other.cols)

    def map(self, f: Callable[[LaurentPoly], LaurentPoly]) -> LambdaMatrix:
        return LambdaMatrix._raw(tuple(tuple(f(x) for x in row) for row in self._e), self.cols)

    def transpose(self) -> LambdaMatrix:
        return LambdaMatrix._raw(tuple(zip(*self._e)), self.rows) if self._e else self

    def bar(self) -> LambdaMatrix:
        return self.map(LaurentPoly.bar)

    def conj_transpose(self) -> LambdaMatrix:
        """bar applied entrywise, then transposed: M(1/t, 1/q)^T."""
        return self.bar().transpose()

    def trace(self) -> LaurentPoly:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self._e[i][i]
        return total

    # -- evaluation and calculus -------------------------------------------------
    def eval(self, t0, q0) -> list[list[Fraction]]:
        return [[x.eval(t0, q0) for x in row] for row in self._e]

    def derivative(self, k: int, l: int) -> LambdaMatrix:
        """Entrywise d^k/dt^k d^l/dq^l."""
        def d(p: LaurentPoly) -> LaurentPoly:
            for _ in range(k):
                p = p.partial("t")
            for _ in range(l):
                p = p.partial("q")
            return p
        return self.map(d)

    # -- determinants -------------------------------------------------------
    def determinant(self) -> LaurentPoly:
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        if self.rows == 0:
            return ONE
        rows = [[x._terms for x in row] for row in self._e]
        return LaurentPoly._raw(bareiss_det(rows))

    det = determinant

    def char_poly(self) -> CharPoly:
        """det(zI - M), computed by Bareiss elimination over Lambda[z]."""
        if not self.is_square():
            raise DimensionError("characteristic polynomial of a non-square matrix")
        n = self.rows
        rows = []
        for i, row in enumerate(self._e):
            out = []
            for j, x in enumerate(row):
                d = {(0, a, b): -c for (a, b), c in x._terms.items()}
                if i == j:
                    d[(1, 0, 0)] = 1
                out.append(d)
            rows.append(out)
        det = bareiss_det(rows) if n else {(0, 0, 0): 1}
        coeffs: list[dict] = [{} for _ in range(n + 1)]
        for (z, a, b), c in det.items():
            coeffs[z][(a, b)] = c
        return CharPoly(tuple(LaurentPoly._raw(c) for c in coeffs))

    # -- serialization ---------------------------------------------------
    def to_record(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(x) for row in self._e for x in row],
        }

    @classmethod
    def from_record(cls, record: dict) -> LambdaMatrix:
        rows, cols = int(record["rows"]), int(record["cols"])
        entries = [parse_poly(s) for s in record["entries"]]
        if len(entries) != rows * cols:
            raise DimensionError("entry count does not match rows*cols")
        if rows == 0:
            return cls._raw((), cols)
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)])


def bareiss_det(rows: list[list[dict]]) -> dict:
    """
    Fraction-free determinant of a square matrix of raw term dicts.

    The first nonzero entry in the pivot column is taken as pivot; each row
    swap flips the sign. Every division is exact or raises.
    """
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev: dict | None = None
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            return {}
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = _sub(_mul(m[i][j], pk), _mul(mik, m[k][j])) if mik else _mul(m[i][j], pk)
                m[i][j] = _exact_div(num, prev) if (prev is not None and num) else num
            m[i][k] = {}
        prev = pk
    det = m[n - 1][n - 1]
    if sign < 0:
        det = {e: -c for e, c in det.items()}
    return det


@dataclass(frozen=True)
class CharPoly:
    """Polynomial in z with Laurent coefficients; coeffs[k] multiplies z^k."""

    coeffs: tuple[LaurentPoly, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeffs[k]

    def reciprocal_bar(self) -> CharPoly:
        """Coefficients of z^N f(1/z, 1/t, 1/q)."""
        return CharPoly(tuple(c.bar() for c in reversed(self.coeffs)))

    def eval_z(self, z: LaurentPoly) -> LaurentPoly:
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * z + c
        return total

    def to_record(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_record(cls, record: dict) -> CharPoly:
        coeffs = tuple(parse_poly(s) for s in record["coeffs"])
        if len(coeffs) != int(record["degree"]) + 1:
            raise DimensionError("coefficient count does not match degree")
        return cls(coeffs)

    def __str__(self) -> str:
        return "\n".join(f"z^{k}: {c}" for k, c in enumerate(self.coeffs))


def _normalized_list(coeffs: Iterable[LaurentPoly], ref: int) -> list[LaurentPoly]:
    coeffs = list(coeffs)
    _, unit = coeffs[ref].normalize_up_to_units()
    inv = unit.inverse().to_poly()
    return [c * inv for c in coeffs]


def charpoly_equal_up_to_units(f: CharPoly, g: CharPoly) -> bool:
    """
    Whether z^N f(1/z, 1/t, 1/q) equals g(z, t, q) up to one unit of the ring.

    Both coefficient lists are divided by the normalization unit of their
    coefficient at a fixed reference index (the lowest nonzero one of g).
    """
    if f.degree != g.degree:
        raise DimensionError(f"degree mismatch {f.degree} vs {g.degree}")
    h = f.reciprocal_bar().coeffs
    ref = next((k for k, c in enumerate(g.coeffs) if c), None)
    if ref is None:
        return all(not c for c in h)
    if not h[ref]:
        return False
    return _normalized_list(h, ref) == _normalized_list(g.coeffs, ref)
