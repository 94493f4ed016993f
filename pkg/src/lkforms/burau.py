"""
Reduced Burau representation over Z[t^±1] and Squier's invariant form J0.

Burau matrices reuse LaurentPoly with every q-exponent equal to 0.
"""

from __future__ import annotations

from functools import cached_property

from .braid import BraidWord
from .laurent import ONE, ZERO, LaurentPoly, T
from .matrix import DimensionError, LambdaMatrix

__all__ = ["BurauContext", "delta_alternate_basis", "rescaling"]


def _elementary(n: int, entries: dict[tuple[int, int], LaurentPoly]) -> LambdaMatrix:
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), c in entries.items():
        rows[i - 1][j - 1] = rows[i - 1][j - 1] + c
    return LambdaMatrix(rows)


def delta_alternate_basis(n: int) -> LambdaMatrix:
    """-t^(n-1) e_{n-1,1} + sum_{i<=n-2} (-t^i e_{i,1} + e_{i,i+1})."""
    d = n - 1
    entries = {(d, 1): -(T ** d)}
    for i in range(1, d):
        entries[(i, 1)] = -(T ** i)
        entries[(i, i + 1)] = ONE
    return _elementary(d, entries)


def rescaling(n: int) -> LambdaMatrix:
    """diag(1, t, ..., t^(n-2))."""
    return _elementary(n - 1, {(i, i): T ** (i - 1) for i in range(1, n)})


class BurauContext:
    """
    Generator matrices B(sigma_m)^{±1} for B_n, (n-1) x (n-1).

    B(sigma_1) and B(delta_n) come from closed formulas; the remaining
    generators are B(delta)^-(m-1) B(sigma_1) B(delta)^(m-1).

    The delta formula written with powers -t^i in the first column and 1 on the
    superdiagonal (``delta_alternate_basis``) is the same matrix in the basis
    rescaled by diag(1, t, ..., t^(n-2)); it does not pair with this B(sigma_1).
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need at least 2 strands")
        self.n = n
        self.d = n - 1
        I = LambdaMatrix.identity(self.d)
        s1 = I + _elementary(self.d, {(1, 1): -(1 + T)})
        s1_inv = I + _elementary(self.d, {(1, 1): -(1 + T.inv())})
        if self.d > 1:
            s1 = s1 + _elementary(self.d, {(1, 2): T})
            s1_inv = s1_inv + _elementary(self.d, {(1, 2): ONE})
        self.delta_matrix = self._delta()
        self.delta_inverse = self._delta_inverse()
        self.gens: dict[int, LambdaMatrix] = {1: s1, -1: s1_inv}
        for m in range(2, n):
            conj, conj_inv = I, I
            for _ in range(m - 1):
                conj = conj @ self.delta_matrix
                conj_inv = conj_inv @ self.delta_inverse
            self.gens[m] = conj_inv @ s1 @ conj
            self.gens[-m] = conj_inv @ s1_inv @ conj
        self._star = {x: g.conj_transpose() for x, g in self.gens.items()}

    def _delta(self) -> LambdaMatrix:
        """B(delta_n) = -t sum_i e_{i,1} + t sum_{i<n-1} e_{i,i+1}."""
        d = self.d
        entries = {(i, 1): -T for i in range(1, d + 1)}
        for i in range(1, d):
            entries[(i, i + 1)] = T
        return _elementary(d, entries)

    def _delta_inverse(self) -> LambdaMatrix:
        # delta^n is the full twist, which the reduced Burau sends to the scalar t^n.
        D = self.delta_matrix
        P = LambdaMatrix.identity(self.d)
        for _ in range(self.n - 1):
            P = P @ D
        full = P @ D
        scalar = full[0, 0]
        if not scalar.is_unit() or full != LambdaMatrix.identity(self.d).scale(scalar):
            raise ArithmeticError("B(delta)^n is not a unit scalar")
        return P.scale(scalar.inv())

    def generator(self, m: int, sign: int = 1) -> LambdaMatrix:
        if not 1 <= m <= self.n - 1:
            raise IndexError(f"generator index {m} out of range for n={self.n}")
        return self.gens[m if sign > 0 else -m]

    def _word(self, w) -> BraidWord:
        if not isinstance(w, BraidWord):
            w = BraidWord(self.n, tuple(w))
        if w.n != self.n:
            raise DimensionError(f"word has {w.n} strands, context has {self.n}")
        return w

    def matrix(self, w) -> LambdaMatrix:
        out = LambdaMatrix.identity(self.d)
        for x in self._word(w):
            out = out @ self.gens[x]
        return out

    @cached_property
    def squier_form(self) -> LambdaMatrix:
        """J0 = sum over i of (B(sigma_i) - I)."""
        I = LambdaMatrix.identity(self.d)
        total = LambdaMatrix.zeros(self.d)
        for m in range(1, self.n):
            total = total + (self.gens[m] - I)
        return total

    def check_squier_unitary(self, w) -> bool:
        """B(w)^* J0 B(w) == J0."""
        w = self._word(w)
        J0 = self.squier_form
        A = J0
        for x in w:
            A = A @ self.gens[x]
        for x in w.letters:
            A = self._star[x] @ A
        return A == J0

    def skein_action_check(self, i: int, j: int) -> bool:
        """Row i is the only nonzero row of B(sigma_i) - I, and its entry j equals (J0)_{ij}."""
        if not (1 <= i <= self.n - 1 and 1 <= j <= self.n - 1):
            raise IndexError(f"invalid indices ({i}, {j}) for n={self.n}")
        E = self.gens[i] - LambdaMatrix.identity(self.d)
        others_zero = all(not x for r in range(self.d) if r != i - 1 for x in E.row(r))
        return others_zero and E[i - 1, j - 1] == self.squier_form[i - 1, j - 1]

    def det_squier_at_zero(self):
        """det J0 with every t^k replaced by 0^k; J0 has no negative powers of t."""
        J0 = self.squier_form
        if any(a < 0 for row in J0.tolist() for x in row for (a, _), _c in x.items()):
            raise ArithmeticError("J0 has negative powers of t")
        rows = [[sum(c for (a, _), c in x.items() if a == 0) for x in row] for row in J0.tolist()]
        return LambdaMatrix(rows).determinant()
