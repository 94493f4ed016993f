"""
The Lawrence-Krammer representation of B_n over Z[t^±1, q^±1], its invariant
sesquilinear form J, and the orientation-reversal matrices R and V.

Convention: row vectors, right action. Row b(i,j) of K(sigma_m) holds the
coordinates of X_{i,j} sigma_m in the standard fork basis, and
K(uw) = K(u) K(w).
"""

from __future__ import annotations

from functools import cached_property

from .braid import (
    BraidWord,
    band_generator,
    double_indices,
    half_twist,
    index_bijection,
    permutation_braid,
)
from .laurent import ONE, ZERO, LaurentPoly, Q, T
from .matrix import CharPoly, DimensionError, LambdaMatrix

__all__ = [
    "LKContext",
    "fork_image",
    "dual_fork_image",
    "pairing_table_entry",
]

_QI = Q.inv()
_TI = T.inv()


def fork_image(n: int, i: int, j: int, m: int, sign: int = 1) -> dict[tuple[int, int], LaurentPoly]:
    """
    Coordinates of X_{i,j} sigma_m^{sign} as {(k, l): coefficient}.

    >>> fork_image(3, 1, 2, 1) == {(1, 2): -T * Q**2}
    True
    """
    if not 1 <= i < j <= n:
        raise IndexError(f"invalid double index ({i}, {j}) for n={n}")
    if not 1 <= m <= n - 1:
        raise IndexError(f"generator index {m} out of range for n={n}")
    if m < i - 1 or i < m < j - 1 or j < m:
        return {(i, j): ONE}
    if sign > 0:
        if m == i - 1:
            return {(i - 1, j): ONE}
        if i < m == j - 1:
            return {(i, j - 1): ONE}
        if m == i == j - 1:
            return {(i, j): -T * Q ** 2}
        if m == i:
            return {(i + 1, j): Q, (i, j): 1 - Q, (i, i + 1): T * Q * (1 - Q)}
        # m == j
        return {(i, j + 1): Q, (i, j): 1 - Q, (j, j + 1): -Q * (1 - Q)}
    if m == i == j - 1:
        return {(i, j): -_TI * _QI ** 2}
    if m == i:
        return {(i + 1, j): ONE}
    if m == j:
        return {(i, j + 1): ONE}
    if m == i - 1:
        return {(i - 1, j): _QI, (i, j): 1 - _QI, (i - 1, i): -_QI * (1 - _QI)}
    # i < m == j - 1
    return {(i, j - 1): _QI, (i, j): 1 - _QI, (j - 1, j): _TI * _QI * (1 - _QI)}


def dual_fork_image(n: int, i: int, j: int, m: int, sign: int = -1) -> dict[tuple[int, int], LaurentPoly]:
    """
    Coordinates of sigma_m^{sign} X*_{i,j} in the standard dual fork basis.

    The inverse case is the six-case left-action formula; the positive case
    uses the duality rule: coefficients of sigma_m X*_{i,j} are the barred
    coefficients of X_{i,j} sigma_m^{-1}.
    """
    if sign > 0:
        return {k: v.bar() for k, v in fork_image(n, i, j, m, -1).items()}
    if not 1 <= i < j <= n:
        raise IndexError(f"invalid double index ({i}, {j}) for n={n}")
    if not 1 <= m <= n - 1:
        raise IndexError(f"generator index {m} out of range for n={n}")
    if m < i - 1 or i < m < j - 1 or j < m:
        return {(i, j): ONE}
    if m == i - 1:
        return {(i - 1, j): ONE}
    if i < m == j - 1:
        return {(i, j - 1): ONE}
    if m == i == j - 1:
        return {(i, j): -_TI * _QI ** 2}
    if m == i:
        return {(i + 1, j): _QI, (i, j): 1 - _QI, (i, i + 1): _TI * _QI * (1 - _QI)}
    return {(i, j + 1): _QI, (i, j): 1 - _QI, (j, j + 1): -_QI * (1 - _QI)}


def pairing_table_entry(n: int, k: int, l: int, i: int, j: int) -> LaurentPoly:
    """The 1x1 product X_{k,l} X*_{i,j}, by the closed-form multiplication table."""
    if not (1 <= i < j <= n and 1 <= k < l <= n):
        raise IndexError(f"invalid double indices ({k},{l}), ({i},{j}) for n={n}")
    if (i - k) * (i - l) * (j - k) * (j - l) > 0:
        return ZERO
    if i == k and j == l:
        return (-_TI + Q) * (_QI + Q * T)
    if (i == k and l < j) or (k < i and j == l):
        return _TI * (1 - _QI)
    if j == k:
        return -(1 - _QI)
    if (i < k and j == l) or (i == k and j < l):
        return -T * Q * (1 - Q)
    if l == i:
        return Q * (1 - Q)
    if k < i < l < j:
        return -((1 - Q) ** 2) * (_TI * _QI + 1)
    if i < k < j < l:
        return (1 - Q) ** 2 * (_QI + T)
    raise AssertionError(f"unclassified index pattern ({k},{l}), ({i},{j})")


def _generator_matrix(n: int, m: int, sign: int) -> LambdaMatrix:
    pairs = double_indices(n)
    N = len(pairs)
    rows = []
    for i, j in pairs:
        row = [ZERO] * N
        for (k, l), c in fork_image(n, i, j, m, sign).items():
            row[index_bijection(n, k, l) - 1] = c
        rows.append(row)
    return LambdaMatrix(rows)


class LKContext:
    """
    Generator matrices and derived objects for B_n, built once.

    ``mutate`` flips the sign of the (1,1) entry of K(sigma_1); it exists only
    to show that the verification harness can fail.
    """

    def __init__(self, n: int, mutate: bool = False):
        if n < 2:
            raise ValueError("need at least 2 strands")
        self.n = n
        self.N = n * (n - 1) // 2
        self.mutate = mutate
        self.gens: dict[int, LambdaMatrix] = {}
        for m in range(1, n):
            self.gens[m] = _generator_matrix(n, m, 1)
            self.gens[-m] = _generator_matrix(n, m, -1)
        if mutate:
            rows = self.gens[1].tolist()
            rows[0][0] = -rows[0][0]
            self.gens[1] = LambdaMatrix(rows)
        self._star = {x: g.conj_transpose() for x, g in self.gens.items()}
        self._tr = {x: g.transpose() for x, g in self.gens.items()}

    # -- matrices of words --------------------------------------------------
    def _word(self, w: BraidWord | tuple | list) -> BraidWord:
        if not isinstance(w, BraidWord):
            w = BraidWord(self.n, tuple(w))
        if w.n != self.n:
            raise DimensionError(f"word has {w.n} strands, context has {self.n}")
        return w

    def generator(self, m: int, sign: int = 1) -> LambdaMatrix:
        if not 1 <= m <= self.n - 1:
            raise IndexError(f"generator index {m} out of range for n={self.n}")
        return self.gens[m if sign > 0 else -m]

    def matrix(self, w) -> LambdaMatrix:
        w = self._word(w)
        out = LambdaMatrix.identity(self.N)
        for x in w:
            out = out @ self.gens[x]
        return out

    def apply_left(self, w, A: LambdaMatrix) -> LambdaMatrix:
        """K(w) A, one generator at a time."""
        for x in reversed(self._word(w).letters):
            A = self.gens[x] @ A
        return A

    def apply_right(self, A: LambdaMatrix, w) -> LambdaMatrix:
        """A K(w), one generator at a time."""
        for x in self._word(w).letters:
            A = A @ self.gens[x]
        return A

    def apply_right_star(self, A: LambdaMatrix, w) -> LambdaMatrix:
        """A K(w)^*."""
        for x in reversed(self._word(w).letters):
            A = A @ self._star[x]
        return A

    def apply_right_transpose(self, A: LambdaMatrix, w) -> LambdaMatrix:
        """A K(w)^T."""
        for x in reversed(self._word(w).letters):
            A = A @ self._tr[x]
        return A

    def det(self, w) -> LaurentPoly:
        """det K(w) as the product of the (unit) generator determinants."""
        out = ONE
        for x in self._word(w):
            out = out * self._gen_det(x)
        return out

    @cached_property
    def _gen_dets(self) -> dict[int, LaurentPoly]:
        return {x: g.determinant() for x, g in self.gens.items()}

    def _gen_det(self, x: int) -> LaurentPoly:
        return self._gen_dets[x]

    # -- forks and the form J ---------------------------------------------------
    @cached_property
    def projector(self) -> LambdaMatrix:
        """X*_{1,2} X_{1,2} = -K(s1) + q K(s1^-1) + (1-q) I."""
        I = LambdaMatrix.identity(self.N)
        return -self.gens[1] + self.gens[-1].scale(Q) + I.scale(1 - Q)

    @cached_property
    def base_dual_fork(self) -> LambdaMatrix:
        return LambdaMatrix([[x] for x in self.projector.column(0)])

    def dual_fork(self, i: int, j: int) -> LambdaMatrix:
        """X*_{i,j} = K(A_{pi(i,j)}) X*_{1,2}, as an N x 1 column."""
        return self.apply_left(permutation_braid(self.n, i, j), self.base_dual_fork)

    @cached_property
    def form_J(self) -> LambdaMatrix:
        cols = [self.dual_fork(i, j).column(0) for i, j in double_indices(self.n)]
        return LambdaMatrix.from_columns(cols)

    @cached_property
    def form_J_table(self) -> LambdaMatrix:
        pairs = double_indices(self.n)
        return LambdaMatrix(
            [[pairing_table_entry(self.n, k, l, i, j) for (i, j) in pairs] for (k, l) in pairs]
        )

    @cached_property
    def form_J_band(self) -> LambdaMatrix:
        I = LambdaMatrix.identity(self.N)
        total = LambdaMatrix.zeros(self.N)
        for i, j in double_indices(self.n):
            b = band_generator(self.n, i, j)
            total = total + (I - self.matrix(b)) @ (I + self.matrix(b.inverse()).scale(Q))
        return total

    # -- identity checks -------------------------------------------------------
    def unitary_defect(self, w) -> LambdaMatrix:
        J = self.form_J
        return self.apply_right_star(self.apply_left(w, J), w) - J

    def check_unitary(self, w) -> bool:
        """K(w) J K(w)^* == J."""
        return self.unitary_defect(w).is_zero()

    def check_duality(self, m: int) -> bool:
        """K(s_m^-1) J == J K(s_m)^*."""
        J = self.form_J
        return self.gens[-m] @ J == J @ self._star[m]

    def two_factor(self, m: int) -> LambdaMatrix:
        K = self.generator(m)
        I = LambdaMatrix.identity(self.N)
        return (K - I) @ (K + I.scale(Q))

    def cubic(self, m: int) -> LambdaMatrix:
        K = self.generator(m)
        I = LambdaMatrix.identity(self.N)
        return self.two_factor(m) @ (K + I.scale(T * Q ** 2))

    def check_cubic(self, m: int) -> bool:
        return self.cubic(m).is_zero()

    def check_half_twist(self, m: int) -> bool:
        """K(Delta) K(s_m) == K(s_{n-m}) K(Delta)."""
        D = self.matrix(half_twist(self.n))
        return D @ self.gens[m] == self.gens[self.n - m] @ D

    # -- reversal -------------------------------------------------------------
    @cached_property
    def reversal_R(self) -> LambdaMatrix:
        """Row b(i,j) is row b(n+1-j, n+1-i) of K(Delta_n)."""
        D = self.matrix(half_twist(self.n))
        n = self.n
        return LambdaMatrix(
            [D.row(index_bijection(n, n + 1 - j, n + 1 - i) - 1) for i, j in double_indices(n)]
        )

    @cached_property
    def reversal_V(self) -> LambdaMatrix:
        return (self.reversal_R @ self.form_J).bar()

    @cached_property
    def reversal_V_forks(self) -> LambdaMatrix:
        """
        Columns Y*_{i,j} = K(A'_{pi(i,j)}) X*_{1,2}, where A' is the permutation
        braid with every letter inverted. Equals t q^3 * reversal_V.
        """
        cols = []
        for i, j in double_indices(self.n):
            a = permutation_braid(self.n, i, j)
            inv_letters = BraidWord(self.n, tuple(-x for x in a.letters))
            cols.append(self.apply_left(inv_letters, self.base_dual_fork).column(0))
        return LambdaMatrix.from_columns(cols)

    def check_reversal_R(self, w) -> bool:
        """R K(w^-1) == bar(K(w^rev)) R."""
        w = self._word(w)
        R = self.reversal_R
        lhs = self.apply_right(R, w.inverse())
        rhs = self.apply_left(w.reverse(), R.bar()).bar()
        return lhs == rhs

    def check_reversal(self, w) -> bool:
        """K(w^rev) V == V K(w)^T."""
        w = self._word(w)
        V = self.reversal_V
        return self.apply_left(w.reverse(), V) == self.apply_right_transpose(V, w)

    # -- characteristic polynomial -------------------------------------------
    def charpoly(self, w) -> CharPoly:
        return self.matrix(w).char_poly()

    def check_charpoly_cleared(self, w, f: CharPoly | None = None) -> bool:
        """
        det K(w) * bar(c_{N-k}) == (-1)^N c_k for every k, the denominator-free
        form of f(1/z,1/t,1/q) = (-z)^-N det(K(w))^-1 f(z,t,q).
        """
        f = self.charpoly(w) if f is None else f
        d = self.det(w)
        sgn = -1 if self.N % 2 else 1
        N = self.N
        return all(d * f[N - k].bar() == f[k] * sgn for k in range(N + 1))
