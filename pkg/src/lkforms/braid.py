"""
Braid words in signed Artin generators and the distinguished braids built
from them: permutation braids, the half twist, band generators.

Letter ``m`` stands for sigma_m and ``-m`` for its inverse. Words are stored
unreduced; comparing representation matrices is the equality test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "BraidWord",
    "BraidParseError",
    "index_bijection",
    "index_bijection_inverse",
    "double_indices",
    "permutation_braid",
    "half_twist",
    "delta",
    "band_generator",
    "random_word",
]


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter {x} out of range for {self.n} strands")

    @classmethod
    def parse(cls, n: int, text: str | Sequence[str]) -> BraidWord:
        """Parse whitespace-separated signed integers, e.g. ``"1 1 2 -1"``."""
        tokens = text.split() if isinstance(text, str) else list(text)
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError as exc:
            raise BraidParseError(f"bad braid letter in {tokens!r}") from exc
        try:
            return cls(n, letters)
        except ValueError as exc:
            raise BraidParseError(str(exc)) from exc

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return self.concat(other)

    def concat(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def reverse(self) -> BraidWord:
        """The anti-automorphism fixing every generator: read the word backwards."""
        return BraidWord(self.n, self.letters[::-1])

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def free_reduce(self) -> BraidWord:
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.n, tuple(out))

    def underlying_permutation(self) -> tuple[int, ...]:
        """
        Image in S_n: entry p-1 is the final position of the strand starting at
        position p, following the word left to right.

        >>> BraidWord(4, (3, 2, 1)).underlying_permutation()
        (2, 3, 4, 1)
        """
        pos_of = list(range(self.n + 1))  # pos_of[strand] = current position
        at = list(range(self.n + 1))      # at[position] = strand there
        for x in self.letters:
            m = abs(x)
            s1, s2 = at[m], at[m + 1]
            at[m], at[m + 1] = s2, s1
            pos_of[s1], pos_of[s2] = m + 1, m
        return tuple(pos_of[1:])


def index_bijection(n: int, i: int, j: int) -> int:
    """Position of the pair (i, j) in lexicographic order, 1-based."""
    if not 1 <= i < j <= n:
        raise IndexError(f"invalid double index ({i}, {j}) for n={n}")
    return (2 * n - i) * (i - 1) // 2 + (j - i)


def index_bijection_inverse(n: int, lam: int) -> tuple[int, int]:
    N = n * (n - 1) // 2
    if not 1 <= lam <= N:
        raise IndexError(f"index {lam} out of range 1..{N}")
    i = 1
    while lam > n - i:
        lam -= n - i
        i += 1
    return i, i + lam


def double_indices(n: int) -> list[tuple[int, int]]:
    """All pairs i < j in lexicographic order (list position = b(i,j) - 1)."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def permutation_braid(n: int, i: int, j: int) -> BraidWord:
    """(sigma_{i-1} ... sigma_1)(sigma_{j-1} ... sigma_2), carrying i to 1 and j to 2."""
    if not 1 <= i < j <= n:
        raise IndexError(f"invalid double index ({i}, {j}) for n={n}")
    return BraidWord(n, tuple(range(i - 1, 0, -1)) + tuple(range(j - 1, 1, -1)))


def half_twist(n: int) -> BraidWord:
    """Staircase word (s1)(s2 s1)...(s_{n-1}...s1) for the Garside element."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def delta(n: int) -> BraidWord:
    """sigma_{n-1} sigma_{n-2} ... sigma_1."""
    return BraidWord(n, tuple(range(n - 1, 0, -1)))


def band_generator(n: int, i: int, j: int) -> BraidWord:
    a = permutation_braid(n, i, j)
    return a * BraidWord(n, (1,)) * a.inverse()


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    gens = [m for m in range(1, n)] + [-m for m in range(1, n)]
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(length)))

