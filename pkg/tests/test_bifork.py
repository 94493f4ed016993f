from __future__ import annotations

import random

import pytest

from lkforms.bifork import (
    BiforkCoords,
    DualForkCoords,
    expand,
    left_act_generator,
    linear_independence_check,
    multiply,
    random_coords,
    realize,
    realize_dual,
)
from lkforms.braid import BraidWord, double_indices, index_bijection, permutation_braid, random_word
from lkforms.lk import LKContext, pairing_table_entry
from lkforms.laurent import ONE

CTX = {n: LKContext(n) for n in range(2, 6)}


def test_basis_realizes_to_outer_product():
    c = CTX[4]
    for a in double_indices(4):
        for b in double_indices(4):
            M = realize(c, BiforkCoords.basis(4, a, b))
            col = c.dual_fork(*a).column(0)
            k = index_bijection(4, *b) - 1
            assert M.column(k) == col
            assert M.nonzero_columns() == [k] or not any(col)


def test_trivial_expansion_is_projector():
    c = CTX[3]
    e = BraidWord(3, ())
    assert expand(e, e) == BiforkCoords.basis(3, (1, 2), (1, 2))
    assert realize(c, expand(e, e)) == c.projector


def test_permutation_braids_give_standard_dual_forks():
    for n in (3, 4, 5):
        for i, j in double_indices(n):
            d = DualForkCoords.basis(n, 1, 2)
            for x in reversed(permutation_braid(n, i, j).letters):
                d = left_act_generator(1 if x > 0 else -1, abs(x), d)
            assert d == DualForkCoords.basis(n, i, j)
            assert realize_dual(CTX[n], d) == CTX[n].dual_fork(i, j)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_expand_matches_matrices(n):
    c = CTX[n]
    rng = random.Random(n)
    for _ in range(8):
        b, g = random_word(n, rng.randint(0, 6), rng), random_word(n, rng.randint(0, 6), rng)
        u = expand(b, g)
        assert u == expand(b, g, interleave=True)
        assert realize(c, u) == c.apply_right(c.apply_left(b, c.projector), g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_multiply_is_matrix_product(n):
    c = CTX[n]
    rng = random.Random(10 + n)
    for _ in range(6):
        u, v = random_coords(n, rng), random_coords(n, rng)
        assert realize(c, multiply(u, v)) == realize(c, u) @ realize(c, v)


def test_record_format():
    u = BiforkCoords.basis(3, (1, 2), (2, 3)).scale(ONE * 2)
    assert u.to_record() == {"1,2,2,3": "2*t^0*q^0"}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_linear_independence(n):
    assert linear_independence_check(n, trials=3, seed=n)


def test_strand_mismatch():
    with pytest.raises(ValueError):
        expand(BraidWord(3, ()), BraidWord(4, ()))


def test_projector_square_scalar():
    for n in (2, 3, 4):
        e = BiforkCoords.basis(n, (1, 2), (1, 2))
        s = pairing_table_entry(n, 1, 2, 1, 2)
        assert multiply(e, e) == e.scale(s)
        assert realize(CTX[n], multiply(e, e)) == CTX[n].projector.scale(s)
        assert CTX[n].projector @ CTX[n].projector != CTX[n].projector
