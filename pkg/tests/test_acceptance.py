"""
The eleven acceptance criteria, each checked exactly.

Every test prints one ``PASS``/``FAIL`` line; the lines are also collected in
RESULTS and echoed in the pytest terminal summary. Run the file directly for a
plain report:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from lkforms.bifork import expand, multiply, random_coords, realize
from lkforms.braid import BraidWord, delta, half_twist, random_word
from lkforms.burau import BurauContext
from lkforms.finite_type import (
    derivative_invariant,
    double_index_permutation_matrix,
    finite_type_check,
    sample_ideal,
)
from lkforms.laurent import ONE, ZERO
from lkforms.lk import LKContext
from lkforms.matrix import LambdaMatrix, charpoly_equal_up_to_units
from lkforms.verify import SuiteConfig, run_suite
from oracles import (
    eval_matrix,
    golden_b3_sigma1,
    golden_b3_sigma2,
    golden_b4_delta,
    golden_b4_sigma1,
    golden_v3_columns,
    rational_det,
    same_braid,
)

RESULTS: list[str] = []
SEED = 20240101
FLYPE = "1 1 2 -1 -1 -2"


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def first_failure(items, predicate):
    for x in items:
        if not predicate(x):
            return x
    return None


def seeded_words(n, count, max_len, tag):
    rng = random.Random(f"{SEED}:{tag}:{n}")
    return [random_word(n, rng.randint(0, max_len), rng) for _ in range(count)]


def generator_words(n):
    return [BraidWord(n, (s * m,)) for m in range(1, n) for s in (1, -1)]


def test_criterion_01_golden_matrices():
    start = time.perf_counter()
    c3, c4 = LKContext(3), LKContext(4)
    ok = (
        c3.generator(1) == LambdaMatrix(golden_b3_sigma1())
        and c3.generator(2) == LambdaMatrix(golden_b3_sigma2())
        and c4.generator(1) == LambdaMatrix(golden_b4_sigma1())
        and c4.matrix(delta(4)) == LambdaMatrix(golden_b4_delta())
    )
    elapsed = time.perf_counter() - start
    report(1, "golden K(s1), K(s2) in B3 and K(s1), K(delta4) in B4", ok and elapsed < 1.0, f"{elapsed:.3f}s")


def test_criterion_02_unitarity():
    bad, timings = None, []
    for n in range(2, 7):
        start = time.perf_counter()
        c = LKContext(n)
        w = first_failure(generator_words(n) + seeded_words(n, 200, 20, "unitary"), c.check_unitary)
        timings.append(time.perf_counter() - start)
        if w is not None:
            bad = f"n={n} word=[{w}]"
            break
    ok = bad is None and timings[-1] < 120
    report(2, "K(w) J K(w)* = J, generators + 200 words, n=2..6", ok, bad or f"n=6 in {timings[-1]:.1f}s")


def test_criterion_03_pairing_table():
    bad = None
    for n in range(2, 7):
        c = LKContext(n)
        if c.form_J != c.form_J_table:
            bad = f"table n={n}"
        elif n <= 5 and c.form_J != c.form_J_band:
            bad = f"band n={n}"
        if bad:
            break
    report(3, "J equals pairing table (n<=6) and band sum (n<=5)", bad is None, bad or "")


def test_criterion_04_nonsingular_form():
    bad = None
    for n in range(2, 5):
        if not LKContext(n).form_J.determinant():
            bad = f"det J = 0 for n={n}"
    c = LKContext(5)
    J1 = c.form_J.map(lambda p: p.substitute_q_one())
    diagonal = all(not J1[i, j] for i in range(c.N) for j in range(c.N) if i != j)
    nonzero_diag = all(J1[i, i] for i in range(c.N))
    rng = random.Random(SEED)
    point = (Fraction(rng.randint(2, 9), rng.randint(2, 9)), Fraction(rng.randint(2, 9), rng.randint(11, 19)))
    value = rational_det(eval_matrix(c.form_J, *point))
    if not (diagonal and nonzero_diag):
        bad = "q=1 specialization of J5 is not a nonsingular diagonal"
    elif value == 0:
        bad = f"det J5 vanishes at {point}"
    report(4, "det J != 0 (symbolic n<=4; q=1 diagonal and rational point n=5)", bad is None, bad or "")


def test_criterion_05_cubic_relation():
    bad = None
    for n in range(2, 7):
        c = LKContext(n)
        m = first_failure(range(1, n), c.check_cubic)
        if m is not None:
            bad = f"cubic n={n} m={m}"
            break
        if n <= 5 and c.two_factor(1).nonzero_columns() != [0]:
            bad = f"two-factor product for s1 has columns {c.two_factor(1).nonzero_columns()} (n={n})"
            break
    report(5, "cubic relation (n<=6); (K-1)(K+q) for s1 has the single column b(1,2) (n<=5)", bad is None, bad or "")


def _is_permutation(M: LambdaMatrix) -> bool:
    for row in M.tolist():
        if sum(1 for x in row if x) != 1 or any(x not in (ZERO, ONE) for x in row):
            return False
    return all(sum(1 for x in M.column(j) if x) == 1 for j in range(M.cols))


def test_criterion_06_reversal():
    bad = None
    for n in range(2, 6):
        c = LKContext(n)
        if not _is_permutation(c.reversal_R @ c.matrix(half_twist(n).inverse())):
            bad = f"R K(Delta^-1) not a permutation (n={n})"
            break
        w = first_failure(seeded_words(n, 100, 20, "reversal"), lambda w: c.check_reversal_R(w) and c.check_reversal(w))
        if w is not None:
            bad = f"n={n} word=[{w}]"
            break
    c3 = LKContext(3)
    V3 = c3.reversal_V_forks
    if bad is None and [list(V3.column(k)) for k in range(3)] != golden_v3_columns():
        bad = "V3 columns differ from the explicit vectors"
    beta = BraidWord.parse(3, FLYPE)
    if bad is None and c3.matrix(beta.reverse()) @ V3 != V3 @ c3.matrix(beta).transpose():
        bad = "flype identity with V3"
    report(6, "R permutation, both reversal identities (100 words, n=2..5), V3 columns", bad is None, bad or "")


@pytest.mark.xfail(
    strict=True,
    reason="the flype example braid equals its own reversal in B3, so K(beta) = K(beta^rev)",
)
def test_criterion_07_charpoly_and_flype():
    c3 = LKContext(3)
    beta = BraidWord.parse(3, FLYPE)
    rev = beta.reverse()
    equal_cp = c3.charpoly(beta) == c3.charpoly(rev)
    distinct = c3.matrix(beta) != c3.matrix(rev)
    bad = None
    for n in range(2, 5):
        c = LKContext(n)

        def symmetric(w, c=c):
            f = c.charpoly(w)
            return charpoly_equal_up_to_units(f, f.reciprocal_bar()) and c.check_charpoly_cleared(w, f)

        w = first_failure(seeded_words(n, 50, 12, "charpoly"), symmetric)
        if w is not None:
            bad = f"symmetry n={n} word=[{w}]"
            break
    detail = f"charpoly equal={equal_cp}, K(beta) != K(beta^rev) is {distinct}"
    if bad:
        detail += f"; {bad}"
    report(7, "flype pair: equal charpoly, distinct matrices; charpoly symmetry (50 words, n<=4)",
           equal_cp and distinct and bad is None, detail)


def test_criterion_07_attainable_parts():
    """Everything in criterion 7 except the distinctness clause, plus why that clause fails."""
    c3 = LKContext(3)
    beta = BraidWord.parse(3, FLYPE)
    assert c3.charpoly(beta) == c3.charpoly(beta.reverse())
    # the free-group action is faithful: beta and beta^rev are the same braid
    assert same_braid(3, beta.letters, beta.reverse().letters)
    other = BraidWord.parse(3, "1 1 2 -1 -2 -2")
    assert not same_braid(3, other.letters, other.reverse().letters)
    assert c3.matrix(other) != c3.matrix(other.reverse())
    assert c3.charpoly(other) == c3.charpoly(other.reverse())
    for n in range(2, 5):
        c = LKContext(n)
        for w in seeded_words(n, 50, 12, "charpoly"):
            f = c.charpoly(w)
            assert charpoly_equal_up_to_units(f, f.reciprocal_bar())
            assert c.check_charpoly_cleared(w, f)


def test_criterion_08_squier():
    bad = None
    for n in range(2, 7):
        b = BurauContext(n)
        w = first_failure(seeded_words(n, 200, 20, "squier"), b.check_squier_unitary)
        if w is not None:
            bad = f"n={n} word=[{w}]"
            break
        if n <= 5 and not all(b.skein_action_check(i, j) for i in range(1, n) for j in range(1, n)):
            bad = f"skein rows n={n}"
            break
        if not b.det_squier_at_zero():
            bad = f"det J0(0) = 0 for n={n}"
            break
    report(8, "B(w)* J0 B(w) = J0 (200 words, n=2..6), skein rows, det J0(0) != 0", bad is None, bad or "")


def test_criterion_09_bifork_algebra():
    bad = None
    c4 = LKContext(4)
    rng = random.Random(f"{SEED}:bifork")
    for _ in range(100):
        beta, gamma = random_word(4, rng.randint(0, 6), rng), random_word(4, rng.randint(0, 6), rng)
        if realize(c4, expand(beta, gamma)) != c4.apply_right(c4.apply_left(beta, c4.projector), gamma):
            bad = f"expand beta=[{beta}] gamma=[{gamma}]"
            break
    for n in (2, 3, 4):
        if bad:
            break
        c = LKContext(n)
        for _ in range(100):
            u, v = random_coords(n, rng), random_coords(n, rng)
            if realize(c, multiply(u, v)) != realize(c, u) @ realize(c, v):
                bad = f"multiply n={n}"
                break
    report(9, "expand realizes K(b) P K(g) (100 pairs); multiply = matrix product (100 pairs, n<=4)", bad is None, bad or "")


def test_criterion_10_finite_type():
    bad = None
    for n in range(2, 6):
        c = LKContext(n)
        w = first_failure(
            seeded_words(n, 50, 20, "order0"),
            lambda w: derivative_invariant(c, w, 0, 0) == double_index_permutation_matrix(w),
        )
        if w is not None:
            bad = f"order 0 n={n} word=[{w}]"
            break
    c3 = LKContext(3)
    for depth in (1, 2, 3):
        if bad:
            break
        rng = random.Random(f"{SEED}:ideal:{depth}")
        samples = [sample_ideal(3, depth, rng) for _ in range(50)]
        for order in range(depth):
            for k in range(order + 1):
                if not finite_type_check(c3, samples, k, order - k):
                    bad = f"depth={depth} k={k} l={order - k}"
    report(10, "order-0 invariant is the permutation matrix; vanishing on I^d below order d (n=3)", bad is None, bad or "")


def test_criterion_11_mutation_harness():
    results = run_suite(SuiteConfig(max_strands=6, seed=SEED, trials=200, max_word_length=20, mutate=True))
    unitary = [r for r in results if r.name.startswith("unitarity")]
    caught = [r for r in unitary if not r.passed and r.counterexample]
    detail = caught[0].line() if caught else "no unitarity failure reported"
    report(11, "--mutate makes the unitarity suite FAIL with a counterexample", bool(caught), detail)


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and not name.endswith("attainable_parts"):
            try:
                fn()
            except AssertionError:
                pass
    sys.exit(0 if all(line.startswith("PASS") for line in RESULTS) else 1)
