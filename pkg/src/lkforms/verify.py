"""
Batch verification of the representation identities over seeded random words.

Each check returns a CheckResult; a failing check carries the first word (or
index) on which the identity broke.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .bifork import expand, multiply, random_coords, realize
from .braid import BraidWord, random_word
from .burau import BurauContext
from .finite_type import finite_type_check, sample_ideal
from .lk import LKContext
from .matrix import charpoly_equal_up_to_units

__all__ = ["CheckResult", "SuiteConfig", "run_suite", "check_words", "format_report"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status}  {self.name}  ({self.cases} cases){extra}"


@dataclass(frozen=True)
class SuiteConfig:
    max_strands: int = 5
    seed: int = 0
    trials: int = 20
    max_word_length: int = 12
    mutate: bool = False


def _rng(cfg: SuiteConfig, *tag) -> random.Random:
    return random.Random(":".join(str(x) for x in (cfg.seed,) + tag))


def seeded_words(n: int, count: int, max_len: int, rng: random.Random) -> list[BraidWord]:
    return [random_word(n, rng.randint(0, max_len), rng) for _ in range(count)]


def generator_words(n: int) -> list[BraidWord]:
    return [BraidWord(n, (s * m,)) for m in range(1, n) for s in (1, -1)]


def check_words(name: str, words: Iterable, predicate: Callable) -> CheckResult:
    count = 0
    for w in words:
        count += 1
        if not predicate(w):
            label = f"n={w.n} word=[{w}]" if isinstance(w, BraidWord) else str(w)
            return CheckResult(name, False, count, label)
    return CheckResult(name, True, count)


def run_suite(cfg: SuiteConfig) -> list[CheckResult]:
    results: list[CheckResult] = []
    strands = range(2, cfg.max_strands + 1)
    ctxs = {n: LKContext(n, mutate=cfg.mutate) for n in strands}

    def words(n, tag):
        return generator_words(n) + seeded_words(n, cfg.trials, cfg.max_word_length, _rng(cfg, tag, n))

    for n in strands:
        c = ctxs[n]
        results.append(check_words(f"unitarity K J K* = J (n={n})", words(n, "unitary"), c.check_unitary))
    for n in strands:
        c = ctxs[n]
        results.append(check_words(f"cubic relation (n={n})", range(1, n), c.check_cubic))
        results.append(check_words(f"duality K(s^-1) J = J K(s)* (n={n})", range(1, n), c.check_duality))
        results.append(check_words(f"half twist conjugation (n={n})", range(1, n), c.check_half_twist))
    for n in strands:
        c = ctxs[n]
        results.append(check_words(f"J equals pairing table (n={n})", [n], lambda _: c.form_J == c.form_J_table))
        results.append(check_words(f"J equals band-generator sum (n={n})", [n], lambda _: c.form_J == c.form_J_band))
    for n in strands:
        c = ctxs[n]
        results.append(check_words(f"reversal R K(w^-1) = bar(K(w^rev)) R (n={n})", words(n, "revR"), c.check_reversal_R))
        results.append(check_words(f"reversal K(w^rev) V = V K(w)^T (n={n})", words(n, "revV"), c.check_reversal))
    for n in strands:
        b = BurauContext(n)
        results.append(check_words(f"Squier B* J0 B = J0 (n={n})", words(n, "squier"), b.check_squier_unitary))
    for n in [n for n in strands if n <= 4]:
        c = ctxs[n]

        def symmetric(w, c=c):
            f = c.charpoly(w)
            return charpoly_equal_up_to_units(f, f) and c.check_charpoly_cleared(w, f)

        ws = seeded_words(n, max(1, cfg.trials // 2), min(cfg.max_word_length, 10), _rng(cfg, "charpoly", n))
        results.append(check_words(f"charpoly symmetry (n={n})", ws, symmetric))
    if 4 in ctxs:
        c = ctxs[4]
        rng = _rng(cfg, "bifork")

        def expand_ok(pair):
            beta, gamma = pair
            return realize(c, expand(beta, gamma)) == c.apply_right(c.apply_left(beta, c.projector), gamma)

        pairs = [(random_word(4, rng.randint(0, 6), rng), random_word(4, rng.randint(0, 6), rng)) for _ in range(cfg.trials)]
        results.append(check_words("bifork expansion realizes K(b) P K(g) (n=4)", pairs, expand_ok))
        coords = [(random_coords(4, rng), random_coords(4, rng)) for _ in range(max(1, cfg.trials // 4))]
        results.append(
            check_words(
                "bifork product matches matrix product (n=4)",
                coords,
                lambda uv: realize(c, multiply(*uv)) == realize(c, uv[0]) @ realize(c, uv[1]),
            )
        )
    if 3 in ctxs:
        c = ctxs[3]
        for depth, (k, l) in [(1, (0, 0)), (2, (1, 0)), (2, (0, 1)), (3, (1, 1))]:
            rng = _rng(cfg, "finite", depth, k, l)
            samples = [sample_ideal(3, depth, rng) for _ in range(max(1, cfg.trials // 4))]
            ok = finite_type_check(c, samples, k, l)
            results.append(CheckResult(f"finite type depth {depth} order ({k},{l}) (n=3)", ok, len(samples),
                                       None if ok else f"depth={depth} k={k} l={l}"))
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines)
