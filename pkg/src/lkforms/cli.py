"""
Command line front end.

Exit codes: 0 success or all checks pass, 1 a verification failed, 2 the input
could not be parsed, 3 a size limit was exceeded.

Braid words are whitespace separated signed integers, given after ``--``:

    lkforms lk --strands 3 -- 1 1 2 -1
    lkforms verify --strands 5 --seed 7
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bifork import expand
from .braid import BraidParseError, BraidWord
from .burau import BurauContext
from .finite_type import DepthError, derivative_invariant, finite_type_check, sample_ideal
from .lk import LKContext
from .verify import CheckResult, SuiteConfig, format_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_STRAND_CAP = 8


class LimitError(Exception):
    pass


def _emit(obj, fmt: str) -> str:
    if fmt == "structured":
        if hasattr(obj, "to_record"):
            obj = obj.to_record()
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {v}" for k, v in obj.items())
    if isinstance(obj, list):
        return "\n".join(" ".join(str(x) for x in row) for row in obj)
    return str(obj)


def _word_arg(n: int, tokens) -> BraidWord:
    text = tokens if isinstance(tokens, str) else " ".join(tokens)
    return BraidWord.parse(n, text)


def _check_strands(n: int, cap: int) -> None:
    if n < 2:
        raise BraidParseError(f"need at least 2 strands, got {n}")
    if n > cap:
        raise LimitError(f"{n} strands exceeds the cap of {cap} (raise it with --max-strands)")


def _print_checks(results: list[CheckResult], fmt: str) -> int:
    if fmt == "structured":
        print(json.dumps([
            {"check": r.name, "passed": r.passed, "cases": r.cases, "counterexample": r.counterexample}
            for r in results
        ]))
    else:
        print(format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_lk(args) -> int:
    print(_emit(LKContext(args.strands, mutate=args.mutate).matrix(_word_arg(args.strands, args.word)), args.format))
    return EXIT_OK


def cmd_burau(args) -> int:
    print(_emit(BurauContext(args.strands).matrix(_word_arg(args.strands, args.word)), args.format))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    print(_emit(LKContext(args.strands).charpoly(_word_arg(args.strands, args.word)), args.format))
    return EXIT_OK


def cmd_form_j(args) -> int:
    print(_emit(LKContext(args.strands).form_J, args.format))
    return EXIT_OK


def cmd_r(args) -> int:
    print(_emit(LKContext(args.strands).reversal_R, args.format))
    return EXIT_OK


def cmd_v(args) -> int:
    print(_emit(LKContext(args.strands).reversal_V, args.format))
    return EXIT_OK


def _single_word_check(name: str, args, predicate) -> int:
    w = _word_arg(args.strands, args.word)
    ok = predicate(w)
    return _print_checks([CheckResult(name, ok, 1, None if ok else f"n={w.n} word=[{w}]")], args.format)


def cmd_verify_unitary(args) -> int:
    ctx = LKContext(args.strands, mutate=args.mutate)
    return _single_word_check("unitarity K J K* = J", args, ctx.check_unitary)


def cmd_verify_reversal(args) -> int:
    ctx = LKContext(args.strands, mutate=args.mutate)
    return _single_word_check("reversal", args, lambda w: ctx.check_reversal_R(w) and ctx.check_reversal(w))


def cmd_verify_squier(args) -> int:
    return _single_word_check("Squier B* J0 B = J0", args, BurauContext(args.strands).check_squier_unitary)


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        max_strands=args.strands,
        seed=args.seed,
        trials=args.trials,
        max_word_length=args.max_word_length,
        mutate=args.mutate,
    )
    return _print_checks(run_suite(cfg), args.format)


def distinguish(ctx: LKContext, w1: BraidWord, w2: BraidWord) -> dict:
    same = ctx.matrix(w1) == ctx.matrix(w2)
    equal_cp = same or ctx.charpoly(w1) == ctx.charpoly(w2)
    if same:
        verdict = "same braid"
    elif equal_cp:
        verdict = "distinct braids, equal charpoly"
    else:
        verdict = "distinct braids, distinct charpoly"
    return {"same_braid": same, "equal_charpoly": equal_cp, "verdict": verdict}


def cmd_distinguish(args) -> int:
    w1 = _word_arg(args.strands, args.first)
    w2 = _word_arg(args.strands, args.second)
    print(_emit(distinguish(LKContext(args.strands), w1, w2), args.format))
    return EXIT_OK


def cmd_expand_bifork(args) -> int:
    beta = _word_arg(args.strands, args.left)
    gamma = _word_arg(args.strands, args.right)
    print(_emit(expand(beta, gamma).to_record(), args.format))
    return EXIT_OK


def cmd_derivative(args) -> int:
    w = _word_arg(args.strands, args.word)
    print(_emit(derivative_invariant(LKContext(args.strands), w, args.k, args.l), args.format))
    return EXIT_OK


def cmd_finite_type_check(args) -> int:
    rng = random.Random(f"{args.seed}:finite-type")
    samples = [sample_ideal(args.strands, args.depth, rng) for _ in range(args.trials)]
    ok = finite_type_check(LKContext(args.strands), samples, args.k, args.l)
    name = f"finite type depth {args.depth} order ({args.k},{args.l})"
    return _print_checks(
        [CheckResult(name, ok, len(samples), None if ok else f"seed={args.seed}")], args.format
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lkforms", description="Exact Lawrence-Krammer and Burau computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, word=True, strands=3):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--strands", "-n", type=int, default=strands)
        p.add_argument("--max-strands", type=int, default=DEFAULT_STRAND_CAP, help="strand cap")
        p.add_argument("--format", choices=["text", "structured"], default="text")
        p.add_argument("--mutate", action="store_true", help="flip one sign in K(sigma_1)")
        p.add_argument("--exact", action="store_true", help="reserved; arithmetic is always exact")
        if word:
            p.add_argument("word", nargs="*", help="signed generator indices")
        p.set_defaults(func=func)
        return p

    add("lk", cmd_lk, "Lawrence-Krammer matrix of a word")
    add("burau", cmd_burau, "reduced Burau matrix of a word")
    add("charpoly", cmd_charpoly, "characteristic polynomial of K(word)")
    add("form-j", cmd_form_j, "invariant form J", word=False)
    add("r", cmd_r, "reversal matrix R", word=False)
    add("v", cmd_v, "reversal matrix V", word=False)
    add("verify-unitary", cmd_verify_unitary, "check K J K* = J for a word")
    add("verify-reversal", cmd_verify_reversal, "check both reversal identities for a word")
    add("verify-squier", cmd_verify_squier, "check B* J0 B = J0 for a word")

    p = add("verify", cmd_verify, "run the full seeded property suite", word=False, strands=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-word-length", type=int, default=12)

    p = add("distinguish", cmd_distinguish, "compare two words", word=False)
    p.add_argument("--first", required=True, help="first word; use --first='-1 2' for a leading minus")
    p.add_argument("--second", required=True)

    p = add("expand-bifork", cmd_expand_bifork, "coordinates of beta X*_{1,2} X_{1,2} gamma", word=False)
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")

    p = add("derivative", cmd_derivative, "derivative invariant at (t, q) = (-1, 1)")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)

    p = add("finite-type-check", cmd_finite_type_check, "finite-type vanishing on seeded ideal samples", word=False)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        _check_strands(args.strands, args.max_strands)
        if args.mutate and args.command not in ("lk", "verify", "verify-unitary", "verify-reversal"):
            raise BraidParseError("--mutate only applies to Lawrence-Krammer commands")
        return args.func(args)
    except (BraidParseError, DepthError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
