"""Command-line front end.

Exit codes: 0 analysis completed, 1 usage error, 2 resource ceiling hit,
3 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import infwords as iw
from . import words as wd
from .classify import SCHEMA, Budget, InvariantViolation, candidate_quasiperiods, classify
from .coverauto import FINITE, MODES, build, to_dot
from .infwords import EventuallyPeriodicWord
from .langops import DEFAULT_MAX_PRODUCT_STATES, ResourceLimitExceeded, enumerate_accepted
from .morphism import Morphism
from .oracle import automaton_mismatches, naive_quasiperiod, overlap_samples, sweep
from .words import Alphabet

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(payload: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False) + "\n")


def _letters_only(text: str, syntax: str = "") -> str:
    # The command line uses single letters a-z; the library itself is more permissive.
    if not all("a" <= ch <= "z" or ch in syntax for ch in text):
        raise ValueError(f"{text!r}: words are written with letters a-z")
    return text


def _morphism(text: str) -> Morphism:
    return Morphism.parse(_letters_only(text, "->; "))


def _word_analyze(args, out) -> None:
    _letters_only(args.word)
    w = Alphabet.of(args.word or "a").word(args.word)
    cover = wd.quasiperiod(w)
    payload = {
        "word": args.word,
        "quasiperiod": None if cover.quasiperiod is None else str(cover.quasiperiod),
        "cover_positions": list(cover.cover_positions),
        "quasiperiods": [str(q) for q in wd.quasiperiods(w)],
    }
    if len(w):
        root, k = wd.primitive_root(w)
        payload.update(superprimitive=wd.is_superprimitive(w), primitive_root=str(root), exponent=k)
    _emit(payload, out)


def _inf_analyze(args, out) -> None:
    w = EventuallyPeriodicWord.parse(_letters_only(args.word, "()^w"))
    q = iw.quasiperiod_inf(w)
    payload = {
        "word": args.word,
        "normal_form": str(w),
        "quasiperiodic": q is not None,
        "quasiperiod": None if q is None else str(q),
    }
    if args.q:
        payload["q"] = args.q
        payload["q_quasiperiodic"] = iw.is_q_quasiperiodic_inf(w, w.alphabet.word(args.q))
    _emit(payload, out)


def _budget(args) -> Budget:
    return Budget(
        max_word_len=args.budget,
        max_preperiod_len=args.inf_budget,
        max_period_len=args.inf_budget,
        iterates=args.iterates,
        max_product_states=args.max_product_states,
    )


def _classify(args, out) -> None:
    f = _morphism(args.morphism)
    report = classify(f, _budget(args), strict=args.strict, superprimitive_only=args.superprimitive_only)
    out.write(json.dumps(report.to_dict(timings=args.timings), indent=2, ensure_ascii=False) + "\n")


def _automaton(args, out) -> None:
    f = _morphism(args.morphism)
    A = build(f, f.alphabet.word(args.q), args.mode)
    if args.dot:
        dot = to_dot(A)
        if args.dot == "-":
            out.write(dot)
            return
        Path(args.dot).write_text(dot, encoding="utf-8")
    payload = {"morphism": str(f), "automaton": A.to_dict()}
    if args.enumerate is not None:
        payload["accepted"] = [str(u) for u in enumerate_accepted(A, args.enumerate)]
    _emit(payload, out)


def _qset(args, out) -> None:
    f = _morphism(args.morphism)
    _emit({"morphism": str(f), "candidates": [str(q) for q in candidate_quasiperiods(f)]}, out)


def _sweep(args, out) -> None:
    budget = Budget(max_word_len=args.budget, max_preperiod_len=args.inf_budget,
                    max_period_len=args.inf_budget, iterates=args.iterates)
    result = sweep(args.alphabet_size, args.max_image_len, budget, workers=args.workers)
    text = result.to_csv() if args.format == "csv" else result.to_json()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    if result.violations:
        raise InvariantViolation("; ".join(result.violations))


def _oracle_check(args, out) -> None:
    if args.target == "automaton":
        f = _morphism(args.morphism)
        bad = automaton_mismatches(f, f.alphabet.word(args.q), args.max_len, args.mode)
        _emit({"check": "automaton", "morphism": str(f), "q": args.q, "mode": args.mode,
               "max_len": args.max_len, "mismatches": bad, "passed": not bad}, out)
    elif args.target == "words":
        sigma = Alphabet.latin(args.alphabet_size)
        bad = []
        from itertools import product
        for n in range(args.max_len + 1):
            for t in product(sigma.symbols, repeat=n):
                w = sigma.word("".join(t))
                if wd.quasiperiod(w).quasiperiod != naive_quasiperiod(w):
                    bad.append(str(w))
        _emit({"check": "words", "max_len": args.max_len, "mismatches": bad, "passed": not bad}, out)
    else:
        samples = overlap_samples(args.samples, args.seed)
        bad = [f"{f} u={u} v={v} k={k}" for f, u, v, k, qu, qb in samples if qu != qb]
        _emit({"check": "overlap", "seed": args.seed, "samples": len(samples),
               "violations": bad, "passed": not bad}, out)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    defaults = Budget()
    p.add_argument("--budget", type=int, default=defaults.max_word_len,
                   help="maximum length of finite words in bounded searches")
    p.add_argument("--inf-budget", type=int, default=defaults.max_preperiod_len,
                   help="maximum preperiod and period length in bounded searches")
    p.add_argument("--iterates", type=int, default=defaults.iterates, help="largest power f^k tried")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasiper", description="Quasiperiodicity of words and morphisms.")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("word-analyze", help="covers of a finite word")
    p.add_argument("word")
    p.set_defaults(run=_word_analyze)

    p = sub.add_parser("inf-analyze", help="quasiperiodicity of x(y)^w")
    p.add_argument("word", help="e.g. 'bb(ab)^w'")
    p.add_argument("--q", help="also test this particular quasiperiod")
    p.set_defaults(run=_inf_analyze)

    p = sub.add_parser("classify", help="four-family report for a morphism")
    p.add_argument("morphism", help="e.g. 'a->ab;b->aba'")
    _add_budget_flags(p)
    p.add_argument("--strict", action="store_true", help="also search exact-image gaps")
    p.add_argument("--superprimitive-only", action="store_true", help="only superprimitive candidates")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")
    p.add_argument("--max-product-states", type=int, default=DEFAULT_MAX_PRODUCT_STATES)
    p.set_defaults(run=_classify)

    p = sub.add_parser("automaton", help="build a cover automaton")
    p.add_argument("morphism")
    p.add_argument("--q", required=True)
    p.add_argument("--mode", choices=MODES, default=FINITE)
    p.add_argument("--dot", metavar="PATH", help="write Graphviz output ('-' for stdout)")
    p.add_argument("--enumerate", type=int, metavar="N", help="list accepted words up to length N")
    p.set_defaults(run=_automaton)

    p = sub.add_parser("qset", help="candidate quasiperiods of a morphism")
    p.add_argument("morphism")
    p.set_defaults(run=_qset)

    p = sub.add_parser("sweep", help="classify all small morphisms")
    p.add_argument("--alphabet-size", type=int, default=2, choices=(1, 2, 3))
    p.add_argument("--max-image-len", type=int, default=3)
    _add_budget_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(run=_sweep)

    p = sub.add_parser("oracle-check", help="compare fast paths with brute force")
    osub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    o = osub.add_parser("automaton")
    o.add_argument("morphism")
    o.add_argument("--q", required=True)
    o.add_argument("--max-len", type=int, default=7)
    o.add_argument("--mode", choices=MODES, default=FINITE)
    o = osub.add_parser("words")
    o.add_argument("--max-len", type=int, default=12)
    o.add_argument("--alphabet-size", type=int, default=2)
    o = osub.add_parser("overlap")
    o.add_argument("--samples", type=int, default=200)
    p.set_defaults(run=_oracle_check)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.run(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitExceeded as exc:
        err.write(f"resource ceiling: {exc}\n")
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        err.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
