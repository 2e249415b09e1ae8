"""Naive reference implementations and exhaustive sweeps.

The checks here work on plain strings and mark covered positions one by one.
They share nothing with the fast paths except the word types, so agreement
between the two is evidence rather than tautology.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .classify import FALSE, SCHEMA, TRUE, Budget, FamilyReport, InvariantViolation, classify
from .coverauto import FINITE, INFINITE, accepts, build
from .infwords import EventuallyPeriodicWord
from .morphism import Morphism
from .words import Alphabet, Word


def naive_is_q_quasiperiodic(w: str, q: str) -> bool:
    if not q:
        raise ValueError("empty q")
    if w == q or len(w) < len(q):
        return False
    covered = [False] * len(w)
    for i in range(len(w) - len(q) + 1):
        if w[i: i + len(q)] == q:
            for j in range(i, i + len(q)):
                covered[j] = True
    return all(covered)


def naive_quasiperiod(w: Word) -> Optional[Word]:
    """Shortest proper factor of ``w`` whose occurrences cover ``w``."""
    s = str(w)
    factors = sorted({s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)} - {s},
                     key=lambda x: (len(x), x))
    for q in factors:
        if naive_is_q_quasiperiodic(s, q):
            return w.alphabet.word(q)
    return None


def _long_prefix(w: EventuallyPeriodicWord, n: int) -> str:
    x, y = str(w.preperiod), str(w.period)
    return (x + y * (n // len(y) + 1))[:n]


def naive_is_q_quasiperiodic_inf(w: EventuallyPeriodicWord, q: Word) -> bool:
    """Coverage of a long prefix, ignoring its last ``|q|`` positions."""
    qs = str(q)
    n = len(w.preperiod) + 8 * len(w.period) + 4 * len(qs)
    s = _long_prefix(w, n)
    covered = [False] * n
    for i in range(n - len(qs) + 1):
        if s[i: i + len(qs)] == qs:
            for j in range(i, i + len(qs)):
                covered[j] = True
    return all(covered[: n - len(qs)])


def naive_quasiperiod_inf(w: EventuallyPeriodicWord) -> Optional[Word]:
    """Shortest covering prefix, trying lengths well past any claimed bound."""
    limit = len(w.preperiod) + 3 * len(w.period) + 2
    s = _long_prefix(w, limit)
    for m in range(1, limit + 1):
        if naive_is_q_quasiperiodic_inf(w, w.alphabet.word(s[:m])):
            return w.alphabet.word(s[:m])
    return None


def naive_image(f: Morphism, u: str) -> str:
    table = {s: str(img) for s, img in zip(f.alphabet.symbols, f.images)}
    return "".join(table[c] for c in u)


def naive_accepts(f: Morphism, q: str, u: str, mode: str = FINITE) -> bool:
    """What the cover automaton should answer on ``u``, computed directly.

    Finite mode: ``f(u)`` is empty, equal to ``q`` or ``q``-covered.  Infinite
    mode: ``f(u)`` can be completed by a suffix of ``q`` into such a word.
    """
    img = naive_image(f, u)
    if not img or img == q or naive_is_q_quasiperiodic(img, q):
        return True
    if mode == FINITE:
        return False
    for k in range(len(q) + 1):
        ext = img + q[k:]
        if ext == q or naive_is_q_quasiperiodic(ext, q):
            return True
    return False


def _all_strings(symbols: tuple[str, ...], max_len: int) -> Iterable[str]:
    for n in range(max_len + 1):
        for t in product(symbols, repeat=n):
            yield "".join(t)


def automaton_mismatches(f: Morphism, q: Word, max_len: int, mode: str = FINITE) -> list[str]:
    """Words of length <= ``max_len`` on which the automaton and the direct check disagree."""
    A = build(f, q, mode)
    qs = str(q)
    bad = []
    for u in _all_strings(f.alphabet.symbols, max_len):
        if accepts(A, f.alphabet.word(u)) != naive_accepts(f, qs, u, mode):
            bad.append(u)
    return bad


def automaton_oracle_check(f: Morphism, q: Word, max_len: int, mode: str = FINITE) -> bool:
    return not automaton_mismatches(f, q, max_len, mode)


# -- sweeps --------------------------------------------------------------------


def all_morphisms(alphabet_size: int, max_image_len: int) -> list[Morphism]:
    """Every morphism with images of length 1..max_image_len, in a fixed order."""
    sigma = Alphabet.latin(alphabet_size)
    images = [img for img in _all_strings(sigma.symbols, max_image_len) if img]
    out = []
    for table in product(images, repeat=alphabet_size):
        out.append(Morphism(sigma, tuple(sigma.word(img) for img in table)))
    return out


@dataclass(frozen=True)
class SweepRow:
    index: int
    morphism: Morphism
    report: FamilyReport

    def witnesses(self) -> dict:
        out = {}
        for k in ("weak_finite", "weak_infinite"):
            cert = getattr(self.report, k).certificate
            if cert.kind == "witness":
                out[k] = f"{cert.word} ~ {cert.quasiperiod}"
        return out


# Non-implications between the four families, each as (name, predicate on statuses).
NON_IMPLICATIONS = (
    ("strong_infinite_not_strong_finite", lambda s: s[1] == TRUE and s[0] == FALSE),
    ("weak_finite_not_strong_finite", lambda s: s[2] == TRUE and s[0] == FALSE),
    ("weak_finite_not_weak_infinite", lambda s: s[2] == TRUE and s[3] == FALSE),
    ("weak_infinite_not_strong_infinite", lambda s: s[3] == TRUE and s[1] == FALSE),
    ("strong_infinite_not_weak_finite", lambda s: s[1] == TRUE and s[2] == FALSE),
)


@dataclass
class SweepResult:
    alphabet_size: int
    max_image_len: int
    rows: list[SweepRow]
    violations: list[str] = field(default_factory=list)
    examples: dict = field(default_factory=dict)

    def find(self, text: str) -> SweepRow:
        f = Morphism.parse(text)
        for row in self.rows:
            if row.morphism == f:
                return row
        raise KeyError(text)

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA,
            "alphabet_size": self.alphabet_size,
            "max_image_len": self.max_image_len,
            "rows": [
                {"index": r.index, "morphism": str(r.morphism),
                 "verdicts": dict(zip(("strong_finite", "strong_infinite", "weak_finite", "weak_infinite"),
                                      r.report.statuses())),
                 "witnesses": r.witnesses()}
                for r in self.rows
            ],
            "violations": self.violations,
            "non_implications": {k: str(v) for k, v in self.examples.items()},
        }
        return json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "morphism", "strong_finite", "strong_infinite", "weak_finite", "weak_infinite",
                         "weak_finite_witness", "weak_infinite_witness"])
        for r in self.rows:
            w = r.witnesses()
            writer.writerow([r.index, str(r.morphism), *r.report.statuses(),
                             w.get("weak_finite", ""), w.get("weak_infinite", "")])
        return buf.getvalue()


def _classify_row(args):
    index, f, budget = args
    try:
        return index, classify(f, budget)
    except InvariantViolation as exc:
        return index, str(exc)


def sweep(alphabet_size: int = 2, max_image_len: int = 3, budget: Budget = Budget(), workers: int = 1) -> SweepResult:
    """Classify every small morphism and test the inclusions between families.

    Inclusion violations are collected rather than raised so that the whole
    table is still produced.
    """
    morphisms = all_morphisms(alphabet_size, max_image_len)
    jobs = [(i, f, budget) for i, f in enumerate(morphisms)]
    rows, violations = [], []

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_classify_row, jobs, chunksize=8))
    else:
        results = [_classify_row(job) for job in jobs]
    for i, report in results:
        if isinstance(report, str):
            violations.append(report)
        else:
            rows.append(SweepRow(i, morphisms[i], report))
    examples = {}
    for name, pred in NON_IMPLICATIONS:
        for r in rows:
            if pred(r.report.statuses()):
                examples[name] = r.morphism
                break
    return SweepResult(alphabet_size, max_image_len, rows, violations, examples)


# -- overlap samples ---------------------------------------------------------


def _random_morphism(rng: random.Random, max_len: int) -> Morphism:
    return Morphism.from_images({s: "".join(rng.choice("ab") for _ in range(rng.randint(1, max_len))) for s in "ab"})


def overlap_samples(n: int = 200, seed: int = 0, max_attempts: int = 200_000):
    """Seeded samples ``(f, u, v, k)`` where ``f(u)`` and ``f(u^k v u^k)`` are quasiperiodic.

    Returns the samples with the naive quasiperiods of both images.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(max_attempts):
        if len(out) == n:
            break
        f = _random_morphism(rng, 4)
        u = "".join(rng.choice("ab") for _ in range(rng.randint(1, 3)))
        v = "".join(rng.choice("ab") for _ in range(rng.randint(1, 4)))
        fu, fv = naive_image(f, u), naive_image(f, v)
        k = -(-len(fv) // len(fu)) + rng.randint(0, 1)
        qu = naive_quasiperiod(f.alphabet.word(fu))
        if qu is None:
            continue
        big = f.alphabet.word(naive_image(f, u * k + v + u * k))
        qb = naive_quasiperiod(big)
        if qb is None:
            continue
        out.append((f, u, v, k, qu, qb))
    return out
