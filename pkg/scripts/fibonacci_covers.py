"""Prefixes of the Fibonacci word that cover a long prefix of it.

Only the last |q| positions of the finite prefix may stay uncovered.  Long
candidates pass more easily on a finite window, so the list is longer than
the set of quasiperiods of the infinite word.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from quasiper import words as wd
from quasiper.morphism import Morphism, fixed_point_prefix


@dataclass(frozen=True)
class FibConfig:
    length: int = 200
    max_q: int = 40


def main(cfg: FibConfig) -> None:
    fib = Morphism.parse("a->ab;b->a")
    w = fixed_point_prefix(fib, 0, cfg.length)
    print(f"prefix of length {cfg.length}: {str(w)[:40]}...")
    print(" |q|  cover end  covers up to n-|q|  q")
    for m in range(1, cfg.max_q + 1):
        q = w[:m]
        end = wd.prefix_cover_end(w, q)
        good = end >= cfg.length - m
        if good:
            print(f"{m:4d}  {end:9d}  {str(good):>17}  {q}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--length", type=int, default=FibConfig.length)
    p.add_argument("--max-q", type=int, default=FibConfig.max_q)
    a = p.parse_args()
    main(FibConfig(a.length, a.max_q))
