"""Export the worked-example cover automata as Graphviz files.

    python scripts/golden_automata.py --out results/dot
    dot -Tpng results/dot/ab_aba__aba.dot -o a.png
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from quasiper.coverauto import FINITE, INFINITE, build, to_dot
from quasiper.morphism import Morphism

CASES = [
    ("ab_aba", "a->ab;b->aba", ("aba", "ab", "a", "b", "ba")),
    ("abaaba_baabaaba", "a->abaaba;b->baabaaba", ("aba", "baaba")),
    ("abaaba_aabaaba", "a->abaaba;b->aabaaba", ("abaa", "aaba")),
    ("ternary", "a->aabaab;b->aabaaaba;c->aabaababaabaa", ("aabaa",)),
]


@dataclass(frozen=True)
class DotConfig:
    out: Path = Path("results/dot")
    infinite: bool = False


def main(cfg: DotConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    mode = INFINITE if cfg.infinite else FINITE
    for name, text, qs in CASES:
        f = Morphism.parse(text)
        for q in qs:
            A = build(f, f.alphabet.word(q), mode)
            path = cfg.out / f"{name}__{q}.dot"
            path.write_text(to_dot(A, f"{name} {q}"))
            print(f"{path}: {len(A.states)} states, {len(A.transitions)} transitions")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=DotConfig.out)
    p.add_argument("--infinite", action="store_true")
    a = p.parse_args()
    main(DotConfig(a.out, a.infinite))
