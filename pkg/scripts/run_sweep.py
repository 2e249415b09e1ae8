"""Classify every small binary morphism and tabulate the four families.

    python scripts/run_sweep.py --max-image-len 3 --out results/sweep
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from quasiper.classify import Budget
from quasiper.oracle import sweep


@dataclass(frozen=True)
class SweepConfig:
    alphabet_size: int = 2
    max_image_len: int = 3
    workers: int = 1
    out: Path = Path("results/sweep")


def main(cfg: SweepConfig) -> None:
    result = sweep(cfg.alphabet_size, cfg.max_image_len, Budget(), workers=cfg.workers)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.with_suffix(".json").write_text(result.to_json())
    cfg.out.with_suffix(".csv").write_text(result.to_csv())

    counts = Counter(r.report.statuses() for r in result.rows)
    print(f"{len(result.rows)} morphisms, {len(result.violations)} inclusion violations")
    print("strong_fin strong_inf weak_fin weak_inf  count")
    for key, n in sorted(counts.items()):
        print("  ".join(f"{s:>8}" for s in key), f"{n:6d}")
    print("\nnon-implication examples:")
    for name, f in result.examples.items():
        print(f"  {name:38s} {f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--alphabet-size", type=int, default=SweepConfig.alphabet_size)
    p.add_argument("--max-image-len", type=int, default=SweepConfig.max_image_len)
    p.add_argument("--workers", type=int, default=SweepConfig.workers)
    p.add_argument("--out", type=Path, default=SweepConfig.out)
    a = p.parse_args()
    main(SweepConfig(a.alphabet_size, a.max_image_len, a.workers, a.out))
