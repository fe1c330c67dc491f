"""Print CNOT counts for each emission strategy over a range of control widths.

    python scripts/cnot_counts.py --max-m 10
"""

import argparse
from dataclasses import dataclass

import numpy as np

from muxry.angle_transform import AngleVector
from muxry.gray_seq import lazy_ordering
from muxry.synth import cancel_adjacent, emit_naive, emit_optimized, gate_counts


@dataclass
class CountConfig:
    min_m: int = 1
    max_m: int = 10
    seed: int = 0


def run(cfg: CountConfig) -> list[dict]:
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for m in range(cfg.min_m, cfg.max_m + 1):
        t = AngleVector.subscript(rng.normal(size=1 << m))
        natural = emit_naive(t, range(1 << m))
        rows.append(
            dict(
                m=m,
                natural=gate_counts(natural).cnots,
                natural_cancelled=gate_counts(cancel_adjacent(natural)).cnots,
                lazy=gate_counts(emit_naive(t, lazy_ordering(m).codes)).cnots,
                optimized=gate_counts(emit_optimized(t)).cnots,
            )
        )
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-m", type=int, default=CountConfig.min_m)
    p.add_argument("--max-m", type=int, default=CountConfig.max_m)
    p.add_argument("--seed", type=int, default=CountConfig.seed)
    cfg = CountConfig(**vars(p.parse_args()))
    rows = run(cfg)
    cols = list(rows[0])
    print("  ".join(f"{c:>17}" for c in cols))
    for r in rows:
        print("  ".join(f"{r[c]:>17}" for c in cols))


if __name__ == "__main__":
    main()
