"""Compare optimized circuits with the dense target over many random angle vectors.

Widths up to the dense limit use full matrices; wider ones check random
basis columns with the state-vector simulator.

    python scripts/oracle_sweep.py --max-m 12 --trials 10
"""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from muxry import sim
from muxry.angle_transform import AngleVector, thetas_from_phis
from muxry.synth import emit_optimized


@dataclass
class SweepConfig:
    max_m: int = 8
    trials: int = 20
    columns: int = 16
    seed: int = 0


def max_error(phis: AngleVector, cfg: SweepConfig, rng) -> float:
    nb = phis.width + 1
    c = emit_optimized(thetas_from_phis(phis))
    if nb <= sim.DENSE_MAX_NB:
        return sim.max_abs_diff(sim.circuit_matrix(c), sim.target_d_matrix(phis, nb))
    xs = rng.choice(1 << nb, size=cfg.columns, replace=False)
    states = np.zeros((1 << nb, len(xs)), dtype=complex)
    states[xs, np.arange(len(xs))] = 1.0
    want = np.stack([sim.target_d_column(phis, nb, int(x)) for x in xs], axis=1)
    return sim.max_abs_diff(sim.apply_circuit(c, states), want)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    rng = np.random.default_rng(cfg.seed)
    print(f"{'m':>3} {'max_abs_diff':>14} {'seconds':>8}")
    for m in range(0, cfg.max_m + 1):
        start = time.perf_counter()
        worst = max(
            max_error(AngleVector.control(rng.uniform(-np.pi, np.pi, size=1 << m)), cfg, rng)
            for _ in range(cfg.trials)
        )
        print(f"{m:>3} {worst:>14.3e} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
