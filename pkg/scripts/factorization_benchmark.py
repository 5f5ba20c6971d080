"""Whirl factorization stress bench.

Composes random nonnegative whirl products, factors them back, and tabulates
convergence rate, worst recomposition residual, and wall time per (n, m)
cell.  Parameters farther from 1 make the Newton conditions stiffer, so the
spread flag widens the sampling interval."""

import argparse
import random
import time
from dataclasses import dataclass

from loopsym.factorize import NoConvergence, orbit_match, whirl_factorize
from loopsym.lsym import LoopVarArray, whirl_product


@dataclass
class Config:
    trials: int = 60
    max_n: int = 3
    max_m: int = 4
    spread: float = 1.0
    seed: int = 5


def run_cell(cfg, rng, n, m):
    lo, hi = 0.1 / cfg.spread, 2.0 * cfg.spread
    converged = 0
    matched = 0
    worst = 0.0
    t0 = time.perf_counter()
    for _ in range(cfg.trials):
        vals = [[rng.uniform(lo, hi) for _ in range(n)] for _ in range(m)]
        src = LoopVarArray.numeric(n, m, vals)
        try:
            result = whirl_factorize(whirl_product(src), m)
        except NoConvergence:
            continue
        if result.converged:
            converged += 1
            worst = max(worst, result.residual)
            if n <= 2 and m <= 3 and orbit_match(src, result.params):
                matched += 1
    elapsed = time.perf_counter() - t0
    return converged, matched, worst, elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("--max-m", type=int, default=Config.max_m)
    parser.add_argument("--spread", type=float, default=Config.spread)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args()
    cfg = Config(args.trials, args.max_n, args.max_m, args.spread, args.seed)

    rng = random.Random(cfg.seed)
    print("n  m  converged      orbit-matched  worst residual  ms/trial")
    for n in range(1, cfg.max_n + 1):
        for m in range(1, cfg.max_m + 1):
            conv, match, worst, dt = run_cell(cfg, rng, n, m)
            match_str = (
                "%3d/%d" % (match, conv) if n <= 2 and m <= 3 else "    --"
            )
            print(
                "%d  %d  %3d/%3d  %13s  %14.3g  %8.2f"
                % (n, m, conv, cfg.trials, match_str, worst, 1000 * dt / cfg.trials)
            )


if __name__ == "__main__":
    main()
