"""Soliton scattering survey.

Evolves random box-ball states until the soliton multiset stops changing,
then reports how long separation took and checks the min-plus conserved
profile along the way.  The profile of a state at color 1 must equal its
successor's profile at color 2, step after step."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from loopsym.boxball import (
    BoxBallState,
    conserved_profile,
    evolve_carrier,
    solitons,
)


@dataclass
class Config:
    trials: int = 200
    max_boxes: int = 40
    density: float = 0.45
    seed: int = 11
    show: int = 3


def separation_time(state, cap=400):
    """Steps until the sorted soliton multiset stops changing."""
    last = tuple(sorted(solitons(state)))
    stable_for = 0
    for step in range(1, cap + 1):
        state = evolve_carrier(state)
        now = tuple(sorted(solitons(state)))
        if now == last:
            stable_for += 1
            if stable_for >= 3:
                return step - stable_for, now
        else:
            stable_for = 0
            last = now
    raise RuntimeError("no separation within %d steps" % cap)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--max-boxes", type=int, default=Config.max_boxes)
    parser.add_argument("--density", type=float, default=Config.density)
    parser.add_argument("--seed", type=int, default=Config.seed)
    parser.add_argument("--show", type=int, default=Config.show,
                        help="print this many sample trajectories")
    args = parser.parse_args()
    cfg = Config(args.trials, args.max_boxes, args.density, args.seed, args.show)

    rng = random.Random(cfg.seed)
    times = Counter()
    profile_failures = 0
    shown = 0
    for trial in range(cfg.trials):
        boxes = [
            1 if rng.random() < cfg.density else 0
            for _ in range(rng.randint(2, cfg.max_boxes))
        ]
        state = BoxBallState(boxes)
        if state.ball_count == 0:
            continue
        steps, final = separation_time(state)
        times[steps] += 1

        s = state
        for _ in range(steps + 2):
            t = evolve_carrier(s)
            if conserved_profile(s, 1) != conserved_profile(t, 2):
                profile_failures += 1
            s = t

        if shown < cfg.show and len(final) >= 3:
            shown += 1
            print("sample %d: solitons %s after %d steps" % (shown, list(final), steps))
            s = state
            for _ in range(steps + 1):
                print("  " + s.render())
                s = evolve_carrier(s)

    print()
    print("separation time histogram (steps: trials)")
    for steps in sorted(times):
        print("  %3d: %s" % (steps, "#" * times[steps]))
    total = sum(times.values())
    mean = sum(k * v for k, v in times.items()) / total
    print("trials %d  mean separation %.2f steps" % (total, mean))
    print("conserved profile violations: %d" % profile_failures)


if __name__ == "__main__":
    main()
