"""Where does a non-TNN polynomial first betray itself?

For scalar polynomials, total nonnegativity of the infinite Toeplitz array
is equivalent to all roots being real and negative.  This scan samples
random polynomials with nonnegative integer coefficients, splits them by
root reality, and records the smallest window at which a negative minor
appears.  Real-rooted samples should never show one; complex-rooted samples
should all be caught within a few extra blocks."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

import numpy

from loopsym.factorize import tnn_check
from loopsym.matpoly import MatrixPoly


@dataclass
class Config:
    samples: int = 120
    degree: int = 3
    max_coeff: int = 6
    max_window: int = 6
    max_order: int = 3
    seed: int = 9


def first_violation_window(P, cfg):
    for w in range(1, cfg.max_window + 1):
        if not tnn_check(P, w, cfg.max_order).passed:
            return w
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=Config.samples)
    parser.add_argument("--degree", type=int, default=Config.degree)
    parser.add_argument("--max-coeff", type=int, default=Config.max_coeff)
    parser.add_argument("--max-window", type=int, default=Config.max_window)
    parser.add_argument("--max-order", type=int, default=Config.max_order)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args()
    cfg = Config(args.samples, args.degree, args.max_coeff, args.max_window,
                 args.max_order, args.seed)

    rng = random.Random(cfg.seed)
    caught = Counter()
    escaped = []
    real_flagged = []
    real_total = 0
    complex_total = 0
    for _ in range(cfg.samples):
        coeffs = [1] + [rng.randint(0, cfg.max_coeff) for _ in range(cfg.degree)]
        while coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) == 1:
            continue
        roots = numpy.roots(coeffs)
        is_real = all(abs(z.imag) <= 1e-9 * (1 + abs(z)) for z in roots)
        P = MatrixPoly(1, [[tuple(coeffs)]])
        w = first_violation_window(P, cfg)
        if is_real:
            real_total += 1
            if w is not None:
                real_flagged.append((coeffs, w))
        else:
            complex_total += 1
            if w is None:
                escaped.append(coeffs)
            else:
                caught[w] += 1

    print("real-rooted samples: %d, false flags: %d" % (real_total, len(real_flagged)))
    for coeffs, w in real_flagged:
        print("  UNEXPECTED violation for %s at window %d" % (coeffs, w))
    print("complex-rooted samples: %d" % complex_total)
    print("first-violation window histogram:")
    for w in sorted(caught):
        print("  w=%d: %s" % (w, "#" * caught[w]))
    if escaped:
        print("not caught within window %d:" % cfg.max_window)
        for coeffs in escaped:
            print("  %s" % (coeffs,))
    else:
        print("every complex-rooted sample caught within window %d" % cfg.max_window)


if __name__ == "__main__":
    main()
