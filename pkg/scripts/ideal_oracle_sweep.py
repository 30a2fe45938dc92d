"""Random sweep: the ideal generated by an element is I_ord(u).

Draws seeded random elements of u_n, closes them under brackets inside a
degree window and compares with the basis of I_ord(u) in the same window.
The closure runs MARGIN degrees wider than the comparison: cancelling the
lower terms of a mixed generator can pass through elements just outside the
window, so the edge of a truncated closure is incomplete.
"""

import argparse
import json
import random
from fractions import Fraction

from triad.config import Config
from triad.lie import BasisVector, Element, ord_element
from triad.oracles import ideal_closure_window, ideal_window_basis
from triad.ideals import IdealHandle, membership
from triad.polynomial import multidegrees

MARGIN = 2


def random_element(rng: random.Random, n: int, degree: int) -> Element:
    basis = [BasisVector(a, i) for i in range(1, n + 1) for a in multidegrees(i - 1, degree)]
    terms = {rng.choice(basis): Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
             for _ in range(rng.randint(1, 3))}
    return Element(terms, n)


def main(cfg: Config, samples: int) -> dict:
    rng = random.Random(cfg.seed)
    n = cfg.rank or 3
    bad = []
    for _ in range(samples):
        u = random_element(rng, n, 2)
        lam = ord_element(u)
        span = ideal_closure_window([u], cfg.window + MARGIN)
        # every basis vector of I_lam in the window is reached, nothing outside I_lam is
        complete = all(span.contains({b: 1}) for b in ideal_window_basis(n, lam, cfg.window))
        sound = all(membership(Element(r, n), IdealHandle(n, lam)) for r in span.rows.values())
        if not (complete and sound):
            bad.append(str(u))
    return {"rank": n, "samples": samples, "window": cfg.window, "mismatches": bad}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int)
    ap.add_argument("--window", type=int, help="degree window (default 4)")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(window=4).override(rank=args.rank, window=args.window, seed=args.seed, json=args.json or None)
    report = main(cfg, args.samples)
    if cfg.json:
        print(json.dumps(report))
    else:
        print(f"u{report['rank']}, window {report['window']}: "
              f"{report['samples'] - len(report['mismatches'])}/{report['samples']} agree")
        for s in report["mismatches"]:
            print(f"  mismatch: {s}")
