"""Cross-check the isomorphism decision against the clause-generated table.

For every pair of factor algebras u_n/I_lam, u_m/I_mu on the handle grid
(n, m <= rank, CNF coefficients <= window), compare the signature route with
the clause table and report agreement counts and isomorphism classes.
"""

import argparse
import json
import time
from collections import Counter

from triad.config import Config
from triad.ideals import IdealHandle
from triad.iso import canonical_signature, iso_factors
from triad.oracles import handle_grid, iso_by_clauses


def main(cfg: Config) -> dict:
    top = cfg.rank or 4
    grids = {n: handle_grid(n, cfg.window) for n in range(2, top + 1)}
    table: dict = {}
    start = time.perf_counter()
    pairs = disagreements = isomorphic = 0
    for n, lams in grids.items():
        for m, mus in grids.items():
            for lam in lams:
                for mu in mus:
                    a = iso_factors(IdealHandle(n, lam), IdealHandle(m, mu))
                    b = iso_by_clauses(n, lam, m, mu, table)
                    pairs += 1
                    isomorphic += a
                    disagreements += a != b
    classes = Counter(str(canonical_signature(IdealHandle(n, lam))) for n, lams in grids.items() for lam in lams)
    return {"pairs": pairs, "isomorphic_pairs": isomorphic, "disagreements": disagreements,
            "classes": len(classes), "seconds": round(time.perf_counter() - start, 3)}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, help="largest n (default 4)")
    ap.add_argument("--window", type=int, help="largest CNF coefficient on the grid (default 3)")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(window=3).override(rank=args.rank, window=args.window, json=args.json or None)
    report = main(cfg)
    if cfg.json:
        print(json.dumps(report))
    else:
        for k, v in report.items():
            print(f"{k}: {v}")
