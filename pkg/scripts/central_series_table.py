"""Tabulate the upper central series of u_n against a brute-force centre.

Row mu: the preimage of the centre of u_n/I_mu, found by solving linear
equations over basis vectors of degree <= window, next to I_(mu+1).
"""

import argparse
import json

from triad import ordinal as o
from triad.config import Config
from triad.ideals import central_series_term
from triad.oracles import ideal_window_basis, quotient_centre_window, same_span


def indices(n: int, per_block: int):
    for e in range(min(n - 1, 2) + 1):
        for k in range(per_block):
            mu = o.add(o.omega_pow(1, e) if e else o.ZERO, o.Ordinal.of(k))
            if o.successor(mu) <= o.stack(n):
                yield mu


def main(cfg: Config) -> list[dict]:
    n = cfg.rank or 3
    rows = []
    for mu in indices(n, 4):
        term = central_series_term(n, o.successor(mu))
        found = quotient_centre_window(n, mu, a_degree=cfg.window)
        rows.append({"mu": str(mu), "next": str(term), "window_dim": len(found),
                     "agrees": same_span(found, ideal_window_basis(n, term.lam, cfg.window))})
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, help="n (default 3)")
    ap.add_argument("--window", type=int, help="degree window (default 4)")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(window=4).override(rank=args.rank, window=args.window, json=args.json or None)
    rows = main(cfg)
    if cfg.json:
        print(json.dumps(rows))
    else:
        print(f"{'mu':>10}  {'Z^(mu+1)':>16}  dim  agrees")
        for r in rows:
            print(f"{r['mu']:>10}  {r['next']:>16}  {r['window_dim']:>3}  {r['agrees']}")
