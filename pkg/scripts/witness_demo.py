"""Show ad(a) failing to be nilpotent on the completion of u_oo.

Prints the first steps of the witness series for a given element, each a
prefix known exactly up to some level.
"""

import argparse

from triad.config import Config
from triad.grammar import parse_element
from triad.infinity import PrefixElement, non_nilpotence_witness


def main(cfg: Config, element: str, steps: int) -> list[str]:
    a = PrefixElement.from_element(parse_element(element))
    return [str(s) for s in non_nilpotence_witness(a, steps, depth=cfg.window)]


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("element", nargs="?", default="d1")
    ap.add_argument("--steps", type=int, default=4)
    ap.add_argument("--window", type=int, help="levels of the witness series to carry (default 8)")
    args = ap.parse_args()
    cfg = Config().override(window=args.window)
    for i, line in enumerate(main(cfg, args.element, args.steps), start=1):
        print(f"step {i}: {line}")
