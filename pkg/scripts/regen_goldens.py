"""Regenerate tests/golden/*.txt from the case list below.

Run after an intentional output change, then review the diff by hand.
"""

import io
import json
from pathlib import Path

from triad.cli import run

CASES = {
    "bracket": [["x1 d2", "x2 d3", "--rank", "3"], ["d1", "x1^2 d3", "--json"]],
    "ord": [["d1", "--rank", "2"], ["x1 d3 + d2"], ["d1", "--json"], ["x3 d2"]],
    "act": [["x1 d2", "x2^2 + x1"]],
    "exp-ad": [["d1", "x1^2 d2"]],
    "closure": [["d1", "x1 d2"]],
    "ideal-gen": [["x1 d3", "--rank", "3"]],
    "ideal-member": [["d2", "I[w+1]@u2"], ["d3", "I[1]@u2"]],
    "ideal-basis": [["I[3]@u2", "--limit", "5"]],
    "centralizer": [["3"], ["I[w]@u3"]],
    "series": [["derived", "3"], ["lower", "3"], ["central", "3", "w+2"]],
    "iso": [["u3/I[w+3]", "u4/I[w^3+w^2+w+3]"], ["u2/I[1]", "u2/I[2]"],
            ["u3/I[w^2+w+1]", "u4/I[w^3+w^2+w+1]"], ["u3/I[w+2]", "u4/I[w^3+w+2]", "--json"]],
    "udim": [["u3/I[w^2+2]"], ["oo"]],
    "f-map": [["x1^2 d3 + d2"]],
    "weyl-mul": [["d1^2", "x1^2"]],
    "weyl-in-image": [["x1 d2", "--express"], ["x1 d1", "--express"]],
    "weyl-kernel-check": [["x1 d2", "x1 d3"]],
    "mod-ord": [["x2 x1^3", "--rank", "2"]],
    "mod-prime": [["P[w+2]@P2"]],
    "mod-ann": [["P[w]@P3"]],
    "endo": [["0,1", "x1 x2^2"]],
    "inf-classify": [["d2"], ["I[w]@3+U[oo,4]"]],
    "inf-iso": [["I[1]@3+U[oo,4]", "I[2]@3+U[oo,4]"], ["Zero", "Zero"]],
    "inf-witness": [["d1", "--steps", "3"]],
}

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def render(argv: list[str]) -> str:
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return f"args: {json.dumps(argv)}\nexit: {code}\n---\n{out.getvalue()}{err.getvalue()}"


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for verb, cases in CASES.items():
        for i, args in enumerate(cases):
            (GOLDEN / f"{verb}_{i}.txt").write_text(render([verb, *args]))


if __name__ == "__main__":
    main()
