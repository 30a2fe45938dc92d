import io
import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from strategies import random_element, random_polynomial
from triad import ordinal as o
from triad.cli import VERBS, run
from triad.errors import GrammarError
from triad.grammar import (parse_element, parse_handle, parse_inf_ideal, parse_ordinal, parse_polynomial,
                           parse_submodule, parse_weyl)
from triad.ideals import IdealHandle
from triad.infinity import Mixed, Tail, Whole, Zero
from triad.lie import BasisVector, Element
from triad.poly_module import SubmoduleHandle
from triad.polynomial import mdeg
from triad.weyl import WeylElement

GOLDEN = Path(__file__).parent / "golden"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    assert parse_element("d1") == Element({BasisVector((), 1): 1}, 2)
    u = parse_element("3/2 x1^2 d3 - d2")
    assert u == Element({BasisVector((2,), 3): Fraction(3, 2), BasisVector((), 2): -1}, 3)
    # printed in descending ordinal degree: d2 outranks x1^2 d3 in u3
    assert str(u) == "-d2 + 3/2 x1^2 d3"
    assert str(parse_element("3/2 x1^2 x3 d4 - d1")) == "-d1 + 3/2 x1^2 x3 d4"
    with pytest.raises(GrammarError) as exc:
        parse_element("x3 d2")
    assert "factor index 3 >= slot 2" in str(exc.value)


@pytest.mark.parametrize("bad", ["", "x1", "d1 d2", "x1 + d2", "2/ d1", "d", "x1^ d2", "d1 +", "q d1"])
def test_parse_rejects(bad):
    with pytest.raises(GrammarError):
        parse_element(bad)


def test_parse_ordinal_examples():
    assert parse_ordinal("w^3*2 + w*5 + 4") == o.Ordinal.from_coeffs({3: 2, 1: 5, 0: 4})
    assert parse_ordinal("w^w") == o.TOP
    assert parse_ordinal("7") == o.Ordinal.of(7)
    assert parse_ordinal("w+w") == o.omega_pow(1, 2)
    assert parse_ordinal("3+w") == o.OMEGA
    for bad in ("", "w^", "w*", "x", "w^2*"):
        with pytest.raises(GrammarError):
            parse_ordinal(bad)


def _sample_values(rng):
    yield lambda t, v: parse_element(t, v.rank), random_element(rng, rng.randint(2, 5), 3)
    yield lambda t, v: parse_polynomial(t), random_polynomial(rng, rng.randint(1, 4), 3)
    lam = o.Ordinal.from_coeffs({e: rng.randint(0, 3) for e in range(4)})
    yield lambda t, v: parse_ordinal(t), lam
    n = rng.randint(2, 5)
    top = o.stack(n)
    yield lambda t, v: parse_handle(t), IdealHandle(n, lam if lam <= top else top)
    yield lambda t, v: parse_submodule(t), SubmoduleHandle(n, lam if lam < o.omega_pow(n) else o.omega_pow(n - 1))
    mix_lam = o.Ordinal.from_coeffs({e: rng.randint(0, 3) for e in range(n - 1)})
    yield lambda t, v: parse_inf_ideal(t), rng.choice([Whole(), Zero(), Tail(n),
                                                           Mixed(n, max(mix_lam, o.ONE))])
    terms = {}
    for _ in range(rng.randint(0, 3)):
        a = mdeg([rng.randint(0, 2) for _ in range(2)])
        b = mdeg([rng.randint(0, 2) for _ in range(2)])
        terms[(a, b)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    w = WeylElement(terms, 2)
    yield lambda t, v: parse_weyl(t, v.rank), w


def test_round_trip_seeded():
    rng = random.Random(2024)
    count = 0
    while count < 1000:
        for parse, value in _sample_values(rng):
            text = str(value)
            back = parse(text, value)
            assert back == value, (text, value, back)
            count += 1
    assert count >= 1000


def test_exit_codes():
    assert invoke("ord", "d1")[0] == 0
    code, out, err = invoke("ord", "x3 d2")
    assert code == 2 and err.startswith("syntax error:")
    code, out, err = invoke("ideal-member", "d3", "I[1]@u2")
    assert code == 1 and err.startswith("error:")
    assert invoke("iso", "u2/I[1]", "u2/I[w+5]")[0] == 1
    assert invoke("ord", "d1", "--rank", "x")[0] == 2
    assert invoke("no-such-verb")[0] == 2
    assert invoke("inf-witness", "0")[0] == 1
    assert invoke("udim", "u2/I[")[0] == 2


def test_json_matches_text():
    for argv in (["ord", "x1 d3 + d2"], ["bracket", "x1 d2", "x2 d3"], ["udim", "u3/I[w^2+2]"]):
        _, text, _ = invoke(*argv)
        code, js, _ = invoke(*argv, "--json")
        assert code == 0
        assert json.loads(js)["text"] == text.strip()


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rank": 4}))
    assert invoke("ord", "d1", "--config", str(cfg))[1].strip() == "w^3+w^2+w+1"
    cfg.write_text(json.dumps({"bogus": 1}))
    assert invoke("ord", "d1", "--config", str(cfg))[0] == 1


def test_output_is_deterministic():
    assert invoke("series", "derived", "4") == invoke("series", "derived", "4")


GOLDENS = sorted(GOLDEN.glob("*.txt"))


def test_every_verb_has_a_golden():
    covered = {json.loads(p.read_text().splitlines()[0][len("args: "):])[0] for p in GOLDENS}
    assert covered == set(VERBS)


@pytest.mark.parametrize("path", GOLDENS, ids=[p.stem for p in GOLDENS])
def test_golden(path):
    head, _, body = path.read_text().partition("\n---\n")
    lines = head.splitlines()
    argv = json.loads(lines[0][len("args: "):])
    code = int(lines[1][len("exit: "):])
    got_code, out, err = invoke(*argv)
    assert got_code == code
    assert out + err == body
