"""Parsers for the text forms used on the command line.

Terms share one lexer:  [rational] factor* with factors x<i>[^e] and
d<i>[^e], separated by spaces or '*', and terms joined by '+' or '-'.
Elements of u_n need exactly one d factor per term, polynomials none,
Weyl elements any number.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import ordinal as o
from .errors import DomainError, GrammarError
from .ideals import IdealHandle
from .infinity import InfIdeal, Mixed, Whole, Zero, tail
from .lie import BasisVector, Element
from .poly_module import SubmoduleHandle
from .polynomial import Polynomial, mdeg
from .weyl import WeylElement

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[xd])(?P<idx>\d+)(?:\^(?P<exp>\d+))?|(?P<op>[+\-*]))")

Factor = tuple[str, int, int]


def _lex_terms(text: str) -> list[tuple[Fraction, list[Factor], int]]:
    """Split text into (coefficient, factors, start offset) triples."""
    if not text.strip():
        raise GrammarError("empty expression", text, 0)
    terms = []
    pos = 0
    sign = 1
    coeff: Fraction | None = None
    factors: list[Factor] = []
    start = 0
    expect_term = True
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise GrammarError(f"unexpected character {text[pos]!r}", text, pos)
        tok_pos = pos
        if m.group("op") in ("+", "-"):
            if not expect_term:
                terms.append((sign * (coeff if coeff is not None else 1), factors, start))
                coeff, factors = None, []
                sign = 1
            elif terms or sign != 1 or coeff is not None:
                raise GrammarError("missing term between signs", text, tok_pos)
            sign = -1 if m.group("op") == "-" else 1
            expect_term = True
            start = tok_pos
        elif m.group("op") == "*":
            if expect_term:
                raise GrammarError("'*' needs a left operand", text, tok_pos)
        elif m.group("num") is not None:
            if factors or coeff is not None:
                raise GrammarError("a coefficient must open its term", text, tok_pos)
            num, _, den = m.group("num").partition("/")
            if den and int(den) == 0:
                raise GrammarError("zero denominator", text, tok_pos)
            coeff = Fraction(int(num), int(den) if den else 1)
            expect_term = False
        else:
            idx = int(m.group("idx"))
            if idx == 0:
                raise GrammarError("variable indices start at 1", text, tok_pos)
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            factors.append((m.group("var"), idx, exp))
            expect_term = False
        pos = m.end()
    if expect_term:
        raise GrammarError("expression ends without a term", text, len(text))
    terms.append((sign * (coeff if coeff is not None else 1), factors, start))
    return terms


def _split(factors: list[Factor]) -> tuple[dict[int, int], dict[int, int]]:
    xs: dict[int, int] = {}
    ds: dict[int, int] = {}
    for v, i, e in factors:
        bucket = xs if v == "x" else ds
        bucket[i] = bucket.get(i, 0) + e
    return xs, ds


def _md(exps: dict[int, int]):
    if not exps:
        return ()
    return mdeg(exps.get(i, 0) for i in range(1, max(exps) + 1))


def _zero_literal(text: str) -> bool:
    return text.strip() == "0"


def parse_element(text: str, rank: int | None = None) -> Element:
    if _zero_literal(text):
        return Element.zero(rank or 2)
    terms: dict = {}
    top = 0
    for c, factors, start in _lex_terms(text):
        xs, ds = _split(factors)
        if len(ds) != 1 or next(iter(ds.values())) != 1:
            raise GrammarError("each term needs exactly one d factor", text, start)
        slot = next(iter(ds))
        if xs and max(xs) >= slot:
            raise GrammarError(f"factor index {max(xs)} >= slot {slot}", text, start)
        b = BasisVector(_md(xs), slot)
        terms[b] = terms.get(b, 0) + c
        top = max(top, slot)
    need = max(2, top)
    if rank is not None and rank < need:
        raise DomainError(f"rank {rank} is below the top slot {need}")
    return Element(terms, rank or need)


def parse_polynomial(text: str) -> Polynomial:
    if _zero_literal(text):
        return Polynomial()
    out: dict = {}
    for c, factors, start in _lex_terms(text):
        xs, ds = _split(factors)
        if ds:
            raise GrammarError("polynomials take no d factors", text, start)
        a = _md(xs)
        out[a] = out.get(a, 0) + c
    return Polynomial(out)


def parse_weyl(text: str, rank: int | None = None) -> WeylElement:
    if _zero_literal(text):
        return WeylElement({}, rank or 1)
    out: dict = {}
    top = 1
    for c, factors, _ in _lex_terms(text):
        xs, ds = _split(factors)
        # factors are read in normal order: every x to the left of every d
        key = (_md(xs), _md(ds))
        out[key] = out.get(key, 0) + c
        top = max([top, *xs, *ds])
    if rank is not None and rank < top:
        raise DomainError(f"rank {rank} is below the top index {top}")
    return WeylElement(out, rank or top)


_ORD_TERM = re.compile(r"w\^(\d+)\*(\d+)|w\*(\d+)|w\^(\d+)|w|(\d+)")


def parse_ordinal(text: str) -> o.Ordinal:
    s = "".join(text.split())
    if s == "w^w":
        return o.TOP
    if not s:
        raise GrammarError("empty ordinal", text, 0)
    total = o.ZERO
    pos = 0
    for piece in s.split("+"):
        m = _ORD_TERM.fullmatch(piece)
        if not m:
            raise GrammarError(f"bad ordinal term {piece!r}", text, pos)
        e_c, c_1, e_1, nat = m.group(1, 2), m.group(3), m.group(4), m.group(5)
        if e_c[0] is not None:
            term = o.omega_pow(int(e_c[0]), int(e_c[1]))
        elif c_1 is not None:
            term = o.omega_pow(1, int(c_1))
        elif e_1 is not None:
            term = o.omega_pow(int(e_1))
        elif nat is not None:
            term = o.Ordinal.of(int(nat))
        else:
            term = o.OMEGA
        total = o.add(total, term)
        pos += len(piece) + 1
    return total


_HANDLE = re.compile(r"I\[(?P<lam>[^\]]*)\]@u(?P<n>\d+)")
_FACTOR = re.compile(r"u(?P<n>\d+)(?:/I\[(?P<lam>[^\]]*)\])?")
_SUB = re.compile(r"P\[(?P<lam>[^\]]*)\]@P(?P<n>\d+)")
_TAIL = re.compile(r"U\[oo,(?P<n>\d+)\]")
_MIXED = re.compile(r"I\[(?P<lam>[^\]]*)\]@(?P<n>\d+)\+U\[oo,(?P<m>\d+)\]")


def _strip(text: str) -> str:
    return "".join(text.split())


def parse_handle(text: str) -> IdealHandle:
    """Either I[lam]@u<n> or the factor form u<n>/I[lam]."""
    s = _strip(text)
    m = _HANDLE.fullmatch(s) or _FACTOR.fullmatch(s)
    if not m:
        raise GrammarError(f"not an ideal handle: {text!r}", text, 0)
    lam = parse_ordinal(m.group("lam")) if m.group("lam") is not None else o.ZERO
    return IdealHandle(int(m.group("n")), lam)


def parse_submodule(text: str) -> SubmoduleHandle:
    m = _SUB.fullmatch(_strip(text))
    if not m:
        raise GrammarError(f"not a submodule handle: {text!r}", text, 0)
    return SubmoduleHandle(int(m.group("n")), parse_ordinal(m.group("lam")))


def parse_inf_ideal(text: str) -> InfIdeal:
    s = _strip(text)
    if s == "Whole":
        return Whole()
    if s == "Zero":
        return Zero()
    m = _TAIL.fullmatch(s)
    if m:
        return tail(int(m.group("n")))
    m = _MIXED.fullmatch(s)
    if m:
        n, k = int(m.group("n")), int(m.group("m"))
        if k != n + 1:
            raise GrammarError(f"mixed ideal at level {n} must add U[oo,{n + 1}]", text, 0)
        return Mixed(n, parse_ordinal(m.group("lam")))
    raise GrammarError(f"not a u_inf ideal: {text!r}", text, 0)
