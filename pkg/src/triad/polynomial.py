"""Multidegrees and sparse polynomials over Q.

Multidegrees are plain tuples of naturals with trailing zeros stripped, so
that x^a in K[x1..xn] and in K[x1..xm] share one representation.  Variable
indices are 1-based throughout.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .sparse import Sparse

Multidegree = tuple[int, ...]


def mdeg(exps: Iterable[int] = ()) -> Multidegree:
    out = list(exps)
    if any(e < 0 for e in out):
        raise ValueError(f"negative exponent in {out}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def unit(i: int, k: int = 1) -> Multidegree:
    """The multidegree of x_i^k."""
    return mdeg([0] * (i - 1) + [k])


def md_get(a: Multidegree, i: int) -> int:
    return a[i - 1] if 0 < i <= len(a) else 0


def md_add(a: Multidegree, b: Multidegree) -> Multidegree:
    n = max(len(a), len(b))
    return mdeg(md_get(a, i) + md_get(b, i) for i in range(1, n + 1))


def md_sub(a: Multidegree, b: Multidegree) -> Multidegree:
    n = max(len(a), len(b))
    return mdeg(md_get(a, i) - md_get(b, i) for i in range(1, n + 1))


def md_total(a: Multidegree) -> int:
    return sum(a)


def top_var(a: Multidegree) -> int:
    """Largest index with a nonzero exponent, 0 for the zero multidegree."""
    return len(a)


def multidegrees(nvars: int, max_total: int) -> Iterator[Multidegree]:
    """All multidegrees in nvars variables of total degree <= max_total."""
    if nvars == 0:
        yield ()
        return
    for exps in product(range(max_total + 1), repeat=nvars):
        if sum(exps) <= max_total:
            yield mdeg(exps)


def mono_str(a: Multidegree, sym: str = "x") -> str:
    parts = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"{sym}{i}")
        elif e > 1:
            parts.append(f"{sym}{i}^{e}")
    return " ".join(parts)


def coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def join_terms(pieces: Sequence[tuple[Fraction, str]]) -> str:
    """Render signed terms ``c * body`` in the shared text grammar."""
    if not pieces:
        return "0"
    out = []
    for k, (c, body) in enumerate(pieces):
        mag = abs(c)
        if body:
            text = body if mag == 1 else f"{coeff_str(mag)} {body}"
        else:
            text = coeff_str(mag)
        if k == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(out)


def revlex_key(a: Multidegree, n: int) -> tuple[int, ...]:
    """Sort key for the reverse-lexicographic order: compare x_n first."""
    return tuple(md_get(a, i) for i in range(n, 0, -1))


class Polynomial(Sparse):
    __slots__ = ()

    @classmethod
    def monomial(cls, a: Iterable[int] = (), c=1) -> "Polynomial":
        return cls({mdeg(a): c})

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def var(cls, i: int) -> "Polynomial":
        return cls({unit(i): 1})

    def nvars(self) -> int:
        return max((len(a) for a in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=-1)

    def var_degree(self, i: int) -> int:
        return max((md_get(a, i) for a in self._terms), default=-1)

    def diff(self, i: int, times: int = 1) -> "Polynomial":
        out: dict = {}
        for a, c in self._terms.items():
            e = md_get(a, i)
            if e < times:
                continue
            fall = factorial(e) // factorial(e - times)
            b = md_sub(a, unit(i, times))
            out[b] = out.get(b, 0) + c * fall
        return Polynomial(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                k = md_add(a, b)
                out[k] = out.get(k, 0) + c * d
        return Polynomial(out)

    def mul_mono(self, a: Multidegree, c=1) -> "Polynomial":
        return Polynomial({md_add(a, b): c * v for b, v in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Multidegree, Fraction]]:
        n = self.nvars()
        return sorted(self._terms.items(), key=lambda t: revlex_key(t[0], n), reverse=True)

    def __str__(self) -> str:
        return join_terms([(c, mono_str(a)) for a, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"Polynomial({self})"
