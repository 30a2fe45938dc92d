"""Normal-ordered Weyl algebra arithmetic and the map from U(u_n).

A monomial x^a d^b is stored as the pair (a, b) of multidegrees with all x's
to the left.  Reordering uses, one variable at a time,

    d^b x^c = sum_k C(b,k) C(c,k) k! x^(c-k) d^(b-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, RankMismatch
from .linalg import Echelon
from .lie import Element
from .polynomial import (Multidegree, Polynomial, join_terms, md_add, md_get,
                         mdeg, mono_str, multidegrees, unit)
from .sparse import Sparse

WMono = tuple[Multidegree, Multidegree]


class WeylElement(Sparse):
    __slots__ = ("rank",)

    def __init__(self, terms=None, rank: int = 1):
        super().__init__(terms)
        for a, b in self._terms:
            if len(a) > rank or len(b) > rank:
                raise DomainError(f"x^{a} d^{b} uses indices beyond rank {rank}")
        self.rank = rank

    def _like(self, terms) -> "WeylElement":
        return WeylElement(terms, self.rank)

    def _combine(self, other, sign):
        _same_rank(self, other)
        return super()._combine(other, sign)

    @classmethod
    def monomial(cls, a: Iterable[int], b: Iterable[int], rank: int, c=1) -> "WeylElement":
        return cls({(mdeg(a), mdeg(b)): c}, rank)

    @classmethod
    def one(cls, rank: int) -> "WeylElement":
        return cls({((), ()): 1}, rank)

    def degree(self) -> int:
        return max((sum(a) + sum(b) for a, b in self._terms), default=-1)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return weyl_mul(self, other)

    def __str__(self) -> str:
        def key(t):
            (a, b), _ = t
            return (sum(a) + sum(b), b, a)
        items = sorted(self._terms.items(), key=key, reverse=True)
        return join_terms([(c, " ".join(s for s in (mono_str(a), mono_str(b, "d")) if s)) for (a, b), c in items])

    def __repr__(self) -> str:
        return f"WeylElement({self}; A{self.rank})"


def _same_rank(a: WeylElement, b: WeylElement) -> None:
    if a.rank != b.rank:
        raise RankMismatch(f"Weyl rank mismatch: {a.rank} vs {b.rank}")


def _reorder_one(b: int, c: int) -> list[tuple[int, int, int]]:
    """d^b x^c as (coefficient, x-exponent, d-exponent) triples."""
    return [(comb(b, k) * comb(c, k) * factorial(k), c - k, b - k) for k in range(min(b, c) + 1)]


def _mono_mul(m1: WMono, m2: WMono, n: int) -> Iterator[tuple[int, WMono]]:
    (a, b), (c, d) = m1, m2
    per_var = [_reorder_one(md_get(b, i), md_get(c, i)) for i in range(1, n + 1)]
    for choice in product(*per_var):
        coeff = 1
        xs, ds = [], []
        for k, xe, de in choice:
            coeff *= k
            xs.append(xe)
            ds.append(de)
        yield coeff, (md_add(a, mdeg(xs)), md_add(mdeg(ds), d))


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    _same_rank(a, b)
    out: dict = {}
    for m1, c1 in a:
        for m2, c2 in b:
            for k, m in _mono_mul(m1, m2, a.rank):
                out[m] = out.get(m, 0) + k * c1 * c2
    return WeylElement(out, a.rank)


def weyl_act(a: WeylElement, p: Polynomial) -> Polynomial:
    """Apply a differential operator to a polynomial."""
    if p.nvars() > a.rank:
        raise DomainError("polynomial uses variables beyond the Weyl rank")
    out = Polynomial()
    for (x, d), c in a:
        q = p
        for i, e in enumerate(d, start=1):
            if e:
                q = q.diff(i, e)
        out = out + q.mul_mono(x, c)
    return out


def chi(u: Element) -> WeylElement:
    """Read x^a d_i in u_n as the Weyl monomial x^a d_i."""
    return WeylElement({(b.alpha, unit(b.slot)): c for b, c in u}, u.rank)


def prec(alpha: Multidegree, beta: Multidegree) -> bool:
    """alpha precedes beta: alpha = 0, or both nonzero with top index of alpha below that of beta."""
    alpha, beta = mdeg(alpha), mdeg(beta)
    if not alpha:
        return True
    return bool(beta) and len(alpha) < len(beta)


def in_Wn_span(a: WeylElement) -> bool:
    """Membership in the image of U(u_n), tested term by term."""
    return all(prec(x, d) for (x, d) in a.terms)


def kernel_generator_check(alpha: Iterable[int], i: int, beta: Iterable[int], j: int,
                           rank: int | None = None) -> bool:
    """x^a d_i * x^b d_j equals d_i * x^(a+b) d_j in the Weyl algebra."""
    alpha, beta = mdeg(alpha), mdeg(beta)
    if i > j:
        raise DomainError("kernel generators need i <= j")
    if len(alpha) > i - 1 or len(beta) > j - 1:
        raise DomainError("exponents must sit below the derivation index")
    n = rank or j
    lhs = weyl_mul(WeylElement.monomial(alpha, unit(i), n), WeylElement.monomial(beta, unit(j), n))
    rhs = weyl_mul(WeylElement.monomial((), unit(i), n), WeylElement.monomial(md_add(alpha, beta), unit(j), n))
    return lhs == rhs


@dataclass(frozen=True)
class WPrime:
    """A basis element of the second monomial basis of the image.

    With ``t == 0`` it is d^beta; otherwise d^beta x^nu d_t^power with beta,
    nu supported below t, nu nonzero and power >= 1.
    """

    beta: Multidegree
    nu: Multidegree = ()
    t: int = 0
    power: int = 0

    def degree(self) -> int:
        return sum(self.beta) + sum(self.nu) + self.power

    def element(self, rank: int) -> WeylElement:
        d = WeylElement.monomial((), self.beta, rank)
        if not self.t:
            return d
        x = WeylElement.monomial(self.nu, (), rank)
        dt = WeylElement.monomial((), unit(self.t, self.power), rank)
        return weyl_mul(weyl_mul(d, x), dt)

    def __str__(self) -> str:
        parts = [mono_str(self.beta, "d")]
        if self.t:
            parts += [mono_str(self.nu), mono_str(unit(self.t, self.power), "d")]
        return " * ".join(p for p in parts if p) or "1"


def wprime_basis(rank: int, degree_bound: int) -> list[WPrime]:
    out = [WPrime(a) for a in multidegrees(rank, degree_bound)]
    for t in range(2, rank + 1):
        for nu in multidegrees(t - 1, degree_bound):
            if not nu:
                continue
            for beta in multidegrees(t - 1, degree_bound - sum(nu) - 1):
                for p in range(1, degree_bound - sum(nu) - sum(beta) + 1):
                    out.append(WPrime(beta, nu, t, p))
    return out


class _NotInSpan:
    def __repr__(self) -> str:
        return "NotInSpan"

    def __bool__(self) -> bool:
        return False


NOT_IN_SPAN = _NotInSpan()


def express_in_Wprime(a: WeylElement, degree_bound: int = 8) -> dict[WPrime, Fraction] | _NotInSpan:
    """Coordinates of a in the second basis, solved inside a degree window."""
    if a.degree() > degree_bound:
        raise DomainError(f"degree {a.degree()} exceeds window {degree_bound}")
    e = Echelon(track=True)
    for w in wprime_basis(a.rank, degree_bound):
        e.add(w.element(a.rank).terms, label=w)
    sol = e.solve(a.terms)
    return NOT_IN_SPAN if sol is None else sol


def products_span(gens: Sequence[WeylElement], degree_bound: int) -> Echelon:
    """Span of all products of generators (and 1) of total degree <= bound."""
    rank = gens[0].rank
    e = Echelon()
    layer = [WeylElement.one(rank)]
    e.add(layer[0].terms)
    while layer:
        nxt = []
        for p in layer:
            for g in gens:
                q = weyl_mul(p, g)
                if q and q.degree() <= degree_bound and e.add(q.terms):
                    nxt.append(q)
        layer = nxt
    return e
