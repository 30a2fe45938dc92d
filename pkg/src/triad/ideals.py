"""The chain of ideals I_lam of u_n, indexed by ordinals 0 <= lam <= stack(n).

I_lam is spanned by the basis vectors whose position in the well-order is at
most lam.  Every ideal of u_n has this form, so an ideal is just a handle
(rank, lam) and all questions reduce to ordinal comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import ordinal as o
from .errors import DomainError, RankMismatch
from .lie import BasisVector, Element, canonical_basis, ord_basis, ord_element
from .polynomial import unit


@dataclass(frozen=True, order=False)
class IdealHandle:
    rank: int
    lam: o.Ordinal

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise DomainError("u_n needs rank n >= 2")
        if self.lam.top or self.lam > o.stack(self.rank):
            raise DomainError(f"{self.lam} exceeds stack({self.rank}) = {o.stack(self.rank)}")

    @classmethod
    def of(cls, rank: int, lam: o.Ordinal | int) -> "IdealHandle":
        return cls(rank, lam if isinstance(lam, o.Ordinal) else o.Ordinal.of(lam))

    def is_finite_dimensional(self) -> bool:
        return self.lam.is_finite()

    def dimension(self) -> int | None:
        return int(self.lam) if self.lam.is_finite() else None

    def __str__(self) -> str:
        return f"I[{self.lam}]@u{self.rank}"

    def to_json(self) -> dict:
        return {"rank": self.rank, "lambda": o.to_json(self.lam)}


def whole(n: int) -> IdealHandle:
    return IdealHandle(n, o.stack(n))


def zero_ideal(n: int) -> IdealHandle:
    return IdealHandle(n, o.ZERO)


def derived_term(n: int, i: int) -> IdealHandle:
    """u_{n,i}: the span of P_{j-1} d_j for j >= i (zero once i > n)."""
    if i < 1:
        raise DomainError("derived index starts at 1")
    return IdealHandle(n, o.stack_prefix(n, min(i, n + 1) - 1))


def membership(u: Element, h: IdealHandle) -> bool:
    if u.rank != h.rank:
        raise RankMismatch(f"element in u{u.rank}, ideal in u{h.rank}")
    return not u or ord_element(u) <= h.lam


def generated_ideal(gens: Sequence[Element]) -> IdealHandle:
    """The ideal generated by gens is I_lam with lam the largest ordinal degree."""
    if not gens:
        raise DomainError("need at least one generator")
    rank = gens[0].rank
    lam = o.ZERO
    for g in gens:
        if g.rank != rank:
            raise RankMismatch("generators of different rank")
        if g:
            lam = max(lam, ord_element(g))
    return IdealHandle(rank, lam)


@dataclass(frozen=True)
class BasisPrefix:
    vectors: tuple[BasisVector, ...]
    finite: bool
    dimension: int | None


def basis_prefix(h: IdealHandle, limit: int) -> BasisPrefix:
    """The first basis vectors of I_lam in ascending order.

    The well-order starts with d_n < x1 d_n < x1^2 d_n < ..., an initial
    segment of type w, so any finite prefix consists of x1^j d_n.
    """
    if limit < 0:
        raise DomainError("limit must be non-negative")
    n = h.rank
    dim = h.dimension()
    count = limit if dim is None else min(limit, dim)
    vecs = tuple(BasisVector(unit(1, j), n) for j in range(count))
    return BasisPrefix(vecs, dim is not None, dim)


def basis_in_window(h: IdealHandle, max_degree: int) -> list[BasisVector]:
    """All basis vectors of I_lam with total degree <= max_degree, ascending."""
    return [b for b in canonical_basis(h.rank, max_degree) if ord_basis(b, h.rank) <= h.lam]


def centralizer(h: IdealHandle) -> IdealHandle:
    """Cen(I_lam), read off the band containing lam."""
    n, lam = h.rank, h.lam
    if lam.is_zero():
        raise DomainError("the centralizer of the zero ideal is not covered")
    if lam == o.stack(n):
        return IdealHandle(n, o.ONE)
    if lam == o.ONE:
        return whole(n)
    for m in range(1, n):
        if o.omega_pow(m - 1) < lam <= o.omega_pow(m):
            return IdealHandle(n, o.stack_prefix(n, m))
    for i in range(1, n - 1):
        if o.stack_prefix(n, i + 1) < lam <= o.stack_prefix(n, i):
            return IdealHandle(n, o.omega_pow(i))
    raise AssertionError(f"no centralizer band for {lam} in u{n}")


def centralizer_set(n: int) -> list[IdealHandle]:
    """All ideals of u_n that arise as centralizers of nonzero ideals, ascending."""
    lams = {o.ONE, o.stack(n)}
    lams.update(o.omega_pow(i) for i in range(1, n - 1))
    lams.update(o.stack_prefix(n, m) for m in range(1, n))
    return [IdealHandle(n, lam) for lam in sorted(lams)]


def derived_series(n: int) -> list[IdealHandle]:
    """u_n = u_{n,1} > u_{n,2} > ... > u_{n,n} > 0."""
    return [derived_term(n, i) for i in range(1, n + 2)]


@dataclass(frozen=True)
class LowerCentralSeries:
    first: IdealHandle
    stable: IdealHandle
    stabilizes_at: int

    def term(self, i: int) -> IdealHandle:
        return self.first if i == 0 else self.stable


def lower_central_series(n: int) -> LowerCentralSeries:
    """G^(0) = G and G^(i) = [G, G^(i-1)].

    Some authors call this the upper central series; either way it stops
    moving after one step at u_{n,2}.
    """
    return LowerCentralSeries(whole(n), derived_term(n, 2), 1)


def central_series_term(n: int, lam: o.Ordinal) -> IdealHandle:
    """Z^(lam)(u_n): Z^(1) is the centre, successors take the preimage of the
    centre of the quotient, limits take unions.  It equals I_lam."""
    if lam.top or not (o.ONE <= lam <= o.stack(n)):
        raise DomainError(f"central series index {lam} outside [1, {o.stack(n)}]")
    return IdealHandle(n, lam)


def finite_dimensional_ideals(n: int, up_to: int) -> list[IdealHandle]:
    """I_s = span{x1^i d_n : i < s} for s = 0..up_to."""
    return [IdealHandle(n, o.Ordinal.of(s)) for s in range(up_to + 1)]
