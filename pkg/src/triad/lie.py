"""The Lie algebras u_n of triangular polynomial derivations.

u_n has the canonical basis X(a, i) = x^a d_i with a supported on the
variables x_1 .. x_{i-1}.  Elements are sparse rational combinations of
basis vectors together with the rank n of the ambient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from . import ordinal as o
from .errors import DomainError, RankMismatch, TheoryViolation
from .linalg import Echelon
from .polynomial import (Multidegree, Polynomial, join_terms, md_add, md_get,
                         md_sub, mdeg, mono_str, multidegrees, revlex_key, unit)
from .sparse import Sparse

DEFAULT_CAP = 10_000


class BasisVector(NamedTuple):
    alpha: Multidegree
    slot: int

    @classmethod
    def make(cls, alpha: Iterable[int], slot: int) -> "BasisVector":
        a = mdeg(alpha)
        if slot < 1:
            raise DomainError(f"slot must be >= 1, got {slot}")
        if len(a) > slot - 1:
            raise DomainError(f"x^{a} d{slot}: exponent on x{len(a)} needs index < {slot}")
        return cls(a, slot)

    def degree(self) -> int:
        return sum(self.alpha)

    def __str__(self) -> str:
        m = mono_str(self.alpha)
        return f"{m} d{self.slot}" if m else f"d{self.slot}"


def basis_key(b: BasisVector) -> tuple:
    """Ascending sort key for the well-order on basis vectors.

    Lower slots are larger; inside a slot the exponent vectors compare
    reverse-lexicographically, highest variable first.
    """
    return (-b.slot, revlex_key(b.alpha, b.slot - 1))


def basis_compare(a: BasisVector, b: BasisVector) -> int:
    ka, kb = basis_key(a), basis_key(b)
    return (ka > kb) - (ka < kb)


def ord_basis(b: BasisVector, n: int) -> o.Ordinal:
    """Position of b in the well-ordered basis of u_n, counted from 1."""
    if not 1 <= b.slot <= n:
        raise DomainError(f"slot {b.slot} is not valid in u_{n}")
    coeffs = {k - 1: md_get(b.alpha, k) for k in range(1, b.slot)}
    coeffs[0] = coeffs.get(0, 0) + 1
    return o.add(o.stack_prefix(n, b.slot), o.Ordinal.from_coeffs(coeffs))


def canonical_basis(n: int, max_degree: int) -> list[BasisVector]:
    """Basis vectors of u_n with total degree <= max_degree, ascending."""
    out = [BasisVector(a, i) for i in range(1, n + 1) for a in multidegrees(i - 1, max_degree)]
    return sorted(out, key=basis_key)


class Element(Sparse):
    """A finite combination of basis vectors inside u_rank."""

    __slots__ = ("rank",)

    def __init__(self, terms=None, rank: int = 2):
        super().__init__(terms)
        if rank < 2:
            raise DomainError("u_n needs rank n >= 2")
        for b in self._terms:
            if not isinstance(b, BasisVector):
                raise TypeError(f"Element keys must be BasisVector, got {b!r}")
            if b.slot > rank or len(b.alpha) > b.slot - 1:
                raise DomainError(f"{b} does not lie in u_{rank}")
        self.rank = rank

    def _like(self, terms) -> "Element":
        return Element(terms, self.rank)

    def _combine(self, other, sign):
        _same_rank(self, other)
        return super()._combine(other, sign)

    @classmethod
    def basis(cls, alpha: Iterable[int], slot: int, rank: int | None = None, c=1) -> "Element":
        b = BasisVector.make(alpha, slot)
        return cls({b: c}, rank if rank is not None else max(2, slot))

    @classmethod
    def zero(cls, rank: int) -> "Element":
        return cls({}, rank)

    def with_rank(self, rank: int) -> "Element":
        """View the element inside u_rank; lowering below its top slot is an error."""
        return Element(self._terms, rank)

    def max_slot(self) -> int:
        return max((b.slot for b in self._terms), default=0)

    def min_slot(self) -> int:
        return min((b.slot for b in self._terms), default=0)

    def degree(self) -> int:
        return max((b.degree() for b in self._terms), default=-1)

    def sorted_terms(self) -> list[tuple[BasisVector, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: basis_key(t[0]), reverse=True)

    def __str__(self) -> str:
        return join_terms([(c, str(b)) for b, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"Element({self}; u{self.rank})"


def _same_rank(u: Element, v: Element) -> None:
    if u.rank != v.rank:
        raise RankMismatch(f"rank mismatch: u{u.rank} vs u{v.rank}")


def bracket_basis(a: BasisVector, b: BasisVector) -> tuple[int, BasisVector | None]:
    """[X(a,i), X(b,j)] as (scalar, basis vector)."""
    if a.slot == b.slot:
        return 0, None
    if a.slot < b.slot:
        e = md_get(b.alpha, a.slot)
        if not e:
            return 0, None
        return e, BasisVector(md_sub(md_add(a.alpha, b.alpha), unit(a.slot)), b.slot)
    e, v = bracket_basis(b, a)
    return -e, v


def bracket(u: Element, v: Element) -> Element:
    _same_rank(u, v)
    out: dict = {}
    for a, c in u:
        for b, d in v:
            e, w = bracket_basis(a, b)
            if e:
                out[w] = out.get(w, 0) + e * c * d
    return Element(out, u.rank)


def leading_term(u: Element) -> tuple[BasisVector, Fraction]:
    if not u:
        raise DomainError("the zero element has no leading term")
    b = max(u.terms, key=basis_key)
    return b, u.coeff(b)


def ord_element(u: Element) -> o.Ordinal:
    return ord_basis(leading_term(u)[0], u.rank)


def act(u: Element, p: Polynomial) -> Polynomial:
    """The derivation u applied to the polynomial p."""
    if p.nvars() > u.rank:
        raise DomainError(f"polynomial uses x{p.nvars()} beyond rank {u.rank}")
    out = Polynomial()
    for b, c in u:
        out = out + p.diff(b.slot).mul_mono(b.alpha, c)
    return out


def ad_nilpotency_test(a: Element) -> bool:
    """True iff a lies in P_{n-1} d_n, where ad(a)^2 = 0."""
    return all(b.slot == a.rank for b in a.terms)


@dataclass(frozen=True)
class AdPower:
    degree: int
    trace: tuple[Element, ...]


def ad_power_until_zero(a: Element, v: Element, cap: int = DEFAULT_CAP) -> AdPower:
    """Smallest s with ad(a)^s(v) = 0, with the nonzero iterates on the way."""
    _same_rank(a, v)
    trace = []
    w = v
    while w:
        if len(trace) >= cap:
            raise TheoryViolation(f"ad({a}) not nilpotent on {v} within {cap} steps")
        trace.append(w)
        w = bracket(a, w)
    return AdPower(len(trace), tuple(trace))


def exp_ad(a: Element, v: Element, cap: int = DEFAULT_CAP) -> Element:
    """e^{ad a}(v), a finite sum because ad a is locally nilpotent."""
    out = Element.zero(v.rank)
    for k, w in enumerate(ad_power_until_zero(a, v, cap).trace):
        out = out + w.scale(Fraction(1, factorial(k)))
    return out


def embed_ut(n: int, i: int, j: int) -> Element:
    """The matrix unit E_ij as x_i d_j; needs i < j so the image stays triangular."""
    if not (1 <= i < j <= n):
        raise DomainError(f"E_{i}{j} has no triangular image in u_{n}")
    return Element.basis(unit(i), j, n)


def embed_heisenberg(n: int, kind: str, i: int | None = None) -> Element:
    """Image of the Heisenberg generator X_i, Y_i or Z inside u_n."""
    if kind == "Z":
        return Element.basis((), n, n)
    if i is None or not 1 <= i <= n - 1:
        raise DomainError(f"Heisenberg index {i} out of range 1..{n - 1}")
    if kind == "X":
        return Element.basis(unit(i), n, n)
    if kind == "Y":
        return Element.basis((), i, n)
    raise DomainError(f"unknown Heisenberg generator {kind!r}")


@dataclass(frozen=True)
class FiniteSubalgebra:
    basis: tuple[Element, ...]
    dimension: int
    nilpotency_class: int
    structure_constants: dict = field(compare=False)

    def coordinates(self, v: Element) -> tuple[Fraction, ...]:
        """Coordinates of v in ``basis``; relies on the reduced echelon shape."""
        e = Echelon(key=basis_key)
        for b in self.basis:
            e.add(b.terms)
        if not e.contains(v.terms):
            raise DomainError(f"{v} is outside the subalgebra")
        return tuple(v.coeff(leading_term(b)[0]) for b in self.basis)


def _span_of(vectors: Sequence[Element], rank: int) -> Echelon:
    e = Echelon(key=basis_key)
    for v in vectors:
        e.add(v.terms)
    return e


def subalgebra_closure(generators: Sequence[Element], cap: int = DEFAULT_CAP) -> FiniteSubalgebra:
    """Lie subalgebra generated by the given elements, by bracket closure."""
    if not generators:
        raise DomainError("need at least one generator")
    rank = generators[0].rank
    for g in generators:
        _same_rank(generators[0], g)
    span = Echelon(key=basis_key)
    members: list[Element] = []
    for g in sorted(generators, key=lambda g: basis_key(leading_term(g)[0]) if g else (), reverse=True):
        if g and span.add(g.terms):
            members.append(g)
    done = 0
    steps = 0
    while done < len(members):
        fresh = []
        for j in range(done, len(members)):
            for i in range(j):
                w = bracket(members[i], members[j])
                if w:
                    fresh.append(w)
        done = len(members)
        fresh.sort(key=lambda w: basis_key(leading_term(w)[0]), reverse=True)
        for w in fresh:
            steps += 1
            if steps > cap or len(members) > cap:
                raise TheoryViolation(f"bracket closure did not terminate within {cap} steps")
            if span.add(w.terms):
                members.append(w)
    basis = tuple(Element(span.rows[p], rank) for p in span.pivots())
    struct = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            w = bracket(a, b)
            struct[i, j] = tuple(w.coeff(leading_term(c)[0]) for c in basis)
    return FiniteSubalgebra(basis, len(basis), _nilpotency_class(basis, cap), struct)


def _nilpotency_class(basis: Sequence[Element], cap: int) -> int:
    """Length of the lower central series L = C1 > C2 > ... > 0."""
    if not basis:
        return 0
    rank = basis[0].rank
    term = list(basis)
    c = 0
    while term:
        c += 1
        if c > cap:
            raise TheoryViolation("lower central series did not reach zero")
        nxt = _span_of([bracket(a, t) for a in basis for t in term], rank)
        term = [Element(r, rank) for r in nxt.basis()]
    return c


def lie_closed(basis: Sequence[Element]) -> bool:
    if not basis:
        return True
    span = _span_of(basis, basis[0].rank)
    return all(span.contains(bracket(a, b).terms) for a in basis for b in basis)

