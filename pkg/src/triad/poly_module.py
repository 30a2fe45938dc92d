"""The u_n-module P_n = K[x1..xn].

Monomials are well-ordered reverse-lexicographically; the submodules are
exactly the initial segments P_lam = span{x^a : ord(x^a) <= lam} for
1 <= lam <= w^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import ordinal as o
from .errors import DomainError
from .ideals import IdealHandle, whole
from .polynomial import Multidegree, Polynomial, md_get, mdeg, mono_str, multidegrees, unit


@dataclass(frozen=True)
class SubmoduleHandle:
    rank: int
    lam: o.Ordinal

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise DomainError("P_n needs n >= 1")
        if self.lam.top or self.lam.is_zero() or self.lam > o.omega_pow(self.rank):
            raise DomainError(f"submodule index {self.lam} outside [1, w^{self.rank}]")

    def is_whole(self) -> bool:
        return self.lam == o.omega_pow(self.rank)

    def __str__(self) -> str:
        return f"P[{self.lam}]@P{self.rank}"

    def to_json(self) -> dict:
        return {"rank": self.rank, "lambda": o.to_json(self.lam)}


def ord_monomial(alpha: Multidegree, n: int) -> o.Ordinal:
    """a_n w^(n-1) + ... + a_2 w + (a_1 + 1)."""
    if len(alpha) > n:
        raise DomainError(f"x^{alpha} uses variables beyond x{n}")
    coeffs = {k - 1: md_get(alpha, k) for k in range(1, n + 1)}
    coeffs[0] += 1
    return o.Ordinal.from_coeffs(coeffs)


def ord_polynomial(p: Polynomial, n: int) -> o.Ordinal:
    """Largest monomial degree of p; zero for p = 0."""
    return max((ord_monomial(a, n) for a, _ in p), default=o.ZERO)


def readoff(lam: o.Ordinal, n: int) -> Multidegree:
    """The exponent vector whose CNF image is lam: coefficient of w^(k-1) goes to x_k."""
    if lam.top or lam.degree() >= n and not lam.is_zero():
        raise DomainError(f"{lam} is not below w^{n}")
    return mdeg(lam.coeff(k - 1) for k in range(1, n + 1))


def submodule_contains(p: Polynomial, h: SubmoduleHandle) -> bool:
    if p.nvars() > h.rank:
        raise DomainError(f"polynomial uses variables beyond x{h.rank}")
    return all(ord_monomial(a, h.rank) <= h.lam for a, _ in p)


@dataclass(frozen=True)
class Summand:
    """prefix * sum_{i < count} x_var^i * P_{sub_rank}."""

    prefix: Multidegree
    var: int
    count: int
    sub_rank: int

    def __str__(self) -> str:
        head = mono_str(self.prefix)
        band = f"x{self.var}^i" if self.count > 1 else "1"
        sub = f"P{self.sub_rank}" if self.sub_rank else "K"
        inner = f"sum_(i<{self.count}) {band} {sub}" if self.count > 1 else sub
        return f"{head} ({inner})" if head else inner

    def contains(self, a: Multidegree) -> bool:
        for k in range(self.var + 1, max(len(a), len(self.prefix)) + 1):
            if md_get(a, k) != md_get(self.prefix, k):
                return False
        return md_get(a, self.var) < self.count


class _Whole:
    def __repr__(self) -> str:
        return "WHOLE_MODULE"


WHOLE_MODULE = _Whole()


def submodule_summands(h: SubmoduleHandle) -> list[Summand] | _Whole:
    """Direct-sum decomposition of P_lam into bands of smaller polynomial rings."""
    if h.is_whole():
        return WHOLE_MODULE
    n = h.rank
    alpha = readoff(h.lam, n)
    out = []
    for k in range(n, 0, -1):
        c = md_get(alpha, k)
        if c:
            prefix = mdeg(md_get(alpha, l) if l > k else 0 for l in range(1, n + 1))
            out.append(Summand(prefix, k, c, k - 1))
    return out


def _check_proper(h: SubmoduleHandle) -> None:
    if h.is_whole():
        raise DomainError("needs lam < w^n")


def p_prime(h: SubmoduleHandle) -> tuple[tuple[Multidegree, ...], int]:
    """Monomials theta_j..theta_n spanning P'_lam / P_lam, and that quotient's dimension.

    P'_lam = {p : dp/dx_i in P_lam for all i}.
    """
    _check_proper(h)
    n = h.rank
    alpha = readoff(h.lam, n)
    j = o.structure(h.lam)[3] + 1
    thetas = [alpha]
    for i in range(j + 1, n + 1):
        thetas.append(mdeg(md_get(alpha, k) + (k == i) if k >= i else 0 for k in range(1, n + 1)))
    return tuple(thetas), n - j + 1


def p_doubleprime(h: SubmoduleHandle) -> tuple[Multidegree, SubmoduleHandle]:
    """The one monomial extending P_lam to P_{lam+1}."""
    _check_proper(h)
    return readoff(h.lam, h.rank), SubmoduleHandle(h.rank, o.successor(h.lam))


def annihilator_submodule(h: SubmoduleHandle) -> IdealHandle:
    """ann_{u_n}(P_lam); the zero ideal is returned as I_0."""
    n, lam = h.rank, h.lam
    if lam == o.ONE:
        return whole(n) if n >= 2 else _no_algebra()
    for m in range(1, n):
        if o.omega_pow(m - 1) < lam <= o.omega_pow(m):
            return IdealHandle(n, o.stack_prefix(n, m))
    return IdealHandle(n, o.ZERO)


def _no_algebra():
    raise DomainError("u_1 is not defined")


@dataclass(frozen=True)
class SeriesEndo:
    """phi' = sum_j coeffs[j] (d/dx_n)^j acting on K[x_n], extended to P_n.

    ``order`` marks a truncated power series: inputs whose x_n-degree exceeds
    it are rejected.  Without an order the coefficients are exact and every
    later coefficient is zero.
    """

    coeffs: tuple[Fraction, ...]
    rank: int
    order: int | None = None

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        if self.rank < 1:
            raise DomainError("rank must be >= 1")

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if j < len(self.coeffs) else Fraction(0)


def endo_apply(phi: SeriesEndo, p: Polynomial) -> Polynomial:
    """phi(x^b x_n^i) = x^b d_n phi'(x_n^(i+1) / (i+1)), with b free of x_n."""
    n = phi.rank
    if p.nvars() > n:
        raise DomainError(f"polynomial uses variables beyond x{n}")
    out: dict = {}
    for a, c in p:
        i = md_get(a, n)
        if phi.order is not None and i > phi.order:
            raise DomainError(f"x{n}-degree {i} exceeds truncation order {phi.order}")
        rest = list(a) + [0] * (n - len(a))
        for j in range(i + 1):
            lj = phi.coeff(j)
            if not lj:
                continue
            rest[n - 1] = i - j
            key = mdeg(rest)
            out[key] = out.get(key, 0) + c * lj * Fraction(factorial(i), factorial(i - j))
    return Polynomial(out)


@dataclass(frozen=True)
class EndoKernel:
    d: int
    rank: int

    def contains(self, a: Multidegree) -> bool:
        return md_get(a, self.rank) < self.d

    def __str__(self) -> str:
        if self.d == 0:
            return "0"
        sub = f"P{self.rank - 1}" if self.rank > 1 else "K"
        parts = [sub if i == 0 else f"{sub} {mono_str(unit(self.rank, i))}" for i in range(self.d)]
        return " + ".join(parts)


def endo_kernel(phi: SeriesEndo) -> EndoKernel:
    """ker(phi) = sum_{i<d} P_{n-1} x_n^i where d is the first nonzero coefficient index."""
    for d, c in enumerate(phi.coeffs):
        if c:
            return EndoKernel(d, phi.rank)
    raise DomainError("the zero endomorphism has no index")


def monomials_in(h: SubmoduleHandle, max_degree: int) -> list[Multidegree]:
    return [a for a in multidegrees(h.rank, max_degree) if ord_monomial(a, h.rank) <= h.lam]
