"""Deciding when two factor algebras u_n / I_lam are isomorphic.

Every factor reduces to a normal form.  Strip from lam the longest run
w^(n-1) + ... + w^s that it starts with.  What is left, taken modulo
w^(s-2), determines the factor up to isomorphism: it is u_s / I_nu.  The
two smallest cases are the one-dimensional algebra and the zero algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ordinal as o
from .errors import DomainError
from .ideals import IdealHandle
from .lie import Element
from .polynomial import md_get, md_sub, unit


@dataclass(frozen=True)
class FiniteDim:
    d: int

    def __str__(self) -> str:
        return f"FiniteDim(d={self.d})"


@dataclass(frozen=True)
class Residue:
    s: int
    nu: o.Ordinal

    def __post_init__(self) -> None:
        if self.s < 2 or not self.nu < o.omega_pow(self.s - 2):
            raise DomainError(f"Residue needs s >= 2 and nu < w^{self.s - 2}")

    def __str__(self) -> str:
        return f"Residue(s={self.s}, nu={self.nu})"


FactorSignature = FiniteDim | Residue


def prefix_split(h: IdealHandle) -> tuple[int, o.Ordinal]:
    """Smallest s with w^(n-1) + ... + w^s <= lam, and the remainder after it."""
    n, lam = h.rank, h.lam
    for s in range(0, n + 1):
        pre = o.stack_prefix(n, s)
        if pre <= lam:
            return s, o.sub_left(pre, lam)
    raise AssertionError("the empty prefix always fits")


def canonical_signature(h: IdealHandle) -> FactorSignature:
    s, rest = prefix_split(h)
    if s >= 2:
        return Residue(s, o.divmod_omega_pow(rest, s - 2)[1])
    # s = 1 leaves a one-dimensional factor, s = 0 the zero algebra
    return FiniteDim(s)


def iso_factors(h1: IdealHandle, h2: IdealHandle) -> bool:
    return canonical_signature(h1) == canonical_signature(h2)


def udim_factor(h: IdealHandle) -> o.Ordinal:
    """Order type of the chain of nonzero ideals of u_n / I_lam."""
    sig = canonical_signature(h)
    if isinstance(sig, Residue):
        return o.stack(sig.s)
    return o.Ordinal.of(sig.d)


def f_map(u: Element) -> Element:
    """The epimorphism f_n: identity below slot n, [d_(n-1), .] on P_(n-1) d_n."""
    n = u.rank
    out: dict = {}
    for b, c in u:
        if b.slot < n:
            out[b] = out.get(b, 0) + c
            continue
        e = md_get(b.alpha, n - 1)
        if e:
            nb = type(b)(md_sub(b.alpha, unit(n - 1)), n)
            out[nb] = out.get(nb, 0) + e * c
    return Element(out, n)


def f_power(u: Element, i: int) -> Element:
    for _ in range(i):
        u = f_map(u)
    return u


def f_power_kernel(n: int, i: int) -> IdealHandle:
    """ker f_n^i = sum_{j<i} P_(n-2) x_(n-1)^j d_n = I_(i w^(n-2))."""
    if n < 2 or i < 1:
        raise DomainError("needs n >= 2 and i >= 1")
    return IdealHandle(n, o.omega_pow(n - 2, i))
