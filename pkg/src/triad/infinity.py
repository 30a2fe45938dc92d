"""The infinite-rank algebra u_inf, its completion, and their ideals.

u_inf is the union of the u_n; U[oo,n] denotes the ideal spanned by all
P_(j-1) d_j with j >= n.  Its nonzero ideals form one chain

    Whole > U[oo,2] > I_lam(2) + U[oo,3] (lam descending) > U[oo,3] > ...

and each of them contains some U[oo,m+1], so it is the preimage of an ideal
of u_m under truncation.  Elements of the completion are modelled by their
first few levels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial, inf
from typing import Mapping

from . import ordinal as o
from .errors import DomainError
from .ideals import IdealHandle, membership
from .iso import iso_factors
from .lie import BasisVector, Element, ord_element
from .polynomial import Polynomial, unit


# --------------------------------------------------------------------------
# ideals of u_inf


@dataclass(frozen=True)
class Whole:
    def __str__(self) -> str:
        return "Whole"


@dataclass(frozen=True)
class Tail:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError("U[oo,1] is the whole algebra; use Whole")

    def __str__(self) -> str:
        return f"U[oo,{self.n}]"


@dataclass(frozen=True)
class Mixed:
    n: int
    lam: o.Ordinal

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError("mixed ideals start at level 2")
        if self.lam.top or not (o.ONE <= self.lam < o.omega_pow(self.n - 1)):
            raise DomainError(f"mixed ideal needs 1 <= lam < w^{self.n - 1}, got {self.lam}")

    def __str__(self) -> str:
        return f"I[{self.lam}]@{self.n}+U[oo,{self.n + 1}]"


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "Zero"


InfIdeal = Whole | Tail | Mixed | Zero


def tail(n: int) -> InfIdeal:
    return Whole() if n <= 1 else Tail(n)


def _size_key(a: InfIdeal) -> tuple:
    if isinstance(a, Whole):
        return (-1,)
    if isinstance(a, Tail):
        return (-a.n, 1)
    if isinstance(a, Mixed):
        return (-a.n, 0, a.lam)
    return (-inf,)


def inf_compare(a: InfIdeal, b: InfIdeal) -> int:
    """Inclusion order on the chain: -1 if a is strictly smaller."""
    ka, kb = _size_key(a), _size_key(b)
    return (ka > kb) - (ka < kb)


def level(a: InfIdeal) -> int | None:
    """Least m >= 2 with U[oo,m+1] inside a; None for Zero."""
    if isinstance(a, Whole):
        return 2
    if isinstance(a, Tail):
        return max(2, a.n - 1)
    if isinstance(a, Mixed):
        return a.n
    return None


def to_handle(a: InfIdeal, m: int) -> IdealHandle:
    """The image of a in u_m = u_inf / U[oo,m+1]; needs m >= level(a)."""
    lv = level(a)
    if lv is None or m < lv:
        raise DomainError(f"{a} is not a preimage from u_{m}")
    if isinstance(a, Whole):
        return IdealHandle(m, o.stack(m))
    if isinstance(a, Tail):
        return IdealHandle(m, o.stack_prefix(m, a.n - 1))
    return IdealHandle(m, o.add(o.stack_prefix(m, a.n), a.lam))


def from_handle(h: IdealHandle) -> InfIdeal:
    """The preimage of I_lam of u_m under truncation, in normal form."""
    m, lam = h.rank, h.lam
    while True:
        if lam.is_zero():
            return Tail(m + 1)
        if lam == o.stack(m):
            return Whole()
        top = o.omega_pow(m - 1)
        if lam < top:
            return Mixed(m, lam)
        if lam == top:
            return Tail(m)
        # lam = w^(m-1) + rest: every slot-m vector is inside, drop to u_(m-1)
        lam = o.sub_left(top, lam)
        m -= 1


def classify_generated(u: Element) -> InfIdeal:
    """The ideal of u_inf generated by a finite element."""
    if not u:
        return Zero()
    m = max(2, u.max_slot())
    v = u.with_rank(m)
    return from_handle(IdealHandle(m, ord_element(v)))


def inf_contains(a: InfIdeal, u: Element) -> bool:
    if not u:
        return True
    if isinstance(a, Zero):
        return False
    m = max(level(a), u.max_slot(), 2)
    return membership(u.with_rank(m), to_handle(a, m))


def iso_factors_inf(a: InfIdeal, b: InfIdeal) -> bool:
    """u_inf/a and u_inf/b are isomorphic iff both ideals are zero, or both
    are nonzero and the factors of u_m agree at a common level m."""
    za, zb = isinstance(a, Zero), isinstance(b, Zero)
    if za or zb:
        return za and zb
    m = max(level(a), level(b))
    return iso_factors(to_handle(a, m), to_handle(b, m))


def udim_inf() -> o.Ordinal:
    return o.TOP


def classify_closed_open(a: InfIdeal) -> tuple[bool, bool]:
    """(open, closed) in the completion; only the zero ideal fails to be open."""
    if isinstance(a, Zero):
        return False, True
    return True, True


# --------------------------------------------------------------------------
# truncated elements of the completion


class TailKind(Enum):
    ZERO = "zero"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PrefixElement:
    """sum_i a_i d_i known exactly for levels i <= known_to.

    With a zero tail every later level vanishes, so the element lies in
    u_inf itself; an unknown tail stands for an arbitrary continuation.
    """

    components: Mapping[int, Polynomial] = field(default_factory=dict)
    known_to: int = 1
    tail: TailKind = TailKind.ZERO

    def __post_init__(self) -> None:
        clean = {}
        for i, p in self.components.items():
            if i < 1:
                raise DomainError("levels start at 1")
            if p.nvars() > i - 1:
                raise DomainError(f"level {i} coefficient {p} must only use x1..x{i - 1}")
            if p:
                if i > self.known_to:
                    raise DomainError(f"level {i} beyond known_to {self.known_to}")
                clean[i] = p
        object.__setattr__(self, "components", dict(sorted(clean.items())))
        if self.known_to < 1:
            raise DomainError("known_to must be >= 1")

    @classmethod
    def from_element(cls, u: Element) -> "PrefixElement":
        comps: dict[int, Polynomial] = {}
        for b, c in u:
            comps[b.slot] = comps.get(b.slot, Polynomial()) + Polynomial.monomial(b.alpha, c)
        return cls(comps, max(1, u.max_slot()), TailKind.ZERO)

    @classmethod
    def from_levels(cls, comps: Mapping[int, Polynomial], known_to: int,
                    tail: TailKind = TailKind.UNKNOWN) -> "PrefixElement":
        return cls(dict(comps), known_to, tail)

    def component(self, i: int) -> Polynomial:
        if i > self.reach():
            raise DomainError(f"level {i} is not known (known_to={self.known_to})")
        return self.components.get(i, Polynomial())

    def reach(self) -> float:
        return inf if self.tail is TailKind.ZERO else self.known_to

    def is_zero_to_reach(self) -> bool:
        return not self.components

    def minimal_level(self) -> int:
        if not self.components:
            raise DomainError("no nonzero level is visible")
        return min(self.components)

    def truncate(self, n: int) -> "PrefixElement":
        """Forget everything above level n."""
        comps = {i: p for i, p in self.components.items() if i <= n}
        return PrefixElement(comps, n, TailKind.UNKNOWN)

    def to_element(self, rank: int | None = None) -> Element:
        if self.tail is not TailKind.ZERO:
            raise DomainError("an unknown tail has no finite representative")
        terms = {}
        for i, p in self.components.items():
            for a, c in p:
                terms[BasisVector(a, i)] = c
        top = max(self.components, default=1)
        return Element(terms, rank or max(2, top))

    def __str__(self) -> str:
        body = "; ".join(f"{i}: {p}" for i, p in self.components.items()) or "0"
        return f"[{body}] known_to={self.known_to} tail={self.tail.value}"

    def to_json(self) -> dict:
        return {"components": {str(i): str(p) for i, p in self.components.items()},
                "known_to": self.known_to, "tail": self.tail.value}


def bracket_prefix(a: PrefixElement, b: PrefixElement) -> PrefixElement:
    """[a, b] level by level: level k only sees levels <= k of each input,

        [a, b]_k = sum_{i<k} a_i d_i(b_k) - b_i d_i(a_k).
    """
    both_zero = a.tail is TailKind.ZERO and b.tail is TailKind.ZERO
    if both_zero:
        n = max(a.known_to, b.known_to)
    else:
        n = int(min(a.reach(), b.reach()))
    levels = sorted(k for k in set(a.components) | set(b.components) if k <= n)
    out: dict[int, Polynomial] = {}
    for k in levels:
        ak, bk = a.components.get(k), b.components.get(k)
        acc = Polynomial()
        for i in range(1, k):
            ai, bi = a.components.get(i), b.components.get(i)
            if ai and bk:
                acc = acc + ai * bk.diff(i)
            if bi and ak:
                acc = acc - bi * ak.diff(i)
        if acc:
            out[k] = acc
    return PrefixElement(out, n, TailKind.ZERO if both_zero else TailKind.UNKNOWN)


def exponential_series(n: int, depth: int) -> PrefixElement:
    """b = sum_{m>=0} x_n^m / m! d_(n+m), kept up to level depth."""
    comps = {n + m: Polynomial.monomial(unit(n, m), Fraction(1, factorial(m)))
             for m in range(0, depth - n + 1)}
    return PrefixElement(comps, depth, TailKind.UNKNOWN)


def non_nilpotence_witness(a: PrefixElement, steps: int, depth: int | None = None) -> list[PrefixElement]:
    """(ad a)^i(b) for i = 1..steps, each nonzero, so ad a is not locally nilpotent.

    b is the exponential series built on the lowest nonzero level n of a.
    For a with a zero tail the series is kept to ``depth`` levels (default
    n + steps + 2); otherwise it is kept to a.known_to.
    """
    if steps < 1:
        raise DomainError("steps must be >= 1")
    n = a.minimal_level()
    if a.tail is TailKind.ZERO:
        reach = depth if depth is not None else n + steps + 2
    else:
        reach = a.known_to if depth is None else min(depth, a.known_to)
    if reach < n + steps:
        raise DomainError(f"need levels up to {n + steps}, only {reach} are known")
    b = exponential_series(n, reach)
    out = []
    w = b
    for i in range(1, steps + 1):
        w = bracket_prefix(a, w)
        if w.is_zero_to_reach():
            raise DomainError(f"step {i} vanished on the known levels")
        out.append(w)
    return out
