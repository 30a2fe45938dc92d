"""Ordinals below w^w in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents and positive coefficients.  The empty tuple is
zero.  A separate marker ``TOP`` stands for w^w; it can be compared and
printed but never enters arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable

from .errors import DomainError

Term = tuple[int, int]


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[Term, ...] = ()
    top: bool = False

    def __post_init__(self) -> None:
        if self.top:
            if self.terms:
                raise DomainError("TOP carries no terms")
            return
        prev = None
        for exp, coeff in self.terms:
            if exp < 0 or coeff < 1:
                raise DomainError(f"bad CNF term ({exp}, {coeff})")
            if prev is not None and exp >= prev:
                raise DomainError("CNF exponents must strictly decrease")
            prev = exp

    # construction -------------------------------------------------------
    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise DomainError("ordinals are non-negative")
        return cls(((0, n),)) if n else ZERO

    @classmethod
    def from_coeffs(cls, coeffs: dict[int, int] | Iterable[tuple[int, int]]) -> "Ordinal":
        """Build from exponent -> coefficient data in any order; zero coefficients are dropped."""
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if c < 0:
                raise DomainError("negative coefficient")
            acc[e] = acc.get(e, 0) + c
        return cls(tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)))

    # ordering ------------------------------------------------------------
    def _key(self):
        return (1, ()) if self.top else (0, self.terms)

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key() < other._key()

    # queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.top and not self.terms

    def is_finite(self) -> bool:
        return not self.top and (not self.terms or self.terms[0][0] == 0)

    def coeff(self, exp: int) -> int:
        self._no_top()
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def degree(self) -> int:
        """Leading exponent; zero has degree 0 by convention."""
        self._no_top()
        return self.terms[0][0] if self.terms else 0

    def __int__(self) -> int:
        if not self.is_finite():
            raise DomainError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def _no_top(self) -> None:
        if self.top:
            raise DomainError("w^w does not take part in arithmetic")

    def __add__(self, other: "Ordinal | int") -> "Ordinal":
        return add(self, _coerce(other))

    def __radd__(self, other: int) -> "Ordinal":
        return add(_coerce(other), self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Ordinal({render(self)})"


ZERO = Ordinal()
ONE = Ordinal(((0, 1),))
OMEGA = Ordinal(((1, 1),))
TOP = Ordinal(top=True)


def _coerce(x: "Ordinal | int") -> Ordinal:
    return x if isinstance(x, Ordinal) else Ordinal.of(x)


def omega_pow(k: int, coeff: int = 1) -> Ordinal:
    """The ordinal w^k * coeff."""
    return Ordinal(((k, coeff),)) if coeff else ZERO


def compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    ka, kb = a._key(), b._key()
    return (ka > kb) - (ka < kb)


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    a._no_top()
    b._no_top()
    if not b.terms:
        return a
    lead, lead_c = b.terms[0]
    kept = [t for t in a.terms if t[0] > lead]
    merged = lead_c + sum(c for e, c in a.terms if e == lead)
    return Ordinal(tuple(kept) + ((lead, merged),) + b.terms[1:])


def sub_left(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique x with a + x = b; requires a <= b."""
    a._no_top()
    b._no_top()
    for k, (ta, tb) in enumerate(zip(a.terms, b.terms)):
        if ta == tb:
            continue
        (ea, ca), (eb, cb) = ta, tb
        if eb > ea:
            return Ordinal(b.terms[k:])
        if eb == ea and cb > ca:
            return Ordinal(((eb, cb - ca),) + b.terms[k + 1:])
        break
    else:
        if len(a.terms) <= len(b.terms):
            return Ordinal(b.terms[len(a.terms):])
    raise DomainError(f"cannot subtract {a} from the left of smaller {b}")


def divmod_omega_pow(a: Ordinal, k: int) -> tuple[Ordinal, Ordinal]:
    """Split a = w^k * q + r with r < w^k."""
    a._no_top()
    q = tuple((e - k, c) for e, c in a.terms if e >= k)
    r = tuple((e, c) for e, c in a.terms if e < k)
    return Ordinal(q), Ordinal(r)


def mul_omega_pow(k: int, q: Ordinal) -> Ordinal:
    """Left multiplication w^k * q."""
    q._no_top()
    return Ordinal(tuple((e + k, c) for e, c in q.terms))


def structure(a: Ordinal) -> tuple[int, int, int, int]:
    """(multiplicity, degree, co-multiplicity, co-degree) read off the CNF."""
    a._no_top()
    if not a.terms:
        raise DomainError("zero has no CNF structure")
    (e_hi, c_hi), (e_lo, c_lo) = a.terms[0], a.terms[-1]
    return c_hi, e_hi, c_lo, e_lo


def is_limit(a: Ordinal) -> bool:
    # zero is not counted as a limit
    a._no_top()
    return bool(a.terms) and a.terms[-1][0] > 0


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def stack(n: int) -> Ordinal:
    """w^(n-1) + ... + w + 1."""
    if n < 1:
        raise DomainError("stack needs n >= 1")
    return Ordinal(tuple((e, 1) for e in range(n - 1, -1, -1)))


def stack_prefix(n: int, s: int) -> Ordinal:
    """w^(n-1) + ... + w^s, empty when s >= n."""
    if s < 0:
        raise DomainError("prefix index must be non-negative")
    return Ordinal(tuple((e, 1) for e in range(n - 1, s - 1, -1)))


def render(a: Ordinal) -> str:
    if a.top:
        return "w^w"
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e == 0:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else f"w^{e}"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


def to_json(a: Ordinal):
    if a.top:
        return "w^w"
    return [{"exp": e, "coeff": c} for e, c in a.terms]


def from_json(data) -> Ordinal:
    if data == "w^w":
        return TOP
    if not isinstance(data, list):
        raise DomainError("ordinal JSON must be a list or 'w^w'")
    return Ordinal(tuple((int(d["exp"]), int(d["coeff"])) for d in data))
