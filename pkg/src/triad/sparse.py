"""Finite linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Any, Hashable, Iterator, Mapping

Scalar = Fraction


def as_scalar(c: Any) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class Sparse:
    """Immutable map key -> nonzero Fraction with vector-space operations.

    Subclasses carry extra attributes (a rank, say) by overriding ``_like``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | None = None):
        clean: dict = {}
        for k, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                clean[k] = c
        self._terms = clean
        self._hash = None

    def _like(self, terms: Mapping) -> "Sparse":
        return type(self)(terms)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Sparse):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _combine(self, other: "Sparse", sign: int) -> "Sparse":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + sign * c
        return self._like(out)

    def __add__(self, other: "Sparse") -> "Sparse":
        return self._combine(other, 1)

    def __sub__(self, other: "Sparse") -> "Sparse":
        return self._combine(other, -1)

    def __neg__(self) -> "Sparse":
        return self._like({k: -c for k, c in self._terms.items()})

    def scale(self, c) -> "Sparse":
        c = as_scalar(c)
        return self._like({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c) -> "Sparse":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented
