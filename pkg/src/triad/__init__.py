"""Exact computations in the Lie algebras of triangular polynomial derivations."""

from .errors import DomainError, GrammarError, RankMismatch, TheoryViolation, TriadError
from .ordinal import OMEGA, ONE, TOP, ZERO, Ordinal

__all__ = ["DomainError", "GrammarError", "RankMismatch", "TheoryViolation", "TriadError",
           "OMEGA", "ONE", "TOP", "ZERO", "Ordinal"]
