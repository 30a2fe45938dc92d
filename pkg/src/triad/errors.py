"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class TriadError(Exception):
    """Base class for every error raised by the package."""


class DomainError(TriadError, ValueError):
    """An operation was called outside its mathematical domain."""


class RankMismatch(DomainError):
    """Operands live in algebras of different rank."""


class TheoryViolation(TriadError, RuntimeError):
    """An iteration cap was exceeded where the theory guarantees termination."""


class GrammarError(TriadError, ValueError):
    """Text could not be parsed; ``pos`` is the offending character offset."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if text else ""
        super().__init__(f"{message}{where}")
