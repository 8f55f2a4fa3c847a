"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class MNError(Exception):
    """Base class for all errors raised by mngroups."""


class DegreeMismatchError(MNError, ValueError):
    pass


class NotInGroupError(MNError, ValueError):
    """An element or subgroup does not lie in the ambient group."""


class NotNormalError(MNError, ValueError):
    pass


class TrivialGroupError(MNError, ValueError):
    pass


class CapExceededError(MNError):
    """A computation would exceed one of the configured size caps.

    ``cap_name`` is one of ``enumeration``, ``lattice``, ``quotient_degree``,
    ``tuple_space`` or ``tree_degree``; ``size`` is the offending size.
    """

    def __init__(self, cap_name: str, size: int, cap: int, what: str = ""):
        self.cap_name = cap_name
        self.size = size
        self.cap = cap
        self.what = what
        detail = f" ({what})" if what else ""
        super().__init__(
            f"too large to enumerate{detail}: {cap_name} cap is {cap}, requested size {size}"
        )

    def to_dict(self) -> dict:
        return {
            "error": "cap_exceeded",
            "cap_name": self.cap_name,
            "cap": str(self.cap),
            "size": str(self.size),
            "what": self.what,
        }


class GroupSpecError(MNError, ValueError):
    """Syntax or semantic error in a group specification, with position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
