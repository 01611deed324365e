"""Exception types raised across the package."""

from __future__ import annotations


class SelfLoop(ValueError):
    """An edge was given with identical endpoints."""

    def __init__(self, pair):
        super().__init__(f"self-loop on {pair[0]!r}")
        self.pair = pair


class ProfileError(ValueError):
    """Base class for problems with a profile or its source text."""


class ParseError(ProfileError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class DuplicateLabel(ParseError):
    pass


class ProfileInvalid(ProfileError):
    """A profile violates a structural bound (``bound`` names which one)."""

    def __init__(self, bound: str, message: str):
        super().__init__(message)
        self.bound = bound


class UnknownVoter(KeyError):
    pass


class ConditionViolated(ValueError):
    pass


class TooLarge(ValueError):
    pass


class ParamInvalid(ValueError):
    pass
