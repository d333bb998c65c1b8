"""Shared exception types."""


class SprigsError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(SprigsError):
    """A computation hit the configured resource budget (node count or cap)."""


class ParseError(SprigsError):
    """Position text failed to parse; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ClassifierError(SprigsError):
    """A closed-form classifier was asked about a position it does not cover."""
