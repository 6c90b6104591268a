"""Semantic exception hierarchy shared by every module."""

from __future__ import annotations


class InsdelBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(InsdelBoundsError, ValueError):
    """An input lies outside the mathematical domain of the requested quantity."""


class DegenerateSpokeError(DomainError):
    """Insertions were routed onto a spoke whose reduced alphabet is unary."""


class DegenerateRayError(DomainError):
    """The scaling ray through the origin is undefined for the zero vector."""


class BudgetError(InsdelBoundsError, RuntimeError):
    """An exact enumeration would exceed the configured state cap."""

    def __init__(self, required: int, cap: int, what: str = "enumeration"):
        self.required = required
        self.cap = cap
        super().__init__(
            f"{what} requires {required} states but the cap is {cap}; "
            f"raise INSDEL_BOUNDS_ENUM_CAP to override"
        )
