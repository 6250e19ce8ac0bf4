"""Tiny argument-checking helpers used across the package."""

import operator

from .errors import DomainError


def as_int(value, name: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, got {value!r}") from None


def as_nonneg_int(value, name: str) -> int:
    value = as_int(value, name)
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    return value
