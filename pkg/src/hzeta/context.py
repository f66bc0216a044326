"""Precision context and error types shared by every numerical routine."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


class HZetaError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(HZetaError, ValueError):
    """Argument outside the domain of an operation.

    ``value`` carries the offending argument when there is one.
    """

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class PoleError(DomainError):
    """Evaluation requested exactly at a pole.

    ``info`` is a :class:`hzeta.continuation.PoleInfo` when the pole belongs to
    the h-zeta function, otherwise ``None``.
    """

    def __init__(self, message: str, value=None, info=None):
        super().__init__(message, value)
        self.info = info


class AccuracyError(HZetaError, ArithmeticError):
    """A kernel failed to reach the requested tolerance.

    The best available value and its error estimate are kept so callers can
    still use them.
    """

    def __init__(self, message: str, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class ConditioningWarning(UserWarning):
    """Result computed close to a singularity; expect amplified rounding."""


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision, truncation limits and tolerances.

    ``digits`` above 16 switches summation kernels to double-double
    accumulation (``high`` mode).
    """

    digits: int = 16
    max_terms: int = 10**7
    quad_depth: int = 12
    tol_abs: float = 1e-10
    tol_rel: float = 1e-10

    def __post_init__(self):
        if self.digits < 15:
            raise DomainError("digits must be >= 15", self.digits)
        if self.max_terms < 100:
            raise DomainError("max_terms must be >= 100", self.max_terms)
        if self.quad_depth < 4:
            raise DomainError("quad_depth must be >= 4", self.quad_depth)
        if self.tol_abs < 0 or self.tol_rel < 0:
            raise DomainError("tolerances must be nonnegative")

    @property
    def high(self) -> bool:
        return self.digits > 16

    @property
    def eps(self) -> float:
        return 10.0 ** (-min(self.digits, 32))

    def tol_for(self, value) -> float:
        return max(self.tol_abs, self.tol_rel * abs(value))

    def replace(self, **changes) -> "PrecisionContext":
        return dataclasses.replace(self, **changes)

    @classmethod
    def for_mode(cls, mode: str = "double", **kw) -> "PrecisionContext":
        if mode == "double":
            return cls(digits=16, **kw)
        if mode == "high":
            return cls(digits=32, **kw)
        raise DomainError(f"unknown precision mode {mode!r}", mode)


DEFAULT_CONTEXT = PrecisionContext()


def resolve(ctx: PrecisionContext | None) -> PrecisionContext:
    return DEFAULT_CONTEXT if ctx is None else ctx
