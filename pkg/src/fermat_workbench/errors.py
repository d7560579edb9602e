"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all errors raised by fermat_workbench."""


class PreconditionViolated(WorkbenchError, ValueError):
    """An operation was called with arguments outside its domain."""


class BoundExceeded(WorkbenchError, ValueError):
    """Input exceeds the configured factorization bound."""


class NotSquareFree(PreconditionViolated):
    pass


class NonPositiveInput(PreconditionViolated):
    pass


class DegenerateForm(PreconditionViolated):
    """A ternary form has a zero (or negative) coefficient."""


class SearchExhausted(WorkbenchError, RuntimeError):
    """A bounded search failed where a solution is guaranteed to exist."""


class ExponentOverflow(WorkbenchError, OverflowError):
    """A floating-point power left the representable range."""
