"""Shared exception types, the advisory-hypothesis warning, and check reports."""

from __future__ import annotations

from dataclasses import dataclass


class SurfcohError(Exception):
    """Base class for all errors raised by this package."""


class ParityError(SurfcohError):
    """An integer that must be even came out odd.

    This almost always signals inconsistent input data, e.g. a canonical
    class that is not characteristic for the intersection form.
    """


class DegreeError(SurfcohError):
    """A form violates a homogeneity or degree-bookkeeping constraint."""


class IntegralityError(SurfcohError):
    """A quantity that must be an integer has a nontrivial denominator."""


class ConsistencyError(SurfcohError):
    """Two computations of the same quantity disagree.

    Carries a tuple of human-readable difference lines in ``details``.
    """

    def __init__(self, message: str, details: tuple[str, ...] = ()):
        super().__init__(message)
        self.details = details


class SurfaceDataError(SurfcohError):
    """Surface topology data failed validation where validity is required."""


class FormatError(SurfcohError):
    """A surface description file could not be parsed.

    ``line`` is the 1-based line number the problem was found on, or 0 when
    the problem is not tied to a single line.
    """

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class HypothesisWarning(UserWarning):
    """An operation was used outside its stated hypothesis.

    The result is still computed; formal identities hold regardless, but the
    geometric interpretation may be vacuous.
    """


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a verification: truthiness plus a structured diff.

    ``details`` is empty when the check passed, otherwise it lists one line
    per component that disagreed.
    """

    ok: bool
    details: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok
