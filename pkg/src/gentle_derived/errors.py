"""Exception hierarchy.  Every domain failure derives from ``GentleError`` so
the command line can map it to exit code 1."""

from __future__ import annotations


class GentleError(Exception):
    """Base class for domain errors."""


class InvalidPresentation(GentleError):
    pass


class NotComposable(GentleError):
    pass


class Disconnected(GentleError):
    pass


class NotOneCycle(GentleError):
    pass


class NotGentle(GentleError):
    pass


class NotFiniteDimensional(GentleError):
    pass


class ParameterOutOfRange(GentleError):
    pass


class UnsupportedShape(GentleError):
    """Raised for inputs outside the recognized families; carries invariants."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}


class MixedQuiver(GentleError):
    pass


class InfiniteDimensionalFirstArgument(GentleError):
    pass


class InfiniteDimensionalInput(GentleError):
    pass


class InfiniteDimensional(GentleError):
    pass


class ProjectiveInput(GentleError):
    pass


class RZero(ParameterOutOfRange):
    """The covering and orbit calculus need r != 0."""


class UnsupportedFamily(GentleError):
    pass


class DegenerateBoundary(GentleError):
    pass


class ComputationFailed(GentleError):
    """An internal consistency check failed (a bug, never an expected outcome)."""
