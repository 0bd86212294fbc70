"""Exceptions raised by catalanc.

Failures of the defining conditions are normally returned as validation reports. The exceptions
below are raised when the input cannot be interpreted at all, or when an operation requires
a valid object and receives an invalid one.
"""


class CatalanError(ValueError):
    """Base class of all domain errors raised by catalanc."""


class MalformedWordError(CatalanError):
    """Raised for unparsable tokens, index 0, out-of-range indices or duplicate letters."""


class MalformedForestError(CatalanError):
    """Raised for forest text that does not follow the grammar or has invalid labels."""


class InvalidSketchError(CatalanError):
    """Raised when an operation needs a valid sketch and one of its defining conditions fails."""

    def __init__(self, report, kind: str):
        self.report = report
        super().__init__(f"invalid {kind}: {report.render()}")


class InvalidForestError(CatalanError):
    """Raised when an operation needs a valid symmetric forest and a condition fails."""

    def __init__(self, report, kind: str = "symmetric forest"):
        self.report = report
        super().__init__(f"invalid {kind}: {report.render()}")


class HyperplaneCollisionError(CatalanError):
    """Raised when a point lies on a hyperplane of the arrangement."""

    def __init__(self, first, second, equation: str):
        self.first = first
        self.second = second
        self.equation = equation
        super().__init__(
            f"point lies on the hyperplane {equation} (values of {first} and {second} coincide)"
        )


class DeskScaleError(CatalanError):
    """Raised when an exhaustive operation is requested beyond its documented bound."""


class MalformedPathError(CatalanError):
    """Raised for lattice paths with steps other than U and D."""


class InvalidSizeError(CatalanError):
    """Raised for sizes or parameters outside the domain of a counting formula."""
