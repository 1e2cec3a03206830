"""Exception hierarchy shared by the library, the CLI and the HTTP service.

Every error carries a stable machine-readable ``code`` so API clients and
CLI callers can dispatch without parsing messages.
"""

from __future__ import annotations


class AhpError(Exception):
    """Base class for all ahpkit errors."""

    code = "error"


class DimensionError(AhpError):
    """Matrix is not square, or has fewer than two alternatives."""

    code = "dimension_error"


class NonPositiveEntry(AhpError):
    """A comparison ratio is zero, negative, or not a number."""

    code = "non_positive_entry"


class ReciprocityViolation(AhpError):
    """a_ij * a_ji deviates from 1 beyond tolerance."""

    code = "reciprocity_violation"


class ScaleViolation(AhpError):
    """An entry falls outside [1/9, 9] under the strict comparison scale."""

    code = "scale_violation"


class FirstEntryNotOne(AhpError):
    """A row used to generate a consistent matrix must start with 1."""

    code = "first_entry_not_one"


class NonPositiveComponent(AhpError):
    """A priority-vector component is zero or negative."""

    code = "non_positive_component"


class LengthMismatch(AhpError):
    """Vectors that must share a length do not."""

    code = "length_mismatch"


class MismatchedDimensions(AhpError):
    """Expert matrices in one group differ in size or label order."""

    code = "mismatched_dimensions"


class WeightError(AhpError):
    """Expert weights are non-positive or do not sum to 1."""

    code = "weight_error"


class ParseError(AhpError):
    """Input bytes could not be parsed in the declared format."""

    code = "parse_error"

    def __init__(self, message: str, location: str | None = None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class NotFound(AhpError):
    """No session with the given id."""

    code = "not_found"


class ValidationError(AhpError):
    """A judgment update violates the session's constraints."""

    code = "validation_error"


class ConflictError(AhpError):
    """A write carried a stale version counter."""

    code = "conflict_error"


class IncompleteMatrix(AhpError):
    """Priorities were requested before all pairwise judgments were entered."""

    code = "incomplete_matrix"


class IoError(AhpError):
    """Snapshot file could not be read or written."""

    code = "io_error"
