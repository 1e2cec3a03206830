"""Judgment matrices: validation, reciprocity, transitivity, completion.

A judgment matrix records pairwise comparison strengths between N
alternatives: entry (i, j) says how strongly alternative i is preferred
over alternative j. Valid matrices are positive, have a unit diagonal,
and satisfy the reciprocity constraint a_ij * a_ji = 1, so only the
N(N-1)/2 upper-triangle judgments carry information.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    FirstEntryNotOne,
    NonPositiveEntry,
    ReciprocityViolation,
    ScaleViolation,
)

# Relative tolerance for a_ij * a_ji = 1 on fully specified input. Tight
# enough to reject hand-rounded reciprocals (0.33 vs 3) while admitting
# full-precision decimal round-trips.
RECIPROCITY_RTOL = 1e-12

# Bounds of the classic 1/9 .. 9 comparison scale.
SAATY_MIN = 1.0 / 9.0
SAATY_MAX = 9.0

# Default relative tolerance for exact-transitivity checks.
TRANSITIVITY_RTOL = 1e-9


class ScaleMode(enum.Enum):
    """Whether entries must stay inside the discrete 1/9 .. 9 scale."""

    FREE_POSITIVE = "free_positive"
    STRICT_SAATY = "strict_saaty"


@dataclass(frozen=True)
class JudgmentMatrix:
    """A validated N x N positive reciprocal comparison matrix.

    Instances are produced by :func:`validate_judgment_matrix` (or the
    loaders in :mod:`ahpkit.formats`); the entries array is read-only.
    """

    n: int
    entries: np.ndarray
    labels: tuple[str, ...] = ()
    scale_mode: ScaleMode = ScaleMode.FREE_POSITIVE

    def label_for(self, i: int) -> str:
        return self.labels[i] if self.labels else f"A{i + 1}"


def validate_judgment_matrix(
    raw,
    scale_mode: ScaleMode = ScaleMode.FREE_POSITIVE,
    labels: tuple[str, ...] | list[str] = (),
) -> JudgmentMatrix:
    """Validate a raw square array and return a JudgmentMatrix.

    The diagonal is forced to exactly 1. Lower-triangle cells marked
    absent with NaN are filled as 1/a_ij from their mirror; when both
    triangles are supplied, a_ij * a_ji must equal 1 within
    ``RECIPROCITY_RTOL``.

    Raises DimensionError, NonPositiveEntry, ReciprocityViolation, or
    ScaleViolation (strict scale only).
    """
    entries = np.array(raw, dtype=float)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {entries.shape}")
    n = entries.shape[0]
    if n < 2:
        raise DimensionError(f"need at least 2 alternatives, got {n}")
    if labels and len(labels) != n:
        raise DimensionError(f"got {len(labels)} labels for {n} alternatives")

    # Fill absent lower-triangle cells from their upper mirror.
    for i in range(n):
        for j in range(i):
            if np.isnan(entries[i, j]):
                entries[i, j] = 1.0 / entries[j, i]

    for i in range(n):
        for j in range(n):
            v = entries[i, j]
            if not (v > 0.0) or not np.isfinite(v):
                raise NonPositiveEntry(
                    f"entry ({i}, {j}) = {float(v)!r} is not a positive number"
                )

    # Reciprocity over all pairs; the diagonal case a_ii^2 = 1 catches
    # diagonals that are not (nearly) 1.
    products = entries * entries.T
    bad = np.argwhere(np.abs(products - 1.0) > RECIPROCITY_RTOL)
    if bad.size:
        i, j = bad[0]
        raise ReciprocityViolation(
            f"entries ({i}, {j}) and ({j}, {i}) multiply to {float(products[i, j])!r}, expected 1"
        )
    np.fill_diagonal(entries, 1.0)

    if scale_mode is ScaleMode.STRICT_SAATY:
        lo = SAATY_MIN * (1.0 - RECIPROCITY_RTOL)
        hi = SAATY_MAX * (1.0 + RECIPROCITY_RTOL)
        if entries.min() < lo or entries.max() > hi:
            i, j = np.unravel_index(np.argmax(np.abs(np.log(entries))), entries.shape)
            raise ScaleViolation(
                f"entry ({i}, {j}) = {float(entries[i, j])!r} outside the 1/9 .. 9 scale"
            )

    entries.setflags(write=False)
    return JudgmentMatrix(n=n, entries=entries, labels=tuple(labels), scale_mode=scale_mode)


def is_consistent_exact(a: JudgmentMatrix, tol: float = TRANSITIVITY_RTOL) -> bool:
    """True iff a_ik = a_ij * a_jk holds for every triple within rel. tol."""
    e = a.entries
    # chained[i, j, k] = a_ij * a_jk
    chained = e[:, :, None] * e[None, :, :]
    direct = e[:, None, :]
    return bool(np.all(np.abs(direct - chained) <= tol * direct))


def consistent_completion(first_row) -> JudgmentMatrix:
    """Build the consistent matrix determined by its first row.

    Every entry follows as a_ik = a_1k / a_1i. The first entry must be 1
    and all entries positive.
    """
    row = np.asarray(first_row, dtype=float)
    if row.ndim != 1 or row.size < 2:
        raise DimensionError(f"expected a 1-D row of length >= 2, got shape {row.shape}")
    if not np.all(np.isfinite(row)) or not np.all(row > 0.0):
        raise NonPositiveEntry("first row must be strictly positive")
    if abs(row[0] - 1.0) > RECIPROCITY_RTOL:
        raise FirstEntryNotOne(f"first entry is {row[0]!r}, expected 1")
    entries = row[None, :] / row[:, None]
    return validate_judgment_matrix(entries)


def transitivity_violations(
    entries: np.ndarray, tol: float = TRANSITIVITY_RTOL
) -> list[tuple[int, int, int, float]]:
    """Find violated transitivity triples in a possibly partial matrix.

    ``entries`` may contain NaN for pairs not yet judged; only triples
    whose three entries (i, k), (i, j), (j, k) are all present are
    checked. Returns (i, j, k, relative_deviation) per violation, worst
    first. Used for live feedback while a matrix is being filled in.
    """
    n = entries.shape[0]
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if i == j or j == k or i == k:
                    continue
                direct = entries[i, k]
                via = entries[i, j] * entries[j, k]
                if np.isnan(direct) or np.isnan(via):
                    continue
                dev = abs(direct - via) / direct
                if dev > tol:
                    out.append((i, j, k, float(dev)))
    out.sort(key=lambda t: -t[3])
    return out
