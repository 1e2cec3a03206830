"""Principal-eigenvector priorities via power iteration.

The classic baseline: priorities are the dominant eigenvector of the
judgment matrix, found by repeatedly applying the matrix and
renormalizing until two consecutive normalized vectors agree. For a
consistent matrix the dominant eigenvalue equals N; the normalized
excess (lambda - N) / (N - 1) serves as an inconsistency index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .matrix import JudgmentMatrix

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10_000

# Floating-point guard: tiny negative indices from roundoff are reported
# as exactly 0.
_MU_CLAMP = 1e-8


@dataclass(frozen=True)
class EigenReport:
    """Dominant eigenpair of a judgment matrix plus iteration diagnostics."""

    lambda_max: float
    principal_w: np.ndarray
    mu: float
    iterations: int
    converged: bool


def inconsistency_index(lambda_max: float, n: int) -> float:
    """Normalized eigenvalue excess (lambda_max - n) / (n - 1).

    Zero for a consistent matrix, positive otherwise; tiny negative
    values from floating-point noise are clamped to 0.
    """
    if n < 2:
        raise DimensionError(f"need at least 2 alternatives, got {n}")
    mu = (lambda_max - n) / (n - 1)
    if -_MU_CLAMP <= mu < 0.0:
        return 0.0
    return mu


def saaty_priorities(
    a: JudgmentMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    initial: np.ndarray | None = None,
) -> EigenReport:
    """Power iteration with per-step sum normalization.

    Stops when two consecutive normalized vectors differ by less than
    ``tol`` in max norm. A positive start vector guarantees convergence
    to the (positive) dominant eigenvector; the default start is uniform.
    If ``max_iter`` is exhausted first, the report is still returned with
    ``converged`` False.

    The dominant eigenvalue is read off as the mean of the componentwise
    ratios (A w)_i / w_i at the final vector.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    e = a.entries
    if initial is None:
        w = np.full(a.n, 1.0 / a.n)
    else:
        w = np.asarray(initial, dtype=float)
        if w.shape != (a.n,) or not np.all(w > 0):
            raise ValueError("initial vector must be positive with length n")
        w = w / w.sum()

    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        v = e @ w
        w_next = v / v.sum()
        if np.max(np.abs(w_next - w)) < tol:
            w = w_next
            converged = True
            break
        w = w_next

    lambda_max = float(np.mean((e @ w) / w))
    w = w.copy()
    w.setflags(write=False)
    return EigenReport(
        lambda_max=lambda_max,
        principal_w=w,
        mu=inconsistency_index(lambda_max, a.n),
        iterations=iterations,
        converged=converged,
    )
