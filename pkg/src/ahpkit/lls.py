"""Geometric-mean priorities and consistency measurement.

The production solver takes each alternative's priority as the geometric
mean of its matrix row, which is the unique minimizer of the sum of
squared log residuals sum_ij (ln a_ij - ln u_i + ln u_j)^2 subject to the
product of the u_i being 1. The same minimizer is also reachable by
solving the stationarity conditions as a linear system; that second path
is kept here as an independent verification oracle, never as the
production path.

Consistency is quantified two equivalent ways: the log-Frobenius distance
from the matrix to its closest consistent matrix, and the unbiased
variance estimate of the log perturbations, sigma^2 = distance^2 /
((N-1)(N-2)) for N >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import JudgmentMatrix, validate_judgment_matrix

# Distance threshold below which a matrix is reported as consistent.
# The verdict is policy, not math: the raw distance and sigma^2 are always
# reported so callers can apply their own cutoff.
DEFAULT_CONSISTENCY_TOL = 1e-9


@dataclass(frozen=True)
class PriorityVector:
    """Priorities derived from one judgment matrix.

    ``u`` holds the unnormalized components (row geometric means), ``w``
    the same components normalized to sum 1, and ``ranking`` the
    alternative indices ordered by descending weight (ties broken by
    lower index).
    """

    u: np.ndarray
    w: np.ndarray
    ranking: np.ndarray


@dataclass(frozen=True)
class ConsistencyReport:
    """How far a matrix is from perfect transitivity.

    ``residuals`` holds the log errors delta_ij = ln a_ij - ln u_i + ln u_j,
    ``distance`` their root sum of squares (the distance to the closest
    consistent matrix), and ``sigma2`` the unbiased variance estimate of
    the log perturbations. ``sigma2`` is None for N = 2, where every
    reciprocal matrix is consistent and the estimator's denominator
    vanishes.
    """

    sigma2: float | None
    distance: float
    residuals: np.ndarray
    is_consistent: bool


def _priority_vector_from_u(u: np.ndarray) -> PriorityVector:
    w = u / u.sum()
    ranking = np.argsort(-w, kind="stable")
    u = u.copy()
    u.setflags(write=False)
    w.setflags(write=False)
    ranking.setflags(write=False)
    return PriorityVector(u=u, w=w, ranking=ranking)


def log_row_means(entries: np.ndarray) -> np.ndarray:
    """Row means of the elementwise log matrix (the log-priorities)."""
    return np.log(entries).mean(axis=1)


def lls_priorities(a: JudgmentMatrix) -> PriorityVector:
    """Solve for priorities as the geometric means of the rows.

    u_i = (prod_j a_ij)^(1/N), computed in the log domain; reciprocity
    makes the product of the u_i equal 1 automatically.
    """
    u = np.exp(log_row_means(a.entries))
    return _priority_vector_from_u(u)


def lls_linear_system_oracle(a: JudgmentMatrix) -> PriorityVector:
    """Recompute the priorities through the stationarity linear system.

    Builds the system Q x = d with q_ii = 1 - 1/N, q_ij = -1/N, and d the
    row means of ln a_ij, then takes the minimum-norm solution with a
    generic dense least-squares solver and exponentiates. Exists purely
    as a cross-check of :func:`lls_priorities`; agreement is within
    1e-10 componentwise.
    """
    n = a.n
    b = np.log(a.entries)
    q = np.eye(n) - np.full((n, n), 1.0 / n)
    d = b.mean(axis=1)
    x, *_ = np.linalg.lstsq(q, d, rcond=None)
    return _priority_vector_from_u(np.exp(x))


def lls_objective(a: JudgmentMatrix, log_u: np.ndarray) -> float:
    """Sum of squared log residuals at the candidate log-priorities.

    The quantity the solver minimizes; evaluated directly so tests can
    confirm descent and stationarity at the closed-form solution.
    """
    b = np.log(a.entries)
    res = b - log_u[:, None] + log_u[None, :]
    return float(np.sum(res * res))


def consistency_report(
    a: JudgmentMatrix,
    pv: PriorityVector,
    consistency_tol: float = DEFAULT_CONSISTENCY_TOL,
) -> ConsistencyReport:
    """Measure how far ``a`` is from the consistent matrix implied by ``pv``.

    ``pv`` must come from :func:`lls_priorities` on the same matrix; the
    report's distance is then the minimal distance from ``a`` to any
    consistent matrix. With two alternatives transitivity is vacuous and
    the single judged pair is always fit exactly, so the distance is 0
    by construction (not recomputed through logs, which would report
    roundoff noise) and sigma2 is absent: its estimator divides by
    (N - 1)(N - 2).
    """
    n = a.n
    if n == 2:
        residuals = np.zeros((2, 2))
        residuals.setflags(write=False)
        return ConsistencyReport(
            sigma2=None, distance=0.0, residuals=residuals, is_consistent=True
        )
    x = np.log(pv.u)
    residuals = np.log(a.entries) - x[:, None] + x[None, :]
    distance2 = float(np.sum(residuals * residuals))
    distance = float(np.sqrt(distance2))
    sigma2 = distance2 / ((n - 1) * (n - 2))
    residuals.setflags(write=False)
    return ConsistencyReport(
        sigma2=sigma2,
        distance=distance,
        residuals=residuals,
        is_consistent=distance <= consistency_tol,
    )


def consistent_approximation(a: JudgmentMatrix) -> JudgmentMatrix:
    """The closest consistent matrix to ``a``: entries u_i / u_j.

    A consistent matrix is its own approximation; the log-Frobenius
    distance from ``a`` to the result equals ConsistencyReport.distance.
    """
    u = lls_priorities(a).u
    entries = u[:, None] / u[None, :]
    return validate_judgment_matrix(entries, labels=a.labels)
