"""Weighted aggregation of several experts' judgment matrices.

Each expert m supplies a judgment matrix and a weight alpha_m > 0, with
the weights summing to 1. The group priorities are weighted geometric
means across experts' rows:

    u_k = prod_m prod_j (a_kj^(m))^(alpha_m / N)

The identical vector also minimizes the weighted sum of generalized
Kullback-Leibler divergences between the group vector and each expert's
own priority vector; :func:`verify_equivalence` recomputes the answer
through that second route and checks the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    LengthMismatch,
    MismatchedDimensions,
    NonPositiveComponent,
    WeightError,
)
from .lls import ConsistencyReport, PriorityVector, consistency_report, lls_priorities, log_row_means
from .matrix import JudgmentMatrix

# Weight sums within this band of 1 are renormalized silently (decimal
# entry tolerance); anything further off is treated as a caller mistake.
WEIGHT_SUM_SLACK = 1e-6

DEFAULT_EQUIVALENCE_TOL = 1e-10


def _validated_weights(alphas, m: int) -> np.ndarray:
    a = np.asarray(alphas, dtype=float)
    if a.shape != (m,):
        raise WeightError(f"got {a.size} weights for {m} experts")
    if not np.all(np.isfinite(a)) or not np.all(a > 0.0):
        raise WeightError("expert weights must all be positive")
    total = a.sum()
    if not (1.0 - WEIGHT_SUM_SLACK <= total <= 1.0 + WEIGHT_SUM_SLACK):
        raise WeightError(f"expert weights sum to {total!r}, expected 1")
    a = a / total
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class GroupJudgment:
    """M expert matrices over the same alternatives, with expert weights.

    Weights whose sum strays from 1 by at most 1e-6 are renormalized on
    construction; matrices must share the size (and label order, when
    labeled).
    """

    matrices: tuple[JudgmentMatrix, ...]
    alphas: np.ndarray

    def __init__(self, matrices, alphas):
        matrices = tuple(matrices)
        if not matrices:
            raise MismatchedDimensions("a group needs at least one expert matrix")
        n = matrices[0].n
        labeled = [mat.labels for mat in matrices if mat.labels]
        for mat in matrices:
            if mat.n != n:
                raise MismatchedDimensions(
                    f"expert matrices differ in size: {mat.n} vs {n}"
                )
            if mat.labels and labeled and mat.labels != labeled[0]:
                raise MismatchedDimensions("expert matrices differ in label order")
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "alphas", _validated_weights(alphas, len(matrices)))

    @property
    def m(self) -> int:
        return len(self.matrices)

    @property
    def n(self) -> int:
        return self.matrices[0].n


@dataclass(frozen=True)
class GroupResult:
    """Aggregated priorities plus each expert's own solution.

    ``divergences[m]`` is the generalized Kullback-Leibler divergence from
    the (unnormalized) group vector to expert m's unnormalized vector;
    ``expert_reports`` carries each expert's consistency measures so
    callers can echo them without recomputation.
    """

    group_w: PriorityVector
    expert_vectors: tuple[PriorityVector, ...]
    divergences: np.ndarray
    expert_reports: tuple[ConsistencyReport, ...]


def kl_divergence(u, v) -> float:
    """Generalized Kullback-Leibler divergence for positive vectors.

    D(u || v) = sum_j u_j ln(u_j / v_j) - sum_j u_j + sum_j v_j.
    Nonnegative, zero iff u = v; neither argument needs to sum to 1.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise LengthMismatch(f"vector shapes differ: {u.shape} vs {v.shape}")
    if not np.all(u > 0.0) or not np.all(v > 0.0):
        raise NonPositiveComponent("divergence arguments must be strictly positive")
    return float(np.sum(u * np.log(u / v)) - u.sum() + v.sum())


def kl_aggregate(expert_vectors, alphas) -> np.ndarray:
    """Weighted geometric mean of expert priority vectors.

    Minimizes the weighted sum of generalized Kullback-Leibler
    divergences sum_m alpha_m D(u || u^(m)) over positive u; the closed
    form is u_k = prod_m (u_k^(m))^alpha_m. A single expert's vector is
    returned unchanged.
    """
    vectors = [np.asarray(v, dtype=float) for v in expert_vectors]
    if not vectors:
        raise LengthMismatch("need at least one expert vector")
    length = vectors[0].shape
    for v in vectors:
        if v.shape != length or v.ndim != 1:
            raise LengthMismatch("expert vectors must share one length")
        if not np.all(v > 0.0):
            raise NonPositiveComponent("expert vectors must be strictly positive")
    weights = _validated_weights(alphas, len(vectors))
    if len(vectors) == 1:
        return vectors[0].copy()
    logs = np.stack([np.log(v) for v in vectors])
    return np.exp(weights @ logs)


def weighted_divergence(u, expert_vectors, alphas) -> float:
    """sum_m alpha_m D(u || u^(m)), the objective kl_aggregate minimizes."""
    weights = _validated_weights(alphas, len(expert_vectors))
    return float(sum(w * kl_divergence(u, v) for w, v in zip(weights, expert_vectors)))


def group_lls_priorities(g: GroupJudgment) -> GroupResult:
    """Aggregate a group's matrices into one priority vector.

    The group log-priorities are the alpha-weighted sums of each expert
    matrix's log row means; a single expert with weight 1 therefore
    reproduces that expert's own solution bit for bit. Per-expert
    solutions, consistency reports, and divergences to the group vector
    are computed alongside.
    """
    row_means = np.stack([log_row_means(mat.entries) for mat in g.matrices])
    log_u = (g.alphas[:, None] * row_means).sum(axis=0)
    u = np.exp(log_u)
    w = u / u.sum()
    ranking = np.argsort(-w, kind="stable")
    for arr in (u, w, ranking):
        arr.setflags(write=False)
    group_w = PriorityVector(u=u, w=w, ranking=ranking)

    expert_vectors = tuple(lls_priorities(mat) for mat in g.matrices)
    expert_reports = tuple(
        consistency_report(mat, pv) for mat, pv in zip(g.matrices, expert_vectors)
    )
    divergences = np.array([kl_divergence(u, pv.u) for pv in expert_vectors])
    divergences.setflags(write=False)
    return GroupResult(
        group_w=group_w,
        expert_vectors=expert_vectors,
        divergences=divergences,
        expert_reports=expert_reports,
    )


def verify_equivalence(g: GroupJudgment, tol: float = DEFAULT_EQUIVALENCE_TOL) -> bool:
    """Check the two aggregation routes land on the same group priorities.

    Route one aggregates the matrices directly; route two solves each
    expert separately and takes the divergence-minimizing weighted
    geometric mean of their vectors. The routes agree mathematically;
    this is a regression tripwire, exposed first class because the
    equivalence is the point of the group method.
    """
    direct = group_lls_priorities(g).group_w.w
    per_expert = [lls_priorities(mat).u for mat in g.matrices]
    merged = kl_aggregate(per_expert, g.alphas)
    via_divergence = merged / merged.sum()
    return bool(np.max(np.abs(direct - via_divergence)) <= tol)
