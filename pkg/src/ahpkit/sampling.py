"""Random generators for priority vectors and judgment matrices.

Used by the method-comparison command and by the demo scripts; tests
lean on the same generators so every randomized claim is reproducible
from a seed.
"""

from __future__ import annotations

import numpy as np

from .matrix import JudgmentMatrix, validate_judgment_matrix

LOG_UNIFORM_LOW = 0.1
LOG_UNIFORM_HIGH = 10.0


def log_uniform_priorities(
    rng: np.random.Generator,
    n: int,
    low: float = LOG_UNIFORM_LOW,
    high: float = LOG_UNIFORM_HIGH,
) -> np.ndarray:
    """Draw n positive components log-uniformly from [low, high]."""
    if n < 1:
        raise ValueError(f"need at least one component, got {n}")
    if not (0.0 < low < high):
        raise ValueError(f"need 0 < low < high, got [{low}, {high}]")
    return np.exp(rng.uniform(np.log(low), np.log(high), size=n))


def consistent_matrix(u, labels=()) -> JudgmentMatrix:
    """Build the exactly consistent matrix of ratios a_ij = u_i / u_j."""
    u = np.asarray(u, dtype=float)
    entries = u[:, None] / u[None, :]
    return validate_judgment_matrix(entries, labels=labels)


def perturbed_matrix(
    rng: np.random.Generator,
    u,
    noise: float,
    labels=(),
) -> JudgmentMatrix:
    """Consistent ratios with multiplicative lognormal noise above the diagonal.

    Each upper-triangle entry is (u_i / u_j) * exp(eps_ij) with eps_ij
    drawn from N(0, noise^2); the lower triangle mirrors the exact
    reciprocals, so the result is still a valid judgment matrix. noise=0
    reproduces :func:`consistent_matrix`.
    """
    if noise < 0.0:
        raise ValueError(f"noise standard deviation must be >= 0, got {noise}")
    u = np.asarray(u, dtype=float)
    n = u.size
    entries = u[:, None] / u[None, :]
    if noise > 0.0:
        eps = rng.normal(0.0, noise, size=(n, n))
        iu = np.triu_indices(n, k=1)
        factors = np.ones((n, n))
        factors[iu] = np.exp(eps[iu])
        entries = entries * factors
        entries[(iu[1], iu[0])] = 1.0 / entries[iu]
    return validate_judgment_matrix(entries, labels=labels)


def random_group(
    rng: np.random.Generator,
    n: int,
    m: int,
    noise: float = 0.1,
):
    """Draw one hidden priority vector and m noisy expert matrices around it.

    Returns (u_true, matrices, alphas) with alphas drawn positive and
    normalized to sum to 1. Convenience for demos and stress tests.
    """
    u_true = log_uniform_priorities(rng, n)
    matrices = [perturbed_matrix(rng, u_true, noise) for _ in range(m)]
    alphas = rng.uniform(0.2, 1.0, size=m)
    alphas = alphas / alphas.sum()
    return u_true, matrices, alphas


__all__ = [
    "LOG_UNIFORM_LOW",
    "LOG_UNIFORM_HIGH",
    "log_uniform_priorities",
    "consistent_matrix",
    "perturbed_matrix",
    "random_group",
]
