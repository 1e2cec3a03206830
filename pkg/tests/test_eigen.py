import numpy as np
import pytest

from ahpkit import (
    DimensionError,
    inconsistency_index,
    lls_priorities,
    log_uniform_priorities,
    perturbed_matrix,
    saaty_priorities,
    validate_judgment_matrix,
)
from conftest import LAMBDA3


def test_consistent_matrix_gives_lambda_n():
    m = validate_judgment_matrix(
        [[1.0, 0.5, 0.25], [2.0, 1.0, 0.5], [4.0, 2.0, 1.0]]
    )
    report = saaty_priorities(m)
    assert report.converged
    assert abs(report.lambda_max - 3.0) <= 1e-8
    assert report.mu <= 1e-8
    assert np.max(np.abs(report.principal_w - np.array([1, 2, 4]) / 7.0)) <= 1e-8


def test_all_ones_gives_uniform(ones3):
    report = saaty_priorities(ones3)
    assert abs(report.lambda_max - 3.0) <= 1e-10
    assert np.max(np.abs(report.principal_w - 1.0 / 3.0)) <= 1e-10


def test_inconsistent3_matches_polynomial_root(inconsistent3):
    report = saaty_priorities(inconsistent3)
    assert report.converged
    assert report.lambda_max == pytest.approx(LAMBDA3, abs=1e-10)
    assert report.mu == pytest.approx((LAMBDA3 - 3) / 2, abs=1e-10)
    assert report.mu > 0


def test_lambda_at_least_n():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(2, 10))
        u = log_uniform_priorities(rng, n)
        m = perturbed_matrix(rng, u, noise=0.4)
        report = saaty_priorities(m)
        assert report.lambda_max >= n - 1e-8


def test_weights_sum_to_one_and_positive(inconsistent3):
    report = saaty_priorities(inconsistent3)
    assert abs(report.principal_w.sum() - 1.0) <= 1e-12
    assert np.all(report.principal_w > 0)


def test_initial_vector_does_not_change_result(inconsistent3):
    rng = np.random.default_rng(8)
    base = saaty_priorities(inconsistent3, tol=1e-12)
    for _ in range(5):
        start = rng.uniform(0.1, 10.0, size=3)
        other = saaty_priorities(inconsistent3, tol=1e-12, initial=start)
        assert np.max(np.abs(base.principal_w - other.principal_w)) <= 1e-10


def test_max_iter_exhaustion_reports_not_converged(inconsistent3):
    report = saaty_priorities(inconsistent3, tol=1e-16, max_iter=2)
    assert not report.converged
    assert report.iterations == 2


def test_mild_noise_preserves_ranking():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(3, 8))
        # Separate the components so the true ranking is unambiguous.
        u = np.sort(log_uniform_priorities(rng, n))[::-1]
        u *= np.logspace(0, n - 1, n, base=1.6)[::-1]
        m = perturbed_matrix(rng, u, noise=0.05)
        se = saaty_priorities(m)
        lls = lls_priorities(m)
        assert np.array_equal(
            np.argsort(-se.principal_w, kind="stable"), lls.ranking
        )


def test_inconsistency_index_arithmetic():
    assert inconsistency_index(3.0, 3) == 0.0
    assert inconsistency_index(3.2, 3) == pytest.approx(0.1, rel=1e-12)
    for n in (2, 5, 9):
        assert inconsistency_index(float(n), n) == 0.0


def test_inconsistency_index_clamps_tiny_negatives():
    assert inconsistency_index(3.0 - 1e-12, 3) == 0.0
    assert inconsistency_index(2.0, 3) == pytest.approx(-0.5)


def test_inconsistency_index_rejects_small_n():
    with pytest.raises(DimensionError):
        inconsistency_index(1.0, 1)


def test_bad_arguments_rejected(inconsistent3):
    with pytest.raises(ValueError):
        saaty_priorities(inconsistent3, tol=0.0)
    with pytest.raises(ValueError):
        saaty_priorities(inconsistent3, max_iter=0)
    with pytest.raises(ValueError):
        saaty_priorities(inconsistent3, initial=np.array([1.0, -1.0, 1.0]))
