"""Contract acceptance suite.

One test per acceptance criterion, each printing a single
``acceptance: <name>: PASS|FAIL`` line (run with ``-s`` to watch them
go by). Tolerances are part of the contract and are asserted literally;
randomized sweeps run from fixed seeds so failures reproduce.
"""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from ahpkit import (
    GroupJudgment,
    SessionStore,
    consistency_report,
    group_lls_priorities,
    kl_divergence,
    lls_linear_system_oracle,
    lls_objective,
    lls_priorities,
    log_uniform_priorities,
    perturbed_matrix,
    saaty_priorities,
    validate_judgment_matrix,
    verify_equivalence,
    weighted_divergence,
)
from ahpkit.service import create_app

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
GOLDEN = TESTS / "golden"

NOISE_LEVELS = (0.01, 0.1, 0.5)


def _verdict(name: str, failures: list) -> None:
    print(f"\nacceptance: {name}: {'PASS' if not failures else 'FAIL'}")
    assert not failures, f"{name}: {len(failures)} failing cases; first: {failures[0]}"


@pytest.fixture(scope="module")
def oracle_suite():
    """500 perturbed matrices: consistent base times lognormal noise."""
    rng = np.random.default_rng(20260822)
    suite = []
    for k in range(500):
        n = int(rng.integers(2, 13))
        u = log_uniform_priorities(rng, n)
        suite.append(perturbed_matrix(rng, u, NOISE_LEVELS[k % 3]))
    return suite


@pytest.mark.slow
def test_consistent_recovery_suite():
    rng = np.random.default_rng(11)
    failures = []
    for k in range(1000):
        n = int(rng.integers(2, 13))
        u = log_uniform_priorities(rng, n)
        mat = validate_judgment_matrix(u[:, None] / u[None, :])
        pv = lls_priorities(mat)
        w_true = u / u.sum()
        if np.max(np.abs(pv.w - w_true)) > 1e-10:
            failures.append((k, "w", float(np.max(np.abs(pv.w - w_true)))))
            continue
        report = consistency_report(mat, pv)
        if n >= 3 and not report.sigma2 <= 1e-20:
            failures.append((k, "sigma2", report.sigma2))
            continue
        se = saaty_priorities(mat)
        if abs(se.lambda_max - n) > 1e-8 or not (0.0 <= se.mu <= 1e-8):
            failures.append((k, "se", se.lambda_max, se.mu))
    _verdict("consistent-recovery (1000 matrices, N 2..12)", failures)


def test_closed_form_matches_linear_system_oracle(oracle_suite):
    failures = []
    for k, mat in enumerate(oracle_suite):
        direct = lls_priorities(mat)
        oracle = lls_linear_system_oracle(mat)
        gap = max(
            float(np.max(np.abs(direct.w - oracle.w))),
            float(np.max(np.abs(direct.u - oracle.u))),
        )
        if gap > 1e-10:
            failures.append((k, mat.n, gap))
    _verdict("closed form vs linear-system oracle (500 matrices)", failures)


def test_solution_is_stationary_and_locally_optimal(oracle_suite):
    rng = np.random.default_rng(13)
    failures = []
    for k, mat in enumerate(oracle_suite):
        x = np.log(lls_priorities(mat).u)
        s_star = lls_objective(mat, x)

        grad = np.zeros(mat.n)
        h = 1e-6
        for i in range(mat.n):
            step = np.zeros(mat.n)
            step[i] = h
            grad[i] = (lls_objective(mat, x + step) - lls_objective(mat, x - step)) / (2 * h)
        if np.max(np.abs(grad)) > 1e-6:
            failures.append((k, "gradient", float(np.max(np.abs(grad)))))
            continue

        for _ in range(100):
            direction = rng.normal(size=mat.n)
            direction -= direction.mean()  # the objective ignores translation
            norm = np.linalg.norm(direction)
            if norm == 0.0:
                continue
            radius = rng.uniform(0.01, 0.1)
            if s_star > lls_objective(mat, x + direction * (radius / norm)):
                failures.append((k, "neighbor beat the solution"))
                break
    _verdict("stationarity and local optimality (oracle suite)", failures)


def test_variance_distance_identity(oracle_suite):
    failures = []
    for k, mat in enumerate(oracle_suite):
        report = consistency_report(mat, lls_priorities(mat))
        n = mat.n
        if n == 2:
            if report.distance != 0.0 or report.sigma2 is not None:
                failures.append((k, "degenerate report", report.distance))
            continue
        lhs = report.distance**2
        rhs = (n - 1) * (n - 2) * report.sigma2
        if abs(lhs - rhs) > 1e-10 * max(lhs, rhs, 1e-300):
            failures.append((k, lhs, rhs))
    _verdict("distance^2 = (N-1)(N-2) sigma^2 (oracle suite)", failures)


@pytest.mark.slow
def test_group_divergence_equivalence():
    rng = np.random.default_rng(17)
    failures = []
    for k in range(500):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(2, 11))
        u_true = log_uniform_priorities(rng, n)
        matrices = [
            perturbed_matrix(rng, u_true, NOISE_LEVELS[k % 3]) for _ in range(m)
        ]
        alphas = rng.uniform(0.2, 1.0, size=m)
        g = GroupJudgment(matrices, alphas / alphas.sum())
        if not verify_equivalence(g, tol=1e-9):
            failures.append((k, "routes disagree", m, n))
            continue

        result = group_lls_priorities(g)
        u = result.group_w.u
        expert_us = [pv.u for pv in result.expert_vectors]
        grad = np.zeros(n)
        for i in range(n):
            h = 1e-7 * u[i]
            up, down = u.copy(), u.copy()
            up[i] += h
            down[i] -= h
            grad[i] = (
                weighted_divergence(up, expert_us, g.alphas)
                - weighted_divergence(down, expert_us, g.alphas)
            ) / (2 * h)
        if np.max(np.abs(grad)) > 1e-6:
            failures.append((k, "divergence gradient", float(np.max(np.abs(grad)))))
    _verdict("group aggregation equals divergence minimization (500 groups)", failures)


def test_degenerate_cases():
    rng = np.random.default_rng(19)
    failures = []

    # A single expert with weight 1 is passed through untouched.
    for k in range(20):
        n = int(rng.integers(2, 11))
        mat = perturbed_matrix(rng, log_uniform_priorities(rng, n), 0.3)
        single = lls_priorities(mat)
        grouped = group_lls_priorities(GroupJudgment([mat], [1.0])).group_w
        if not (
            np.array_equal(grouped.u, single.u) and np.array_equal(grouped.w, single.w)
        ):
            failures.append(("single expert differs", k))

    # A panel of identical experts agrees with any one of them.
    for k in range(20):
        n = int(rng.integers(2, 11))
        m = int(rng.integers(2, 6))
        mat = perturbed_matrix(rng, log_uniform_priorities(rng, n), 0.3)
        alphas = rng.uniform(0.2, 1.0, size=m)
        grouped = group_lls_priorities(
            GroupJudgment([mat] * m, alphas / alphas.sum())
        ).group_w
        gap = float(np.max(np.abs(grouped.w - lls_priorities(mat).w)))
        if gap > 1e-12:
            failures.append(("identical experts differ", k, gap))

    # Two alternatives can never be inconsistent.
    for k in range(50):
        value = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        mat = validate_judgment_matrix([[1.0, value], [1.0 / value, 1.0]])
        report = consistency_report(mat, lls_priorities(mat))
        if report.distance != 0.0 or report.sigma2 is not None or not report.is_consistent:
            failures.append(("2x2 not degenerate", value))

    # Indifference across the board means uniform weights for both methods.
    for n in range(2, 10):
        mat = validate_judgment_matrix(np.ones((n, n)))
        uniform = np.full(n, 1.0 / n)
        if not np.array_equal(lls_priorities(mat).w, uniform):
            failures.append(("all-ones lls", n))
        if not np.array_equal(saaty_priorities(mat).principal_w, uniform):
            failures.append(("all-ones se", n))

    _verdict("degenerate cases (single expert, clones, 2x2, all-ones)", failures)


def test_permutation_and_reciprocal_symmetry():
    rng = np.random.default_rng(23)
    failures = []
    for k in range(200):
        n = int(rng.integers(2, 11))
        mat = perturbed_matrix(rng, log_uniform_priorities(rng, n), NOISE_LEVELS[k % 3])
        pv = lls_priorities(mat)

        perm = rng.permutation(n)
        permuted = validate_judgment_matrix(mat.entries[np.ix_(perm, perm)])
        gap = float(np.max(np.abs(lls_priorities(permuted).w - pv.w[perm])))
        if gap > 1e-12:
            failures.append((k, "permutation", gap))
            continue

        flipped = validate_judgment_matrix(1.0 / mat.entries)
        inverted = (1.0 / pv.u) / np.sum(1.0 / pv.u)
        gap = float(np.max(np.abs(lls_priorities(flipped).w - inverted)))
        if gap > 1e-12:
            failures.append((k, "reciprocal", gap))
    _verdict("permutation equivariance and reciprocal inversion (200 matrices)", failures)


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "ahpkit.cli", *args], capture_output=True
    )


@pytest.mark.slow
def test_cli_golden_outputs():
    failures = []
    runs = [
        (
            ("solve", "--input", str(FIXTURES / "inconsistent3.json")),
            GOLDEN / "solve_inconsistent3_lls.json",
        ),
        (
            ("solve", "--input", str(FIXTURES / "ones3.json"), "--method", "both"),
            GOLDEN / "solve_ones3_both.json",
        ),
        (
            (
                "group",
                "--input", str(FIXTURES / "expert1.json"),
                "--input", str(FIXTURES / "expert2.json"),
                "--weight", "0.5",
                "--weight", "0.5",
            ),
            GOLDEN / "group_pair.json",
        ),
    ]
    for args, golden in runs:
        proc = _run_cli(*args)
        if proc.returncode != 0:
            failures.append((args[0], "exit", proc.returncode))
        elif proc.stdout != golden.read_bytes():
            failures.append((args[0], "bytes differ from", golden.name))

    probes = [
        (("solve", "--input", str(FIXTURES / "bad.csv")), 2),
        (("solve", "--input", str(FIXTURES / "labeled3.csv"), "--strict-scale"), 0),
        (("solve", "--input", str(FIXTURES / "missing.json")), 4),
    ]
    for args, expected in probes:
        proc = _run_cli(*args)
        if proc.returncode != expected:
            failures.append((args, "expected exit", expected, "got", proc.returncode))
    _verdict("byte-exact CLI golden outputs and exit codes", failures)


def test_api_round_trip_matches_library_bitwise():
    failures = []
    app = create_app(SessionStore())
    judgments = [(0, 1, 3.0), (0, 2, 5.0), (0, 3, 7.0), (1, 2, 2.0), (1, 3, 4.0), (2, 3, 1.5)]
    with TestClient(app) as client:
        created = client.post(
            "/api/v1/sessions", json={"labels": ["a", "b", "c", "d"]}
        ).json()
        for i, j, value in judgments:
            body = client.put(
                f"/api/v1/sessions/{created['id']}/experts/0/judgments",
                json={"i": i, "j": j, "value": value},
            ).json()
            if body["matrix"][i][j] != value or body["matrix"][j][i] != 1.0 / value:
                failures.append(("reciprocal not visible after PUT", i, j))

        response = client.get(
            f"/api/v1/sessions/{created['id']}/priorities", params={"method": "both"}
        ).json()

    entries = np.full((4, 4), np.nan)
    np.fill_diagonal(entries, 1.0)
    for i, j, value in judgments:
        entries[i, j] = value
        entries[j, i] = 1.0 / value
    mat = validate_judgment_matrix(entries, labels=("a", "b", "c", "d"))
    pv = lls_priorities(mat)
    se = saaty_priorities(mat)

    expert = response["experts"][0]
    if expert["w"] != [float(x) for x in pv.w]:
        failures.append(("lls weights differ", expert["w"]))
    if expert["u"] != [float(x) for x in pv.u]:
        failures.append(("lls components differ", expert["u"]))
    if expert["se"]["w"] != [float(x) for x in se.principal_w]:
        failures.append(("se weights differ", expert["se"]["w"]))
    if expert["se"]["lambda_max"] != float(se.lambda_max):
        failures.append(("lambda_max differs",))
    _verdict("API round trip is bit-identical to the library", failures)
