"""Shared fixtures and frozen reference values.

The numeric constants below were computed through independent routes
before being frozen here: the 3x3 weights through a dense least-squares
solve of the stationarity system, the eigenvalue through the roots of
the characteristic polynomial (cross-checked against a dense
eigensolver), and the group example by brute-force minimization of the
weighted objective on a grid. Tests compare library output against
these constants at the contract tolerances.
"""

import numpy as np
import pytest

from ahpkit import validate_judgment_matrix

# --- 3x3 inconsistent example ------------------------------------------
# A = [[1, 2, 4], [1/2, 1, 3], [1/4, 1/3, 1]]; a_12 * a_23 = 6 != 4 = a_13.
INCONSISTENT3 = [[1.0, 2.0, 4.0], [0.5, 1.0, 3.0], [0.25, 1.0 / 3.0, 1.0]]

# Normalized weights from the linear-system solve (min-norm, then exp).
W3 = (0.5584245430947973, 0.31961826393597564, 0.1219571929692271)
# Unnormalized components: u = (2, 1.5^(1/3), 12^(-1/3)).
U3 = (2.0, 1.1447142425533319, 0.4367902323681494)
# Objective value and squared distance at the solution (identical).
DISTANCE3_SQ = 0.10960130259544368
SIGMA3_SQ = 0.05480065129772184
# Dominant eigenvalue from the characteristic polynomial roots.
LAMBDA3 = 3.0182947072896296
# Largest entry of the consistent approximation: u_1/u_3 = 2 * 12^(1/3).
B13 = 4.5788569702133275

# --- 2-expert 2x2 group example -----------------------------------------
# A1 = [[1, 2], [1/2, 1]], A2 = [[1, 8], [1/8, 1]], alphas = (1/2, 1/2).
# u_1 = (2 * 8)^(1/4) = 2 exactly; brute-force grid minimization of the
# weighted objective lands on the same point.
GROUP_U = (2.0, 0.5)
GROUP_W = (0.8, 0.2)


@pytest.fixture
def inconsistent3():
    return validate_judgment_matrix(INCONSISTENT3)


@pytest.fixture
def ones3():
    return validate_judgment_matrix(np.ones((3, 3)))


@pytest.fixture
def group_pair():
    m1 = validate_judgment_matrix([[1.0, 2.0], [0.5, 1.0]])
    m2 = validate_judgment_matrix([[1.0, 8.0], [0.125, 1.0]])
    return m1, m2
