#!/usr/bin/env python3
# Walkthrough: one decision maker ranking three laptops by overall value.
#
# The comparison ratios say "A is twice as good as B", etc. We derive
# weights, look at how self-contradictory the judgments are, and print
# the closest fully coherent matrix.

import numpy as np

from ahpkit import (
    consistency_report,
    consistent_approximation,
    lls_priorities,
    saaty_priorities,
    validate_judgment_matrix,
)

labels = ("ultrabook", "workstation", "budget")

# a_ij > 1 means row beats column. Note the hidden tension here: the
# ultrabook is 2x the workstation and the workstation 3x the budget
# model, so transitively ultrabook/budget "should" be 6, but the
# decision maker said 4.
a = validate_judgment_matrix(
    [
        [1.0, 2.0, 4.0],
        [0.5, 1.0, 3.0],
        [0.25, 1.0 / 3.0, 1.0],
    ],
    labels=labels,
)

pv = lls_priorities(a)
print("geometric-mean weights:")
for label, weight in zip(labels, pv.w):
    print(f"  {label:<12} {weight:.4f}")
print("ranking:", " > ".join(labels[i] for i in pv.ranking))

report = consistency_report(a, pv)
print(f"\nlog distance to nearest coherent matrix: {report.distance:.4f}")
print(f"estimated judgment noise variance:       {report.sigma2:.4f}")

# The eigenvector route gives nearly the same answer on a mildly
# inconsistent matrix; its own inconsistency index is mu.
se = saaty_priorities(a)
print(f"\neigenvector weights:  {np.round(se.principal_w, 4)}")
print(f"lambda_max = {se.lambda_max:.6f}  mu = {se.mu:.6f}")

# What would a perfectly coherent version of these judgments look like?
smooth = consistent_approximation(a)
print("\nclosest coherent matrix (ratios of the derived weights):")
print(np.round(smooth.entries, 3))
