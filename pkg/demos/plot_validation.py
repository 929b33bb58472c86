"""
Checking that the bound is itself a valid p-value
=================================================

If p is Beta(xi, 1) under the null then ``B_L(p, xi)`` satisfies
``P(B_L <= alpha) <= alpha``. The exact probability has a closed form,
``rho**xi``, so Monte Carlo can be checked against it too.
"""

import pcalib

grid = tuple(round(0.05 * i, 2) for i in range(1, 7))
for xi in (1.0, 2.0):
    plan = pcalib.SimulationPlan(seed=7, samples=200_000, xi=xi, alpha_grid=grid, batches=4)
    res = pcalib.verify_rlb_validity(plan, workers=2)
    print(f"xi={xi}: verdict {res.verdict}")
    for a, emp, ex, se in zip(res.alphas, res.empirical, res.exact, res.standard_errors):
        print(f"   alpha={a:.2f}  empirical={emp:.5f}  exact={ex:.5f}  se={se:.5f}")

# the same plan always gives the same answer
plan = pcalib.SimulationPlan(seed=7, samples=10_000, xi=1.5, alpha_grid=grid)
print("\nreproducible:", pcalib.verify_rlb_validity(plan).to_dict()
      == pcalib.verify_rlb_validity(plan).to_dict())
