"""
Significance levels that shrink with sample size
================================================

A fixed alpha ignores how much information the data carry. The PBIC
adjusted level ties alpha to n through the chi-square critical value and
a small correction ``C`` computed from the data.
"""

import math

import pcalib

# two proportions: the correction comes from the effective sample size
data = pcalib.TwoProportionData(10, 10, sigma1_sq=0.25, sigma2_sq=0.25, p_hat_diff=0.2)
tq = pcalib.tess_two_proportions(data)
print(f"d={tq.d:.4f}  n_e={tq.n_e:.1f}  v={tq.v:.6f}  C={tq.C:.6f}")
print(f"alpha_n = {pcalib.adaptive_alpha_two_proportions(0.05, 20, tq.C):.5f}")

# as n grows the level keeps falling
print("\n n1   n2   alpha_n (C = log 2)")
for n1, n2 in [(10, 10), (25, 25), (50, 50), (100, 50), (50, 100), (100, 100)]:
    level = pcalib.adaptive_alpha_two_proportions(0.05, n1 + n2, math.log(2))
    print(f"{n1:4d} {n2:4d}   {level:.4f}")

# nested linear models use the Gram determinant ratio b
print("\nlinear model, q=1, n=82, j=3, b=100:",
      f"{pcalib.adaptive_alpha_pbic_linear(0.05, 1, 82, 3, 100.0):.6f}")

# one-way ANOVA with k groups of r replicates
for k, r in [(2, 10), (3, 10), (5, 20)]:
    print(f"ANOVA k={k} r={r}: {pcalib.adaptive_alpha_anova(k, r, 0.05):.6f}")
