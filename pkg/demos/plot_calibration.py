"""
From a p-value to a lower bound on the null posterior
=====================================================

The minimum Bayes factor ``-e p log p`` caps how much evidence a p-value
can carry against the null. Pseudo p-values from discrete tests behave
like Beta(xi0, 1) draws, and the bound tightens as xi0 grows.
"""

import numpy as np

import pcalib

# a p-value of 0.05 is far weaker evidence than it sounds
bf = pcalib.rlb(0.05)
print(f"B_L(0.05) = {bf:.6f}, min P(H0 | data) = {pcalib.posterior_from_bf(bf):.6f}")

# the same p-value under a Beta(2, 1) null shape
bf2 = pcalib.rlb_xi(0.05, 2.0)
print(f"B_L(0.05, xi0=2) = {bf2:.6f}, posterior {pcalib.posterior_from_bf(bf2):.6f}")

# posterior lower-bound curves, one column per shape
p = np.array([0.001, 0.005, 0.01, 0.05, 0.1, 0.2, 0.3])
print("\n     p   " + "".join(f"xi0={xi:<6g}" for xi in (1, 1.1, 1.2, 1.3)))
for pi in p:
    row = [pcalib.posterior_from_bf(pcalib.rlb_xi(pi, xi)) for xi in (1, 1.1, 1.2, 1.3)]
    print(f"{pi:7.3f}  " + "".join(f"{v:<10.4f}" for v in row))

# prior mass on the null shifts the whole curve
for pi0 in (0.2, 0.5, 0.8):
    print(f"pi0={pi0}: posterior at p=0.05 is {pcalib.posterior_from_bf(bf, pi0):.4f}")

# above 1/e the bound is flat at 1
print("\nB_L(0.5) =", pcalib.rlb(0.5))
