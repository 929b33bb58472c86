"""
Calibrated Bayes factors next to exact ones
===========================================

Evaluating the minimum Bayes factor at an information-adjusted level gives
factors on the scale of objective Bayes factors. Here they sit beside the
exact two-sample t test factor and the posterior lower bound.
"""

import numpy as np
from scipy import special

import pcalib

n1 = n2 = 25
n = n1 + n2
tq = pcalib.tess_two_means(pcalib.TwoMeansData(n1, n2))
b = pcalib.two_means_design_ratio(n1, n2)

print("  alpha   P_RLB   P_PG    P_PL    P_BF")
for alpha in (0.001, 0.01, 0.05, 0.1, 0.2):
    t = special.stdtrit(n - 1, 1 - alpha / 2)
    cols = [
        pcalib.rlb(alpha),
        pcalib.bf_bic(alpha, 1, n, tq.C),
        pcalib.bf_pbic_linear(alpha, 1, n, 2, b, tq.C),
        pcalib.bf_ttest(t, n, 6.0),
    ]
    print(f"{alpha:7.3f} " + " ".join(f"{pcalib.posterior_from_bf(v):7.4f}" for v in cols))

# the k = 2 ANOVA factor has a closed form
r = np.arange(2, 7)
closed = [pcalib.bf_anova_two_groups(int(ri), 0.05) for ri in r]
general = [pcalib.bf_anova(2, int(ri), 0.05) for ri in r]
print("\nk=2 closed form matches:", np.allclose(closed, general, rtol=1e-12))
