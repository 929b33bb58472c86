"""
Growing n with slowly growing information
=========================================

In the model ``y_i = theta / sqrt(i) + e_i`` the information about theta
grows like the harmonic number, not like n. The BIC-structured factor uses
the raw n and piles up evidence for the null much faster than the
linear-model factor driven by the actual information.
"""

import pcalib

rows = pcalib.findley_curves([10, 100, 1000, 10_000, 100_000], [0.05, 0.01])
print("alpha       n      H_n    P_PG    P_PL")
for row in rows:
    print(f"{row['alpha']:5.2f} {row['n']:7d} {row['H_n']:8.3f} "
          f"{row['P_PG']:7.4f} {row['P_PL']:7.4f}")

# with H_n in place of n the two factors coincide
tess = pcalib.findley_curves([10_000], [0.05], bic_n="tess")[0]
print(f"\nn -> H_n at n=10^4: P_PG = {tess['P_PG']:.4f}, P_PL = {tess['P_PL']:.4f}")

# simulated data under theta = 0 give a non-zero estimate and a larger C
sim = pcalib.findley_curves([100, 1000], [0.05], mode="simulate", seed=3)
for row in sim:
    print(f"simulated n={row['n']}: theta_hat={row['theta_hat']:+.3f}  C={row['C']:.3f}")
