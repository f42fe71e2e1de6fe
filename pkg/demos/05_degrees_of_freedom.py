"""Binomial degrees-of-freedom estimation from distance distributions.

If impostor distances behave like fractions m/N of N independent coin
flips, the method of moments recovers N from the spread:
N = p (1 - p) / var.  The seed-size arithmetic gives an independent,
reconstruction-based notion of the same quantity.
"""

import numpy as np
from fractions import Fraction

from seeded_ising import DistanceSample, binomial_fit, effective_dof

rng = np.random.default_rng(2024)

# synthetic impostor scores with a known answer
N_true, p_true = 352, 0.4947
draws = rng.binomial(N_true, p_true, size=200_000) / N_true
fit = binomial_fit(DistanceSample(draws, label="impostor"))
print(f"generated: Binomial(N={N_true}, p={p_true}) fractions")
print(f"moments fit: p = {fit.p:.4f}, N = {fit.n_dof}")
print(f"sample mean {fit.sample_mean:.4f}, sample var {fit.sample_var:.3e}")

hist_fit = binomial_fit(DistanceSample(draws), method="histogram")
print(f"histogram least-squares cross-check: N = {hist_fit.n_dof}")

# the reconstruction view: how many pinned bits a 2048-bit template needs
print()
for frac in (Fraction(1, 5), Fraction(1, 6), Fraction(1, 7)):
    bits = effective_dof(frac, 2048)
    print(f"seed fraction {frac}: {bits} of 2048 bits ({bits / 2048:.2%})")
print("a 1/6 seed needs 342 bits, close to the moments estimate above")
