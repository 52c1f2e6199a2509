"""Evaluate the explicit analytic bound calculators on small fields.

Everything here is a closed formula: the logarithmic complexity of an
extension, the log-free zero-density bound, the zero-repulsion
thresholds, the Deuring-Heilbronn exclusion boundary, the classical
Brun-Titchmarsh constant, and the x-range thresholds where the counting
theorems apply.  Values that overflow doubles are carried in log space.
"""

import math

from chebkit import (FieldInvariants, brun_titchmarsh_constant, density_bound,
                     deuring_heilbronn_exclusion, log_complexity,
                     low_lying_density_bound, range_thresholds,
                     repulsion_threshold)

# a quadratic field K = Q(sqrt(5)) inside some abelian L with conductor 1
inv = FieldInvariants(n_K=2, D_K=5, Q=1, degree_LK=2, ramified_primes={5})
comp = log_complexity(inv)
print(f"complexity of (n_K=2, D_K=5, Q=1): {comp.value:.6f} "
      f"(branch: {'degree' if comp.degree_dominated else 'discriminant'}-dominated)")
print(f"inside the large-complexity regime: {comp.asymptotic}")

# zero-density bound at a few heights (returned in log space)
print("\nzero-density bound (e^(162 L) T^(81 n + 162))^(1-sigma):")
for sigma in (0.5, 0.9, 0.99):
    b = density_bound(inv, sigma, T=10.0)
    print(f"  sigma = {sigma}:  log N <= {b.log:10.2f}   "
          f"(value {'overflows' if b.value == math.inf else f'= {b.value:.3g}'})")

# counting low-lying zeros
print("\nlow-lying zero counts:")
for lam in (0.05, 0.2, 1.0):
    clamped = low_lying_density_bound(lam, clamp=True)
    print(f"  within lambda = {lam}: at most "
          f"{clamped.value if clamped.log < 10 else math.exp(clamped.log):.4g}")

# repulsion: how far the next zero must sit when one is exceptionally close
print("\nrepulsion thresholds for a zero at distance lambda1:")
for lam1 in (0.5, 0.08, 0.02, 0.005):
    print(f"  lambda1 = {lam1}: next zero beyond {repulsion_threshold(lam1):.4f}")

# Deuring-Heilbronn: a real zero near 1 pushes everything else away
print("\nexclusion boundary with a real zero at beta1 (L = 10):")
for beta1 in (0.99, 0.999, 0.9999):
    b = deuring_heilbronn_exclusion(FieldInvariants(1, 3, 2), beta1, T=1.0)
    print(f"  beta1 = {beta1}: other zeros have beta < {b:.6f}")

# the classical piecewise constant
print("\nclassical Brun-Titchmarsh constant:")
for theta in (0.05, 0.125, 0.3, 0.45, 0.55, 2 / 3, 0.9):
    print(f"  C({theta:.3f}) = {brun_titchmarsh_constant(theta):.6f}")

# where the counting theorems are actually proven to hold
rr = range_thresholds(inv)
print(f"\nrange thresholds for this field (natural logs of x):")
print(f"  basic    : log x >= {rr.basic.log:10.1f}")
print(f"  balanced : log x >= {rr.balanced.log:10.1f}")
print(f"  sharp    : log x >= {rr.sharp.log:10.1f}")
print(f"  compact  : log x >= {rr.compact.log:10.1f}   (M = {rr.complexity:.3f})")
print("desk-scale x sits far below all of them; the counting checks are "
      "therefore consistency checks, not theorem tests.")
