"""Traces of Frobenius and the Lang-Trotter counting functions.

For each good prime, a_p = p + 1 - #E(F_p) with |a_p| < 2 sqrt(p); fixing
the trace value (or the imaginary quadratic field generated by the
Frobenius) carves out a thin set of primes whose growth the package
reports descriptively.
"""

import numpy as np

from chebkit import (CurveModel, frobenius_field_count, growth_shape_report,
                     trace_match_count, trace_of_frobenius)
from chebkit.elliptic import trace_table

E = CurveModel(1, 1, label="y^2 = x^3 + x + 1")
print(E.label)

# individual traces
print("\ntraces at small good primes:")
for p in (5, 7, 11, 13, 10007):
    rec = trace_of_frobenius(E, p)
    print(f"  p = {p:6d}: a_p = {rec.a_p:4d},  a_p^2 - 4p has squarefree "
          f"kernel {rec.disc_part}")

# the trace histogram is approximately semicircular (scaled)
x = 20_000
ps, aps = trace_table(E, x)
print(f"\ntrace histogram over the {ps.size} good primes up to {x:,}:")
edges = np.linspace(-1.05, 1.05, 12)
normalized = aps / (2 * np.sqrt(ps.astype(float)))
hist, _ = np.histogram(normalized, bins=edges)
for lo, hi, n in zip(edges[:-1], edges[1:], hist):
    print(f"  a/(2 sqrt p) in [{lo:5.2f},{hi:5.2f}): {'#' * int(round(60 * n / ps.size))}")

# fixed trace: a = 0 (supersingular primes)
series = trace_match_count(E, 0, x, checkpoints=[10**3, 5 * 10**3, x])
print(f"\nsupersingular counts at checkpoints {series.checkpoints.astype(int).tolist()}: "
      f"{series.counts.astype(int).tolist()}")
shape = growth_shape_report(series, "trace")
print(f"sqrt-normalized ratios (should drift slowly if the conjectured "
      f"sqrt(x)/log x law holds): {np.round(shape.conjecture_ratio, 3).tolist()}")

# fixed Frobenius field
print(f"\nprimes whose Frobenius field is Q(sqrt(-11)) up to {x:,}: "
      f"{int(frobenius_field_count(E, -11, x).counts[-1])}")
print(f"... and Q(i): {int(frobenius_field_count(E, -4, x).counts[-1])}")
