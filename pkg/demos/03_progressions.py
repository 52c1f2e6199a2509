"""Primes in arithmetic progressions and the Brun-Titchmarsh inequality.

Counts are exact; the checks compare each residue-class count against the
Montgomery-Vaughan bound 2/(1-theta) x/(phi(q) log x) and the sharper
piecewise-constant variant (whose o(1) term is a configurable slack).
"""

import math

from chebkit import (APQuery, euler_phi, maynard_check,
                     montgomery_vaughan_check, pi_ap, residue_counts)

x = 10**6
print(f"counting primes up to {x:,}\n")

# a single progression
q, a = 4, 1
query = APQuery(q=q, a=a, x=x)
print(f"pi({x:g}; {q}, {a}) = {pi_ap(query):,}")
mv = montgomery_vaughan_check(query)
print(f"Montgomery-Vaughan bound: {mv.rhs:,.1f}  (margin {mv.margin:,.1f})")
my = maynard_check(query)
print(f"piecewise-constant bound: {my.rhs:,.1f}  (heuristic slack 0.1)")

# the whole residue spectrum for one modulus
q = 12
counts = residue_counts(q, x)
print(f"\nresidue spectrum mod {q} (phi = {euler_phi(q)}):")
for a in range(q):
    if math.gcd(a, q) == 1:
        print(f"  a = {a:2d}: {counts[a]:7,d}")
print(f"  expected per class ~ {x / (euler_phi(q) * math.log(x)):,.0f} "
      f"(x / (phi(q) log x))")

# how the bound tightens/loosens with theta = log q / log x
print("\nbound quality across moduli at x = 10^6:")
print(f"{'q':>5} {'theta':>7} {'max count':>10} {'MV bound':>10} {'ratio':>7}")
for q in (3, 10, 50, 199, 997):
    counts = residue_counts(q, x)
    biggest = max(counts[a] for a in range(q) if math.gcd(a, q) == 1)
    theta = math.log(q) / math.log(x)
    rhs = 2 / (1 - theta) * x / (euler_phi(q) * math.log(x))
    print(f"{q:>5} {theta:>7.3f} {biggest:>10,} {rhs:>10,.0f} {biggest / rhs:>7.3f}")
print("\nthe ratio staying below 1 everywhere is the Brun-Titchmarsh")
print("phenomenon; equality would need a wildly biased progression.")
