"""Frobenius classes in quadratic and cyclotomic fields.

For Q(sqrt(d)) a prime splits or stays inert according to the Kronecker
symbol of the discriminant; for Q(zeta_q) the class is the residue p mod
q.  Each class captures its density share of the primes, and the
psi/theta/pi chain bounds the unweighted count through the weighted one.
"""

from chebkit import (ConjClass, counting_chain_check, cyclotomic_field,
                     density_ratio_report, li, pi_class, psi_class,
                     quadratic_field, theta_class)
from chebkit.chebotarev import INERT, SPLIT, artin_class, conj_classes

qi = quadratic_field(-1)  # the Gaussian field
print("Q(i): disc = -4, classes split/inert")
for p in (2, 3, 5, 13, 19):
    cls = artin_class(qi, p)
    print(f"  p = {p:2d}: {'ramified' if cls is None else cls.key}")

x = 10**6
print(f"\ncounts up to {x:,} (density share 1/2 each):")
expected = li(float(x)) / 2
for key in (SPLIT, INERT):
    n = pi_class(qi, ConjClass(key), x)
    print(f"  {key:5s}: {n:7,d}   expected ~ {expected:,.0f}  ratio {n / expected:.4f}")

# the weighted counters and the partial-summation chain
print("\npsi/theta/pi chain for the split class at x = 10^5:")
cls = ConjClass(SPLIT)
print(f"  psi   = {psi_class(qi, cls, 10**5):,.1f}   (log-weighted, prime powers)")
print(f"  theta = {theta_class(qi, cls, 10**5):,.1f}   (log-weighted, primes only)")
print(f"  pi    = {pi_class(qi, cls, 10**5):,d}")
chain = counting_chain_check(qi, cls, 10.0, 10**5)
print(f"  chain bound: pi <= {chain.rhs:,.1f}  (margin {chain.margin:,.1f})")

# cyclotomic classes are progressions; every class gets its 1/phi(q) share
print("\nQ(zeta_7): residue classes at x = 10^6")
c7 = cyclotomic_field(7)
for cls in conj_classes(c7):
    r = density_ratio_report(c7, cls, x)
    print(f"  class {cls.key}: {r.count:7,d}   ratio to Li/6: {r.ratio:.4f}   "
          f"proven range: {r.in_proven_range}")
