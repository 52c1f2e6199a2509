"""Frobenius-class prime counting for quadratic and cyclotomic extensions
of the rationals, the psi/theta/pi chain linking them, and the smoothed
prime sum evaluated directly over prime powers.

Conventions: the class indicator at a ramified prime is 0 (deterministic,
and safe for every upper-bound comparison); the weighted counters use a
strict cutoff (norm < x) while the unweighted pi counter is inclusive
(norm <= x).  The off-by-one when x is itself a counted prime is accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arith import is_squarefree, kronecker_table
from .bounds import FieldInvariants, range_thresholds
from .errors import DomainError
from .progressions import euler_phi
from .reports import BoundReport, PowerValue
from .sieve import li, prime_powers, primes_upto
from .weights import WeightSpec, weight_value

SPLIT = "split"
INERT = "inert"
FULL = "full"


@dataclass(frozen=True)
class AbelianExtension:
    """A quadratic field Q(sqrt(d)), a cyclotomic field Q(zeta_q), or the
    trivial extension Q itself (the full-group degenerate case)."""

    kind: str                 # "quadratic" | "cyclotomic" | "trivial"
    d: int = 0                # squarefree defining integer (quadratic)
    q: int = 0                # cyclotomic conductor

    def __post_init__(self):
        if self.kind == "quadratic":
            if self.d in (0, 1) or not is_squarefree(self.d):
                raise DomainError("quadratic field needs squarefree d != 0, 1")
        elif self.kind == "cyclotomic":
            if self.q < 3:
                raise DomainError("cyclotomic field needs q >= 3")
        elif self.kind != "trivial":
            raise DomainError(f"unknown extension kind {self.kind!r}")

    @property
    def disc(self) -> int:
        if self.kind == "quadratic":
            return self.d if self.d % 4 == 1 else 4 * self.d
        if self.kind == "cyclotomic":
            return self.q  # stand-in modulus; ramified set is p | q
        return 1

    @property
    def group_order(self) -> int:
        if self.kind == "quadratic":
            return 2
        if self.kind == "cyclotomic":
            return euler_phi(self.q)
        return 1

    @property
    def ramified(self) -> frozenset:
        if self.kind == "trivial":
            return frozenset()
        m = abs(self.disc) if self.kind == "quadratic" else self.q
        return frozenset(p for p in range(2, m + 1) if m % p == 0 and _is_prime_small(p))


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return False
    return True


def quadratic_field(d: int) -> AbelianExtension:
    return AbelianExtension(kind="quadratic", d=d)


def cyclotomic_field(q: int) -> AbelianExtension:
    return AbelianExtension(kind="cyclotomic", q=q)


def trivial_extension() -> AbelianExtension:
    return AbelianExtension(kind="trivial")


@dataclass(frozen=True)
class ConjClass:
    """A singleton Frobenius class: split/inert for quadratic fields, a
    coprime residue for cyclotomic ones, the full class for the trivial
    extension."""

    key: object

    def __repr__(self):
        return f"ConjClass({self.key!r})"


def conj_classes(ext: AbelianExtension) -> list[ConjClass]:
    if ext.kind == "quadratic":
        return [ConjClass(SPLIT), ConjClass(INERT)]
    if ext.kind == "cyclotomic":
        return [ConjClass(a) for a in range(1, ext.q) if math.gcd(a, ext.q) == 1]
    return [ConjClass(FULL)]


def class_share(ext: AbelianExtension, cls: ConjClass) -> float:
    """|C|/|G| for the singleton class."""
    return 1.0 / ext.group_order


def artin_class(ext: AbelianExtension, p: int) -> Optional[ConjClass]:
    """Frobenius class of an unramified prime; None marks ramification."""
    if ext.kind == "trivial":
        return ConjClass(FULL)
    if ext.kind == "quadratic":
        disc = ext.disc
        sym = kronecker_table(disc, abs(disc))[p % abs(disc)]
        if sym == 0:
            return None
        return ConjClass(SPLIT) if sym == 1 else ConjClass(INERT)
    if p % ext.q == 0 or math.gcd(p, ext.q) != 1:
        return None
    return ConjClass(p % ext.q)


def _class_weights(ext: AbelianExtension, cls: ConjClass,
                   primes: np.ndarray, exps: np.ndarray) -> np.ndarray:
    """Indicator: does Frobenius(p)^m land in the class?  0 at ramified p."""
    if ext.kind == "trivial":
        return np.ones(primes.size, dtype=float)
    if ext.kind == "quadratic":
        disc = ext.disc
        table = np.asarray(kronecker_table(disc, abs(disc)), dtype=np.int64)
        sym = table[primes % abs(disc)]
        odd = exps % 2 == 1
        if cls.key == SPLIT:
            # identity class: split primes at every exponent, inert at even ones
            sel = (sym == 1) | ((sym == -1) & ~odd)
        elif cls.key == INERT:
            sel = (sym == -1) & odd
        else:
            raise DomainError(f"unknown quadratic class {cls.key!r}")
        return sel.astype(float)
    a = int(cls.key)
    if math.gcd(a, ext.q) != 1:
        raise DomainError(f"class residue {a} not coprime to {ext.q}")
    vals = _powmod_vec(primes, exps, ext.q)
    coprime = np.gcd(primes % ext.q, ext.q) == 1
    return ((vals == a % ext.q) & coprime).astype(float)


def _powmod_vec(bases: np.ndarray, exps: np.ndarray, mod: int) -> np.ndarray:
    out = np.empty(bases.size, dtype=np.int64)
    for i in range(bases.size):
        out[i] = pow(int(bases[i]), int(exps[i]), mod)
    return out


def psi_class(ext: AbelianExtension, cls: ConjClass, x: float) -> float:
    """Weighted count sum_{p^m < x} log(p) * [Frob(p)^m in C] (strict <)."""
    if x <= 1:
        raise DomainError("psi requires x > 1")
    values, primes, exps = prime_powers(x, strict=True)
    w = _class_weights(ext, cls, primes, exps)
    return float(np.sum(w * np.log(primes)))


def theta_class(ext: AbelianExtension, cls: ConjClass, x: float) -> float:
    """First-power restriction sum_{p < x} log(p) * [Frob(p) in C]."""
    if x <= 1:
        raise DomainError("theta requires x > 1")
    ps = primes_upto(math.ceil(x) - 1 if float(x).is_integer() else math.floor(x))
    w = _class_weights(ext, cls, ps, np.ones(ps.size, dtype=np.int64))
    return float(np.sum(w * np.log(ps)))


def pi_class(ext: AbelianExtension, cls: ConjClass, x: float) -> int:
    """#{p <= x : p unramified, Frob(p) in C} (inclusive cutoff)."""
    ps = primes_upto(x)
    w = _class_weights(ext, cls, ps, np.ones(ps.size, dtype=np.int64))
    return int(np.sum(w > 0))


def _psi_step_points(ext: AbelianExtension, cls: ConjClass, x: float):
    values, primes, exps = prime_powers(x, strict=False)
    w = _class_weights(ext, cls, primes, exps)
    keep = w > 0
    return values[keep].astype(float), (np.log(primes) * w)[keep]


def counting_chain_check(ext: AbelianExtension, cls: ConjClass, x0: float, x: float,
                         constant: float = 1.0) -> BoundReport:
    """Partial-summation chain

        pi_C(x) <= psi_C(x)/log x + int_{x0}^x psi_C(t)/(t log^2 t) dt + constant*x0

    with the integral evaluated exactly piecewise (psi is a step function),
    so the only slack is the constant * n_F * x0 term (n_F = 1 here).
    """
    if not (x > x0 > 3):
        raise DomainError("need x > x0 > 3")
    jumps, weights = _psi_step_points(ext, cls, x)
    psi_x = float(np.sum(weights[jumps < x]))
    # exact integral of the step function against dt/(t log^2 t)
    inside = (jumps > x0) & (jumps <= x)
    ts = np.concatenate(([x0], jumps[inside], [x]))
    base = float(np.sum(weights[jumps <= x0]))
    levels = base + np.concatenate(([0.0], np.cumsum(weights[inside])))
    inv_log = 1.0 / np.log(ts)
    integral = float(np.sum(levels * (inv_log[:-1] - inv_log[1:])))
    lhs = float(pi_class(ext, cls, x))
    rhs = psi_x / math.log(x) + integral + constant * 1.0 * x0
    return BoundReport.compare(lhs, rhs, label="pi <= smoothed psi chain")


def weighted_prime_sum(ext: AbelianExtension, cls: ConjClass, spec: WeightSpec) -> float:
    """Direct evaluation of sum_n Lambda(n) * [class] * f(log n / log x)
    over prime powers inside the weight's support."""
    x = spec.x
    lo, hi = spec.support
    limit = x ** hi
    values, primes, exps = prime_powers(limit + 1, strict=False)
    mask = values >= max(2.0, math.floor(x ** lo))
    values, primes, exps = values[mask], primes[mask], exps[mask]
    w = _class_weights(ext, cls, primes, exps)
    t = np.log(values.astype(float)) / spec.log_x
    return float(np.sum(w * np.log(primes) * weight_value(spec, t)))


@dataclass(frozen=True)
class DensityRatioReport:
    """pi_C(x) against its Chebotarev density |C|/|G| * Li(x)."""

    count: int
    expected: float
    ratio: float
    threshold: PowerValue   # x-range where the upper-bound theorem is proven
    in_proven_range: bool


def density_ratio_report(ext: AbelianExtension, cls: ConjClass, x: float) -> DensityRatioReport:
    count = pi_class(ext, cls, x)
    expected = class_share(ext, cls) * li(x)
    q_like = abs(ext.disc) if ext.kind == "quadratic" else max(ext.q, 1)
    inv = FieldInvariants(n_K=1, D_K=1.0, Q=float(max(q_like, 1)))
    threshold = range_thresholds(inv).basic
    return DensityRatioReport(
        count=count,
        expected=expected,
        ratio=count / expected if expected else math.inf,
        threshold=threshold,
        in_proven_range=math.log(x) >= threshold.log,
    )
