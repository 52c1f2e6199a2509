import math

import numpy as np
import pytest

from chebkit.arith import factorize, squarefree_kernel
from chebkit.elliptic import (CurveModel, FrobeniusRecord, frobenius_field_count,
                              growth_shape_report, read_curves, trace_match_count,
                              trace_of_frobenius, trace_table)
from chebkit.errors import DomainError
from chebkit.sieve import CountSeries, primes_upto

TEST_CURVES = [CurveModel(1, 1), CurveModel(-1, 1), CurveModel(2, 3),
               CurveModel(5, 7), CurveModel(-7, 10)]


# ------------------------------------------------------------- oracles

def naive_point_count(A, B, p):
    """Direct double loop over affine points, plus the point at infinity."""
    count = 1
    for x in range(p):
        rhs = (x * x * x + A * x + B) % p
        for y in range(p):
            if (y * y) % p == rhs:
                count += 1
    return count


def test_curve_validation():
    with pytest.raises(DomainError):
        CurveModel(0, 0)
    with pytest.raises(DomainError):
        CurveModel(-3, 2)  # 4*(-27) + 27*4 = 0


def test_trace_examples_against_point_count():
    E = CurveModel(1, 1)
    assert naive_point_count(1, 1, 5) == 9
    assert trace_of_frobenius(E, 5).a_p == -3
    assert naive_point_count(1, 1, 7) == 5
    assert trace_of_frobenius(E, 7).a_p == 3


def test_trace_against_naive_oracle_sample():
    rng = np.random.default_rng(1)
    primes = [int(p) for p in primes_upto(200) if p > 3]
    for E in TEST_CURVES:
        for p in rng.choice(primes, size=8, replace=False):
            p = int(p)
            if not E.has_good_reduction(p):
                continue
            expect = p + 1 - naive_point_count(E.A, E.B, p)
            assert trace_of_frobenius(E, p).a_p == expect


def test_bad_reduction_marked_skip():
    E = CurveModel(1, 1)  # disc factor 31
    rec = trace_of_frobenius(E, 31)
    assert rec.skipped
    assert trace_of_frobenius(E, 2).skipped and trace_of_frobenius(E, 3).skipped


def test_hasse_bound_is_hard_invariant():
    with pytest.raises(DomainError):
        FrobeniusRecord(p=5, a_p=5, disc_part=1)
    ps, aps = trace_table(CurveModel(1, 1), 20_000)
    assert np.all(aps.astype(float) ** 2 < 4 * ps.astype(float))


def test_bsgs_agrees_with_charsum():
    rng = np.random.default_rng(2)
    primes = [int(p) for p in primes_upto(10**4) if p > 10**3]
    for E in TEST_CURVES:
        for p in rng.choice(primes, size=10, replace=False):
            p = int(p)
            if not E.has_good_reduction(p):
                continue
            a1 = trace_of_frobenius(E, p, method="bsgs").a_p
            a2 = trace_of_frobenius(E, p, method="charsum").a_p
            assert a1 == a2, (E, p)


def test_disc_part_is_negative_squarefree():
    ps, aps = trace_table(CurveModel(1, 1), 3000)
    for p, a in zip(ps[:200], aps[:200]):
        rec = trace_of_frobenius(CurveModel(1, 1), int(p))
        assert rec.disc_part < 0
        assert all(e == 1 for e in factorize(rec.disc_part).values())
        assert squarefree_kernel(int(a) ** 2 - 4 * int(p)) == rec.disc_part


# ------------------------------------------------------------- counters

def test_trace_match_examples():
    E = CurveModel(1, 1)
    series = trace_match_count(E, -3, 100, checkpoints=[5, 10, 100])
    assert series.counts[0] >= 1  # p = 5 has a_p = -3
    assert np.all(np.diff(series.counts) >= 0)
    # traces outside the Hasse range can never occur
    empty = trace_match_count(E, 10**4, 10**4)
    assert empty.counts[-1] == 0


def test_trace_partition_identity():
    E = CurveModel(1, 1)
    x = 10**4
    ps, aps = trace_table(E, x)
    bound = int(2 * math.isqrt(x)) + 1
    total = sum(int(trace_match_count(E, a, x).counts[-1])
                for a in range(-bound, bound + 1))
    assert total == ps.size


def test_frobenius_field_example():
    E = CurveModel(1, 1)
    # p = 5: a^2 - 4p = 9 - 20 = -11
    series = frobenius_field_count(E, -11, 10)
    assert series.counts[-1] == 1


def test_frobenius_field_validation():
    E = CurveModel(1, 1)
    with pytest.raises(DomainError):
        frobenius_field_count(E, 5, 100)
    with pytest.raises(DomainError):
        frobenius_field_count(E, -5, 100)  # -5 = 3 mod 4: not a discriminant
    frobenius_field_count(E, -20, 100)  # -20 is fine (field disc of sqrt(-5))


def test_frobenius_field_partition():
    E = CurveModel(1, 1)
    x = 3000
    ps, aps = trace_table(E, x)
    kernels = {squarefree_kernel(int(a) ** 2 - 4 * int(p)) for p, a in zip(ps, aps)}
    total = 0
    for k in kernels:
        disc = k if k % 4 == 1 else 4 * k
        total += int(frobenius_field_count(E, disc, x).counts[-1])
    assert total == ps.size


# ---------------------------------------------------------------- shapes

def test_shape_report_zero_series():
    series = CountSeries(np.array([10.0, 100.0]), np.array([0.0, 0.0]), "empty")
    r = growth_shape_report(series, "trace")
    assert np.all(r.theorem_ratio == 0.0)
    assert np.all(r.conjecture_ratio == 0.0)


def test_shape_report_ratios_finite_and_modes():
    E = CurveModel(1, 1)
    series = trace_match_count(E, 0, 5000, checkpoints=[50, 500, 5000])
    rt = growth_shape_report(series, "trace")
    rf = growth_shape_report(series, "field")
    assert rt.exponent == 2 and rf.exponent == 1
    assert np.all(np.isfinite(rt.theorem_ratio))
    assert np.all(np.isfinite(rt.conjecture_ratio))
    with pytest.raises(DomainError):
        growth_shape_report(series, "both")
    with pytest.raises(DomainError):
        growth_shape_report(CountSeries(np.array([2.0]), np.array([0.0]), "low"), "trace")


def test_read_curves_roundtrip(tmp_path):
    path = tmp_path / "curves.txt"
    path.write_text("# comment\n1 1 first\n\n-1 1\n2 3 labeled curve\n")
    curves = read_curves(path)
    assert [(c.A, c.B) for c in curves] == [(1, 1), (-1, 1), (2, 3)]
    assert curves[0].label == "first"
    assert curves[2].label == "labeled curve"
    bad = tmp_path / "bad.txt"
    bad.write_text("17\n")
    with pytest.raises(DomainError):
        read_curves(bad)
