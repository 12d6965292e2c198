from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schauderkit.diophantine import ApproxResult, simultaneous_approx, verify_bound


SLACK = Fraction(1e-12)


def first_hit_oracle(x, n, slack=SLACK):
    """Exact scan: smallest b in 1..n whose nearest numerators satisfy
    max |b x_i - a_i| <= n^(-1/k) + slack, decided in rational arithmetic
    with the bound compared through its k-th power."""
    xs = [Fraction(v) for v in x]
    k = len(xs)
    for b in range(1, n + 1):
        a = [round(b * v) for v in xs]  # Fraction.__round__ ties to even
        err = max(abs(b * v - ai) for v, ai in zip(xs, a))
        if max(err - slack, 0) ** k * n <= 1:
            return b, tuple(a)
    return None


def test_half_with_ceiling_two():
    # |0.5 - 0/1| = 1/2 already meets 1/(1 * 2**1), so the first hit is b = 1
    assert first_hit_oracle([0.5], 2) == (1, (0,))
    r = simultaneous_approx([0.5], 2)
    assert (r.b, r.a, r.err, r.satisfied) == (1, (0,), 0.5, True)


def test_half_exact_denominator():
    r = simultaneous_approx([0.5], 1)
    assert r.satisfied and r.b == 1
    assert simultaneous_approx([0.25, 0.75], 16).satisfied


def test_golden_ratio_stress():
    x = [0.6180339887]
    assert first_hit_oracle(x, 10) == (5, (3,))
    r = simultaneous_approx(x, 10)
    assert (r.b, r.a) == (5, (3,))
    assert r.err == pytest.approx(abs(5 * 0.6180339887 - 3), abs=1e-15)
    # the convergent denominator 8 also qualifies, but 5 comes first
    assert abs(8 * 0.6180339887 - 5) <= 0.1


def test_thirds_with_ceiling_nine():
    # exact thirds: b = 1 gives error exactly 1/3 = 9^(-1/2)
    assert first_hit_oracle([Fraction(1, 3), Fraction(2, 3)], 9, slack=0) == (1, (0, 1))
    x = [1 / 3, 2 / 3]
    # the float 2/3 lies below 2/3, so b = 1 misses by ~1e-17 and needs the slack
    assert first_hit_oracle(x, 9, slack=0) == (3, (1, 2))
    assert first_hit_oracle(x, 9) == (1, (0, 1))
    r = simultaneous_approx(x, 9)
    assert (r.b, r.a, r.satisfied) == (1, (0, 1), True)
    assert r.err == pytest.approx(1 / 3, abs=1e-15)


def test_thirds_need_common_denominator():
    # with ceiling 100 the bound 1/10 rules out b = 1, 2
    r = simultaneous_approx([1 / 3, 2 / 3], 100)
    assert (r.b, r.a) == (3, (1, 2))
    assert r.err == pytest.approx(0.0, abs=1e-15)


def test_truncated_third():
    assert first_hit_oracle([0.3333333333], 10) == (3, (1,))
    r = simultaneous_approx([0.3333333333], 10)
    assert (r.b, r.a, r.satisfied) == (3, (1,), True)


def test_ties_round_to_even():
    r = simultaneous_approx([2.5], 1)
    assert r.a == (2,)


def test_verify_bound():
    x = [1 / 3, 2 / 3]
    r = simultaneous_approx(x, 100)
    assert verify_bound(x, r, 100)
    bumped = ApproxResult((r.a[0] + 1,) + r.a[1:], r.b, r.err, r.satisfied)
    assert not verify_bound(x, bumped, 100)
    assert not verify_bound(x, ApproxResult(r.a, 101, r.err, True), 100)


def test_preconditions():
    with pytest.raises(ValueError):
        simultaneous_approx([], 5)
    with pytest.raises(ValueError):
        simultaneous_approx([math.inf], 5)
    with pytest.raises(ValueError):
        simultaneous_approx([0.2], 0)
    with pytest.raises(ValueError):
        verify_bound([0.1, 0.2], ApproxResult((0,), 1, 0.1, True), 5)


def test_large_ceiling_scans_in_chunks():
    x = [math.sqrt(2), math.sqrt(3)]
    n = 200_000
    r = simultaneous_approx(x, n)
    assert r.satisfied and verify_bound(x, r, n)
    assert first_hit_oracle(x, n) == (r.b, r.a)


@pytest.mark.parametrize("seed", range(5))
def test_random_instances_agree_with_oracle(seed):
    rng = np.random.default_rng(seed)
    for _ in range(20):
        k = int(rng.integers(1, 4))
        n = int(rng.integers(5, 51))
        x = rng.random(k).tolist()
        r = simultaneous_approx(x, n)
        assert r.satisfied and verify_bound(x, r, n)
        assert first_hit_oracle(x, n) == (r.b, r.a)


@settings(max_examples=100, deadline=None)
@given(
    x=st.lists(st.floats(0, 1, exclude_max=True), min_size=1, max_size=3),
    n=st.integers(1, 60),
    shift=st.lists(st.integers(-50, 50), min_size=3, max_size=3),
)
def test_integer_shift_invariance(x, n, shift):
    r = simultaneous_approx(x, n)
    moved = [v + m for v, m in zip(x, shift)]
    s = simultaneous_approx(moved, n)
    assert s.b == r.b
    assert s.err == pytest.approx(r.err, abs=1e-12)
    assert all(sa == ra + r.b * m for sa, ra, m in zip(s.a, r.a, shift))


@settings(max_examples=100, deadline=None)
@given(x=st.lists(st.floats(-10, 10), min_size=1, max_size=3), n=st.integers(1, 80))
def test_result_invariants(x, n):
    r = simultaneous_approx(x, n)
    assert 0 < r.b <= n
    assert r.satisfied
    recomputed = max(abs(r.b * v - a) for v, a in zip(x, r.a))
    assert recomputed == pytest.approx(r.err, abs=1e-12)
    assert r.a == tuple(int(v) for v in np.rint(np.asarray(x) * r.b))
    # first-hit policy: no smaller b qualifies
    for b in range(1, r.b):
        err = max(abs(b * v - round(b * v)) for v in x)
        assert err > n ** (-1 / len(x)) + 1e-12
