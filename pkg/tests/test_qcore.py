"""q-Pochhammer arithmetic: exact values, telescoping, tail bounds."""

from decimal import Decimal, getcontext
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qzeros import InvalidParameterError, InvalidToleranceError, QValue, qpoch_finite, qpoch_infinite, rat, rat_str

SMALL_RATIONALS = st.builds(F, st.integers(-9, 9), st.integers(1, 9))
Q_VALUES = st.sampled_from([F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(9, 10)])


def test_empty_product():
    assert qpoch_finite(F(7, 3), F(1, 2), 0) == 1


def test_zero_factor_forces_zero():
    # a = q^-2 makes the j = 2 factor vanish
    assert qpoch_finite(F(4), F(1, 2), 3) == 0
    assert qpoch_finite(F(4), F(1, 2), 2) != 0


def test_two_factor_product():
    assert qpoch_finite(F(1, 2), F(1, 2), 2) == F(3, 8)


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        qpoch_finite(F(1), F(1, 2), -1)


def test_qvalue_range():
    QValue(F(1, 2))
    with pytest.raises(InvalidParameterError):
        QValue(F(3, 2))
    with pytest.raises(InvalidParameterError):
        QValue(F(0))


@given(a=SMALL_RATIONALS, q=Q_VALUES, k=st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_telescoping(a, q, k):
    assert qpoch_finite(a, q, k + 1) == qpoch_finite(a, q, k) * (1 - a * q**k)


@given(q=Q_VALUES, n=st.integers(0, 6), k=st.integers(0, 9))
@settings(max_examples=60, deadline=None)
def test_inverse_power_vanishing(q, n, k):
    value = qpoch_finite(q**-n, q, k)
    assert (value == 0) == (k > n)


def test_infinite_product_trivial_cases():
    assert qpoch_infinite(0, F(1, 2), F(1, 10)) == (1, 0)
    assert qpoch_infinite(1, F(1, 2), F(1, 10**6)) == (0, 0)
    with pytest.raises(InvalidToleranceError):
        qpoch_infinite(F(1, 2), F(1, 2), 0)


def test_infinite_product_against_decimal_oracle():
    # independent oracle: 50-digit Decimal product of (1 - 2^-k), k = 1..200
    getcontext().prec = 50
    prod = Decimal(1)
    for k in range(1, 201):
        prod *= 1 - Decimal(1) / (Decimal(2) ** k)
    v, err = qpoch_infinite(F(1, 2), F(1, 2), F(1, 10**12))
    assert err <= F(1, 10**12)
    assert abs(F(str(prod)) - v) <= err + F(1, 10**40)


@given(a=SMALL_RATIONALS, q=Q_VALUES)
@settings(max_examples=30, deadline=None)
def test_tail_bound_consistent_under_refinement(a, q):
    v1, e1 = qpoch_infinite(a, q, F(1, 10**6))
    v2, e2 = qpoch_infinite(a, q, F(1, 10**7))
    assert e1 <= F(1, 10**6) and e2 <= F(1, 10**7)
    # refining the tolerance tenfold moves the value by at most the coarse bound
    assert abs(v1 - v2) <= e1


def test_rational_round_trip():
    for x in (F(3, 7), F(-22, 9), F(5), F(0)):
        assert rat(rat_str(x)) == x
