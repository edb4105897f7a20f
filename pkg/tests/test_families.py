"""Named family constructors: hand expansions, factorizations, weights, limits."""

from fractions import Fraction as F

import pytest

from qzeros import (
    DegenerateParameterError,
    Family,
    FamilyParams,
    InvalidParameterError,
    PolyExact,
    RegimeError,
    build,
    e_factor,
    little_q_jacobi,
    little_q_laguerre,
    normalization_constant,
    normalized_little_q_jacobi,
    q_bessel,
    q_laguerre,
    stieltjes_wigert,
    weight_mass,
)

Q = F(1, 2)


def test_little_q_jacobi_degree_one():
    p = little_q_jacobi(1, F(1, 2), F(1, 2), Q)
    assert p == PolyExact((1, F(-5, 4)))
    assert p(F(4, 5)) == 0 and 0 < F(4, 5) < 1


def test_families_constant_for_n0():
    assert little_q_jacobi(0, F(1, 3), F(2), Q) == PolyExact.one()
    assert q_laguerre(0, F(1, 2), Q) == PolyExact.one()
    assert stieltjes_wigert(0, Q) == PolyExact.one()
    assert q_bessel(0, F(-1), Q) == PolyExact.one()


def test_degenerate_a_points_to_normalized_variant():
    with pytest.raises(DegenerateParameterError) as info:
        little_q_jacobi(3, F(4), F(1, 2), Q)  # a = q^-2, within 1..n
    assert "normalized_little_q_jacobi" in str(info.value)
    # a = q^-(n+1) instead trips the lower-parameter constraint (aq = q^-n)
    from qzeros import ConstraintViolationError

    with pytest.raises(ConstraintViolationError):
        little_q_jacobi(1, F(4), F(1, 2), Q)
    # a = q^-m with m > n+1 is constructible
    little_q_jacobi(1, F(8), F(1, 2), Q)


def test_b_at_negative_q_power_factors_through_elementary_part():
    p = little_q_jacobi(3, F(1, 3), Q**-3, Q)
    assert p == e_factor(3, Q).scale_arg(Q)
    for root in (1, F(1, 2), F(1, 4)):
        assert p(root) == 0


def test_little_q_laguerre_is_b_zero_case():
    assert little_q_laguerre(4, F(1, 3), Q) == little_q_jacobi(4, F(1, 3), 0, Q)


def test_q_laguerre_degree_one():
    # (1 - b - b x)/(1 - q) at b = q = 1/2
    assert q_laguerre(1, F(1, 2), Q) == PolyExact((1, -1))
    assert q_laguerre(1, F(1, 3), F(1, 3)) == PolyExact((1, F(-1, 2)))


def test_stieltjes_wigert_degree_one():
    assert stieltjes_wigert(1, Q) == PolyExact((2, -1))  # root 1/q


def test_q_bessel_degree_one():
    assert q_bessel(1, F(-1), Q) == PolyExact((1, -3))  # root 1/3 in (0, q]


def test_e_factor():
    assert e_factor(1, Q) == PolyExact((1, -2))
    assert e_factor(2, Q) == PolyExact((1, -6, 8))
    with pytest.raises(InvalidParameterError):
        e_factor(0, Q)
    # roots of E_k(qx) are 1, q, ..., q^(k-1)
    shifted = e_factor(3, Q).scale_arg(Q)
    for j in range(3):
        assert shifted(Q**j) == 0


def test_normalized_low_coefficients_vanish():
    for (n, k) in [(2, 1), (3, 2), (5, 5), (4, 1)]:
        p = normalized_little_q_jacobi(n, k, F(1, 3), Q)
        for j in range(k):
            assert p.coeff(j) == 0
    with pytest.raises(InvalidParameterError):
        normalized_little_q_jacobi(3, 4, F(1, 3), Q)
    with pytest.raises(InvalidParameterError):
        normalized_little_q_jacobi(3, 0, F(1, 3), Q)


def test_normalized_factorization_identity():
    for (n, k, b) in [(1, 1, F(0)), (2, 2, F(1, 3)), (4, 2, F(-1)), (5, 3, F(2))]:
        lhs = normalized_little_q_jacobi(n, k, b, Q)
        c = normalization_constant(n, k, b, Q)
        rhs = (c * Q**k) * little_q_jacobi(n - k, Q**k, b, Q).shift_up(k)
        assert lhs == rhs


def test_weight_mass_values_and_regime():
    assert weight_mass(0, F(1, 2), F(1, 2), Q) == 1
    assert weight_mass(1, F(1, 2), F(1, 2), Q) == F(3, 8)
    with pytest.raises(RegimeError):
        weight_mass(1, F(3), F(1, 2), Q)  # aq > 1
    with pytest.raises(RegimeError):
        weight_mass(1, F(1, 2), F(3), Q)  # bq > 1
    for k in range(21):
        assert weight_mass(k, F(1, 2), F(-2), Q) > 0


def test_regime_flags():
    p = FamilyParams(Family.LITTLE_Q_JACOBI, 3, Q, a=F(1, 2), b=F(-1))
    assert p.orthogonal_regime is True
    p = FamilyParams(Family.LITTLE_Q_JACOBI, 3, Q, a=F(3), b=F(1, 2))
    assert p.orthogonal_regime is False
    assert FamilyParams(Family.Q_LAGUERRE, 2, Q, b=F(1, 2)).orthogonal_regime is True
    assert FamilyParams(Family.Q_LAGUERRE, 2, Q, b=F(2)).orthogonal_regime is False
    assert FamilyParams(Family.Q_BESSEL, 2, Q, b=F(-1)).orthogonal_regime is True
    assert FamilyParams(Family.Q_BESSEL, 2, Q, b=F(1)).orthogonal_regime is False
    assert FamilyParams(Family.STIELTJES_WIGERT, 2, Q).orthogonal_regime is None


def test_build_dispatch():
    params = FamilyParams(Family.Q_BESSEL, 1, Q, b=F(-1))
    assert build(params) == PolyExact((1, -3))
    params = FamilyParams(Family.E_FACTOR, 0, Q, k=2)
    assert build(params) == PolyExact((1, -6, 8))


def test_limit_consistency_small_case():
    """Deviation from the limit family decreases monotonically in the depth m."""
    n, b = 3, F(-1)
    target = q_bessel(n, b, Q).scale_arg(Q)
    prev = None
    for m in range(4, 13):
        a = Q**m
        jac = little_q_jacobi(n, a, b / (Q * a), Q)
        dev = max(abs(jac.coeff(i) - target.coeff(i)) for i in range(n + 1))
        if prev is not None:
            assert dev < prev
        prev = dev

    target = stieltjes_wigert(n, Q)
    prev = None
    for m in range(4, 13):
        b = Q**m
        lag = q_laguerre(n, b, Q).scale_arg(Q / b)
        dev = max(abs(lag.coeff(i) - target.coeff(i)) for i in range(n + 1))
        if prev is not None:
            assert dev < prev
        prev = dev
