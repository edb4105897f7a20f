"""The q-derivative: coefficient rule, family identities, classical limit."""

from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from qzeros import (
    ConstraintViolationError,
    HyperSpec,
    PolyExact,
    build_qhyper,
    little_q_jacobi,
    q_bracket,
    q_derivative,
)

Q_VALUES = st.sampled_from([F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)])
PARAMS = st.builds(F, st.integers(-5, 5), st.integers(1, 5))


def test_constant_maps_to_zero():
    assert q_derivative(PolyExact((7,)), F(1, 2)).is_zero
    assert q_derivative(PolyExact.zero(), F(1, 2)).is_zero


def test_monomial_rule():
    # x^2 -> (1+q) x at q = 1/2
    assert q_derivative(PolyExact((0, 0, 1)), F(1, 2)) == PolyExact((0, F(3, 2)))
    assert q_bracket(2, F(1, 2)) == F(3, 2)


def test_degree_drops_by_one():
    p = PolyExact((1, 2, 3, 4))
    assert q_derivative(p, F(1, 3)).degree == 2


def test_divided_difference_agreement():
    p = PolyExact((1, -2, 5, F(1, 3)))
    q = F(2, 5)
    dq = q_derivative(p, q)
    for x in (F(1, 7), F(-3), F(5, 2)):
        assert dq(x) == (p(x) - p(q * x)) / ((1 - q) * x)


def test_little_q_jacobi_q_derivative_identity():
    n, a, b, q = 3, F(1, 4), F(-1), F(1, 2)
    lhs = q_derivative(little_q_jacobi(n, a, b, q), q)
    const = q * (1 - q**-n) * (1 - a * b * q ** (n + 1)) / ((1 - q) * (1 - a * q))
    assert lhs == const * little_q_jacobi(n - 1, q * a, q * b, q)


@given(
    q=Q_VALUES,
    n=st.integers(1, 6),
    upper=st.lists(PARAMS, max_size=2),
    lower=st.lists(PARAMS, max_size=2),
)
@settings(max_examples=40, deadline=None)
def test_shift_identity_generic_series(q, n, upper, lower):
    """D_q maps the degree-n series to a constant times the degree-(n-1)
    series with all parameters multiplied by q and argument scaled by
    q^(s-r)."""
    try:
        p = build_qhyper(HyperSpec(n=n, upper=tuple(upper), lower=tuple(lower), q=q))
        shifted = build_qhyper(
            HyperSpec(
                n=n - 1,
                upper=tuple(q * u for u in upper),
                lower=tuple(q * l for l in lower),
                q=q,
            )
        )
    except ConstraintViolationError:
        return
    d = len(lower) - len(upper)
    const = F(-1) ** d * (1 - q**-n) / (1 - q)
    for u in upper:
        const *= 1 - u
    for l in lower:
        if l == 1:
            return
        const /= 1 - l
    assert q_derivative(p, q) == const * shifted.scale_arg(q**d)


def test_q_derivative_interlaces_within_the_mesh_class():
    """For p with lmesh below q, D_q p stays in the class and interlaces p."""
    from qzeros import Relation, in_lmesh_class, interlace, isolate_real_roots

    q = F(1, 2)
    for (n, a, b) in [(3, F(1, 4), F(-1)), (4, F(1, 2), F(1, 2)), (5, F(1), F(0))]:
        p = little_q_jacobi(n, a, b, q)
        dp = q_derivative(p, q)
        rs_p = isolate_real_roots(p)
        rs_dp = isolate_real_roots(dp)
        assert in_lmesh_class(rs_p, q, strict=True)
        assert in_lmesh_class(rs_dp, q, strict=True)
        assert interlace(rs_p, rs_dp).relation is Relation.STRICT_INTERLACE


def test_classical_limit_of_coefficient_factor():
    # (1 - q^(i+1))/(1 - q) approaches i+1 as q -> 1 along rationals
    p = PolyExact((0, 0, 0, 1))  # x^3
    for q in (F(9, 10), F(99, 100), F(9999, 10000)):
        dq = q_derivative(p, q)
        assert abs(dq.coeff(2) - 3) < 3 * (1 - q)
