"""Named constructors for the classical q-hypergeometric polynomial families.

Little q-Jacobi polynomials are the two-parameter family

    p_n(x; a, b | q) = 2phi1(q^-n, a*b*q^(n+1); a*q; q, q*x),

discretely orthogonal on the lattice {q^k} in (0,1) when 0 < a*q < 1 and
b*q < 1.  Setting b = 0 gives the little q-Laguerre polynomials.  The
q-Laguerre, Stieltjes-Wigert and q-Bessel families are the other classical
specializations handled here, together with the normalized variant that
covers the degenerate parameter a = q^-k and the elementary factors
E_k(x) = prod_{j=1..k} (1 - q^-j x) that appear in the b = q^-k
factorization.  Lower parameter 0 is treated literally, (0;q)_k = 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameterError, InvalidParameterError, RegimeError
from .qcore import QValue, RationalLike, as_q, qpoch_finite, rat
from .qhyper import HyperSpec, PolyExact, build_qhyper


class Family(enum.Enum):
    LITTLE_Q_JACOBI = "little-q-jacobi"
    LITTLE_Q_LAGUERRE = "little-q-laguerre"
    Q_LAGUERRE = "q-laguerre"
    STIELTJES_WIGERT = "stieltjes-wigert"
    Q_BESSEL = "q-bessel"
    NORMALIZED_LITTLE_Q_JACOBI = "normalized-little-q-jacobi"
    E_FACTOR = "e-factor"


@dataclass(frozen=True)
class FamilyParams:
    """A family tag with its parameters and the computed regime flag.

    ``orthogonal_regime`` is True when the parameters satisfy the family's
    orthogonality hypotheses (little q-Jacobi: 0 < aq < 1 and bq < 1;
    q-Laguerre: 0 < b < 1; q-Bessel: b < 0), None when the family has no
    such regime.
    """

    family: Family
    n: int
    q: Fraction
    a: Fraction | None = None
    b: Fraction | None = None
    k: int | None = None
    orthogonal_regime: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "q", as_q(self.q))
        if self.a is not None:
            object.__setattr__(self, "a", rat(self.a))
        if self.b is not None:
            object.__setattr__(self, "b", rat(self.b))
        object.__setattr__(self, "orthogonal_regime", self._regime())

    def _regime(self) -> bool | None:
        q, a, b = self.q, self.a, self.b
        if self.family in (Family.LITTLE_Q_JACOBI, Family.LITTLE_Q_LAGUERRE):
            bb = b if b is not None else Fraction(0)
            return a is not None and 0 < a * q < 1 and bb * q < 1
        if self.family is Family.Q_LAGUERRE:
            return b is not None and 0 < b < 1
        if self.family is Family.Q_BESSEL:
            return b is not None and b < 0
        return None


def _is_neg_q_power(value: Fraction, q: Fraction, lo: int, hi: int) -> int | None:
    """Return m in [lo, hi] with value == q^-m, else None."""
    if value < 1 and lo >= 0:
        return None
    for m in range(lo, hi + 1):
        if value * q**m == 1:
            return m
    return None


def little_q_jacobi(
    n: int,
    a: RationalLike,
    b: RationalLike,
    q: QValue | RationalLike,
) -> PolyExact:
    """Little q-Jacobi polynomial p_n(x; a, b | q), exact.

    b = 0 yields the little q-Laguerre polynomial; b = q^-k is allowed (the
    polynomial factors through E_k(qx)).  a = q^-m with 1 <= m <= n makes
    the raw series undefined and raises, pointing at
    :func:`normalized_little_q_jacobi`.
    """
    av, bv, qv = rat(a), rat(b), as_q(q)
    m = _is_neg_q_power(av, qv, 1, n)
    if m is not None:
        raise DegenerateParameterError(
            f"a = q^-{m} is degenerate for the raw series; "
            "use normalized_little_q_jacobi(n, k, b, q) instead"
        )
    spec = HyperSpec(n=n, upper=(av * bv * qv ** (n + 1),), lower=(av * qv,), q=qv)
    return build_qhyper(spec).scale_arg(qv)


def little_q_laguerre(n: int, a: RationalLike, q: QValue | RationalLike) -> PolyExact:
    """Little q-Laguerre (Wall) polynomial, the b = 0 little q-Jacobi case."""
    return little_q_jacobi(n, a, 0, q)


def q_laguerre(n: int, b: RationalLike, q: QValue | RationalLike) -> PolyExact:
    """q-Laguerre polynomial L_n^(b)(x; q) = ((b;q)_n/(q;q)_n) 1phi1(q^-n; b; q, -q^n b x)."""
    bv, qv = rat(b), as_q(q)
    spec = HyperSpec(n=n, upper=(), lower=(bv,), q=qv)
    series = build_qhyper(spec).scale_arg(-(qv**n) * bv)
    return qpoch_finite(bv, qv, n) / qpoch_finite(qv, qv, n) * series


def stieltjes_wigert(n: int, q: QValue | RationalLike) -> PolyExact:
    """Stieltjes-Wigert polynomial (1/(q;q)_n) 1phi1(q^-n; 0; q, -q^(n+1) x)."""
    qv = as_q(q)
    spec = HyperSpec(n=n, upper=(), lower=(Fraction(0),), q=qv)
    series = build_qhyper(spec).scale_arg(-(qv ** (n + 1)))
    return Fraction(1) / qpoch_finite(qv, qv, n) * series


def q_bessel(n: int, b: RationalLike, q: QValue | RationalLike) -> PolyExact:
    """q-Bessel polynomial 2phi1(q^-n, b q^n; 0; q, x), exact."""
    bv, qv = rat(b), as_q(q)
    spec = HyperSpec(n=n, upper=(bv * qv**n,), lower=(Fraction(0),), q=qv)
    return build_qhyper(spec)


def normalized_little_q_jacobi(
    n: int, k: int, b: RationalLike, q: QValue | RationalLike
) -> PolyExact:
    """The normalized polynomial (q^(-k+1);q)_n p_n(x; q^-k, b), coefficient-wise.

    Defined for 1 <= k <= n by the j-th coefficient

        (q^-n;q)_j / (q;q)_j * (b q^(n-k+1);q)_j * (q^(j-k+1);q)_(n-j) * q^j,

    which vanishes for j < k; the result equals
    c * (qx)^k * p_(n-k)(x; q^k, b) with
    c = (-1)^k q^(C(k,2) - n*k) (b q^(n-k+1);q)_k (q^(k+1);q)_(n-k).
    """
    bv, qv = rat(b), as_q(q)
    if not 1 <= k <= n:
        raise InvalidParameterError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    out = []
    for j in range(n + 1):
        coef = (
            qpoch_finite(qv ** (-n), qv, j)
            / qpoch_finite(qv, qv, j)
            * qpoch_finite(bv * qv ** (n - k + 1), qv, j)
            * qpoch_finite(qv ** (j - k + 1), qv, n - j)
            * qv**j
        )
        out.append(coef)
    return PolyExact(out)


def normalization_constant(n: int, k: int, b: RationalLike, q: QValue | RationalLike) -> Fraction:
    """The constant c with normalized p = c (qx)^k p_(n-k)(x; q^k, b)."""
    bv, qv = rat(b), as_q(q)
    return (
        Fraction(-1) ** k
        * qv ** (k * (k - 1) // 2 - n * k)
        * qpoch_finite(bv * qv ** (n - k + 1), qv, k)
        * qpoch_finite(qv ** (k + 1), qv, n - k)
    )


def e_factor(k: int, q: QValue | RationalLike) -> PolyExact:
    """E_k(x) = prod_{j=1..k} (1 - q^-j x); the roots are exactly q^1, ..., q^k."""
    qv = as_q(q)
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    p = PolyExact.one()
    for j in range(1, k + 1):
        p = p * PolyExact((1, -(qv ** (-j))))
    return p


def weight_mass(
    k: int,
    a: RationalLike,
    b: RationalLike,
    q: QValue | RationalLike,
) -> Fraction:
    """Mass (bq;q)_k/(q;q)_k (aq)^k of the discrete orthogonality measure at q^k.

    Requires the orthogonality regime 0 < aq < 1 and bq < 1, where every
    mass is strictly positive.
    """
    av, bv, qv = rat(a), rat(b), as_q(q)
    if not (0 < av * qv < 1 and bv * qv < 1):
        raise RegimeError(
            f"weight mass needs 0 < aq < 1 and bq < 1, got aq={av * qv}, bq={bv * qv}"
        )
    if k < 0:
        raise InvalidParameterError(f"lattice index must be >= 0, got {k}")
    return (
        qpoch_finite(bv * qv, qv, k)
        / qpoch_finite(qv, qv, k)
        * (av * qv) ** k
    )


def build(params: FamilyParams) -> PolyExact:
    """Construct the polynomial described by a :class:`FamilyParams`."""
    f, n, q, a, b, k = params.family, params.n, params.q, params.a, params.b, params.k
    if f is Family.LITTLE_Q_JACOBI:
        return little_q_jacobi(n, _req(a, "a"), b if b is not None else 0, q)
    if f is Family.LITTLE_Q_LAGUERRE:
        return little_q_laguerre(n, _req(a, "a"), q)
    if f is Family.Q_LAGUERRE:
        return q_laguerre(n, _req(b, "b"), q)
    if f is Family.STIELTJES_WIGERT:
        return stieltjes_wigert(n, q)
    if f is Family.Q_BESSEL:
        return q_bessel(n, _req(b, "b"), q)
    if f is Family.NORMALIZED_LITTLE_Q_JACOBI:
        if k is None:
            raise InvalidParameterError("normalized family needs k")
        return normalized_little_q_jacobi(n, k, b if b is not None else 0, q)
    if f is Family.E_FACTOR:
        if k is None:
            raise InvalidParameterError("e-factor needs k")
        return e_factor(k, q)
    raise InvalidParameterError(f"unknown family {f}")


def _req(value, name):
    if value is None:
        raise InvalidParameterError(f"family requires parameter {name}")
    return value
