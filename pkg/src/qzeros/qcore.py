"""Exact q-factorial (q-Pochhammer) arithmetic over the rationals.

All scalars are ``fractions.Fraction``: arbitrary precision, always in
canonical reduced form, with exact arithmetic and an error on division by
zero.  Every base q satisfies 0 < q < 1; this is validated once by
:class:`QValue` and rechecked by the free functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidParameterError, InvalidToleranceError

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Parse a rational from an int, a Fraction, or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Render a rational as "p" or "p/q"; round-trips through :func:`rat`."""
    return str(x)


@dataclass(frozen=True)
class QValue:
    """A base q with the standing constraint 0 < q < 1."""

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", rat(self.q))
        if not (0 < self.q < 1):
            raise InvalidParameterError(f"q must satisfy 0 < q < 1, got {self.q}")


def as_q(q: QValue | RationalLike) -> Fraction:
    """Coerce a QValue or rational-like to a validated Fraction in (0, 1)."""
    if isinstance(q, QValue):
        return q.q
    qq = rat(q)
    if not (0 < qq < 1):
        raise InvalidParameterError(f"q must satisfy 0 < q < 1, got {qq}")
    return qq


def qpoch_finite(a: RationalLike, q: QValue | RationalLike, k: int) -> Fraction:
    """The finite q-Pochhammer symbol (a;q)_k = prod_{j<k} (1 - a*q^j), exactly.

    k = 0 gives the empty product 1.  Telescopes exactly:
    (a;q)_{k+1} = (a;q)_k * (1 - a*q^k).
    """
    if k < 0:
        raise ValueError(f"q-Pochhammer order must be >= 0, got {k}")
    av = rat(a)
    qv = as_q(q)
    out = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        out *= 1 - av * power
        if out == 0:
            return out
        power *= qv
    return out


def qpoch_vector(params, q: QValue | RationalLike, k: int) -> Fraction:
    """Product of (a_j;q)_k over a parameter vector; empty vector gives 1."""
    out = Fraction(1)
    for a in params:
        out *= qpoch_finite(a, q, k)
    return out


def qpoch_infinite(
    a: RationalLike, q: QValue | RationalLike, tol: RationalLike
) -> tuple[Fraction, Fraction]:
    """Truncated infinite product (a;q)_inf with a certified error bound.

    Returns (v, err) with |v - (a;q)_inf| <= err <= tol.  Truncation stops at
    the first index J where the geometric tail S = |a| q^J / (1-q) drops below
    tol/2 and the rigorous remainder bound |P_J| * S/(1-S) is itself <= tol
    (the second condition only extends J when the partial product exceeds 1 in
    magnitude).  A factor that is exactly zero short-circuits to (0, 0).
    """
    av = rat(a)
    qv = as_q(q)
    tolv = rat(tol)
    if tolv <= 0:
        raise InvalidToleranceError(f"tolerance must be > 0, got {tolv}")
    if av == 0:
        return Fraction(1), Fraction(0)

    partial = Fraction(1)
    power = Fraction(1)  # q^j
    abs_a = abs(av)
    while True:
        tail = abs_a * power / (1 - qv)
        if tail < 1 and 2 * tail < tolv:
            err = abs(partial) * tail / (1 - tail)
            if err <= tolv:
                return partial, err
        factor = 1 - av * power
        if factor == 0:
            return Fraction(0), Fraction(0)
        partial *= factor
        power *= qv
