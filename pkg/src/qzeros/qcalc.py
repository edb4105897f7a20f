"""The q-derivative operator on exact polynomials.

Acting on monomials, x^i maps to (1-q^i)/(1-q) * x^(i-1); coefficient-wise
this is e_i(D_q p) = (1-q^(i+1))/(1-q) * e_(i+1)(p), which agrees with the
divided-difference form (f(x) - f(qx))/((1-q)x) on polynomials and needs no
special case at x = 0.
"""

from __future__ import annotations

from fractions import Fraction

from .qcore import QValue, RationalLike, as_q
from .qhyper import PolyExact


def q_bracket(i: int, q: QValue | RationalLike) -> Fraction:
    """The q-integer [i]_q = (1 - q^i)/(1 - q)."""
    qv = as_q(q)
    return (1 - qv**i) / (1 - qv)


def q_derivative(p: PolyExact, q: QValue | RationalLike) -> PolyExact:
    """Apply the q-derivative; constants map to the zero polynomial."""
    qv = as_q(q)
    qpow = qv  # q^(i+1)
    out = []
    for i in range(p.degree):
        out.append((1 - qpow) / (1 - qv) * p.coeff(i + 1))
        qpow *= qv
    return PolyExact(out)
