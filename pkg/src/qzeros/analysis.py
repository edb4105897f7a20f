"""Zero interlacing, the zero-wise partial order, and the logarithmic mesh.

All relation decisions are exact.  Two isolated roots are compared by
refining their certified intervals until the intervals separate; when they
never can (the roots coincide), the coincidence is proven by locating a root
of gcd of the two polynomials inside the overlap.  Ratio-equals-q questions
reduce to the same machinery against an argument-scaled copy of the
polynomial, so lmesh(p) = q is decided exactly through gcd(p(x), p(qx))
having a root whose q-multiple partner is its ordered successor.  No epsilon
thresholds enter any decision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    LmeshDomainError,
    RefinementFailureError,
    ShapeError,
    UndefinedLmeshError,
)
from .qcore import QValue, RationalLike, as_q, rat
from .qhyper import PolyExact, poly_gcd, square_free_part
from .roots import RootEntry, RootSet, SturmChain

_COMPARE_BUDGET = 20_000


class Relation(enum.Enum):
    STRICT_INTERLACE = "StrictInterlace"
    WEAK_INTERLACE = "WeakInterlace"
    DOMINATES = "Dominates"
    NONE = "None"


class DegreePattern(enum.Enum):
    EQUAL_DEGREE = "EqualDegree"
    DEGREE_MINUS_ONE = "DegreeMinusOne"


@dataclass(frozen=True)
class InterlacingReport:
    """Outcome of an interlacing test between two zero sets.

    ``witness`` is the position in the alternating inequality chain where the
    requirement first fails (None when the relation holds).  StrictInterlace
    with equal degrees implies the zero-wise order, reported as Dominates
    when interlacing itself fails but the order still holds.
    """

    relation: Relation
    degree_pattern: DegreePattern | None
    witness: int | None


@dataclass(frozen=True)
class LmeshResult:
    """Enclosure of max_j lambda_j / lambda_(j+1) and its comparison with q."""

    value_lo: Fraction
    value_hi: Fraction
    argmax_index: int
    exact_equals_q: bool
    q: Fraction

    def compare_to_q(self) -> int:
        """-1, 0, +1 for lmesh < q, = q, > q; always decided."""
        if self.exact_equals_q:
            return 0
        return -1 if self.value_hi < self.q else 1


@dataclass(frozen=True)
class ZerowiseReport:
    """lambda_k(p) <= lambda_k(r) for all k, with strict-movement detail."""

    holds: bool
    witness: int | None
    any_strict: bool


# -- working copies and transforms -----------------------------------------


@dataclass
class _Certified:
    poly: PolyExact
    entries: list[RootEntry]

    def lambdas(self) -> list[RootEntry]:
        out: list[RootEntry] = []
        for e in self.entries:
            out.extend([e] * e.multiplicity)
        return out


def _working_copy(rs: RootSet) -> _Certified:
    return _Certified(rs.poly, [e.copy() for e in rs.roots])


def _transform(cr: _Certified, c: Fraction) -> _Certified:
    """Roots map to c*root (c != 0); intervals, certificates, order follow."""
    entries = []
    for e in cr.entries:
        lo, hi = (c * e.lo, c * e.hi) if c > 0 else (c * e.hi, c * e.lo)
        entries.append(
            RootEntry(
                lo,
                hi,
                e.multiplicity,
                None if e.exact is None else c * e.exact,
                e.factor.scale_arg(1 / c),
            )
        )
    if c < 0:
        entries.reverse()
    return _Certified(cr.poly.scale_arg(1 / c), entries)


class _PairContext:
    """Lazily computed square-free gcd chain of two polynomials."""

    _UNSET = object()

    def __init__(self, pa: PolyExact, pb: PolyExact):
        self._pa = pa
        self._pb = pb
        self._chain = self._UNSET

    def chain(self) -> SturmChain | None:
        if self._chain is self._UNSET:
            g = poly_gcd(self._pa, self._pb)
            self._chain = SturmChain(square_free_part(g)) if g.degree >= 1 else None
        return self._chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _compare_roots(ea: RootEntry, eb: RootEntry, ctx: _PairContext) -> int:
    """Exact sign of (root_a - root_b); coincidence proven via the gcd chain."""
    for _ in range(_COMPARE_BUDGET):
        if ea.hi < eb.lo:
            return -1
        if eb.hi < ea.lo:
            return 1
        if ea.exact is not None and eb.exact is not None:
            return _sign(ea.exact - eb.exact)
        if ea.exact is not None:
            if eb.factor(ea.exact) == 0 and eb.lo <= ea.exact <= eb.hi:
                return 0
            eb.bisect_once()
            continue
        if eb.exact is not None:
            if ea.factor(eb.exact) == 0 and ea.lo <= eb.exact <= ea.hi:
                return 0
            ea.bisect_once()
            continue
        chain = ctx.chain()
        if chain is not None:
            lo = max(ea.lo, eb.lo)
            hi = min(ea.hi, eb.hi)
            if lo < hi and chain.count(lo, hi) == 1:
                return 0
        ea.bisect_once()
        eb.bisect_once()
    raise RefinementFailureError("root comparison did not terminate")


def compare_root_to_point(entry: RootEntry, point: RationalLike) -> int:
    """Exact sign of (root - point) for a rational point."""
    pt = rat(point)
    for _ in range(_COMPARE_BUDGET):
        if entry.exact is not None:
            return _sign(entry.exact - pt)
        if entry.hi < pt:
            return -1
        if entry.lo > pt:
            return 1
        if entry.factor(pt) == 0:
            # pt is the unique root of the certificate inside this interval
            entry.exact = pt
            entry.lo = entry.hi = pt
            return 0
        entry.bisect_once()
    raise RefinementFailureError("root/point comparison did not terminate")


def _require_certified(rs: RootSet, what: str) -> None:
    if not rs.certified_real_rooted:
        raise ShapeError(f"{what} requires certified real-rooted input")


# -- interlacing and the partial order --------------------------------------


def _interlace_chain(
    lam_p: list[RootEntry], lam_r: list[RootEntry], ctx: _PairContext
) -> tuple[list[int], list[tuple[RootEntry, RootEntry]]]:
    n, m = len(lam_p), len(lam_r)
    pairs: list[tuple[RootEntry, RootEntry]] = []
    if m == n:
        for k in range(n):
            pairs.append((lam_p[k], lam_r[k]))
            if k + 1 < n:
                pairs.append((lam_r[k], lam_p[k + 1]))
    else:  # m == n - 1
        for k in range(m):
            pairs.append((lam_p[k], lam_r[k]))
            pairs.append((lam_r[k], lam_p[k + 1]))
    return [_compare_roots(a, b, ctx) for a, b in pairs], pairs


def _interlace_views(p: _Certified, r: _Certified) -> InterlacingReport:
    n = len(p.lambdas())
    m = len(r.lambdas())
    if abs(n - m) >= 2:
        raise ShapeError(f"zero counts differ by {abs(n - m)}; interlacing needs gap <= 1")
    if m == n + 1:
        return InterlacingReport(Relation.NONE, None, None)
    pattern = DegreePattern.EQUAL_DEGREE if m == n else DegreePattern.DEGREE_MINUS_ONE
    ctx = _PairContext(p.poly, r.poly)
    cmps, _ = _interlace_chain(p.lambdas(), r.lambdas(), ctx)
    if all(c < 0 for c in cmps):
        return InterlacingReport(Relation.STRICT_INTERLACE, pattern, None)
    if all(c <= 0 for c in cmps):
        return InterlacingReport(Relation.WEAK_INTERLACE, pattern, None)
    witness = next(i for i, c in enumerate(cmps) if c > 0)
    if pattern is DegreePattern.EQUAL_DEGREE:
        # chain positions 0, 2, 4, ... are the zero-wise comparisons
        if all(c <= 0 for i, c in enumerate(cmps) if i % 2 == 0):
            return InterlacingReport(Relation.DOMINATES, pattern, witness)
    return InterlacingReport(Relation.NONE, pattern, witness)


def interlace(rs_p: RootSet, rs_r: RootSet) -> InterlacingReport:
    """Decide whether the zeros of r interlace the zeros of p (p before r).

    StrictInterlace when every inequality of the alternating chain is strict,
    WeakInterlace when the chain holds with some tie, Dominates when the
    equal-degree zero-wise order holds but interlacing fails, None otherwise.
    Zero counts may be equal or r one lower; a gap of two or more is a shape
    error.
    """
    _require_certified(rs_p, "interlace")
    _require_certified(rs_r, "interlace")
    return _interlace_views(_working_copy(rs_p), _working_copy(rs_r))


def zerowise_compare(rs_p: RootSet, rs_r: RootSet) -> ZerowiseReport:
    """Decide lambda_k(p) <= lambda_k(r) for all k (equal zero counts)."""
    _require_certified(rs_p, "zero-wise comparison")
    _require_certified(rs_r, "zero-wise comparison")
    if rs_p.total_count != rs_r.total_count:
        raise ShapeError("zero-wise order needs equal zero counts")
    p = _working_copy(rs_p)
    r = _working_copy(rs_r)
    ctx = _PairContext(p.poly, r.poly)
    witness = None
    any_strict = False
    holds = True
    for k, (ea, eb) in enumerate(zip(p.lambdas(), r.lambdas())):
        c = _compare_roots(ea, eb, ctx)
        if c > 0 and holds:
            holds = False
            witness = k
        if c < 0:
            any_strict = True
    return ZerowiseReport(holds, witness, any_strict)


def dominates(rs_p: RootSet, rs_r: RootSet) -> bool:
    """True when every k-th smallest zero of p is <= the k-th smallest zero of r."""
    return zerowise_compare(rs_p, rs_r).holds


# -- logarithmic mesh --------------------------------------------------------


def _one_signed(cr: _Certified) -> int:
    """+1 (all roots positive) or -1 (all negative); refines to decide."""
    signs = set()
    for e in cr.entries:
        s = compare_root_to_point(e, 0)
        if s == 0:
            raise LmeshDomainError("logarithmic mesh undefined for a zero at the origin")
        signs.add(s)
    if len(signs) != 1:
        raise LmeshDomainError("logarithmic mesh needs zeros of one sign")
    return signs.pop()


def lmesh(rs: RootSet, q: QValue | RationalLike) -> LmeshResult:
    """Enclose lmesh(p) = max ratio of consecutive ordered zeros, decided vs q.

    Negative zero sets are reflected first (lmesh of p(-x)).  The returned
    enclosure always resolves the three-way comparison with q; equality is
    established exactly, never numerically.
    """
    qv = as_q(q)
    _require_certified(rs, "lmesh")
    if rs.total_count < 2:
        raise UndefinedLmeshError("lmesh needs at least two zeros")
    cr = _working_copy(rs)
    if _one_signed(cr) < 0:
        cr = _transform(cr, Fraction(-1))
    lam = cr.lambdas()
    scaled = _transform(cr, qv)
    lam_scaled = scaled.lambdas()
    ctx = _PairContext(cr.poly, scaled.poly)
    cmps = [
        _compare_roots(lam[j], lam_scaled[j + 1], ctx) for j in range(len(lam) - 1)
    ]

    def ratio_bounds() -> tuple[list[Fraction], list[Fraction]]:
        los, his = [], []
        for j in range(len(lam) - 1):
            num, den = lam[j], lam[j + 1]
            los.append(num.lo / den.hi)
            his.append(min(num.hi / den.lo, Fraction(1)))
        return los, his

    # tighten the enclosure until it resolves the already-decided comparison
    los, his = ratio_bounds()
    if any(c > 0 for c in cmps):
        exact_eq = False
        argmax = next(j for j, c in enumerate(cmps) if c > 0)
        for _ in range(_COMPARE_BUDGET):
            if los[argmax] > qv:
                break
            lam[argmax].bisect_once()
            lam[argmax + 1].bisect_once()
            los, his = ratio_bounds()
        else:
            raise RefinementFailureError("lmesh enclosure refinement stalled")
    elif any(c == 0 for c in cmps):
        exact_eq = True
        argmax = next(j for j, c in enumerate(cmps) if c == 0)
    else:
        exact_eq = False
        for _ in range(_COMPARE_BUDGET):
            if max(his) < qv:
                break
            j = max(range(len(his)), key=lambda i: (his[i], -i))
            lam[j].bisect_once()
            lam[j + 1].bisect_once()
            los, his = ratio_bounds()
        else:
            raise RefinementFailureError("lmesh enclosure refinement stalled")
        argmax = max(range(len(his)), key=lambda i: (his[i], -i))
    return LmeshResult(max(los), max(his), argmax, exact_eq, qv)


def in_lmesh_class(rs: RootSet, q: QValue | RationalLike, strict: bool) -> bool:
    """Membership of p in the class with lmesh < q (strict) or <= q (closure).

    Decided through interlacing of p against its argument-scaled copy p(qx),
    which by construction agrees with the lmesh comparison.  Zero sets of
    size <= 1 are members vacuously.
    """
    qv = as_q(q)
    _require_certified(rs, "lmesh class membership")
    if rs.total_count == 0:
        return True
    cr = _working_copy(rs)
    if _one_signed(cr) < 0:
        cr = _transform(cr, Fraction(-1))
    scaled = _transform(cr, 1 / qv)  # zeros of p(qx)
    report = _interlace_views(cr, scaled)
    if strict:
        return report.relation is Relation.STRICT_INTERLACE
    return report.relation in (Relation.STRICT_INTERLACE, Relation.WEAK_INTERLACE)
