"""Registry and runner for identity and zero-distribution checks over grids.

Identity checks rebuild both sides of an algebraic relation independently
from the series definitions and demand exact coefficient equality (tolerance
zero); limit checks instead require an exactly monotone decreasing deviation
sequence whose last term is below the grid eps.  Zero-distribution checks
isolate certified roots and decide interlacing, zero-wise order, root
regions, lattice separation and logarithmic-mesh bounds via the analysis
module.  Points outside a check's hypotheses yield SkippedOutOfRegime
records, never silent passes; every Fail carries a witness.  Grids are
evaluated in deterministic lexicographic order, so records are reproducible.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .analysis import (
    Relation,
    compare_root_to_point,
    in_lmesh_class,
    interlace,
    zerowise_compare,
)
from .errors import (
    ConstraintViolationError,
    DegenerateParameterError,
    InvalidParameterError,
    QZerosError,
    RegistryError,
)
from .families import (
    e_factor,
    little_q_jacobi,
    normalization_constant,
    normalized_little_q_jacobi,
    q_bessel,
    q_laguerre,
    stieltjes_wigert,
    weight_mass,
)
from .qcalc import q_derivative
from .qcore import Rational, RationalLike, as_q, qpoch_finite, rat, rat_str
from .qhyper import HyperSpec, PolyExact, build_qhyper
from .roots import RootSet, isolate_real_roots

_ISOLATION_EPS = Fraction(1, 2**64)
_LIMIT_EXPONENTS = range(4, 21)


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "SkippedOutOfRegime"
    ERROR = "Error"


@dataclass(frozen=True)
class VerificationRecord:
    """One check at one parameter point; Fail always carries a witness."""

    check_id: str
    params: dict
    status: Status
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "checkId": self.check_id,
            "params": self.params,
            "status": self.status.value,
            "witness": self.witness,
        }


@dataclass
class GridSpec:
    """Parameter grid consumed by the runner; mirrors the config file format."""

    q_values: list[Fraction]
    n_values: list[int]
    a_values: list[Fraction] = field(default_factory=list)
    b_values: list[Fraction] = field(default_factory=list)
    t_values: list[Fraction] = field(default_factory=list)
    eps: Fraction = Fraction(1, 10**6)
    check_ids: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.q_values = [as_q(q) for q in self.q_values]
        self.n_values = [int(n) for n in self.n_values]
        self.a_values = [rat(a) for a in self.a_values]
        self.b_values = [rat(b) for b in self.b_values]
        self.t_values = [rat(t) for t in self.t_values]
        self.eps = rat(self.eps)
        if self.eps <= 0:
            raise InvalidParameterError(f"grid eps must be > 0, got {self.eps}")

    @classmethod
    def from_json(cls, doc: Mapping) -> "GridSpec":
        return cls(
            q_values=[rat(v) for v in doc.get("qValues", [])],
            n_values=[int(v) for v in doc.get("nValues", [])],
            a_values=[rat(v) for v in doc.get("aValues", [])],
            b_values=[rat(v) for v in doc.get("bValues", [])],
            t_values=[rat(v) for v in doc.get("tValues", [])],
            eps=rat(doc.get("eps", "1/1000000")),
            check_ids=list(doc.get("checkIds", [])),
        )

    def to_json(self) -> dict:
        return {
            "qValues": [rat_str(v) for v in self.q_values],
            "nValues": self.n_values,
            "aValues": [rat_str(v) for v in self.a_values],
            "bValues": [rat_str(v) for v in self.b_values],
            "tValues": [rat_str(v) for v in self.t_values],
            "eps": rat_str(self.eps),
            "checkIds": list(self.check_ids),
        }


def default_t_values(q: RationalLike) -> list[Fraction]:
    """The standard t sample set {q^2, (q^2+1)/2, 1} for a given q."""
    qv = as_q(q)
    return [qv * qv, (qv * qv + 1) / 2, Fraction(1)]


# --------------------------------------------------------------------------
# shared helpers
# --------------------------------------------------------------------------


def _fmt(value) -> object:
    if isinstance(value, Fraction):
        return rat_str(value)
    return value


def _params_dict(point: Mapping) -> dict:
    return {k: _fmt(v) for k, v in point.items()}


def _sign_str(c: int) -> str:
    return {-1: "<", 0: "=", 1: ">"}[c]


def _is_neg_q_power(value: Fraction, q: Fraction) -> bool:
    """value == q^-m for some integer m >= 0."""
    if value < 1:
        return False
    power = Fraction(1)
    while True:
        if value * power == 1:
            return True
        power *= q
        if value * power < 1:
            return False


def _roots(p: PolyExact) -> RootSet:
    return isolate_real_roots(p, _ISOLATION_EPS)


def _root_region(
    rs: RootSet,
    lo: Fraction | None,
    hi: Fraction | None,
    lo_open: bool = True,
    hi_open: bool = True,
) -> tuple[bool, int | None]:
    """All roots inside the interval; returns (ok, index of first offender)."""
    for idx, e in enumerate(rs.roots):
        if lo is not None:
            c = compare_root_to_point(e.copy(), lo)
            if c < 0 or (lo_open and c == 0):
                return False, idx
        if hi is not None:
            c = compare_root_to_point(e.copy(), hi)
            if c > 0 or (hi_open and c == 0):
                return False, idx
    return True, None


def _lattice_separated(rs: RootSet, q: Fraction) -> tuple[bool, dict | None]:
    """At most one zero (with multiplicity) per open cell (q^k, q^(k-1)), k >= 1.

    Assumes all roots already verified inside (0, 1).  A zero exactly at a
    lattice point belongs to no open cell and is reported in the detail.
    """
    cells: dict[int, int] = {}
    at_lattice: list[int] = []
    for e in rs.roots:
        w = e.copy()
        k = 1
        power = q
        while True:
            c = compare_root_to_point(w, power)
            if c > 0:
                cells[k] = cells.get(k, 0) + e.multiplicity
                break
            if c == 0:
                at_lattice.append(k)
                break
            k += 1
            power *= q
            if k > 1000:
                return False, {"reason": "zero not located above q^1000"}
    bad = [k for k, cnt in cells.items() if cnt > 1]
    if bad:
        return False, {"crowded_cells": bad}
    if at_lattice:
        return True, {"zeros_at_lattice_points": at_lattice}
    return True, None


def _compare_sides(
    comparisons: list[tuple[str, PolyExact, PolyExact]],
    corrupt_coeff: int | None = None,
) -> tuple[Status, dict | None]:
    for label, lhs, rhs in comparisons:
        if corrupt_coeff is not None:
            bump = [Fraction(0)] * (corrupt_coeff + 1)
            bump[corrupt_coeff] = Fraction(1)
            rhs = rhs + PolyExact(bump)
            corrupt_coeff = None
        diff = lhs - rhs
        if not diff.is_zero:
            index = next(i for i, c in enumerate(diff.coeffs) if c != 0)
            return Status.FAIL, {
                "comparison": label,
                "coeff_index": index,
                "lhs": rat_str(lhs.coeff(index)),
                "rhs": rat_str(rhs.coeff(index)),
            }
    return Status.PASS, None


class _Skip(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


# --------------------------------------------------------------------------
# identity checks
# --------------------------------------------------------------------------


def _jac(n: int, a: Fraction, b: Fraction, q: Fraction) -> PolyExact:
    try:
        return little_q_jacobi(n, a, b, q)
    except (DegenerateParameterError, ConstraintViolationError) as exc:
        raise _Skip(str(exc))


def _need(cond: bool, reason: str) -> None:
    if not cond:
        raise _Skip(reason)


def _identity_contig1(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    _need(not _is_neg_q_power(b, q), "b = q^-m excluded")
    lhs = -_jac(n, a, q * q * b, q)
    const = (
        a * (1 - q**n) * (1 - a * b * q ** (n + 3))
        / (q ** (n - 2) * (1 - a * q) * (1 - a * q**2))
    )
    rhs = const * (PolyExact.x() * _jac(n - 1, q**2 * a, q**2 * b, q)) - _jac(n, q * a, q * b, q)
    return [("contig-1", lhs, rhs)], None


def _identity_contig2(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    _need(not _is_neg_q_power(b, q), "b = q^-m excluded")
    lhs = (1 - a * q) * (1 + b * q**n * (a * q ** (n + 1) - a * q - 1)) * _jac(n, a, b, q)
    rhs = (1 - b * q**n) * (1 - a * q ** (n + 1)) * _jac(n, q * a, b / q, q) + (
        a * q * (1 - q**n) * (1 - a * b * q ** (n + 1))
    ) * (PolyExact((-1, b * q)) * _jac(n - 1, q * a, q * b, q))
    return [("contig-2", lhs, rhs)], None


def _identity_contig3(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    _need(not _is_neg_q_power(b, q), "b = q^-m excluded")
    lhs = q**n * (1 - a * b * q**n) * _jac(n, a, b, q)
    rhs = (1 - a * b * q ** (2 * n)) * _jac(n, a, b / q, q).scale_arg(q) - (1 - q**n) * _jac(
        n - 1, a, b, q
    )
    return [("contig-3", lhs, rhs)], None


def _identity_contig4(q, n, a, b):
    _need(not _is_neg_q_power(b, q), "b = q^-m excluded")
    lhs = b * q ** (n + 1) * (1 - a * q ** (n + 1)) * _jac(n + 1, a, b, q)
    rhs = (1 - a * b * q ** (2 * n + 2)) * (PolyExact((1, -q * b)) * _jac(n, a, q * b, q)) - (
        1 - b * q ** (n + 1)
    ) * _jac(n, a, b, q)
    return [("contig-4", lhs, rhs)], None


def _identity_contig3_shifted(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    _need(not _is_neg_q_power(b, q), "b = q^-m excluded")
    lhs = (1 - a * b * q ** (2 * n + 1)) * _jac(n, a, b, q).scale_arg(q)
    rhs = (1 - q**n) * _jac(n - 1, a, q * b, q) + q**n * (1 - a * b * q ** (n + 1)) * _jac(
        n, a, q * b, q
    )
    return [("contig-3-shifted", lhs, rhs)], None


def _identity_qderiv_jacobi(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    lhs = q_derivative(_jac(n, a, b, q), q)
    const = q * (1 - q ** (-n)) * (1 - a * b * q ** (n + 1)) / ((1 - q) * (1 - a * q))
    rhs = const * _jac(n - 1, q * a, q * b, q)
    return [("qderiv-jacobi", lhs, rhs)], {"constant": rat_str(const)}


def _identity_qderiv_hyper(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    shapes = [("2phi1", (a,), (b,)), ("1phi1", (), (b,)), ("2phi0", (a,), ())]
    comparisons = []
    constants = {}
    for label, upper, lower in shapes:
        try:
            p = build_qhyper(HyperSpec(n=n, upper=upper, lower=lower, q=q))
            shifted = build_qhyper(
                HyperSpec(
                    n=n - 1,
                    upper=tuple(q * u for u in upper),
                    lower=tuple(q * l for l in lower),
                    q=q,
                )
            )
        except ConstraintViolationError as exc:
            raise _Skip(str(exc))
        d = len(lower) - len(upper)
        const = Fraction(-1) ** d * (1 - q ** (-n)) / (1 - q)
        for u in upper:
            const *= 1 - u
        for l in lower:
            const /= 1 - l
        comparisons.append((label, q_derivative(p, q), const * shifted.scale_arg(q**d)))
        constants[label] = rat_str(const)
    return comparisons, {"constants": constants}


def _phi(n, upper, lower, q) -> PolyExact:
    try:
        return build_qhyper(HyperSpec(n=n, upper=upper, lower=lower, q=q))
    except ConstraintViolationError as exc:
        raise _Skip(str(exc))


def _identity_recip1(q, n, b):
    _need(b != 0, "needs b != 0")
    _need(qpoch_finite(b, q, n) != 0, "(b;q)_n vanishes")
    lhs = _phi(n, (), (b,), q)
    inner = _phi(n, (q ** (1 - n) / b,), (Fraction(0),), q).scale_arg(b * q ** (n + 1))
    rhs = (1 / (qpoch_finite(b, q, n) * q**n)) * inner.reversed_to(n)
    return [("recip-1", lhs, rhs)], None


def _identity_recip2(q, n, a, b):
    _need(a != 0 and b != 0, "needs a, b != 0")
    _need(qpoch_finite(b, q, n) != 0, "(b;q)_n vanishes")
    lhs = _phi(n, (a,), (b,), q)
    inner = _phi(n, (q ** (1 - n) / b,), (q ** (1 - n) / a,), q).scale_arg(
        b * q ** (n + 1) / a
    )
    const = (
        qpoch_finite(a, q, n)
        / qpoch_finite(b, q, n)
        * q ** (-n - n * (n - 1) // 2)
        * Fraction(-1) ** n
    )
    rhs = const * inner.reversed_to(n)
    return [("recip-2", lhs, rhs)], None


def _identity_recip3(q, n, a):
    _need(a != 0, "needs a != 0")
    lhs = _phi(n, (a,), (), q)
    inner = _phi(n, (Fraction(0),), (q ** (1 - n) / a,), q).scale_arg(q ** (n + 1) / a)
    const = qpoch_finite(a, q, n) * q ** (-n * n)
    rhs = const * inner.reversed_to(n)
    return [("recip-3", lhs, rhs)], {
        "note": "constant corrected by q^(-n(n-1)) relative to the usual citation"
    }


def _identity_factor_bneg(q, n, a, k):
    _need(1 <= k <= n, "needs 1 <= k <= n")
    lhs = _jac(n, a, q ** (-k), q)
    rhs = e_factor(k, q).scale_arg(q) * _jac(n - k, a, q**k, q).scale_arg(q ** (-k))
    return [("factor-bneg", lhs, rhs)], None


def _identity_factor_anorm(q, n, b, k):
    _need(1 <= k <= n, "needs 1 <= k <= n")
    lhs = normalized_little_q_jacobi(n, k, b, q)
    const = normalization_constant(n, k, b, q)
    rhs = (const * q**k) * _jac(n - k, q**k, b, q).shift_up(k)
    return [("factor-anorm", lhs, rhs)], {"constant": rat_str(const)}


def _identity_qdiff_bessel(q, n, b):
    _need(b != 0, "needs b != 0")
    B = q_bessel(n, b, q)
    combo = (
        PolyExact((1, -(q ** (-n) + b * q**n))) * B.scale_arg(q)
        + b * (PolyExact.x() * B.scale_arg(q * q))
        - PolyExact((1, -1)) * B
    )
    return [("qdiff-bessel", combo, PolyExact.zero())], {
        "form": "(1-(q^-n+bq^n)x) B(qx) + bx B(q^2 x) - (1-x) B(x) = 0"
    }


def _deviation_profile(pairs: list[tuple[PolyExact, PolyExact]]) -> list[Fraction]:
    """Relative max-coefficient deviations, one per (approximant, target) pair."""
    devs = []
    for approx, target in pairs:
        norm = max(abs(c) for c in target.coeffs)
        top = max(
            abs(approx.coeff(i) - target.coeff(i))
            for i in range(max(approx.degree, target.degree) + 1)
        )
        devs.append(top / norm)
    return devs


def _limit_record(devs: list[Fraction], eps: Fraction) -> tuple[Status, dict]:
    monotone = all(devs[i + 1] < devs[i] for i in range(len(devs) - 1))
    final = devs[-1]
    witness = {
        "monotone_decreasing": monotone,
        "final_deviation": f"{float(final):.3e}",
        "eps": rat_str(eps),
    }
    status = Status.PASS if monotone and final < eps else Status.FAIL
    return status, witness


def _identity_bessel_limit(q, n, b, eps):
    target = q_bessel(n, b, q).scale_arg(q)
    pairs = []
    for m in _LIMIT_EXPONENTS:
        a = q**m
        pairs.append((_jac(n, a, b / (q * a), q), target))
    return _limit_record(_deviation_profile(pairs), eps)


def _identity_sw_limit(q, n, eps):
    target = stieltjes_wigert(n, q)
    pairs = []
    for m in _LIMIT_EXPONENTS:
        b = q**m
        pairs.append((q_laguerre(n, b, q).scale_arg(q / b), target))
    return _limit_record(_deviation_profile(pairs), eps)


@dataclass(frozen=True)
class _Identity:
    axes: tuple[str, ...]
    fn: Callable
    expand_k: bool = False  # add k = 1..n to the point
    is_limit: bool = False


IDENTITY_CHECKS: dict[str, _Identity] = {
    "contig-1": _Identity(("q", "n", "a", "b"), _identity_contig1),
    "contig-2": _Identity(("q", "n", "a", "b"), _identity_contig2),
    "contig-3": _Identity(("q", "n", "a", "b"), _identity_contig3),
    "contig-4": _Identity(("q", "n", "a", "b"), _identity_contig4),
    "contig-3-shifted": _Identity(("q", "n", "a", "b"), _identity_contig3_shifted),
    "qderiv-jacobi": _Identity(("q", "n", "a", "b"), _identity_qderiv_jacobi),
    "qderiv-hyper": _Identity(("q", "n", "a", "b"), _identity_qderiv_hyper),
    "recip-1": _Identity(("q", "n", "b"), _identity_recip1),
    "recip-2": _Identity(("q", "n", "a", "b"), _identity_recip2),
    "recip-3": _Identity(("q", "n", "a"), _identity_recip3),
    "factor-bneg": _Identity(("q", "n", "a"), _identity_factor_bneg, expand_k=True),
    "factor-anorm": _Identity(("q", "n", "b"), _identity_factor_anorm, expand_k=True),
    "qdiff-bessel": _Identity(("q", "n", "b"), _identity_qdiff_bessel),
    "bessel-limit": _Identity(("q", "n", "b"), _identity_bessel_limit, is_limit=True),
    "sw-limit": _Identity(("q", "n"), _identity_sw_limit, is_limit=True),
}

SELFTEST_ID = "harness-selftest"


def check_identity(
    check_id: str,
    params: Mapping[str, object],
    *,
    _corrupt_coeff: int | None = None,
) -> VerificationRecord:
    """Run one identity at one parameter point.

    ``_corrupt_coeff`` perturbs one coefficient of the first right-hand side
    by 1 before comparison; it exists for the harness self-test, which must
    see a Fail whose witness names exactly that index.
    """
    if check_id == SELFTEST_ID:
        return _run_selftest(params)
    spec = IDENTITY_CHECKS.get(check_id)
    if spec is None:
        raise RegistryError(f"unknown identity check {check_id!r}")
    point = dict(params)
    shown = _params_dict(point)
    kwargs = {k: (int(v) if k in ("n", "k") else rat(v)) for k, v in point.items() if k != "eps"}
    if "q" in kwargs:
        kwargs["q"] = as_q(kwargs["q"])
    if spec.is_limit:
        kwargs["eps"] = rat(point.get("eps", Fraction(1, 10**6)))
        shown = _params_dict(kwargs)
    try:
        if spec.is_limit:
            status, witness = spec.fn(**kwargs)
        else:
            comparisons, extra = spec.fn(**kwargs)
            status, witness = _compare_sides(comparisons, _corrupt_coeff)
            if status is Status.PASS and extra:
                witness = extra
    except _Skip as skip:
        return VerificationRecord(check_id, shown, Status.SKIPPED, {"reason": skip.reason})
    except QZerosError as exc:
        return VerificationRecord(
            check_id, shown, Status.ERROR, {"error": type(exc).__name__, "detail": str(exc)}
        )
    return VerificationRecord(check_id, shown, status, witness)


def _run_selftest(params: Mapping[str, object]) -> VerificationRecord:
    """Corrupt one coefficient of a known-true identity; expect Fail there."""
    point = dict(params) or {"q": Fraction(1, 2), "n": 2, "a": Fraction(1, 3), "b": Fraction(-1)}
    index = int(point.pop("coeff_index", 1))
    inner = check_identity("contig-4", point, _corrupt_coeff=index)
    ok = (
        inner.status is Status.FAIL
        and inner.witness is not None
        and inner.witness.get("coeff_index") == index
    )
    return VerificationRecord(
        SELFTEST_ID,
        _params_dict(point),
        Status.PASS if ok else Status.FAIL,
        {"corrupted_index": index, "inner_status": inner.status.value, "inner_witness": inner.witness},
    )


# --------------------------------------------------------------------------
# zero-distribution (property) checks
# --------------------------------------------------------------------------


def _interlace_outcome(
    rs_p: RootSet, rs_r: RootSet, accept: tuple[Relation, ...]
) -> tuple[Status, dict | None]:
    report = interlace(rs_p, rs_r)
    witness = {"relation": report.relation.value}
    if report.relation in accept:
        return Status.PASS, witness
    witness["chain_position"] = report.witness
    return Status.FAIL, witness


def _jacobi_regime(q, a, b) -> None:
    _need(0 < a * q < 1, f"needs 0 < aq < 1 (aq = {a * q})")
    _need(b * q < 1, f"needs bq < 1 (bq = {b * q})")


def _prop_thmA(variant: int):
    def fn(q, n, a, b):
        _jacobi_regime(q, a, b)
        p = _roots(_jac(n + 1, a, b, q))
        if variant == 1:
            r = _roots(_jac(n, a, q * b, q))
        elif variant == 2:
            r = _roots(_jac(n, a, q * q * b, q))
        else:
            p = _roots(_jac(n, a, q * q * b, q))
            r = _roots(_jac(n, q * a, q * b, q))
        return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))

    return fn


def _prop_thm1_monotone(which: str):
    def fn(q, n, b=None, a=None, lo=None, hi=None):
        if which == "a":
            _need(0 < lo * q < 1 and 0 < hi * q < 1, "both a values need 0 < aq < 1")
            _need(b * q < 1, f"needs bq < 1 (bq = {b * q})")
            # zeros decrease with a: larger a sits zero-wise below smaller a
            first = _roots(_jac(n, hi, b, q))
            second = _roots(_jac(n, lo, b, q))
        else:
            _need(0 < a * q < 1, f"needs 0 < aq < 1 (aq = {a * q})")
            _need(lo * q < 1 and hi * q < 1, "both b values need bq < 1")
            # zeros increase with b
            first = _roots(_jac(n, a, lo, q))
            second = _roots(_jac(n, a, hi, q))
        rep = zerowise_compare(first, second)
        witness = {"any_strict_movement": rep.any_strict}
        if rep.holds:
            return Status.PASS, witness
        witness["zero_index"] = rep.witness
        return Status.FAIL, witness

    return fn


def _prop_thm2_lmesh(q, n, a, b):
    _jacobi_regime(q, a, b)
    rs = _roots(_jac(n, a, b, q))
    if not rs.certified_real_rooted:
        return Status.FAIL, {"reason": "not certified real-rooted", "found": rs.total_count}
    if any(e.multiplicity > 1 for e in rs.roots):
        return Status.FAIL, {"reason": "multiple zero found"}
    ok, idx = _root_region(rs, Fraction(0), Fraction(1))
    if not ok:
        return Status.FAIL, {"reason": "zero outside (0,1)", "zero_index": idx}
    ok, detail = _lattice_separated(rs, q)
    if not ok:
        return Status.FAIL, {"reason": "lattice cell with two zeros", **(detail or {})}
    if not in_lmesh_class(rs, q, strict=True):
        return Status.FAIL, {"reason": "lmesh not strictly below q"}
    witness = {"lattice": detail} if detail else None
    return Status.PASS, witness


def _prop_thm2_i(q, n, a, b):
    _need(n >= 1, "needs n >= 1")
    _jacobi_regime(q, a, b)
    p = _roots(_jac(n, a, b, q))
    r = _roots(_jac(n - 1, q * a, q * b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_thm2_ii(q, n, a, b):
    _jacobi_regime(q, a, b)
    p = _roots(_jac(n, a, q * q * b, q))
    r = _roots(_jac(n, q * q * a, b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_thm2_iii(q, n, a, b):
    _need(b < 0, f"needs b < 0 (b = {b})")
    _need(0 < a * q < 1, f"needs 0 < aq < 1 (aq = {a * q})")
    p = _roots(_jac(n, a, b, q))
    r = _roots(_jac(n, a, q * q * b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _t_window(q, t) -> None:
    _need(q * q <= t <= 1, f"needs q^2 <= t <= 1 (t = {t})")


def _prop_cor_i(q, n, a, b, t1, t2):
    _need(0 < a * q < 1, f"needs 0 < aq < 1 (aq = {a * q})")
    _need(0 <= b * q < 1, f"needs 0 <= qb < 1 (qb = {q * b})")
    _t_window(q, t1)
    _t_window(q, t2)
    _need(t1 * t2 != 1, "needs t1*t2 != 1")
    _need(not (b == 0 and t2 == 1), "degenerate point: both sides identical (b=0, t2=1)")
    p = _roots(_jac(n, a, t1 * b, q))
    r = _roots(_jac(n, t2 * a, b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_cor_ii(q, n, a, b, t1):
    _need(0 < a * q < 1, f"needs 0 < aq < 1 (aq = {a * q})")
    _need(b < 0, f"needs b < 0 (b = {b})")
    _need(q * q <= t1 < 1, f"needs q^2 <= t1 < 1 (t1 = {t1})")
    p = _roots(_jac(n, a, b, q))
    r = _roots(_jac(n, a, t1 * b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _in_class_outcome(
    p: PolyExact,
    base: Fraction,
    strict: bool,
    region: tuple[Fraction | None, Fraction | None],
    region_open: tuple[bool, bool] = (True, True),
) -> tuple[Status, dict | None]:
    rs = _roots(p)
    if not rs.certified_real_rooted:
        return Status.FAIL, {"reason": "not certified real-rooted", "found": rs.total_count}
    ok, idx = _root_region(rs, region[0], region[1], region_open[0], region_open[1])
    if not ok:
        return Status.FAIL, {"reason": "zero outside stated region", "zero_index": idx}
    if not in_lmesh_class(rs, base, strict=strict):
        kind = "strictly below" if strict else "at most"
        return Status.FAIL, {"reason": f"lmesh not {kind} {rat_str(base)}"}
    return Status.PASS, None


def _prop_bessel_lmesh(q, n, b):
    _need(b < 0, f"needs b < 0 (b = {b})")
    return _in_class_outcome(q_bessel(n, b, q), q, True, (Fraction(0), Fraction(1)))


def _prop_bessel_interlace(q, n, b, t):
    _need(b < 0, f"needs b < 0 (b = {b})")
    _need(q * q < t < 1, f"needs q^2 < t < 1 (t = {t})")
    p = _roots(q_bessel(n, b, q))
    r = _roots(q_bessel(n, t * b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE, Relation.WEAK_INTERLACE))


def _prop_qlag_lmesh(q, n, b):
    _need(0 < b < 1, f"needs 0 < b < 1 (b = {b})")
    return _in_class_outcome(q_laguerre(n, b, q), q * q, True, (Fraction(0), None))


def _prop_qlag_interlace(q, n, b, t):
    _need(0 < b < 1, f"needs 0 < b < 1 (b = {b})")
    _need(q * q < t < 1, f"needs q^2 < t < 1 (t = {t})")
    p = _roots(q_laguerre(n, b, q))
    r = _roots(q_laguerre(n, t * b, q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_sw_lmesh(q, n):
    return _in_class_outcome(stieltjes_wigert(n, q), q * q, False, (Fraction(0), None))


def _prop_phi21_mono1(q, n, a, b, t1, t2):
    _need(0 < b < 1, f"needs 0 < b < 1 (b = {b})")
    _need(0 <= a < b * q ** (n - 1), f"needs 0 <= a < b q^(n-1) (a = {a})")
    _t_window(q, t1)
    _t_window(q, t2)
    _need(t1 * t2 != 1, "needs t1*t2 != 1")
    _need(not (a == 0 and t2 == 1), "degenerate point: both sides identical (a=0, t2=1)")
    p = _roots(_phi(n, (t1 * a,), (b,), q))
    r = _roots(_phi(n, (t2 * a,), (t2 * b,), q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_phi21_mono2(q, n, a, b, t1):
    _need(a < 0, f"needs a < 0 (a = {a})")
    _need(0 < b < 1, f"needs 0 < b < 1 (b = {b})")
    _need(q * q <= t1 < 1, f"needs q^2 <= t1 < 1 (t1 = {t1})")
    p = _roots(_phi(n, (a,), (b,), q))
    r = _roots(_phi(n, (t1 * a,), (b,), q))
    return _interlace_outcome(p, r, (Relation.STRICT_INTERLACE,))


def _prop_orthogonality(q, a, b, n, m, eps):
    _jacobi_regime(q, a, b)
    _need(0 < a * q, "needs a > 0")
    s, tail, cutoff = _orthogonality_sum(n, m, a, b, q, eps)
    witness = {
        "abs_sum": f"{float(abs(s)):.3e}",
        "tail_bound": f"{float(tail):.3e}",
        "lattice_cutoff": cutoff,
    }
    if abs(s) < eps and tail < eps:
        return Status.PASS, witness
    return Status.FAIL, witness


def _orthogonality_sum(n, m, a, b, q, tol):
    """Exact partial sum of the discrete pairing plus a proven geometric tail bound."""
    pn = little_q_jacobi(n, a, b, q)
    pm = little_q_jacobi(m, a, b, q)
    phat_n = PolyExact([abs(c) for c in pn.coeffs])
    phat_m = PolyExact([abs(c) for c in pm.coeffs])
    aq = a * q
    probe = 40
    # positive lower bound for (q;q)_inf and upper bound for sup_k |(bq;q)_k|
    lower_qq = qpoch_finite(q, q, probe) * (1 - q ** (probe + 1) / (1 - q))
    if b >= 0:
        upper_bq = Fraction(1)
    else:
        tail_sum = abs(b) * q ** (probe + 1) / (1 - q)
        upper_bq = abs(qpoch_finite(b * q, q, probe)) / (1 - tail_sum)
    cutoff = 8
    while True:
        tail = (
            (upper_bq / lower_qq)
            * phat_n(q ** (cutoff + 1))
            * phat_m(q ** (cutoff + 1))
            * aq ** (cutoff + 1)
            / (1 - aq)
        )
        if tail < tol:
            break
        cutoff += 8
        if cutoff > 100_000:
            raise _Skip("tail bound did not contract")
    total = Fraction(0)
    power = Fraction(1)
    for k in range(cutoff + 1):
        total += weight_mass(k, a, b, q) * pn(power) * pm(power)
        power *= q
    return total, tail, cutoff


# -- Table 1: stated parameter ranges, root regions and mesh bounds ---------


def _samples_interval(lo: Fraction | None, hi: Fraction | None) -> list[Fraction]:
    """Documented deterministic samples for open ranges: quartile points of a
    finite interval, offsets {1/3, 1, 3} beyond a single finite endpoint."""
    if lo is not None and hi is not None:
        if hi <= lo:
            return []
        return [lo + (hi - lo) * f for f in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))]
    if lo is not None:
        return [lo + Fraction(1, 3), lo + 1, lo + 3]
    return [hi - 3, hi - 1, hi - Fraction(1, 3)]


@dataclass(frozen=True)
class TableRow:
    """One row of the root-location table for phi polynomials with top
    parameter q^-n: the polynomial shape, stated (a, b) ranges, the stated
    root region and lmesh bound.  ``note`` records any reading adopted where
    the printed form is unattainable; the runner still reports honestly."""

    row: int
    shape: str  # "2phi1" | "2phi0" | "1phi1"
    a_samples: Callable | None
    b_samples: Callable | None
    region: Callable  # (q, n) -> (lo, hi, lo_open, hi_open)
    mesh_base: Callable  # (q) -> bound to compare lmesh against
    mesh_strict: bool
    note: str | None = None


TABLE1_ROWS: dict[int, TableRow] = {
    1: TableRow(
        1,
        "2phi1",
        lambda q, n, b: _samples_interval(None, b * q ** (n - 1)),
        lambda q, n: _samples_interval(Fraction(0), Fraction(1)),
        lambda q, n: (Fraction(0), q, True, True),
        lambda q: q,
        True,
    ),
    2: TableRow(
        2,
        "2phi1",
        lambda q, n, b: sorted({b * q**j for j in (0, (n - 1) // 2, n - 1)}),
        lambda q, n: _samples_interval(Fraction(0), Fraction(1)),
        lambda q, n: (Fraction(0), q, True, False),
        lambda q: q,
        False,
        note="top zero equals q exactly (factorization through E_k); region closed at q",
    ),
    3: TableRow(
        3,
        "2phi1",
        lambda q, n, b: _samples_interval(q ** (1 - n), None),
        lambda q, n: _samples_interval(None, Fraction(0)),
        lambda q, n: (None, Fraction(0), True, True),
        lambda q: q,
        True,
    ),
    4: TableRow(
        4,
        "2phi1",
        lambda q, n, b: _samples_interval(q ** (1 - n), b * q ** (n + 1)),
        lambda q, n: [q ** (-2 * n) * 2, q ** (-2 * n) * 4, q ** (-2 * n) * 16],
        lambda q, n: (Fraction(0), None, True, True),
        lambda q: q,
        True,
    ),
    5: TableRow(
        5,
        "2phi1",
        lambda q, n, b: _samples_interval(None, Fraction(0)),
        lambda q, n: [Fraction(0)],
        lambda q, n: (Fraction(0), q, True, True),
        lambda q: q,
        True,
    ),
    6: TableRow(
        6,
        "2phi1",
        lambda q, n, b: _samples_interval(q ** (1 - n), None),
        lambda q, n: [Fraction(0)],
        lambda q, n: (None, Fraction(0), True, True),
        lambda q: q,
        True,
    ),
    7: TableRow(
        7,
        "2phi0",
        lambda q, n, b: _samples_interval(q ** (1 - n), None),
        None,
        lambda q, n: (Fraction(0), None, True, True),
        lambda q: q,
        True,
    ),
    8: TableRow(
        8,
        "1phi1",
        None,
        lambda q, n: _samples_interval(Fraction(0), Fraction(1)),
        lambda q, n: (None, Fraction(0), True, True),
        lambda q: q * q,
        True,
    ),
    9: TableRow(
        9,
        "1phi1",
        None,
        lambda q, n: [Fraction(0)],
        lambda q, n: (None, Fraction(0), True, True),
        lambda q: q * q,
        False,
    ),
    10: TableRow(
        10,
        "1phi1",
        None,
        lambda q, n: _samples_interval(None, Fraction(0)),
        lambda q, n: (None, Fraction(0), True, True),
        lambda q: q,
        True,
    ),
}


def _table_row_points(row: TableRow, grid: "GridSpec") -> list[dict]:
    points = []
    for q in grid.q_values:
        for n in grid.n_values:
            if n < 1:
                continue
            b_list = row.b_samples(q, n) if row.b_samples else [None]
            for b in b_list:
                a_list = row.a_samples(q, n, b) if row.a_samples else [None]
                for a in a_list:
                    point = {"q": q, "n": n}
                    if a is not None:
                        point["a"] = a
                    if b is not None:
                        point["b"] = b
                    points.append(point)
    return points


def _prop_table_row(row_id: int):
    row = TABLE1_ROWS[row_id]

    def fn(q, n, a=None, b=None):
        if row.shape == "2phi1":
            p = _phi(n, (a,), (b,), q)
        elif row.shape == "2phi0":
            p = _phi(n, (a,), (), q)
        else:
            p = _phi(n, (), (b,), q)
        lo, hi, lo_open, hi_open = row.region(q, n)
        status, witness = _in_class_outcome(
            p, row.mesh_base(q), row.mesh_strict, (lo, hi), (lo_open, hi_open)
        )
        if status is Status.PASS and row.note:
            witness = {"note": row.note}
        return status, witness

    return fn


@dataclass(frozen=True)
class _Property:
    points: Callable  # GridSpec -> list[dict]
    fn: Callable  # (**point) -> (Status, witness | None)


def _axis_points(*axes: str):
    def build(grid: GridSpec) -> list[dict]:
        pools = {
            "q": grid.q_values,
            "n": grid.n_values,
            "a": grid.a_values,
            "b": grid.b_values,
            "t": grid.t_values,
            "t1": grid.t_values,
            "t2": grid.t_values,
        }
        names = list(axes)
        return [dict(zip(names, combo)) for combo in itertools.product(*(pools[x] for x in names))]

    return build


def _pair_points(axis: str):
    """Ordered value pairs (lo < hi) of one axis, crossed with q, n and the other axis."""

    def build(grid: GridSpec) -> list[dict]:
        values = sorted(set(grid.a_values if axis == "a" else grid.b_values))
        pairs = [(x, y) for i, x in enumerate(values) for y in values[i + 1 :]]
        other_name = "b" if axis == "a" else "a"
        other_pool = grid.b_values if axis == "a" else grid.a_values
        out = []
        for q in grid.q_values:
            for n in grid.n_values:
                for other in other_pool:
                    for lo, hi in pairs:
                        out.append({"q": q, "n": n, other_name: other, "lo": lo, "hi": hi})
        return out

    return build


def _orthogonality_points(grid: GridSpec) -> list[dict]:
    out = []
    for q in grid.q_values:
        for a in grid.a_values:
            for b in grid.b_values:
                for n in range(0, 6):
                    for m in range(n + 1, 6):
                        out.append({"q": q, "a": a, "b": b, "n": n, "m": m, "eps": grid.eps})
    return out


PROPERTY_CHECKS: dict[str, _Property] = {
    "thmA-1": _Property(_axis_points("q", "n", "a", "b"), _prop_thmA(1)),
    "thmA-2": _Property(_axis_points("q", "n", "a", "b"), _prop_thmA(2)),
    "thmA-3": _Property(_axis_points("q", "n", "a", "b"), _prop_thmA(3)),
    "thm1-monotone-a": _Property(_pair_points("a"), _prop_thm1_monotone("a")),
    "thm1-monotone-b": _Property(_pair_points("b"), _prop_thm1_monotone("b")),
    "thm2-lmesh": _Property(_axis_points("q", "n", "a", "b"), _prop_thm2_lmesh),
    "thm2-i": _Property(_axis_points("q", "n", "a", "b"), _prop_thm2_i),
    "thm2-ii": _Property(_axis_points("q", "n", "a", "b"), _prop_thm2_ii),
    "thm2-iii": _Property(_axis_points("q", "n", "a", "b"), _prop_thm2_iii),
    "cor-i": _Property(_axis_points("q", "n", "a", "b", "t1", "t2"), _prop_cor_i),
    "cor-ii": _Property(_axis_points("q", "n", "a", "b", "t1"), _prop_cor_ii),
    "bessel-lmesh": _Property(_axis_points("q", "n", "b"), _prop_bessel_lmesh),
    "bessel-interlace": _Property(_axis_points("q", "n", "b", "t"), _prop_bessel_interlace),
    "qlag-lmesh": _Property(_axis_points("q", "n", "b"), _prop_qlag_lmesh),
    "qlag-interlace": _Property(_axis_points("q", "n", "b", "t"), _prop_qlag_interlace),
    "sw-lmesh": _Property(_axis_points("q", "n"), _prop_sw_lmesh),
    "phi21-mono-1": _Property(_axis_points("q", "n", "a", "b", "t1", "t2"), _prop_phi21_mono1),
    "phi21-mono-2": _Property(_axis_points("q", "n", "a", "b", "t1"), _prop_phi21_mono2),
    "orthogonality": _Property(_orthogonality_points, _prop_orthogonality),
}
for _row_id in range(1, 11):
    PROPERTY_CHECKS[f"table1-row-{_row_id}"] = _Property(
        (lambda rid: lambda grid: _table_row_points(TABLE1_ROWS[rid], grid))(_row_id),
        _prop_table_row(_row_id),
    )


def check_property(check_id: str, grid: GridSpec) -> list[VerificationRecord]:
    """Evaluate one zero-distribution check over the whole grid."""
    spec = PROPERTY_CHECKS.get(check_id)
    if spec is None:
        raise RegistryError(f"unknown property check {check_id!r}")
    records = []
    for point in spec.points(grid):
        shown = _params_dict(point)
        try:
            status, witness = spec.fn(**point)
        except _Skip as skip:
            status, witness = Status.SKIPPED, {"reason": skip.reason}
        except QZerosError as exc:
            status, witness = Status.ERROR, {"error": type(exc).__name__, "detail": str(exc)}
        records.append(VerificationRecord(check_id, shown, status, witness))
    return records


def run_checks(grid: GridSpec) -> list[VerificationRecord]:
    """Run every check named by the grid, identities first point order, then
    properties, in the deterministic order the grid lists them."""
    records: list[VerificationRecord] = []
    for check_id in grid.check_ids:
        if check_id in IDENTITY_CHECKS or check_id == SELFTEST_ID:
            records.extend(run_identity_on_grid(check_id, grid))
        elif check_id in PROPERTY_CHECKS:
            records.extend(check_property(check_id, grid))
        else:
            raise RegistryError(f"unknown check {check_id!r}")
    return records


def run_identity_on_grid(check_id: str, grid: GridSpec) -> list[VerificationRecord]:
    """Iterate an identity over the grid axes it consumes (plus k = 1..n for
    the factorization checks and eps for the limit checks)."""
    if check_id == SELFTEST_ID:
        return [check_identity(SELFTEST_ID, {})]
    spec = IDENTITY_CHECKS.get(check_id)
    if spec is None:
        raise RegistryError(f"unknown identity check {check_id!r}")
    points = _axis_points(*spec.axes)(grid)
    records = []
    for point in points:
        if spec.is_limit:
            point = dict(point)
            point["eps"] = grid.eps
        if spec.expand_k:
            for k in range(1, point["n"] + 1):
                records.append(check_identity(check_id, {**point, "k": k}))
        else:
            records.append(check_identity(check_id, point))
    return records


def summarize(records: Iterable[VerificationRecord]) -> dict:
    counts = {"total": 0, "pass": 0, "fail": 0, "skipped": 0, "error": 0}
    key = {
        Status.PASS: "pass",
        Status.FAIL: "fail",
        Status.SKIPPED: "skipped",
        Status.ERROR: "error",
    }
    for rec in records:
        counts["total"] += 1
        counts[key[rec.status]] += 1
    return counts


def identity_check_ids() -> list[str]:
    return list(IDENTITY_CHECKS)


def property_check_ids() -> list[str]:
    return list(PROPERTY_CHECKS)
