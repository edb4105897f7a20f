"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.  Every tolerance is pinned here; identity checks are
exact (tolerance zero), the limit checks use 1e-6, orthogonality 1e-20.
"""

import time
from fractions import Fraction as F
from math import isqrt

from qzeros import (
    GridSpec,
    SELFTEST_ID,
    Status,
    check_identity,
    check_property,
    default_t_values,
    isolate_real_roots,
    little_q_jacobi,
    q_bessel,
    q_laguerre,
    run_identity_on_grid,
    stieltjes_wigert,
    summarize,
)

Q_GRID = [F(1, 4), F(1, 2), F(3, 4), F(9, 10)]
N_GRID = list(range(1, 9))


def _report(num: int, ok: bool, detail: str) -> bool:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def _tally(records):
    s = summarize(records)
    return s, [r for r in records if r.status in (Status.FAIL, Status.ERROR)]


def test_criterion_1_exact_identities():
    """Exact coefficient equality for all algebraic identities on a grid of
    at least 200 admissible points per identity, under 60 seconds."""
    a3 = [F(1, 3), F(-2), F(2, 3)]
    b3 = [F(1, 3), F(-1), F(3, 2)]
    list7 = [F(1, 3), F(2, 3), F(-1), F(-2), F(3, 2), F(-1, 3), F(5, 2)]
    grids = {
        "contig-1": (a3, b3), "contig-2": (a3, b3), "contig-3": (a3, b3),
        "contig-4": (a3, b3), "contig-3-shifted": (a3, b3),
        "qderiv-jacobi": (a3, b3), "qderiv-hyper": (a3, b3), "recip-2": (a3, b3),
        "recip-1": (a3, list7), "qdiff-bessel": (a3, list7),
        "recip-3": (list7, b3),
        "factor-bneg": (a3, b3), "factor-anorm": (a3, b3),
    }
    started = time.monotonic()
    bad = []
    counts = {}
    for check_id, (a_values, b_values) in grids.items():
        grid = GridSpec(
            q_values=Q_GRID, n_values=N_GRID, a_values=a_values, b_values=b_values
        )
        records = run_identity_on_grid(check_id, grid)
        summary, failures = _tally(records)
        admissible = summary["pass"] + summary["fail"]
        counts[check_id] = admissible
        if failures or admissible < 200:
            bad.append((check_id, summary, failures[:3]))
    elapsed = time.monotonic() - started
    ok = not bad and elapsed < 60
    detail = (
        f"13 identities exact on {min(counts.values())}..{max(counts.values())} "
        f"admissible points each in {elapsed:.1f}s"
    )
    assert _report(1, ok, detail), bad


def test_criterion_2_theorem_lmesh_on_orthogonal_grid():
    """Every orthogonal-regime polynomial: real simple zeros in (0,1), at most
    one per lattice cell, lmesh strictly below q (exact decision)."""
    grid = GridSpec(
        q_values=Q_GRID,
        n_values=N_GRID,
        a_values=[F(1, 4), F(1, 2), F(1)],
        b_values=[F(-2), F(-1, 2), F(0), F(1, 2), F(1)],
        check_ids=["thm2-lmesh"],
    )
    records = check_property("thm2-lmesh", grid)
    summary, failures = _tally(records)
    ok = not failures and summary["skipped"] == 0 and summary["pass"] == len(records)
    assert _report(
        2, ok, f"{summary['pass']} orthogonal-regime polynomials, zero failures"
    ), failures[:5]


def test_criterion_3_interlacing_suite():
    q_values = [F(1, 2), F(3, 4)]
    bad = []
    evaluated = {}
    for q in q_values:
        t_values = default_t_values(q)
        base = dict(q_values=[q], t_values=t_values)
        plans = {
            "thmA-1": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-1), F(1, 2)]),
            "thmA-2": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-1), F(1, 2)]),
            "thmA-3": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-1), F(1, 2)]),
            "thm2-i": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-1), F(1, 2)]),
            "thm2-ii": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-1), F(1, 2)]),
            "thm2-iii": GridSpec(**base, n_values=[1, 3, 5], a_values=[F(1, 2), F(1)], b_values=[F(-2), F(-1)]),
            "cor-i": GridSpec(**base, n_values=[2, 4], a_values=[F(1, 2)], b_values=[F(0), F(1, 2)]),
            "cor-ii": GridSpec(**base, n_values=[2, 4], a_values=[F(1, 2)], b_values=[F(-2), F(-1)]),
            "bessel-interlace": GridSpec(**base, n_values=[2, 5, 8], b_values=[F(-2), F(-1, 2)]),
        }
        for check_id, grid in plans.items():
            records = check_property(check_id, grid)
            summary, failures = _tally(records)
            evaluated[check_id] = evaluated.get(check_id, 0) + summary["pass"]
            if failures:
                bad.append((check_id, q, failures[:3]))
    ok = not bad and all(v > 0 for v in evaluated.values())
    total = sum(evaluated.values())
    assert _report(3, ok, f"{total} interlacing points, zero failures"), bad


def test_criterion_4_monotonicity():
    grid = GridSpec(
        q_values=[F(1, 2), F(3, 4)],
        n_values=[2, 4, 6],
        a_values=[F(1, 4), F(1, 2), F(1)],
        b_values=[F(-1), F(0), F(1, 2)],
    )
    strict = total = 0
    bad = []
    for check_id in ("thm1-monotone-a", "thm1-monotone-b"):
        records = check_property(check_id, grid)
        summary, failures = _tally(records)
        if failures:
            bad.append((check_id, failures[:3]))
        passes = [r for r in records if r.status is Status.PASS]
        total += len(passes)
        strict += sum(1 for r in passes if r.witness["any_strict_movement"])
    fraction = strict / total if total else 0.0
    ok = not bad and total > 0 and fraction >= 0.9
    assert _report(
        4, ok, f"zero-wise order on {total} ordered pairs, strict movement {100*fraction:.0f}%"
    ), bad


def test_criterion_5_family_lmesh_bounds():
    n_values = list(range(2, 9))
    plans = {
        "qlag-lmesh": GridSpec(Q_GRID, n_values, b_values=[F(1, 4), F(1, 2), F(3, 4)]),
        "sw-lmesh": GridSpec(Q_GRID, n_values),
        "bessel-lmesh": GridSpec(Q_GRID, n_values, b_values=[F(-2), F(-1, 2)]),
    }
    bad = []
    total = 0
    for check_id, grid in plans.items():
        records = check_property(check_id, grid)
        summary, failures = _tally(records)
        total += summary["pass"]
        if failures or summary["pass"] != len(records):
            bad.append((check_id, summary, failures[:3]))
    ok = not bad
    assert _report(5, ok, f"{total} family lmesh bounds, zero failures"), bad


def test_criterion_6_table_rows():
    # the (q, n) sweep alone must give the singleton-range rows >= 20 samples
    grid = GridSpec(q_values=Q_GRID, n_values=[2, 3, 4, 5, 6])
    bad = []
    sample_counts = {}
    for row in range(1, 11):
        check_id = f"table1-row-{row}"
        records = check_property(check_id, grid)
        summary, failures = _tally(records)
        sample_counts[row] = summary["pass"]
        if failures or summary["pass"] < 20:
            bad.append((check_id, summary, failures[:3]))
    ok = not bad
    detail = (
        f"10 rows confirmed with {min(sample_counts.values())}.."
        f"{max(sample_counts.values())} samples each"
    )
    assert _report(6, ok, detail), bad


def test_criterion_7_limits():
    eps = F(1, 10**6)
    bad = []
    checked = 0
    for n in range(1, 7):
        for b in (F(-2), F(-1), F(1, 3)):
            rec = check_identity("bessel-limit", {"q": F(1, 4), "n": n, "b": b, "eps": eps})
            checked += 1
            if rec.status is not Status.PASS or not rec.witness["monotone_decreasing"]:
                bad.append(rec)
        rec = check_identity("sw-limit", {"q": F(1, 4), "n": n, "eps": eps})
        checked += 1
        if rec.status is not Status.PASS or not rec.witness["monotone_decreasing"]:
            bad.append(rec)
    ok = not bad
    assert _report(
        7, ok, f"{checked} limit profiles monotone with final deviation < 1e-6"
    ), bad


def test_criterion_8_orthogonality():
    eps = F(1, 10**20)
    points = [
        (F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 4), F(1), F(-1)),
        (F(3, 4), F(1, 2), F(1, 3)),
    ]
    bad = []
    total = 0
    for q, a, b in points:
        grid = GridSpec(q_values=[q], n_values=[0], a_values=[a], b_values=[b], eps=eps)
        records = check_property("orthogonality", grid)
        summary, failures = _tally(records)
        total += summary["pass"]
        if failures or summary["pass"] != 15:
            bad.append((q, a, b, summary, failures[:2]))
    ok = not bad
    assert _report(
        8, ok, f"{total} pairings below 1e-20 with proven tail bounds at 3 regime points"
    ), bad


# -- quadratic-formula oracle (independent of the isolation machinery) -------


def _quad_root_sign(c0, c1, c2, branch, x):
    if c2 < 0:
        c0, c1, c2 = -c0, -c1, -c2
    disc = c1 * c1 - 4 * c0 * c2
    u = 2 * c2 * x + c1
    if branch > 0:
        if u < 0:
            return -1
        return (u * u > disc) - (u * u < disc)
    if u >= 0:
        return 1 if (u > 0 or disc > 0) else 0
    return (disc > u * u) - (disc < u * u)


def _rational_sqrt(x):
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return F(rn, rd)
    return None


def _oracle_matches(p, rs) -> bool:
    if p.degree == 1:
        root = -p.coeff(0) / p.coeff(1)
        e = rs.roots[0]
        return e.lo <= root <= e.hi and (e.exact is None or e.exact == root)
    c0, c1, c2 = p.coeff(0), p.coeff(1), p.coeff(2)
    disc = c1 * c1 - 4 * c0 * c2
    if disc < 0:
        return rs.total_count == 0
    root_sqrt = _rational_sqrt(disc)
    branches = [-1, 1] if c2 > 0 else [1, -1]
    if rs.total_count != 2:
        return False
    for entry, branch in zip(rs.lambdas(), branches):
        if root_sqrt is not None:
            root = (-c1 + branch * root_sqrt) / (2 * c2)
            if not (entry.lo <= root <= entry.hi):
                return False
        else:
            if _quad_root_sign(c0, c1, c2, branch, entry.lo) > 0:
                return False
            if _quad_root_sign(c0, c1, c2, branch, entry.hi) < 0:
                return False
    return True


def test_criterion_9_oracle_equivalence_and_selftest():
    bad = []
    checked = 0
    for q in Q_GRID:
        instances = []
        for n in (1, 2):
            for a in (F(1, 2), F(1)):
                for b in (F(-1), F(1, 2)):
                    instances.append(little_q_jacobi(n, a, b, q))
            instances.append(q_laguerre(n, F(1, 2), q))
            instances.append(stieltjes_wigert(n, q))
            instances.append(q_bessel(n, F(-1), q))
        for p in instances:
            rs = isolate_real_roots(p)
            checked += 1
            if not rs.certified_real_rooted or not _oracle_matches(p, rs):
                bad.append(p)
    selftest = check_identity(SELFTEST_ID, {})
    selftest_ok = (
        selftest.status is Status.PASS
        and selftest.witness["inner_witness"]["coeff_index"] == 1
    )
    ok = not bad and selftest_ok
    assert _report(
        9,
        ok,
        f"{checked} degree<=2 instances match the closed-form oracle; "
        f"corrupted-identity self-test fails with the right witness",
    ), (bad, selftest)
