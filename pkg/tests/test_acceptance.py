"""Acceptance criteria, one test each, with their time limits.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.  Run this file directly to execute every criterion without pytest.
"""
import functools
import math
import random
import sys
import time
from fractions import Fraction

from ndoubling.adic import are_siblings
from ndoubling.errors import DomainError
from ndoubling.exactnum import floor_log_ratio, multiplicatively_dependent
from ndoubling.farness import far_constant, is_far
from ndoubling.measure import (
    MeasureSpec,
    cdf,
    density,
    doubling_audit,
    measure_interval,
    non_doubling_witness,
    unit_cells,
)
from ndoubling.pairs import FarCase, GoodLift, classify_pair, is_good_pair, is_semi_good_pair, is_solvable, lift_to_good
from ndoubling.witness import divergence_sweep, far_case_witness, good_pair_by_division, nonfar_case_witness, separate_families

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # pragma: no cover
    ACCEPTANCE_LINES = []

F = Fraction
A, B = F(1, 2), F(3, 2)
SPEC = MeasureSpec(3, A, B)


def criterion(number, title, limit):
    """Time the body, check the limit, and record one summary line."""

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            err = None
            try:
                fn()
            except Exception as exc:  # recorded, then re-raised
                err = exc
            elapsed = time.perf_counter() - start
            if err is None and elapsed >= limit:
                err = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
            status = "PASS" if err is None else "FAIL"
            line = f"[{status}] {number:>2}. {title} ({elapsed:.2f}s / {limit}s)"
            if err is not None:
                line += f": {str(err).splitlines()[0] if str(err) else type(err).__name__}"
            ACCEPTANCE_LINES.append(line)
            print(line)
            if err is not None:
                raise err

        return run

    return wrap


@criterion(1, "unit cells and densities for n=3", 1)
def test_01_unit_cells_base_three():
    a, b = A, B
    cells0 = unit_cells(0, SPEC)
    assert [(c.cell.left, c.cell.right) for c in cells0] == [(0, F(1, 3)), (F(1, 3), F(2, 3)), (F(2, 3), 1)]
    assert [c.density for c in cells0] == [a, 1, b]
    cells1 = unit_cells(1, SPEC)
    assert [c.density for c in cells1] == [a * a, a, a * b, 1, b * a, b, b * b]
    edges = [(c.cell.left, c.cell.right) for c in cells1]
    assert edges == [
        (1, F(10, 9)), (F(10, 9), F(11, 9)), (F(11, 9), F(4, 3)), (F(4, 3), F(5, 3)),
        (F(5, 3), F(16, 9)), (F(16, 9), F(17, 9)), (F(17, 9), 2),
    ]
    assert density(F(7, 6), SPEC) == F(1, 2)
    assert density(F(35, 18), SPEC) == F(9, 4)


def overlap_sum(p, q, spec):
    """Mass of [p, q) from the explicit cell list."""
    total = F(0)
    for unit in range(math.floor(p), math.ceil(q)):
        for cw in unit_cells(unit, spec):
            lo, hi = max(p, cw.cell.left), min(q, cw.cell.right)
            if hi > lo:
                total += cw.density * (hi - lo)
    return total


@criterion(2, "conservation and cell-sum oracle on 100 intervals", 10)
def test_02_conservation_and_oracle():
    for ell in range(21):
        assert cdf(ell, SPEC) == ell
    rng = random.Random(20240101)
    for _ in range(100):
        x = F(rng.randrange(0, 6 * 720), 720) + F(rng.randrange(0, 97), 97 * 720)
        y = F(rng.randrange(0, 6 * 729), 729)
        p, q = min(x, y), max(x, y)
        assert measure_interval(p, q, SPEC) == overlap_sum(p, q, SPEC), (p, q)


@criterion(3, "doubling audit b/a and non-doubling ratios", 10)
def test_03_doubling_audit():
    assert doubling_audit(SPEC, 12, 4) == B / A == 3
    for ell in range(1, 13):
        w = non_doubling_witness(SPEC, ell)
        assert w.ratio == B**ell / A ** (ell + 1)
    assert non_doubling_witness(SPEC, 12).ratio > 10**4


def represented_by_search(d, n, max_power=64):
    """1/d has a finite base-n expansion iff d divides some n**k."""
    p = 1
    for _ in range(max_power + 1):
        if p % d == 0:
            return True
        p *= n
    return False


@criterion(4, "far predicate against divisibility search", 10)
def test_04_far_predicate():
    for n in range(2, 61):
        for d in range(2, 61):
            assert is_far(F(1, d), n) == (not represented_by_search(d, n)), (d, n)
    assert is_far(F(1, 6), 2)
    assert not is_far(F(1, 2), 6)
    assert not is_far(F(1, 12), 18)
    assert not is_far(F(1, 18), 12)


def solvable_by_search(m, n, max_ell=500):
    top, bottom = 1, n
    for ell in range(1, max_ell + 1):
        if top % bottom == 0:
            return ell, top // bottom
        top, bottom = top * m, bottom * n
    return None


@criterion(5, "solvability closed form against search", 60)
def test_05_solvability():
    for m in range(2, 101):
        for n in range(2, 101):
            res = is_solvable(m, n)
            found = solvable_by_search(m, n)
            if found is None:
                assert not res.solvable, (m, n)
            else:
                assert (res.solvable, res.ell_min, res.k_witness) == (True, *found), (m, n)
    res = is_solvable(108, 6)
    assert (res.solvable, res.ell_min, res.k_witness) == (True, 2, 3)
    for ell in range(3, 21):
        assert 2 ** (ell - 2) * 3 ** (2 * ell - 3) * 6**ell == 108 ** (ell - 1)
    assert not is_solvable(108, 36).solvable


@criterion(6, "good pairs unsolvable, semi-good pairs lift", 60)
def test_06_good_pair_theory():
    goods = semi = 0
    for m in range(2, 201):
        for n in range(2, 201):
            if is_good_pair(m, n):
                goods += 1
                assert good_pair_by_division(m, n), (m, n)
                assert solvable_by_search(m, n, max_ell=200) is None, (m, n)
            if is_semi_good_pair(m, n):
                semi += 1
                try:
                    x, y = lift_to_good(m, n)
                except DomainError:
                    # equal lifted bases: only a common-base pair
                    assert multiplicatively_dependent(m, n) is not None, (m, n)
                    continue
                assert good_pair_by_division(m**x, n**y), (m, n, x, y)
    assert goods > 0 and semi > 0
    assert is_semi_good_pair(108, 6) and lift_to_good(108, 6) == (1, 2)
    assert is_good_pair(108, 36)


@criterion(7, "dichotomy: far or good lift for every independent pair", 60)
def test_07_dichotomy():
    for n in range(2, 201):
        for m in range(n, 201):
            if multiplicatively_dependent(m, n) is not None:
                continue
            cls = classify_pair(n, m)
            assert isinstance(cls, (FarCase, GoodLift)), (n, m)
            if isinstance(cls, GoodLift):
                assert good_pair_by_division(cls.lifted_m, cls.lifted_n), (n, m)


@criterion(8, "far-path witnesses for (3, 5)", 10)
def test_08_far_divergence():
    c = far_constant(F(1, 3), 5).constant
    assert c == F(1, 3)
    for ell in range(1, 16):
        w = far_case_witness(SPEC, 5, ell)
        assert w.ratio >= min(c * 5, 1) * A * B**ell, ell
        assert are_siblings(w.left_interval, w.right_interval)
    first = far_case_witness(SPEC, 5, 1)
    assert first.case_tag == "FarCaseI"
    assert first.raw_ratio == A * B


@criterion(9, "non-far witnesses for (108, 36) equal b^(t-ell)", 30)
def test_09_nonfar_divergence():
    exponents = []
    mismatches = []
    for ell in range(2, 41):
        t = floor_log_ratio(108, ell, 36)
        assert 36**t <= 108**ell < 36 ** (t + 1)
        w = nonfar_case_witness(108, 36, A, B, ell)
        assert are_siblings(w.left_interval, w.right_interval), ell
        exponents.append(t - ell)
        if w.raw_ratio != B ** (t - ell):
            mismatches.append((ell, w.raw_ratio, B ** (t - ell)))
    assert max(exponents) >= 12
    assert not mismatches, (
        f"{len(mismatches)}/39 ratios differ from b^(t-ell); first at ell={mismatches[0][0]}: "
        f"{mismatches[0][1]} vs {mismatches[0][2]}"
    )


@criterion(10, "family separation end to end", 30)
def test_10_separation():
    rep = separate_families([4], [2], [5, 15, 30])
    assert not rep.separable
    assert [base for _, _, base in rep.dependence_witnesses] == [2]

    rep = separate_families([12], [18, 2], [5, 15, 30])
    assert rep.separable and rep.chosen_i == 0
    by_m = {t.m: t for t in rep.per_target}
    assert isinstance(by_m[18].classification, GoodLift)
    assert isinstance(by_m[2].classification, FarCase)
    for t in rep.per_target:
        ratios = [w.ratio for w in t.sweep.witnesses]
        assert len(ratios) == 3 and ratios[0] < ratios[1] < ratios[2], (t.m, ratios)
    assert divergence_sweep(12, 2, [40]).witnesses[0].ratio > 10**6


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
