"""Explicit m-adic sibling pairs whose mass ratio under the base-n measure
grows without bound, one family per case of the pair classification.

Far case: near ``l + 1/n`` the measure has density ``a * b**l`` on the left
and 1 on the right.  A small m-adic interval around the point (descending
into rightmost children while the point sits in one) has leftmost and
rightmost children on opposite sides, at ratio at least
``min(C*m, 1) * a * b**l`` with ``C`` the far constant of ``1/n`` in base m.

Good-pair case: with ``t = floor(l log M / log N)`` and
``P = t - 1 + N**-l``, the two level-l base-M cells meeting at ``P`` are
siblings, and their masses are ``a**l * b**(t-l)`` and ``a**(l-1)`` times
``M**-l``, giving ratio ``a * b**(t - l)``.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .adic import AdicInterval, are_siblings, from_endpoints, locate
from .errors import DependentPairError, DomainError
from .exactnum import floor_log_ratio, multiplicatively_dependent
from .farness import far_constant, is_far
from .measure import DEFAULT_A, MeasureSpec, measure_interval
from .pairs import Dependent, FarCase, classify_pair

FAR_CASE_I = "FarCaseI"
FAR_CASE_II = "FarCaseII"
NON_FAR = "NonFar"

# extra descents allowed past the starting level before giving up
_DESCENT_SLACK = 64


def far_case_iii(depth):
    return f"FarCaseIII-depth-{depth}"


@dataclass(frozen=True)
class DivergenceWitness:
    ell: int
    case_tag: str
    left_interval: AdicInterval
    right_interval: AdicInterval
    raw_ratio: Fraction  # mu(left) / mu(right)
    ratio: Fraction  # raw_ratio or its reciprocal, whichever is >= 1
    lower_bound: Fraction
    measure_base: int

    def row(self):
        return {
            "ell": self.ell,
            "case": self.case_tag,
            "left": self.left_interval.tag(),
            "right": self.right_interval.tag(),
            "ratio": self.ratio,
            "bound": self.lower_bound,
        }


def _oriented(raw):
    return raw if raw >= 1 else 1 / raw


def far_case_witness(spec, m, ell):
    n, a, b = spec.n, spec.a, spec.b
    if ell < 1:
        raise DomainError("ell must be at least 1")
    dep = multiplicatively_dependent(m, n)
    if dep is not None:
        raise DependentPairError(m, n, dep[0])
    delta = Fraction(1, n)
    if not is_far(delta, m):
        raise DomainError(f"1/{n} is not {m}-far; use the good-pair witness")

    point = ell + delta
    # smallest level with m**level > n**(ell+1): the cell then fits in
    # [point - n**-(ell+1), point + n**-(ell+1))
    start = floor_log_ratio(n, ell + 1, m) + 1
    cell = locate(point, m, start)
    half = Fraction(1, n ** (ell + 1))
    if not (point - half <= cell.left and cell.right <= point + half):
        raise AssertionError(f"{cell} escapes the window around {point}")

    depth = 0
    while point in cell.rightmost_child():
        cell = cell.rightmost_child()
        depth += 1
        if depth > start + _DESCENT_SLACK:
            raise AssertionError(f"descent around {point} did not stop")

    left, right = cell.leftmost_child(), cell.rightmost_child()
    if depth:
        tag = far_case_iii(depth)
    elif point in left:
        tag = FAR_CASE_II
    else:
        tag = FAR_CASE_I

    raw = measure_interval(left.left, left.right, spec) / measure_interval(right.left, right.right, spec)
    ratio = _oriented(raw)
    c = far_constant(delta, m).constant
    bound = min(c * m, 1) * a * b**ell
    if ratio < bound:
        raise AssertionError(f"far witness at ell={ell}: {ratio} < {bound}")
    return DivergenceWitness(ell, tag, left, right, raw, ratio, bound, n)


def good_pair_by_division(big, small):
    """Good-pair test without factoring: ``small | big`` and some prime of
    ``small`` does not divide ``big / small``."""
    if big <= small:
        return False
    q, r = divmod(big, small)
    if r:
        return False
    if small < _kernels.INT64_LIMIT and q < _kernels.INT64_LIMIT:
        return _kernels.strip_common(small, q) > 1
    return _kernels.strip_common_np(small, q) > 1


def nonfar_case_witness(M, N, a, b, ell):
    if ell < 2:
        raise DomainError("ell must be at least 2")
    if not good_pair_by_division(M, N):
        raise DomainError(f"({M}, {N}) is not a good pair")
    if N < 3:
        raise DomainError("measure base must be at least 3; lift the pair once more")
    spec = MeasureSpec(N, a, b)
    a, b = spec.a, spec.b

    t = floor_log_ratio(M, ell, N)
    p = (t - 1) + Fraction(1, N**ell)
    h = Fraction(1, M**ell)
    k_cell = from_endpoints(p - h, p, M)
    l_cell = from_endpoints(p, p + h, M)
    if not are_siblings(k_cell, l_cell):
        raise AssertionError(f"{k_cell.tag()} and {l_cell.tag()} are not siblings")

    # the constant-density base-N cells flanking p contain K and L
    h_n = Fraction(1, N**t)
    if not (p - h_n <= k_cell.left and l_cell.right <= p + h_n):
        raise AssertionError(f"cells at {p} are not enclosed by the level-{t} base-{N} cells")

    raw = measure_interval(k_cell.left, k_cell.right, spec) / measure_interval(l_cell.left, l_cell.right, spec)
    expected = a * b ** (t - ell)
    if raw != expected:
        raise AssertionError(f"ratio {raw} at ell={ell} differs from a*b^(t-ell) = {expected}")
    return DivergenceWitness(ell, NON_FAR, k_cell, l_cell, raw, _oriented(raw), expected, N)


@dataclass(frozen=True)
class Sweep:
    n: int
    m: int
    classification: object
    measure_base: int
    witnesses: list = field(default_factory=list)

    @property
    def uses_lift(self):
        return self.classification.kind == "good-lift"


def divergence_sweep(n, m, ells, a=DEFAULT_A, b=None):
    """Witnesses for each ``ell`` in ``ells``, routed by the pair's class.

    The good-pair route skips ``ell < 2``.
    """
    cls = classify_pair(n, m)
    if isinstance(cls, Dependent):
        raise DependentPairError(m, n, cls.base)
    if isinstance(cls, FarCase):
        spec = MeasureSpec(n, a, b)
        rows = [far_case_witness(spec, m, ell) for ell in sorted(ells)]
        return Sweep(n, m, cls, spec.n, rows)
    M, N = cls.lifted_m, cls.lifted_n
    spec = MeasureSpec(N, a, b)
    rows = [nonfar_case_witness(M, N, spec.a, spec.b, ell) for ell in sorted(ells) if ell >= 2]
    return Sweep(n, m, cls, N, rows)


@dataclass(frozen=True)
class TargetReport:
    m: int
    classification: object
    sweep: Sweep


@dataclass(frozen=True)
class SeparationReport:
    separable: bool
    chosen_i: int = None
    per_target: list = field(default_factory=list)
    dependence_witnesses: list = field(default_factory=list)

    @property
    def uniform(self):
        """A single base-n measure serves every target (all far)."""
        return self.separable and all(t.classification.kind == "far" for t in self.per_target)


def separate_families(ns, ms, sample_ells, a=DEFAULT_A, b=None):
    """Find an ``n_i`` with ``log n_i / log m_j`` irrational for every ``j`` and
    exhibit diverging witnesses against each ``m_j``."""
    if not ns or not ms:
        raise DomainError("both families must be non-empty")
    blocked = []
    for i, n in enumerate(ns):
        dep = next(
            ((j, d[0]) for j, m in enumerate(ms) if (d := multiplicatively_dependent(m, n)) is not None),
            None,
        )
        if dep is not None:
            blocked.append((i, dep[0], dep[1]))
            continue
        targets = []
        for m in ms:
            sweep = divergence_sweep(n, m, sample_ells, a, b)
            targets.append(TargetReport(m, sweep.classification, sweep))
        return SeparationReport(True, i, targets, blocked)
    return SeparationReport(False, None, [], blocked)
