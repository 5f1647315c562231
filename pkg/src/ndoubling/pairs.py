"""Base pairs ``(m, n)``: solvability of ``k / m**(l-1) == 1 / n**l``, good and
semi-good pairs, and the far / good-lift dichotomy.

Exponent vectors are taken over the union of the prime supports of ``m`` and
``n``; ``a`` holds the exponents of ``n`` and ``b`` those of ``m``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactnum import factorize, multiplicatively_dependent
from .farness import FarReport, far_constant, is_far


@dataclass(frozen=True)
class ExponentPair:
    m: int
    n: int
    primes: tuple
    a_vec: tuple
    b_vec: tuple

    def lift(self, x, y):
        """Exponent data of ``(m**x, n**y)``; no refactoring needed."""
        if x < 1 or y < 1:
            raise DomainError("lift exponents must be positive")
        return ExponentPair(
            self.m**x,
            self.n**y,
            self.primes,
            tuple(y * a for a in self.a_vec),
            tuple(x * b for b in self.b_vec),
        )

    def n_divides_m_radical(self):
        """Every prime of ``n`` also divides ``m``."""
        return all(b > 0 for a, b in zip(self.a_vec, self.b_vec) if a > 0)

    def is_semi_good(self):
        return self.m > self.n and all(b > a for a, b in zip(self.a_vec, self.b_vec))

    def is_good(self):
        return (
            self.m > self.n
            and all(b >= a for a, b in zip(self.a_vec, self.b_vec))
            and any(a == b > 0 for a, b in zip(self.a_vec, self.b_vec))
        )


def _check(m, n):
    if m < 2 or n < 2:
        raise DomainError(f"bases must be at least 2, got m={m}, n={n}")


def exponent_pair(m, n):
    _check(m, n)
    fm = factorize(m).as_dict()
    fn = factorize(n).as_dict()
    primes = tuple(sorted(fm.keys() | fn.keys()))
    return ExponentPair(
        m,
        n,
        primes,
        tuple(fn.get(p, 0) for p in primes),
        tuple(fm.get(p, 0) for p in primes),
    )


@dataclass(frozen=True)
class SolvabilityResult:
    solvable: bool
    ell_min: int = None
    k_witness: int = None


def _solvability(ep):
    ell = 0
    for a, b in zip(ep.a_vec, ep.b_vec):
        if a == 0:
            continue
        # a*l <= b*(l-1)  <=>  l >= b / (b - a), needs b > a
        if b <= a:
            return SolvabilityResult(False)
        ell = max(ell, -(-b // (b - a)))
    k, rem = divmod(ep.m ** (ell - 1), ep.n**ell)
    if rem:
        raise AssertionError(f"closed form gave non-integral witness for {ep}")
    return SolvabilityResult(True, ell, k)


def is_solvable(m, n):
    """Whether ``k / m**(l-1) == 1 / n**l`` has a solution in positive integers,
    with the smallest ``l`` and its ``k``."""
    return _solvability(exponent_pair(m, n))


def is_good_pair(m, n):
    return exponent_pair(m, n).is_good()


def is_semi_good_pair(m, n):
    return exponent_pair(m, n).is_semi_good()


def semi_good_exponent(ep):
    if not ep.n_divides_m_radical():
        raise DomainError(f"1/{ep.n} is {ep.m}-far; a power of {ep.m} cannot cover {ep.n}")
    e = max((a // b + 1 for a, b in zip(ep.a_vec, ep.b_vec) if b > 0), default=1)
    while ep.m**e <= ep.n:
        e += 1
    return e


def make_semi_good(m, n):
    """Smallest ``e`` with ``(m**e, n)`` semi-good."""
    return semi_good_exponent(exponent_pair(m, n))


def lift_exponents(ep):
    if not ep.is_semi_good():
        raise DomainError(f"({ep.m}, {ep.n}) is not a semi-good pair")
    r = max(Fraction(a, b) for a, b in zip(ep.a_vec, ep.b_vec) if a > 0)
    x, y = r.numerator, r.denominator
    if ep.m**x == ep.n**y:
        raise DomainError(
            f"lifting ({ep.m}, {ep.n}) by ({x}, {y}) gives equal bases; "
            "the pair is multiplicatively dependent"
        )
    return x, y


def lift_to_good(m, n):
    """``(x, y)`` with ``(m**x, n**y)`` good, for a semi-good ``(m, n)``."""
    return lift_exponents(exponent_pair(m, n))


@dataclass(frozen=True)
class Dependent:
    n: int
    m: int
    base: int
    s: int
    t: int
    kind = "dependent"


@dataclass(frozen=True)
class FarCase:
    n: int
    m: int
    report: FarReport
    kind = "far"


@dataclass(frozen=True)
class GoodLift:
    """``(m**x, n**y)`` is a good pair, with ``x = semi_good_exponent * lift_x``."""

    n: int
    m: int
    x: int
    y: int
    semi_good_exponent: int
    lift_x: int
    kind = "good-lift"

    @property
    def lifted_m(self):
        return self.m**self.x

    @property
    def lifted_n(self):
        return self.n**self.y


def classify_pair(n, m):
    """Dependent, far, or liftable to a good pair, checked in that order.

    The far test is the ordered question "is 1/n m-far"; swapping the
    arguments asks a different question.
    """
    _check(m, n)
    dep = multiplicatively_dependent(m, n)
    if dep is not None:
        return Dependent(n, m, *dep)
    if is_far(Fraction(1, n), m):
        return FarCase(n, m, far_constant(Fraction(1, n), m))
    ep = exponent_pair(m, n)
    e = semi_good_exponent(ep)
    x, y = lift_exponents(ep.lift(e, 1))
    lifted = ep.lift(e * x, y)
    if not lifted.is_good():
        raise AssertionError(f"lift of ({m}, {n}) to ({m}^{e * x}, {n}^{y}) is not good")
    if _solvability(lifted).solvable:
        raise AssertionError(f"good pair ({m}^{e * x}, {n}^{y}) reported solvable")
    return GoodLift(n, m, e * x, y, e, x)
