"""Exact integers, rationals and the small amount of number theory built on them.

Naturals are Python ints and rationals are :class:`fractions.Fraction`; both
are arbitrary precision and canonical (fractions are kept in lowest terms with
a positive denominator).  Nothing in this module touches floating point.
"""
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, prod

from . import _kernels
from .errors import CapacityError, DomainError

Rational = Fraction

DEFAULT_FACTOR_BOUND = 2**63


def factor_bound():
    """Exclusive upper bound on inputs to :func:`factorize`.

    Overridable through ``NDOUBLING_FACTOR_BOUND`` (an integer literal or an
    expression like ``2**40``).
    """
    raw = os.environ.get("NDOUBLING_FACTOR_BOUND")
    if not raw:
        return DEFAULT_FACTOR_BOUND
    m = re.fullmatch(r"\s*(\d+)\s*(?:\*\*\s*(\d+))?\s*", raw)
    if not m:
        raise DomainError(f"NDOUBLING_FACTOR_BOUND={raw!r} is not an integer")
    base, exp = m.groups()
    return int(base) ** int(exp) if exp else int(base)


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*")


def parse_rational(text):
    """Parse ``"p/q"`` or an integer literal into a Fraction."""
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PrimeFactorization:
    """Ascending ``(prime, exponent)`` pairs; the empty tuple stands for 1."""

    factors: tuple = ()

    def value(self):
        return prod(p**e for p, e in self.factors)

    def as_dict(self):
        return dict(self.factors)

    def primes(self):
        return tuple(p for p, _ in self.factors)

    def __pow__(self, k):
        if k < 1:
            raise DomainError("exponent must be positive")
        return PrimeFactorization(tuple((p, e * k) for p, e in self.factors))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _trial_division_bigint(x):
    out = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if x > 1:
        out.append((x, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def _factorize_cached(x):
    if x < _kernels.INT64_LIMIT:
        primes, exps = _kernels.trial_division(x)
        return tuple(zip(map(int, primes), map(int, exps)))
    return _trial_division_bigint(x)


def factorize(x):
    """Factor ``x >= 1`` by trial division.

    >>> factorize(108).as_dict()
    {2: 2, 3: 3}
    """
    x = int(x)
    if x < 1:
        raise DomainError(f"cannot factor {x}")
    bound = factor_bound()
    if x >= bound:
        raise CapacityError(f"{x} is at or above the factorization bound {bound}")
    return PrimeFactorization(_factorize_cached(x))


def floor_log_ratio(m, ell, n):
    """Largest ``t >= 0`` with ``n**t <= m**ell``.

    This is ``floor(ell * log m / log n)`` decided by exact integer
    comparison: a bit-length estimate brackets ``t``, then a binary search
    settles it.
    """
    if m < 2 or n < 2:
        raise DomainError("bases must be at least 2")
    if ell < 0:
        raise DomainError("ell must be nonnegative")
    target = m**ell
    # n**t <= target needs t*(bitlen(n)-1) <= bitlen(target)-1
    lo = 0
    hi = (target.bit_length() - 1) // (n.bit_length() - 1) + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if n**mid <= target:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _primitive(vec):
    g = reduce(gcd, vec, 0)
    return g, tuple(v // g for v in vec)


def multiplicatively_dependent(m, n):
    """Return ``(base, s, t)`` with ``m == base**s`` and ``n == base**t``.

    ``base`` is the smallest integer with that property.  Returns ``None``
    when ``log m / log n`` is irrational.
    """
    if m < 2 or n < 2:
        raise DomainError("bases must be at least 2")
    fm = factorize(m).as_dict()
    fn = factorize(n).as_dict()
    if fm.keys() != fn.keys():
        return None
    primes = sorted(fm)
    s, em = _primitive([fm[p] for p in primes])
    t, en = _primitive([fn[p] for p in primes])
    if em != en:
        return None
    base = prod(p**e for p, e in zip(primes, em))
    return base, s, t

