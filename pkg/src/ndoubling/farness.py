"""Far numbers: rationals that keep a proportional distance from every
``k / n**j``.

A rational ``p/q`` (lowest terms) is n-far exactly when ``q`` has a prime
factor not dividing ``n``.  The optimal constant is
``min_j dist(n**j * p/q, Z)``, and ``n**j * p mod q`` is eventually periodic,
so the minimum is reached within the first pass around the orbit.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import DomainError


@dataclass(frozen=True)
class FarReport:
    delta: Fraction
    n: int
    is_far: bool
    constant: Fraction = None
    witness_level: int = None
    orbit_length: int = None


def _check_base(n):
    if n < 2:
        raise DomainError(f"base must be at least 2, got {n}")


def _strip(q, n):
    if q < _kernels.INT64_LIMIT and n < _kernels.INT64_LIMIT:
        return _kernels.strip_common(q, n)
    return _kernels.strip_common_np(q, n)


def is_far(delta, n):
    _check_base(n)
    q = Fraction(delta).denominator
    return _strip(q, n) > 1


def far_mask(dens, bases):
    """Grid of ``is_far(1/d, n)`` for ``d`` in ``dens`` and ``n`` in ``bases``."""
    return _kernels.far_mask(dens, bases)


def _orbit_min_bigint(r, n, q):
    seen = set()
    best, level, j = q, -1, 0
    while r not in seen:
        seen.add(r)
        d = min(r, q - r)
        if d < best:
            best, level = d, j
        r = r * n % q
        j += 1
    return best, level, j


def far_constant(delta, n):
    delta = Fraction(delta)
    if not is_far(delta, n):
        return FarReport(delta, n, False)
    q = delta.denominator
    r = delta.numerator % q
    if q < _kernels.ORBIT_TABLE_LIMIT:
        best, level, length = _kernels.orbit_min(r, n % q, q)
    else:
        best, level, length = _orbit_min_bigint(r, n % q, q)
    return FarReport(delta, n, True, Fraction(best, q), level, length)
