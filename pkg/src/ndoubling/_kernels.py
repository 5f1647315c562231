"""Fixed-width integer kernels behind the exact number theory.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version.  The numba path is used when numba imports and the environment
variable ``NDOUBLING_NO_NUMBA`` is unset (or ``0``); set it to ``1`` to force
the numpy path.  Callers only route int64-safe inputs here; anything larger
stays on Python integers in the calling module.
"""
import os
from math import gcd, isqrt

import numpy as np

INT64_LIMIT = 2**63
# residues are multiplied by the base modulo q, so q * q must fit in int64
ORBIT_MODULUS_LIMIT = 2**31
# one byte per residue in the visited table
ORBIT_TABLE_LIMIT = 2**24

_MAX_FACTORS = 64
_NUMPY_CHUNK = 1 << 16


def _env_disables_numba():
    return os.environ.get("NDOUBLING_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_disables_numba()
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# trial division

def trial_division_np(x):
    x = int(x)
    primes = []
    exps = []
    for p in (2, 3):
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        if e:
            primes.append(p)
            exps.append(e)
    lo = 5
    chunk = 256
    while x > 1:
        hi = min(isqrt(x) + 1, lo + chunk)
        if lo >= hi:
            primes.append(x)
            exps.append(1)
            break
        cand = np.arange(lo, hi, dtype=np.int64)
        hits = np.flatnonzero(x % cand == 0)
        if hits.size == 0:
            lo = hi
            chunk = min(chunk * 4, _NUMPY_CHUNK)
            continue
        # smaller primes are already divided out, so the first hit is prime
        p = int(cand[hits[0]])
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        primes.append(p)
        exps.append(e)
        lo = p + 1
    return np.array(primes, dtype=np.int64), np.array(exps, dtype=np.int64)


def _trial_division_py(x):
    primes = np.zeros(_MAX_FACTORS, np.int64)
    exps = np.zeros(_MAX_FACTORS, np.int64)
    k = 0
    for p in (2, 3):
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        if e > 0:
            primes[k] = p
            exps[k] = e
            k += 1
    i = 5
    while i <= x // i:
        for p in (i, i + 2):
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            if e > 0:
                primes[k] = p
                exps[k] = e
                k += 1
        i += 6
    if x > 1:
        primes[k] = x
        exps[k] = 1
        k += 1
    return primes[:k], exps[:k]


# ---------------------------------------------------------------------------
# orbit of a residue under multiplication by the base

def orbit_min_np(r0, n, q):
    """Return ``(best, level, length)`` for the orbit ``r0 * n**j mod q``.

    ``best`` is the smallest ``min(r, q - r)`` seen before the first repeated
    residue, ``level`` the first ``j`` attaining it, ``length`` the number of
    distinct residues visited.
    """
    seen = np.zeros(int(q), dtype=np.bool_)
    r = int(r0) % q
    n = int(n) % q
    best = q
    level = -1
    j = 0
    while not seen[r]:
        seen[r] = True
        d = min(r, q - r)
        if d < best:
            best = d
            level = j
        r = r * n % q
        j += 1
    return best, level, j


def _orbit_min_py(r0, n, q):
    seen = np.zeros(q, np.bool_)
    r = r0 % q
    n = n % q
    best = q
    level = -1
    j = 0
    while not seen[r]:
        seen[r] = True
        d = r if r < q - r else q - r
        if d < best:
            best = d
            level = j
        r = r * n % q
        j += 1
    return best, level, j


# ---------------------------------------------------------------------------
# part of d coprime to n

def strip_common_np(d, n):
    """Divide out of ``d`` every prime that also divides ``n``."""
    d = int(d)
    n = int(n)
    g = gcd(d, n)
    while g > 1:
        d //= g
        g = gcd(d, n)
    return d


def _strip_common_py(d, n):
    a = d
    b = n
    while b:
        a, b = b, a % b
    g = a
    while g > 1:
        d //= g
        a = d
        b = n
        while b:
            a, b = b, a % b
        g = a
    return d


def far_mask_np(dens, bases):
    """Boolean grid: entry ``[i, j]`` says ``1/dens[i]`` is ``bases[j]``-far."""
    d = np.asarray(dens, dtype=np.int64)[:, None] * np.ones(len(bases), dtype=np.int64)[None, :]
    b = np.asarray(bases, dtype=np.int64)[None, :]
    while True:
        g = np.gcd(d, b)
        active = g > 1
        if not active.any():
            break
        d = np.where(active, d // g, d)
    return d > 1


def _far_mask_py(dens, bases):
    out = np.zeros((dens.shape[0], bases.shape[0]), np.bool_)
    for i in range(dens.shape[0]):
        for j in range(bases.shape[0]):
            out[i, j] = _strip_common_nb(dens[i], bases[j]) > 1
    return out


if HAVE_NUMBA:
    trial_division_nb = njit(cache=True)(_trial_division_py)
    orbit_min_nb = njit(cache=True)(_orbit_min_py)
    _strip_common_nb = njit(cache=True)(_strip_common_py)
    strip_common_nb = _strip_common_nb
    far_mask_nb = njit(cache=True)(_far_mask_py)


def trial_division(x):
    """Factor ``1 <= x < 2**63``; returns ``(primes, exponents)`` int64 arrays."""
    if USE_NUMBA:
        return trial_division_nb(np.int64(x))
    return trial_division_np(x)


def orbit_min(r0, n, q):
    if USE_NUMBA:
        best, level, length = orbit_min_nb(np.int64(r0), np.int64(n), np.int64(q))
        return int(best), int(level), int(length)
    return orbit_min_np(r0, n, q)


def strip_common(d, n):
    if USE_NUMBA:
        return int(strip_common_nb(np.int64(d), np.int64(n)))
    return strip_common_np(d, n)


def far_mask(dens, bases):
    dens = np.asarray(dens, dtype=np.int64)
    bases = np.asarray(bases, dtype=np.int64)
    if USE_NUMBA:
        return far_mask_nb(dens, bases)
    return far_mask_np(dens, bases)
