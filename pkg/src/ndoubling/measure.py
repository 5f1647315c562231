"""The self-similar n-adic doubling measure on the real line.

Left of 0 the measure is Lebesgue.  On each unit interval ``[l, l + 1)`` with
``l >= 0`` the mass is redistributed ``l + 1`` times: the leftmost n-adic
child of a redistributed cell gets density ``a`` times its parent, the
rightmost ``b`` times, and the middle children keep the parent's density and
are never touched again.  Since ``a + b == 2`` each step preserves mass, so
every unit interval carries mass exactly 1.

Densities are read off the base-n digits of a point: multiply by ``a`` for
each leading 0, by ``b`` for each leading ``n - 1``, stop at the first other
digit or after ``l + 1`` digits.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .adic import AdicInterval
from .errors import DomainError

DEFAULT_A = Fraction(1, 2)
DEFAULT_B = Fraction(3, 2)


@dataclass(frozen=True)
class MeasureSpec:
    """Parameters ``(n, a, b)``; base 2 is replaced by base 4 on construction."""

    n: int
    a: Fraction = DEFAULT_A
    b: Fraction = None
    requested_n: int = field(default=None, compare=False)

    def __post_init__(self):
        a = Fraction(self.a)
        b = 2 - a if self.b is None else Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if self.requested_n is None:
            object.__setattr__(self, "requested_n", self.n)
        if self.n == 2:
            # D_2 == D_4, and the construction needs a middle digit
            object.__setattr__(self, "n", 4)
        if self.n < 3:
            raise DomainError(f"base must be at least 2, got {self.n}")
        if a + b != 2:
            raise DomainError(f"weights must satisfy a + b = 2, got a={a}, b={b}")
        if not 0 < a < 1 < b:
            raise DomainError(f"weights must satisfy 0 < a < 1 < b, got a={a}, b={b}")

    @property
    def promoted(self):
        return self.requested_n != self.n


@dataclass(frozen=True)
class CellWeight:
    cell: AdicInterval
    density: Fraction


def _split(x):
    """``x == unit + num / den`` with ``0 <= num < den``."""
    x = Fraction(x)
    unit, num = divmod(x.numerator, x.denominator)
    return unit, num, x.denominator


def density(x, spec):
    x = Fraction(x)
    if x < 0:
        return Fraction(1)
    unit, num, den = _split(x)
    n, a, b = spec.n, spec.a, spec.b
    w = Fraction(1)
    for i in range(unit + 1):
        if num == 0:
            # all remaining digits are 0
            return w * a ** (unit + 1 - i)
        d, num = divmod(num * n, den)
        if d == 0:
            w *= a
        elif d == n - 1:
            w *= b
        else:
            break
    return w


def unit_cells(ell, spec):
    """Maximal constant-density cells tiling ``[ell, ell + 1)``, left to right.

    There are ``2**(ell+1)`` fully refined cells plus ``(n - 2)`` middle cells
    per interior node of the refinement tree, so this is exponential in
    ``ell``; it exists as an independent check on :func:`cdf`.
    """
    if ell < 0:
        raise DomainError("unit index must be nonnegative")
    a, b = spec.a, spec.b
    out = []

    def walk(cell, w, depth):
        if depth == ell + 1:
            out.append(CellWeight(cell, w))
            return
        kids = cell.children()
        walk(kids[0], w * a, depth + 1)
        out.extend(CellWeight(k, w) for k in kids[1:-1])
        walk(kids[-1], w * b, depth + 1)

    walk(AdicInterval(spec.n, 0, ell), Fraction(1), 0)
    return out


def cdf(x, spec):
    """``F(x) = mu([0, x))`` for ``x >= 0`` and ``F(x) = x`` below 0."""
    x = Fraction(x)
    if x < 0:
        return x
    unit, num, den = _split(x)
    n, a, b = spec.n, spec.a, spec.b
    acc = Fraction(0)
    w = Fraction(1)
    width = Fraction(1)
    for _ in range(unit + 1):
        if num == 0:
            return unit + acc
        width /= n
        d, num = divmod(num * n, den)
        if d:
            # leftmost sibling carries a*w, each middle one w
            acc += w * width * (a + d - 1)
        if d == 0:
            w *= a
        elif d == n - 1:
            w *= b
        else:
            break
    return unit + acc + w * width * Fraction(num, den)


def measure_interval(p, q, spec):
    p, q = Fraction(p), Fraction(q)
    if p > q:
        raise DomainError(f"empty interval: {p} > {q}")
    return cdf(q, spec) - cdf(p, spec)


def cells_measure(p, q, spec):
    """Mass of ``[p, q)`` summed cell by cell from :func:`unit_cells`."""
    p, q = Fraction(p), Fraction(q)
    if p > q:
        raise DomainError(f"empty interval: {p} > {q}")
    total = max(Fraction(0), min(q, 0) - p)
    lo = max(p, Fraction(0))
    if q <= lo:
        return total
    first = lo.numerator // lo.denominator
    last = -((-q.numerator) // q.denominator)
    for ell in range(first, last):
        for cw in unit_cells(ell, spec):
            overlap = min(q, cw.cell.right) - max(lo, cw.cell.left)
            if overlap > 0:
                total += cw.density * overlap
    return total


def _spine(spec, unit, max_level):
    """Yield ``(cell, depth)`` for refined cells of ``[unit, unit+1)`` below ``max_level``."""
    stack = [AdicInterval(spec.n, 0, unit)]
    while stack:
        cell = stack.pop()
        yield cell
        if cell.level + 1 < max_level and cell.level + 1 <= unit:
            stack.append(cell.rightmost_child())
            stack.append(cell.leftmost_child())


def child_ratios(cell, spec):
    masses = [measure_interval(c.left, c.right, spec) for c in cell.children()]
    return {m1 / m2 for m1 in masses for m2 in masses}


def child_ratio_set(spec, max_depth, range_end):
    """Every ratio ``mu(I_j1) / mu(I_j2)`` over n-adic ``I`` in ``[0, range_end)``
    at levels ``0 .. max_depth - 1``.

    Only cells still being refined can have unequal children; any other cell
    has constant density and contributes the ratio 1, so the enumeration walks
    the refinement tree and adds 1 whenever a constant cell exists in range.
    """
    if max_depth < 1:
        raise DomainError("max_depth must be at least 1")
    ratios = set()
    for unit in range(range_end):
        for cell in _spine(spec, unit, max_depth):
            ratios |= child_ratios(cell, spec)
            # middle children, and children past the last refinement, are constant
            if cell.level + 1 < max_depth:
                ratios.add(Fraction(1))
    return ratios


def doubling_audit(spec, max_depth, range_end):
    """Largest child-mass ratio over n-adic intervals; equals ``b / a``."""
    return max(child_ratio_set(spec, max_depth, range_end))


@dataclass(frozen=True)
class NonDoublingWitness:
    ell: int
    left: Fraction
    center: Fraction
    right: Fraction
    ratio: Fraction


def non_doubling_witness(spec, ell):
    """Interval centred on the integer ``ell`` whose halves have masses in
    ratio ``b**ell / a**(ell+1)``; it shows the measure is not doubling."""
    if ell < 1:
        raise DomainError("ell must be at least 1")
    h = Fraction(1, spec.n ** (ell + 1))
    c = Fraction(ell)
    ratio = measure_interval(c - h, c, spec) / measure_interval(c, c + h, spec)
    return NonDoublingWitness(ell, c - h, c, c + h, ratio)
