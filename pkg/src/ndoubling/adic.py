"""Base-n adic intervals ``[k / n**level, (k + 1) / n**level)``.

Indices are zero-based and intervals are half-open, so a grid point belongs
to the cell on its right.  Levels and indices may be negative.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError


class Position(Enum):
    LEFTMOST = "leftmost"
    MIDDLE = "middle"
    RIGHTMOST = "rightmost"


def _scale(base, level):
    """``base**(-level)`` as an exact rational."""
    return Fraction(1, base**level) if level >= 0 else Fraction(base ** (-level))


@dataclass(frozen=True, order=True)
class AdicInterval:
    base: int
    level: int
    index: int

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be at least 2, got {self.base}")

    @property
    def length(self):
        return _scale(self.base, self.level)

    @property
    def left(self):
        return self.index * self.length

    @property
    def right(self):
        return (self.index + 1) * self.length

    def __contains__(self, x):
        return self.left <= x < self.right

    def contains_interval(self, other):
        return self.left <= other.left and other.right <= self.right

    def children(self):
        b = self.base
        return [AdicInterval(b, self.level + 1, b * self.index + j) for j in range(b)]

    def leftmost_child(self):
        return AdicInterval(self.base, self.level + 1, self.base * self.index)

    def rightmost_child(self):
        return AdicInterval(self.base, self.level + 1, self.base * self.index + self.base - 1)

    def parent(self):
        return AdicInterval(self.base, self.level - 1, self.index // self.base)

    def position(self):
        r = self.index % self.base
        if r == 0:
            return Position.LEFTMOST
        if r == self.base - 1:
            return Position.RIGHTMOST
        return Position.MIDDLE

    def tag(self):
        return f"{self.base}:{self.level}:{self.index}"

    def endpoints(self):
        return f"{_fmt(self.left)}..{_fmt(self.right)}"

    def __str__(self):
        return f"[{_fmt(self.left)}, {_fmt(self.right)})"


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def interval(base, level, index):
    return AdicInterval(base, level, index)


def children(iv):
    return iv.children()


def parent(iv):
    return iv.parent()


def position(iv):
    return iv.position()


def locate(x, base, level):
    """The level-``level`` base-``base`` cell containing ``x``."""
    x = Fraction(x)
    scaled = x / _scale(base, level)
    return AdicInterval(base, level, scaled.numerator // scaled.denominator)


def are_siblings(i, j):
    if i.base != j.base or i.level != j.level:
        raise DomainError(f"cannot compare {i.tag()} with {j.tag()}")
    return i.index // i.base == j.index // j.base


def from_endpoints(left, right, base):
    """Recover the adic interval with the given endpoints, or raise."""
    left, right = Fraction(left), Fraction(right)
    width = right - left
    if width <= 0:
        raise DomainError("empty interval")
    level = 0
    # width == base**(-level); widen or narrow until it matches
    while _scale(base, level) > width:
        level += 1
    while _scale(base, level) < width:
        level -= 1
    if _scale(base, level) != width:
        raise DomainError(f"width {width} is not a power of 1/{base}")
    k = left / width
    if k.denominator != 1:
        raise DomainError(f"{left} is not on the base-{base} grid at level {level}")
    return AdicInterval(base, level, k.numerator)


def parse_tag(text):
    """Inverse of :meth:`AdicInterval.tag`."""
    try:
        base, level, index = (int(part) for part in text.split(":"))
    except ValueError:
        raise ValueError(f"not an interval tag: {text!r}") from None
    return AdicInterval(base, level, index)
