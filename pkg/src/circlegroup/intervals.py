"""Proper arcs of the circle and finite coverings by them."""

from dataclasses import dataclass

import numpy as np

from .errors import CoverageGap

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class IntervalS1:
    """Open arc ``(a, b)`` traversed counterclockwise, with ``a`` in [0, 2*pi)."""

    a: float
    b: float

    def __post_init__(self):
        length = self.b - self.a
        if not 0.0 < length < TWO_PI:
            raise ValueError("arc (%r, %r) is not a proper interval" % (self.a, self.b))
        a = float(np.mod(self.a, TWO_PI))
        if a >= TWO_PI:
            a = 0.0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", a + length)

    @classmethod
    def from_length(cls, a, length):
        return cls(a, a + length)

    @property
    def length(self):
        return self.b - self.a

    @property
    def midpoint(self):
        return self.a + 0.5 * self.length

    def offset(self, x):
        """Counterclockwise distance from ``a`` to ``x``, in [0, 2*pi)."""
        return np.mod(np.asarray(x, dtype=float) - self.a, TWO_PI)

    def contains(self, x, margin=0.0):
        d = self.offset(x)
        return (d > margin) & (d < self.length - margin)

    def contains_arc(self, other, tol=0.0):
        d = float(self.offset(other.a))
        if d > TWO_PI - tol:
            d -= TWO_PI
        return d >= -tol and d + other.length <= self.length + tol

    def shrink(self, delta):
        return IntervalS1(self.a + delta, self.b - delta)

    def complement(self):
        """The causal complement: the open arc ``(b, a + 2*pi)``."""
        return IntervalS1(self.b, self.a + TWO_PI)

    def distance_to_complement(self, other):
        """Smallest arc distance from the closed arc ``other`` to the complement of ``self``."""
        d = float(self.offset(other.a))
        if d > TWO_PI - 1e-15:
            d -= TWO_PI
        return min(d, self.length - (d + other.length))


def arcs_cover(arcs):
    """Exact test that a family of open arcs covers the circle.

    An uncovered point exists iff some left endpoint is uncovered, so it is
    enough to check every ``a_i`` against the other arcs.
    """
    arcs = list(arcs)
    if not arcs:
        return False
    for i, arc in enumerate(arcs):
        if not any(bool(other.contains(arc.a)) for j, other in enumerate(arcs) if j != i):
            return False
    return True


def arcs_cover_arc(arcs, target, samples=8192):
    """Grid test that the open arcs cover the open arc ``target``."""
    x = target.a + target.length * (np.arange(samples) + 0.5) / samples
    hit = np.zeros(samples, dtype=bool)
    for arc in arcs:
        hit |= arc.contains(x)
    return bool(hit.all())


@dataclass(frozen=True)
class Covering:
    """Finite family of proper arcs covering ``target`` (the whole circle when ``None``)."""

    intervals: tuple
    target: IntervalS1 = None

    def __post_init__(self):
        intervals = tuple(self.intervals)
        object.__setattr__(self, "intervals", intervals)
        if self.target is None:
            if not arcs_cover(intervals):
                raise CoverageGap("intervals do not cover the circle")
        elif not arcs_cover_arc(intervals, self.target):
            raise CoverageGap("intervals do not cover the target arc")

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, k):
        return self.intervals[k]


def uniform_covering(m=3, length=None):
    """``m`` arcs of equal ``length`` (default ``3*pi/m``, at most ``3*pi/2``) at offsets ``2*pi*k/m``."""
    if length is None:
        length = min(3 * np.pi / m, 1.5 * np.pi)
    return Covering(tuple(IntervalS1.from_length(TWO_PI * k / m, length) for k in range(m)))
