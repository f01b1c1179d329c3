"""
Plane primitives and the taxicab (L1) metric.

Lengths and angles are plain floats throughout the package; Point and
Vector are the only value types needed at this level.
"""

import math
from dataclasses import dataclass

# Library-wide absolute tolerance for geometric predicates.
EPS = 1e-9


def _check_finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"coordinate must be finite, got {v!r}")


@dataclass(frozen=True)
class Vector:
    dx: float
    dy: float

    def __post_init__(self):
        _check_finite(self.dx, self.dy)

    def __add__(self, other):
        return Vector(self.dx + other.dx, self.dy + other.dy)

    def __neg__(self):
        return Vector(-self.dx, -self.dy)

    def __mul__(self, k):
        return Vector(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def is_zero(self):
        return self.dx == 0 and self.dy == 0

    def rot90(self):
        """Euclidean quarter turn counterclockwise."""
        return Vector(-self.dy, self.dx)

    @property
    def taxicab_norm(self):
        return abs(self.dx) + abs(self.dy)

    @property
    def euclidean_norm(self):
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        _check_finite(self.x, self.y)

    def __add__(self, v):
        return Point(self.x + v.dx, self.y + v.dy)

    def __sub__(self, other):
        if isinstance(other, Vector):
            return Point(self.x - other.dx, self.y - other.dy)
        return Vector(self.x - other.x, self.y - other.y)

    def __iter__(self):
        yield self.x
        yield self.y

    @classmethod
    def of(cls, obj):
        """Coerce a Point or an (x, y) pair."""
        if isinstance(obj, Point):
            return obj
        x, y = obj
        return cls(float(x), float(y))


ORIGIN = Point(0.0, 0.0)


def taxicab_distance(p, q):
    return abs(q.x - p.x) + abs(q.y - p.y)


def euclidean_distance(p, q):
    return math.hypot(q.x - p.x, q.y - p.y)


def point_on_taxicab_circle(center, r, theta):
    """Point at arc position `theta` (t-radians) on the taxicab circle of radius `r`."""
    # local import: trig depends on angle, which depends on this module
    from .trig import cos_t, sin_t

    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return Point(center.x + r * cos_t(theta), center.y + r * sin_t(theta))
