"""
Independent reference for arc measurements on the unit taxicab circle.

Nothing here uses the closed-form angle or trig formulas. A direction is
intersected with the four diamond edges by solving the ray/segment
system directly, and arcs are measured by walking the diamond vertex by
vertex and summing taxicab lengths.
"""

import math
from dataclasses import dataclass

from .core import Point, Vector, taxicab_distance

# Diamond corners counterclockwise from (1, 0); edge k runs CORNERS[k] -> CORNERS[k + 1].
CORNERS = (Point(1.0, 0.0), Point(0.0, 1.0), Point(-1.0, 0.0), Point(0.0, -1.0))


@dataclass(frozen=True)
class DiamondArc:
    """Counterclockwise polyline on the unit diamond, endpoints included."""
    vertices: tuple

    @property
    def length(self):
        return sum(taxicab_distance(p, q) for p, q in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class _Hit:
    edge: int
    u: float    # parameter along the edge, in [0, 1)
    point: Point


def _intersect(v):
    """Where the ray from the origin along v meets the diamond."""
    if v.is_zero():
        raise ValueError("zero vector has no direction")
    best = None
    for k in range(4):
        p0 = CORNERS[k]
        p1 = CORNERS[(k + 1) % 4]
        ex, ey = p1.x - p0.x, p1.y - p0.y
        # t*v = p0 + u*e
        det = ex * v.dy - ey * v.dx
        if det == 0:
            continue
        t = (ex * p0.y - ey * p0.x) / det
        u = (v.dx * p0.y - v.dy * p0.x) / det
        if t <= 0 or u < 0 or u > 1:
            continue
        hit = _Hit(k, u, Point(p0.x + u * ex, p0.y + u * ey))
        if u < 1:
            return hit
        # exactly at the far corner; prefer the edge starting there
        best = best or _Hit((k + 1) % 4, 0.0, p1)
    if best is None:
        raise ArithmeticError(f"ray {v} missed the diamond")
    return best


def _walk(a, b):
    """Counterclockwise arc from hit `a` to hit `b`."""
    verts = [a.point]
    if a.edge == b.edge and b.u >= a.u:
        verts.append(b.point)
        return DiamondArc(tuple(verts))
    k = a.edge
    while True:
        k = (k + 1) % 4
        verts.append(CORNERS[k])
        if k == b.edge:
            break
    verts.append(b.point)
    return DiamondArc(tuple(verts))


_START = _Hit(0, 0.0, CORNERS[0])


def arc_to(v):
    """The arc from (1, 0) counterclockwise to direction v."""
    return _walk(_START, _intersect(v))


def arc_position(v):
    """Arc position of direction v, in [0, 8)."""
    pos = arc_to(v).length
    return 0.0 if pos >= 8 else pos


def arc_between(u, v):
    """Smaller arc between two directions, in [0, 4]."""
    a, b = _intersect(u), _intersect(v)
    forward = _walk(a, b).length
    if forward == 0:
        return 0.0
    backward = _walk(b, a).length
    return min(forward, backward)


def circumference():
    """Full walk around the unit diamond."""
    return DiamondArc(CORNERS + (CORNERS[0],)).length


def max_deviation(directions, production):
    """Largest circular difference between `production(v)` and arc_position(v)."""
    worst = 0.0
    for v in directions:
        d = abs(production(v) - arc_position(v))
        worst = max(worst, min(d, 8 - d))
    return worst


def sweep_directions(n):
    """
    Deterministic direction set: an even Euclidean grid plus directions
    hugging the axes and diagonals.
    """
    out = []
    base = max(n - 64, 8)
    for i in range(base):
        phi = 2 * math.pi * i / base
        out.append(Vector(math.cos(phi), math.sin(phi)))
    for sx in (1, -1):
        for sy in (1, -1):
            for tiny in (1e-15, 1e-12, 1e-9, 1e-6):
                out.append(Vector(sx, sy * tiny))
                out.append(Vector(sx * tiny, sy))
                out.append(Vector(sx, sy * (1 + tiny)))
                out.append(Vector(sx * (1 + tiny), sy))
    return out
