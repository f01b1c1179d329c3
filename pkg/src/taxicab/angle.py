"""
Angle measure in t-radians.

A t-radian subtends an arc of taxicab length 1 on the unit taxicab circle
(the diamond |x| + |y| = 1), so a full turn is 8 t-radians and the
Euclidean angles pi/4, pi/2, pi measure 1, 2, 4.

Conversions from Euclidean angles are only rotation invariant in
quarter-turn steps: the same Euclidean angle measures differently
depending on where it sits relative to the axes.
"""

import math

from .core import EPS, Vector

FULL_TURN = 8.0
HALF_PI = math.pi / 2


def normalize(theta):
    """Reduce a t-radian angle into [0, 8)."""
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta!r}")
    r = theta % FULL_TURN
    # tiny negative inputs round up to exactly 8.0
    return 0.0 if r >= FULL_TURN else r


def normalize_euclidean(phi):
    r = phi % (2 * math.pi)
    return 0.0 if r >= 2 * math.pi else r


def _diamond_fraction(phi):
    # 2 cos/(cos + sin) == 2/(1 + tan), but stays finite at phi = pi/2
    c, s = math.cos(phi), math.sin(phi)
    return 2 * c / (c + s)


def taxicab_measure_standard(phi):
    """
    Taxicab measure of an acute Euclidean angle in standard position.

    Returns 2 - 2/(1 + tan(phi)) for phi in [0, pi/2).
    """
    if not 0 <= phi < HALF_PI:
        raise ValueError(f"expected an acute angle in [0, pi/2), got {phi!r}")
    return 2 - 2 / (1 + math.tan(phi))


def euclidean_measure_standard(theta):
    """Inverse of taxicab_measure_standard: tan(phi) = theta / (2 - theta)."""
    if not 0 <= theta < 2:
        raise ValueError(f"expected a t-radian angle in [0, 2), got {theta!r}")
    return math.atan(theta / (2 - theta))


def taxicab_measure(phi):
    """
    Taxicab measure of any Euclidean angle in standard position.

    Whole quarter turns contribute exactly 2 t-radians each (every
    Euclidean right angle measures 2), the acute remainder goes through
    taxicab_measure_standard. Result in [0, 8).
    """
    phi = normalize_euclidean(phi)
    quarters = min(int(phi // HALF_PI), 3)
    rest = phi - quarters * HALF_PI
    if rest >= HALF_PI:
        return normalize(2.0 * (quarters + 1))
    return normalize(2.0 * quarters + taxicab_measure_standard(max(rest, 0.0)))


def euclidean_measure(theta):
    """Inverse of taxicab_measure; result in [0, 2 pi)."""
    theta = normalize(theta)
    quarters = min(int(theta // 2), 3)
    return quarters * HALF_PI + euclidean_measure_standard(theta - 2 * quarters)


def taxicab_measure_in_quadrant(phi, psi):
    """
    Taxicab measure of an acute angle `phi` lying inside one quadrant,
    whose Euclidean reference angle (lower side to the x-axis) is `psi`.

    2/(1 + tan psi) - 2/(1 + tan(phi + psi)); at phi + psi == pi/2 the second
    term is taken as its limit 0.
    """
    if not (phi > 0 and psi >= 0 and phi + psi <= HALF_PI + EPS):
        raise ValueError(
            f"angle phi={phi!r} with reference psi={psi!r} is not inside one quadrant")
    upper = phi + psi
    far = 0.0 if upper >= HALF_PI else _diamond_fraction(upper)
    return _diamond_fraction(psi) - far


def direction_arc_position(v):
    """
    Arc position of direction `v` on the unit diamond, counterclockwise from (1, 0).

    Closed form per diamond edge. Directions along an axis land on the
    corners 0, 2, 4, 6.
    """
    if v.is_zero():
        raise ValueError("zero vector has no direction")
    n = abs(v.dx) + abs(v.dy)
    x, y = v.dx / n, v.dy / n
    if x > 0 and y >= 0:
        pos = 2 * y
    elif x <= 0 and y > 0:
        pos = 2 - 2 * x
    elif x < 0 and y <= 0:
        pos = 4 - 2 * y
    else:
        pos = 8 + 2 * y
    return normalize(pos)


def arc_separation(a, b):
    """Smaller arc between two arc positions, in [0, 4]."""
    d = abs(normalize(a) - normalize(b))
    return min(d, FULL_TURN - d)


def signed_arc(frm, to):
    """Counterclockwise arc from position `frm` to `to`, wrapped into [-4, 4)."""
    return normalize(to - frm + 4) - 4


def angle_between(vertex, p, q):
    """Unsigned taxicab angle at `vertex` between the rays toward `p` and `q`, in [0, 4]."""
    if p == vertex or q == vertex:
        raise ValueError("angle sides must not start and end at the vertex")
    a = direction_arc_position(p - vertex)
    b = direction_arc_position(q - vertex)
    return arc_separation(a, b)


def arc_length(r, theta):
    """Arc of a taxicab circle of radius r cut off by a central angle theta."""
    if r < 0 or theta < 0:
        raise ValueError("radius and angle must be nonnegative")
    return r * theta


def ray(phi):
    """Unit Euclidean direction at angle phi."""
    return Vector(math.cos(phi), math.sin(phi))

