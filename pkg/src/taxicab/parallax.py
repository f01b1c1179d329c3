"""
Parallax distance estimation, taxicab and Euclidean.

In the taxicab plane an observer at A can step along y = x or y = -x
without changing the distance to an object Q, since the object stays on
the same edge of the taxicab circle centered at the observer. The shift
of Q against a reference at infinity is then exactly the arc between the
two sightings, so d = s / (beta - alpha) holds with no small-angle
approximation.

The reference object is never a Point, only a Euclidean direction
`reference_theta`, because it must not move when the observer does.

Scenes are not reflected into the first quadrant first. Which diagonals
preserve distance follows directly from the quadrant signs of Q - A (see
`preserving_diagonals`), so every quadrant is handled the same way.
"""

import math
from dataclasses import dataclass

from .angle import (angle_between, direction_arc_position, ray, signed_arc,
                    taxicab_measure_in_quadrant)
from .core import EPS, Point, Vector, taxicab_distance

SQRT2 = math.sqrt(2)

DIAGONALS = {
    "NE": Vector(1.0, 1.0),
    "NW": Vector(-1.0, 1.0),
    "SW": Vector(-1.0, -1.0),
    "SE": Vector(1.0, -1.0),
}


class InvalidSceneError(ValueError):
    """The configuration does not admit an exact parallax measurement."""


@dataclass(frozen=True)
class ParallaxMeasurement:
    """Taxicab baseline `s` and the two sightings (t-radians) against the reference."""
    s: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.s > 0:
            raise ValueError(f"baseline must be positive, got {self.s!r}")
        if not self.beta > self.alpha:
            raise ValueError(
                f"second sighting must exceed the first (alpha={self.alpha!r}, beta={self.beta!r})")

    @property
    def shift(self):
        return self.beta - self.alpha


@dataclass(frozen=True)
class EuclideanParallaxMeasurement:
    """
    Euclidean baseline and sightings.

    alpha_e and beta_e are the counterclockwise angles from the reference
    direction theta_e to the object, seen from A and from B.
    """
    s_e: float
    alpha_e: float
    beta_e: float
    theta_e: float = 0.0


@dataclass(frozen=True)
class ParallaxScene:
    observer: Point
    object: Point
    step: float
    move_direction: str | None = None

    def __post_init__(self):
        if self.move_direction is not None and self.move_direction not in DIAGONALS:
            raise ValueError(f"move_direction must be one of {sorted(DIAGONALS)}")


def taxicab_parallax_distance(m):
    if not m.s > 0:
        raise ValueError("baseline must be positive")
    if not m.beta > m.alpha:
        raise ValueError("no parallax: beta must exceed alpha")
    return m.s / (m.beta - m.alpha)


def preserving_diagonals(observer, obj):
    """The two diagonal headings that keep the taxicab distance to `obj` fixed."""
    rel = obj - observer
    sx = math.copysign(1.0, rel.dx)
    sy = math.copysign(1.0, rel.dy)
    # d(B, Q) changes at rate -(sx*a + sy*b) when moving along (a, b)
    return [name for name, d in DIAGONALS.items() if sx * d.dx + sy * d.dy == 0]


def _strictly_inside(rel, tol):
    return abs(rel.dx) > tol and abs(rel.dy) > tol


def step_endpoint(observer, direction, step):
    """Observer position after a diagonal move of taxicab length `step`."""
    return observer + DIAGONALS[direction] * (step / 2)


def _sighting(observer, obj, reference_theta):
    """Signed arc from the reference direction to the object, seen from `observer`."""
    return signed_arc(direction_arc_position(ray(reference_theta)),
                      direction_arc_position(obj - observer))


def valid_directions(scene, reference_theta, tol=EPS):
    """
    Diagonal headings that preserve the distance, keep Q strictly inside
    one quadrant from both ends, and push the sighting further from the
    reference without wrapping past the antipode.
    """
    a, q = scene.observer, scene.object
    if not scene.step > 0:
        raise InvalidSceneError("step must be positive")
    if not _strictly_inside(q - a, tol):
        raise InvalidSceneError("object must lie strictly inside a quadrant of the observer")
    sigma_a = _sighting(a, q, reference_theta)
    out = []
    for name in preserving_diagonals(a, q):
        b = step_endpoint(a, name, scene.step)
        rel_b = q - b
        if not _strictly_inside(rel_b, tol):
            continue
        if (math.copysign(1, rel_b.dx), math.copysign(1, rel_b.dy)) != \
                (math.copysign(1, (q - a).dx), math.copysign(1, (q - a).dy)):
            continue
        sigma_b = _sighting(b, q, reference_theta)
        same_side = abs(sigma_a) <= tol or sigma_a * sigma_b > 0
        if same_side and abs(sigma_b) > abs(sigma_a) + tol and abs(sigma_b) < 4 - tol:
            out.append(name)
    return out


def choose_direction(scene, reference_theta, tol=EPS):
    options = valid_directions(scene, reference_theta, tol)
    if not options:
        raise InvalidSceneError(
            "no distance-preserving diagonal step keeps the object inside one quadrant "
            "while increasing its angle to the reference")
    if scene.move_direction is None:
        return options[0]
    if scene.move_direction not in options:
        raise InvalidSceneError(
            f"moving {scene.move_direction} does not give an exact measurement here; "
            f"use one of {options}")
    return scene.move_direction


def simulate_observation(scene, reference_theta, tol=EPS):
    """Sightings alpha (from A) and beta (from B) of the object against the reference."""
    direction = choose_direction(scene, reference_theta, tol)
    a, q = scene.observer, scene.object
    b = step_endpoint(a, direction, scene.step)
    far = ray(reference_theta)
    alpha = angle_between(a, q, a + far)
    beta = angle_between(b, q, b + far)
    return ParallaxMeasurement(taxicab_distance(a, b), alpha, beta)


def random_scene(rng, extent=10.0, tol=EPS):
    """
    Draw a scene that admits an exact measurement, with its reference direction.

    Steps range up to 95% of the largest step that keeps the object in
    its quadrant, so parallax angles are not small in general.
    """
    while True:
        a = Point(rng.uniform(-extent, extent), rng.uniform(-extent, extent))
        rel = Vector(rng.choice((-1.0, 1.0)) * rng.uniform(0.1, extent),
                     rng.choice((-1.0, 1.0)) * rng.uniform(0.1, extent))
        limit = 2 * min(abs(rel.dx), abs(rel.dy))
        scene = ParallaxScene(a, a + rel, rng.uniform(0.01, 0.95) * limit)
        theta = math.atan2(rel.dy, rel.dx) + rng.uniform(-0.6, 0.6)
        if valid_directions(scene, theta, tol):
            return scene, theta


# --- Euclidean counterparts -------------------------------------------------

def _wrap_pi(x):
    return math.remainder(x, 2 * math.pi)


def euclidean_parallax_exact(m):
    """
    Exact Euclidean distance for a step of length s_e to the south-east.

    Law of sines in triangle QAB, with the angle at B equal to
    3 pi/4 - (beta_e + theta_e).
    """
    shift = m.beta_e - m.alpha_e
    if not 0 < shift < math.pi / 2:
        raise InvalidSceneError(f"parallax angle {shift!r} outside (0, pi/2)")
    gamma = 3 * math.pi / 4 - (m.beta_e + m.theta_e)
    if not 0 < gamma < math.pi:
        raise InvalidSceneError(f"angle at the second station {gamma!r} outside (0, pi)")
    sight = m.beta_e + m.theta_e
    return m.s_e * (math.cos(sight) + math.sin(sight)) / (SQRT2 * math.sin(shift))


def euclidean_parallax_perpendicular(s_e, alpha_e, beta_e):
    shift = beta_e - alpha_e
    if not 0 < shift < math.pi / 2:
        raise InvalidSceneError(f"parallax angle {shift!r} outside (0, pi/2)")
    return s_e / math.tan(shift)


def euclidean_parallax_approx(s_e, alpha_e, beta_e):
    """Small-angle estimate s_e / (beta_e - alpha_e); never exact."""
    shift = beta_e - alpha_e
    if not shift > 0:
        raise InvalidSceneError("no parallax: beta_e must exceed alpha_e")
    return s_e / shift


def _euclidean_sightings(a, b, q, reference_theta):
    ra, rb = q - a, q - b
    alpha_e = _wrap_pi(math.atan2(ra.dy, ra.dx) - reference_theta)
    beta_e = alpha_e + _wrap_pi(math.atan2(rb.dy, rb.dx) - math.atan2(ra.dy, ra.dx))
    return alpha_e, beta_e


def simulate_euclidean_diagonal(observer, obj, step_e, reference_theta):
    """Euclidean sightings for a south-east step of Euclidean length step_e."""
    if not step_e > 0:
        raise InvalidSceneError("step must be positive")
    b = observer + Vector(1.0, -1.0) * (step_e / SQRT2)
    alpha_e, beta_e = _euclidean_sightings(observer, b, obj, reference_theta)
    return EuclideanParallaxMeasurement(step_e, alpha_e, beta_e, reference_theta)


def simulate_euclidean_perpendicular(observer, obj, step_e, reference_theta):
    """
    Euclidean sightings for a step perpendicular to the line of sight,
    taken to the side that increases the angle to the reference.
    """
    if not step_e > 0:
        raise InvalidSceneError("step must be positive")
    rel = obj - observer
    n = rel.euclidean_norm
    if n == 0:
        raise InvalidSceneError("object coincides with the observer")
    side = Vector(rel.dy / n, -rel.dx / n)
    alpha_e, _ = _euclidean_sightings(observer, observer, obj, reference_theta)
    if alpha_e < 0:
        side = -side
    b = observer + side * step_e
    alpha_e, beta_e = _euclidean_sightings(observer, b, obj, reference_theta)
    if alpha_e < 0:
        # mirrored so the shift comes out positive
        alpha_e, beta_e = -alpha_e, -beta_e
    return EuclideanParallaxMeasurement(step_e, alpha_e, beta_e, reference_theta)


@dataclass(frozen=True)
class TaxicabLink:
    s: float
    d: float
    parallax: float


def link_taxicab_euclidean(s_e, d_e, alpha_e, beta_e, theta_e, tol=EPS):
    """
    Taxicab baseline, distance and parallax angle of a Euclidean
    south-east-step scene; the three satisfy d = s / parallax.

    `d_e` may be None, in which case the exact Euclidean formula supplies it.
    """
    psi = alpha_e + theta_e
    phi = beta_e - alpha_e
    if not psi > tol:
        raise InvalidSceneError("object must be off the x-axis")
    if not (phi > 0 and psi + phi < math.pi / 2 - tol):
        raise InvalidSceneError("both sightings must stay inside the first quadrant")
    expected = euclidean_parallax_exact(
        EuclideanParallaxMeasurement(s_e, alpha_e, beta_e, theta_e))
    if d_e is None:
        d_e = expected
    elif abs(d_e - expected) > tol * max(1.0, d_e):
        raise InvalidSceneError(
            f"distance {d_e!r} is inconsistent with the sightings (expected {expected!r})")
    s = SQRT2 * s_e
    d = d_e * (math.cos(psi) + math.sin(psi))
    return TaxicabLink(s, d, taxicab_measure_in_quadrant(phi, psi))
