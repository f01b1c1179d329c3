"""
Triangles measured with taxicab sides and t-radian angles.

The angles of every triangle still sum to 4 t-radians, but almost none of
the Euclidean congruence criteria survive: two triangles can agree on
ASASA, SSS, SAS, ... and still differ. Only SASAS (all sides, and the
angles along with them) pins a triangle down.
"""

from dataclasses import dataclass, fields
from itertools import permutations

from .angle import angle_between
from .core import EPS, Point, taxicab_distance

# Shoelace area below this declares the vertices collinear.
AREA_EPS = 1e-12


class DegenerateTriangleError(ValueError):
    """Vertices coincide or are collinear."""


def _signed_area(a, b, c):
    return ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a == b or b == c or a == c:
            raise DegenerateTriangleError(f"repeated vertex in {self.vertices}")
        if abs(_signed_area(a, b, c)) <= AREA_EPS:
            raise DegenerateTriangleError(f"collinear vertices {self.vertices}")

    @classmethod
    def from_coords(cls, *coords):
        if len(coords) != 6:
            raise ValueError(f"need 6 coordinates, got {len(coords)}")
        xs = [float(v) for v in coords]
        return cls(Point(xs[0], xs[1]), Point(xs[2], xs[3]), Point(xs[4], xs[5]))

    @property
    def vertices(self):
        return (self.a, self.b, self.c)

    def translate(self, v):
        return Triangle(self.a + v, self.b + v, self.c + v)


@dataclass(frozen=True)
class TriangleMetrics:
    """sides[i] is opposite vertex i, angles[i] sits at vertex i."""
    sides: tuple
    angles: tuple

    @property
    def angle_sum(self):
        return sum(self.angles)


def measure(tri):
    v = tri.vertices
    sides = tuple(taxicab_distance(v[(i + 1) % 3], v[(i + 2) % 3]) for i in range(3))
    angles = tuple(angle_between(v[i], v[(i + 1) % 3], v[(i + 2) % 3]) for i in range(3))
    return TriangleMetrics(sides, angles)


def angle_sum(tri):
    return measure(tri).angle_sum


@dataclass(frozen=True)
class CongruenceReport:
    """
    Which congruence patterns two triangles share under at least one
    vertex correspondence. A true flag only says the parts match; the
    point of the taxicab setting is that most of them do not force
    congruence.
    """
    SSS: bool
    SAS: bool
    ASA: bool
    AAS: bool
    SSA: bool
    AAA: bool
    ASASA: bool
    SSSA: bool
    SASAS: bool

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


CONDITIONS = tuple(f.name for f in fields(CongruenceReport))


def _conditions(side_ok, angle_ok):
    """Evaluate each pattern for one fixed correspondence."""
    others = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
    all_sides = all(side_ok)
    all_angles = all(angle_ok)
    n_sides = sum(side_ok)
    n_angles = sum(angle_ok)
    # the side opposite vertex k is the one between the other two vertices
    sas = any(angle_ok[i] and all(side_ok[j] for j in others[i]) for i in range(3))
    asa = any(side_ok[k] and all(angle_ok[j] for j in others[k]) for k in range(3))
    aas = any(angle_ok[i] and angle_ok[j] and side_ok[i]
              for i in range(3) for j in range(3) if i != j)
    ssa = any(side_ok[i] and side_ok[j] and angle_ok[i]
              for i in range(3) for j in range(3) if i != j)
    return {
        "SSS": all_sides,
        "SAS": sas,
        "ASA": asa,
        "AAS": aas,
        "SSA": ssa,
        "AAA": all_angles,
        "ASASA": all_angles and n_sides >= 2,
        "SSSA": all_sides and n_angles >= 1,
        "SASAS": all_sides and all_angles,
    }


def classify_congruence(t1, t2, tol=EPS):
    m1, m2 = measure(t1), measure(t2)
    flags = dict.fromkeys(CONDITIONS, False)
    for perm in permutations(range(3)):
        side_ok = [abs(m1.sides[i] - m2.sides[perm[i]]) <= tol for i in range(3)]
        angle_ok = [abs(m1.angles[i] - m2.angles[perm[i]]) <= tol for i in range(3)]
        for name, ok in _conditions(side_ok, angle_ok).items():
            flags[name] = flags[name] or ok
    return CongruenceReport(**flags)


def is_congruent(t1, t2, tol=EPS):
    """SASAS under some vertex correspondence."""
    return classify_congruence(t1, t2, tol).SASAS
