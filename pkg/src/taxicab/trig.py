"""
Taxicab sine and cosine.

(cos_t(theta), sin_t(theta)) is the point at arc position theta on the unit
diamond, so both functions are piecewise linear with period 8 and
|sin_t| + |cos_t| == 1.

The angle-sum formulas only take two shapes,

    s * (-1 + |f(alpha) + s * cos_t(beta)|),    s in {+1, -1}

with f = cos_t for the cosine sum and f = sin_t for the sine sum. Which
sign applies depends on the quadrants of alpha and beta; the lookup
tables below list every quadrant pair explicitly.
"""

from dataclasses import dataclass
from enum import IntEnum

from .angle import normalize


class Quadrant(IntEnum):
    I = 1
    II = 2
    III = 3
    IV = 4

    def __str__(self):
        return self.name


def cos_t(theta):
    theta = normalize(theta)
    if theta < 4:
        return 1 - theta / 2
    return -3 + theta / 2


def sin_t(theta):
    theta = normalize(theta)
    if theta < 2:
        return theta / 2
    if theta < 6:
        return 2 - theta / 2
    return -4 + theta / 2


@dataclass(frozen=True)
class TrigPair:
    cos: float
    sin: float


def trig_pair(theta):
    return TrigPair(cos_t(theta), sin_t(theta))


def quadrant_of(theta):
    """
    Quadrant of a t-radian angle after normalization.

    Angles on a quadrant boundary go to the quadrant counterclockwise
    ahead of them: 0 -> I, 2 -> II, 4 -> III, 6 -> IV.
    """
    return Quadrant(min(int(normalize(theta) // 2), 3) + 1)


def boundary_quadrants(theta):
    """Both quadrants adjacent to a boundary angle (0, 2, 4 or 6), clockwise one first."""
    ahead = quadrant_of(theta)
    behind = Quadrant((ahead - 2) % 4 + 1)
    return behind, ahead


@dataclass(frozen=True)
class SumRow:
    """
    One row of an angle-sum lookup table.

    `alpha` and `beta` are the quadrant labels as listed; None in both
    means "same quadrant". `sign` +1 selects -1 + |f(a) + cos_t(b)|, -1
    selects 1 - |f(a) - cos_t(b)|.
    """
    alpha: Quadrant | None
    beta: Quadrant | None
    sign: int

    @property
    def label(self):
        if self.alpha is None:
            return "same"
        return f"{self.alpha},{self.beta}"


Q = Quadrant

COS_SUM_TABLE = (
    SumRow(None, None, +1),
    SumRow(Q.I, Q.II, +1),
    SumRow(Q.III, Q.IV, +1),
    SumRow(Q.I, Q.III, -1),
    SumRow(Q.I, Q.IV, -1),
    SumRow(Q.II, Q.III, -1),
    SumRow(Q.II, Q.IV, -1),
)

# Order matters here: sin_t(alpha) pairs with cos_t(beta). Pairs listed with
# the larger quadrant first are served by swapping the operands.
SIN_SUM_TABLE = (
    SumRow(Q.I, Q.III, +1),
    SumRow(Q.I, Q.IV, +1),
    SumRow(Q.II, Q.II, +1),
    SumRow(Q.IV, Q.IV, +1),
    SumRow(Q.I, Q.I, -1),
    SumRow(Q.I, Q.II, -1),
    SumRow(Q.II, Q.III, -1),
    SumRow(Q.II, Q.IV, -1),
    SumRow(Q.III, Q.III, -1),
    SumRow(Q.III, Q.IV, -1),
)


@dataclass(frozen=True)
class SumCase:
    """Result of an angle-sum evaluation together with the table row used."""
    value: float
    row: SumRow
    swapped: bool
    form: str


def _lookup(table, qa, qb):
    for row in table:
        if row.alpha is None:
            if qa == qb:
                return row, False
        elif (row.alpha, row.beta) == (qa, qb):
            return row, False
    for row in table:
        if row.alpha is not None and (row.alpha, row.beta) == (qb, qa):
            return row, True
    raise LookupError(f"no table row for quadrants ({qa}, {qb})")


def _form(fname, sign, swapped):
    a, b = ("b", "a") if swapped else ("a", "b")
    if sign > 0:
        return f"-1+|{fname} {a} + cos {b}|"
    return f"1-|{fname} {a} - cos {b}|"


def _sum_case(table, first, fname, alpha, beta, quadrants):
    qa, qb = quadrants if quadrants is not None else (quadrant_of(alpha), quadrant_of(beta))
    row, swapped = _lookup(table, Quadrant(qa), Quadrant(qb))
    if swapped:
        alpha, beta = beta, alpha
    s = row.sign
    value = s * (-1 + abs(first(alpha) + s * cos_t(beta)))
    return SumCase(value, row, swapped, _form(fname, s, swapped))


def cos_sum_case(alpha, beta, quadrants=None):
    """
    cos_t(alpha + beta) by table dispatch on the operand quadrants.

    `quadrants` overrides the classification, which is only meaningful for
    boundary angles where two classifications are defensible.
    """
    return _sum_case(COS_SUM_TABLE, cos_t, "cos", alpha, beta, quadrants)


def sin_sum_case(alpha, beta, quadrants=None):
    """sin_t(alpha + beta) by table dispatch; see cos_sum_case."""
    return _sum_case(SIN_SUM_TABLE, sin_t, "sin", alpha, beta, quadrants)


def cos_sum(alpha, beta):
    return cos_sum_case(alpha, beta).value


def sin_sum(alpha, beta):
    return sin_sum_case(alpha, beta).value


def cos_double(alpha):
    return -1 + 2 * abs(cos_t(alpha))


def sin_double(alpha):
    return -1 + 2 * abs(cos_t(alpha - 1))
