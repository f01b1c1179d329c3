"""Taxicab angles, trigonometry, triangle congruence and exact parallax."""

from .angle import (angle_between, arc_length, direction_arc_position, euclidean_measure,
                    euclidean_measure_standard, normalize, taxicab_measure,
                    taxicab_measure_in_quadrant, taxicab_measure_standard)
from .core import EPS, ORIGIN, Point, Vector, euclidean_distance, point_on_taxicab_circle, taxicab_distance
from .parallax import (EuclideanParallaxMeasurement, ParallaxMeasurement, ParallaxScene,
                       euclidean_parallax_approx, euclidean_parallax_exact,
                       euclidean_parallax_perpendicular, link_taxicab_euclidean,
                       simulate_observation, taxicab_parallax_distance)
from .triangle import (CongruenceReport, DegenerateTriangleError, Triangle, TriangleMetrics,
                       angle_sum, classify_congruence, is_congruent, measure)
from .trig import Quadrant, cos_double, cos_sum, cos_t, quadrant_of, sin_double, sin_sum, sin_t

__version__ = "0.1.0"
