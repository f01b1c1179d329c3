"""
Command-line front end.

Every subcommand is a thin adapter over the library: it parses
arguments, calls one or two library functions and renders the result as
text, json or csv (svg for plots only).

Exit status: 0 on success, 1 on a domain or validation error, 2 on a
usage error.
"""

import argparse
import csv
import io
import json
import math
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import angle, oracle, parallax, plot, triangle, trig
from .core import EPS, Point, Vector

DEFAULT_PRECISION = 10


class UsageError(Exception):
    pass


# --- argument parsing helpers ---------------------------------------------

def parse_angle(text, unit):
    """
    Parse an angle, returning it in `unit` ('t' for t-radians, 'r' for radians).

    A trailing 't' or 'r' overrides the command's default unit; the
    conversion treats the value as an angle in standard position.
    """
    text = text.strip().lower()
    given = unit
    if text and text[-1] in "tr":
        given, text = text[-1], text[:-1]
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    if given == unit:
        return value
    if unit == "t":
        return angle.taxicab_measure(value)
    return angle.euclidean_measure(value)


def t_angle(text):
    return parse_angle(text, "t")


def e_angle(text):
    return parse_angle(text, "r")


def point_arg(text):
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return Point(x, y)


def finite_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return value


# --- rendering ------------------------------------------------------------

def _round(value, precision):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, float)):
        return float(plot.fmt(value, precision))
    if isinstance(value, dict):
        return {k: _round(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v, precision) for v in value]
    raise TypeError(f"cannot render {type(value).__name__}")


def _text_value(value, precision):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, float)):
        return plot.fmt(value, precision)
    if isinstance(value, (list, tuple)):
        return " ".join(_text_value(v, precision) for v in value)
    return str(value)


def _flatten(result, prefix=""):
    for key, value in result.items():
        if isinstance(value, dict):
            yield from _flatten(value, f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}", value


def render_json(result, precision=DEFAULT_PRECISION):
    return json.dumps(_round(result, precision), indent=2) + "\n"


def render(result, fmt, precision=DEFAULT_PRECISION):
    if fmt == "json":
        return render_json(result, precision)
    flat = list(_flatten(result))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in flat])
        writer.writerow([_text_value(v, precision) for _, v in flat])
        return buf.getvalue()
    return "".join(f"{k}: {_text_value(v, precision)}\n" for k, v in flat)


# --- commands -------------------------------------------------------------

def cmd_convert(args):
    if args.direction == "e2t":
        phi = args.value
        if args.psi is not None:
            theta = angle.taxicab_measure_in_quadrant(phi, args.psi)
        else:
            theta = angle.taxicab_measure_standard(phi)
        return {"radians": phi, "t_radians": theta}
    if args.psi is not None:
        raise UsageError("--psi only applies to e2t")
    return {"t_radians": args.value, "radians": angle.euclidean_measure_standard(args.value)}


def _sum_entry(case):
    return {"value": case.value, "row": case.row.label, "form": case.form}


def cmd_trig(args):
    result = {}
    if args.theta is not None:
        result["theta"] = args.theta
        result["cos"] = trig.cos_t(args.theta)
        result["sin"] = trig.sin_t(args.theta)
        result["quadrant"] = str(trig.quadrant_of(args.theta))
    if args.sum is not None:
        a, b = args.sum
        result["cos_sum"] = _sum_entry(trig.cos_sum_case(a, b))
        result["sin_sum"] = _sum_entry(trig.sin_sum_case(a, b))
    if args.double is not None:
        result["cos_double"] = trig.cos_double(args.double)
        result["sin_double"] = trig.sin_double(args.double)
    if not result:
        raise UsageError("give THETA, --sum A B or --double A")
    return result


def _metrics_entry(tri):
    m = triangle.measure(tri)
    return {"sides": list(m.sides), "angles": list(m.angles), "angle_sum": m.angle_sum}


def cmd_triangle(args):
    coords = args.coords
    if len(coords) not in (6, 12):
        raise UsageError(f"need 6 or 12 coordinates, got {len(coords)}")
    t1 = triangle.Triangle.from_coords(*coords[:6])
    if len(coords) == 6:
        return _metrics_entry(t1)
    t2 = triangle.Triangle.from_coords(*coords[6:])
    report = triangle.classify_congruence(t1, t2, args.tolerance)
    return {
        "first": _metrics_entry(t1),
        "second": _metrics_entry(t2),
        "congruence": report.as_dict(),
        "congruent": report.SASAS,
    }


def _simulate_one(scene, theta, tol):
    m = parallax.simulate_observation(scene, theta, tol)
    truth = parallax.taxicab_distance(scene.observer, scene.object)
    d = parallax.taxicab_parallax_distance(m)
    return truth, m, d, parallax.choose_direction(scene, theta, tol)


def cmd_parallax(args):
    mode = args.mode
    need = {"taxicab": ("s", "alpha", "beta"),
            "euclid-exact": ("s", "alpha", "beta", "theta"),
            "euclid-perp": ("s", "alpha", "beta"),
            "euclid-approx": ("s", "alpha", "beta")}
    for name in need.get(mode, ()):
        if getattr(args, name) is None:
            raise UsageError(f"mode {mode} needs --{name}")
    # angles are parsed per mode: t-radians for taxicab, radians otherwise
    unit = "t" if mode == "taxicab" else "r"
    ang = {k: parse_angle(getattr(args, k), unit)
           for k in ("alpha", "beta", "theta") if getattr(args, k) is not None}

    if mode == "taxicab":
        m = parallax.ParallaxMeasurement(args.s, ang["alpha"], ang["beta"])
        return {"distance": parallax.taxicab_parallax_distance(m)}
    if mode == "euclid-exact":
        m = parallax.EuclideanParallaxMeasurement(args.s, ang["alpha"], ang["beta"], ang["theta"])
        return {"distance": parallax.euclidean_parallax_exact(m)}
    if mode == "euclid-perp":
        return {"distance": parallax.euclidean_parallax_perpendicular(
            args.s, ang["alpha"], ang["beta"])}
    if mode == "euclid-approx":
        return {"distance": parallax.euclidean_parallax_approx(args.s, ang["alpha"], ang["beta"])}

    # simulate
    tol = args.tolerance
    if args.random:
        rng = random.Random(args.seed)
        scenes = [parallax.random_scene(rng, tol=tol) for _ in range(args.random)]
        with ThreadPoolExecutor() as pool:
            runs = list(pool.map(lambda sc: _simulate_one(sc[0], sc[1], tol), scenes))
        worst = max(abs(truth - d) for truth, _, d, _ in runs)
        return {"scenes": len(runs), "max_difference": worst, "exact": worst <= tol}
    if args.observer is None or args.object is None or args.step is None:
        raise UsageError("simulate needs --observer, --object and --step (or --random N)")
    rel = args.object - args.observer
    if args.reference is not None:
        theta = parse_angle(args.reference, "r")
    else:
        theta = math.atan2(rel.dy, rel.dx)
    scene = parallax.ParallaxScene(args.observer, args.object, args.step, args.direction)
    truth, m, d, direction = _simulate_one(scene, theta, tol)
    return {"direction": direction, "alpha": m.alpha, "beta": m.beta, "s": m.s,
            "truth": truth, "reconstructed": d, "difference": abs(d - truth)}


def cmd_plot(args):
    fmt = args.format if args.format in ("svg", "csv") else "svg"
    if args.target == "unit-circle":
        body = plot.unit_circle_svg() if fmt == "svg" else plot.unit_circle_csv(args.precision)
    else:
        body = plot.trig_graphs_svg() if fmt == "svg" else plot.trig_graphs_csv(args.precision)
    return body


def cmd_verify(args):
    dirs = oracle.sweep_directions(args.samples)
    arc_dev = oracle.max_deviation(dirs, angle.direction_arc_position)
    thm_dev = 0.0
    n = args.samples
    for i in range(1, n):
        phi = (math.pi / 2) * i / n
        ref = oracle.arc_position(angle.ray(phi))
        thm_dev = max(thm_dev, abs(angle.taxicab_measure_standard(phi) - ref))
    between_dev = 0.0
    rng = random.Random(0)
    for _ in range(min(n, 2000)):
        u = Vector(rng.uniform(-1, 1), rng.uniform(-1, 1))
        v = Vector(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if u.is_zero() or v.is_zero():
            continue
        lib = angle.angle_between(Point(0, 0), Point(u.dx, u.dy), Point(v.dx, v.dy))
        between_dev = max(between_dev, abs(lib - oracle.arc_between(u, v)))
    worst = max(arc_dev, thm_dev, between_dev)
    return {"directions": len(dirs),
            "max_deviation": {"arc_position": arc_dev, "standard_measure": thm_dev,
                              "angle_between": between_dev},
            "ok": worst <= args.tolerance}


# --- parser ---------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "svg"), default=None)
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="significant digits in numeric output")
    common.add_argument("--tolerance", type=finite_float, default=EPS)
    common.add_argument("--output", help="write to this path instead of stdout")

    parser = argparse.ArgumentParser(
        prog="taxicab", description="Taxicab angles, trigonometry, triangles and parallax.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common],
                       help="convert between radians and t-radians (acute angles)")
    p.add_argument("direction", choices=("e2t", "t2e"))
    p.add_argument("value", type=finite_float)
    p.add_argument("--psi", type=e_angle, help="Euclidean reference angle (e2t only)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("trig", parents=[common], help="taxicab sine and cosine")
    p.add_argument("theta", nargs="?", type=t_angle)
    p.add_argument("--sum", nargs=2, type=t_angle, metavar=("ALPHA", "BETA"))
    p.add_argument("--double", type=t_angle, metavar="ALPHA")
    p.set_defaults(func=cmd_trig)

    p = sub.add_parser("triangle", parents=[common],
                       help="measure a triangle, or compare two (6 or 12 coordinates)")
    p.add_argument("coords", nargs="+", type=finite_float)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("parallax", parents=[common], help="parallax distances")
    p.add_argument("mode", choices=("taxicab", "euclid-exact", "euclid-perp",
                                    "euclid-approx", "simulate"))
    p.add_argument("--s", type=finite_float, help="baseline length")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--theta", help="reference direction (euclid-exact)")
    p.add_argument("--observer", type=point_arg)
    p.add_argument("--object", type=point_arg)
    p.add_argument("--step", type=finite_float)
    p.add_argument("--direction", choices=sorted(parallax.DIAGONALS))
    p.add_argument("--reference", help="reference direction in radians (default: toward object)")
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help="simulate N random scenes instead of one")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_parallax)

    p = sub.add_parser("plot", parents=[common], help="unit circle or trig graphs")
    p.add_argument("target", choices=("unit-circle", "trig-graphs"))
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", parents=[common], help="oracle agreement sweeps")
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "svg" and args.command != "plot":
        parser.error("--format svg is only valid for plot")
    if args.format == "text" and args.command == "plot":
        parser.error("plot writes svg or csv")
    try:
        result = args.func(args)
    except (UsageError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if isinstance(result, str):
        text = result
    else:
        text = render(result, args.format or "text", args.precision)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    if isinstance(result, dict) and result.get("ok") is False:
        return 1
    return 0
