"""Static figures: the unit taxicab circle and the graphs of cos_t / sin_t."""

from .core import ORIGIN, point_on_taxicab_circle
from .trig import cos_t, sin_t

TRIG_GRAPH_RANGE = (0, 16)
TRIG_GRAPH_STEP = 0.01


def fmt(x, precision=10):
    s = f"{x:.{precision}g}"
    return "0" if s == "-0" else s


def trig_samples():
    lo, hi = TRIG_GRAPH_RANGE
    n = round((hi - lo) / TRIG_GRAPH_STEP)
    for i in range(n + 1):
        theta = lo + i / 100
        yield theta, cos_t(theta), sin_t(theta)


def trig_graphs_csv(precision=10):
    rows = ["theta,cos,sin"]
    for theta, c, s in trig_samples():
        rows.append(",".join(fmt(v, precision) for v in (theta, c, s)))
    return "\n".join(rows) + "\n"


def unit_circle_ticks():
    """Points at integer t-radian arc positions 0..7."""
    return [(k, point_on_taxicab_circle(ORIGIN, 1.0, k)) for k in range(8)]


def unit_circle_csv(precision=10):
    rows = ["theta,x,y"]
    for k, p in unit_circle_ticks():
        rows.append(",".join(fmt(v, precision) for v in (k, p.x, p.y)))
    return "\n".join(rows) + "\n"


_SVG_HEAD = ('<?xml version="1.0" encoding="UTF-8"?>\n'
             '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="{vb}">\n')


def unit_circle_svg(precision=10):
    out = [_SVG_HEAD.format(w=400, h=400, vb="-1.5 -1.5 3 3")]
    out.append('<title>The taxicab unit circle</title>\n')
    # flip y so the coordinates below read as plane coordinates
    out.append('<g transform="scale(1,-1)" stroke-width="0.01" font-size="0.12">\n')
    out.append('<line x1="-1.4" y1="0" x2="1.4" y2="0" stroke="#999"/>\n')
    out.append('<line x1="0" y1="-1.4" x2="0" y2="1.4" stroke="#999"/>\n')
    out.append('<polygon points="1,0 0,1 -1,0 0,-1" fill="none" stroke="black"/>\n')
    for k, p in unit_circle_ticks():
        x, y = fmt(p.x, precision), fmt(p.y, precision)
        out.append(f'<circle cx="{x}" cy="{y}" r="0.03" fill="black"/>\n')
        lx, ly = fmt(1.15 * p.x, 4), fmt(-1.15 * p.y, 4)
        out.append(f'<text x="{lx}" y="{ly}" transform="scale(1,-1)" '
                   f'text-anchor="middle">{k}</text>\n')
    out.append('</g>\n</svg>\n')
    return "".join(out)


def trig_graphs_svg(precision=6):
    lo, hi = TRIG_GRAPH_RANGE
    out = [_SVG_HEAD.format(w=800, h=200, vb=f"{lo - 0.5} -1.5 {hi - lo + 1} 3")]
    out.append('<title>Taxicab sine and cosine</title>\n')
    out.append('<g transform="scale(1,-1)" fill="none" stroke-width="0.03">\n')
    out.append(f'<line x1="{lo}" y1="0" x2="{hi}" y2="0" stroke="#999"/>\n')
    samples = list(trig_samples())
    for label, col, colour in (("cos_t", 1, "#1f77b4"), ("sin_t", 2, "#d62728")):
        pts = " ".join(f"{fmt(s[0], precision)},{fmt(s[col], precision)}" for s in samples)
        out.append(f'<polyline id="{label}" stroke="{colour}" points="{pts}">'
                   f'<title>{label}</title></polyline>\n')
    out.append('</g>\n')
    out.append('<text x="0" y="-1.2" font-size="0.25" fill="#1f77b4">cos_t</text>\n')
    out.append('<text x="2" y="-1.2" font-size="0.25" fill="#d62728">sin_t</text>\n')
    out.append('</svg>\n')
    return "".join(out)
