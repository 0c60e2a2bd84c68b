"""Static SVG figures of the hexagram, from exact coordinates.

Everything is computed in rationals: the conic is sampled at rational
parameters, chords and Pascal lines are clipped against the viewport
rectangle exactly, and only the final coordinate strings are converted to
decimals (12 significant digits).  Output is deterministic: the same call
produces byte-identical SVG.

The drawing lives in the affine chart z0 = 1, where the conic becomes the
parabola v = u^2.  Element classes, for structural consumers:

    path.conic      the sampled parabola
    path.chord      a join of two of the six points
    line.pascal     a Pascal line
    rect.crosshair  a crosshair intersection point
    circle.pt       one of the six conic points
"""

from fractions import Fraction

from .errors import ViewportExcludesAll
from .hexagram import pascal_line, crosshair_points
from .plane import conic_point, join

# wide enough to contain the worked six-point configuration used in the docs
DEFAULT_VIEWPORT = (Fraction(-10), Fraction(10), Fraction(-5), Fraction(55))
_WIDTH = 800
_CONIC_SAMPLES = 256


def _fmt(value):
    # the single float conversion in the package, at the serialization edge
    return f"{float(value):.12g}"


class _Chart:
    def __init__(self, viewport, width=_WIDTH):
        umin, umax, vmin, vmax = (Fraction(x) for x in viewport)
        if umin >= umax or vmin >= vmax:
            raise ValueError("viewport must satisfy umin < umax and vmin < vmax")
        self.umin, self.umax, self.vmin, self.vmax = umin, umax, vmin, vmax
        self.width = Fraction(width)
        self.height = self.width * (vmax - vmin) / (umax - umin)

    def to_px(self, u, v):
        x = (u - self.umin) / (self.umax - self.umin) * self.width
        y = (self.vmax - v) / (self.vmax - self.vmin) * self.height
        return x, y

    def contains(self, u, v):
        return self.umin <= u <= self.umax and self.vmin <= v <= self.vmax

    def clip_line(self, triple):
        """Clip the line l0 + l1*u + l2*v = 0 to the viewport rectangle.

        Returns the two extreme boundary intersections, or None when the
        line misses the rectangle.
        """
        l0, l1, l2 = triple
        hits = []
        for u in (self.umin, self.umax):
            if l2 != 0:
                v = -(l0 + l1 * u) / l2
                if self.vmin <= v <= self.vmax:
                    hits.append((u, v))
        for v in (self.vmin, self.vmax):
            if l1 != 0:
                u = -(l0 + l2 * v) / l1
                if self.umin <= u <= self.umax:
                    hits.append((u, v))
        hits = sorted(set(hits))
        if len(hits) < 2:
            return None
        return hits[0], hits[-1]


def _affine_point(proj_point):
    z0, z1, z2 = proj_point.point_triple()
    if z0 == 0:
        return None
    return z1 / z0, z2 / z0


def _conic_path(chart):
    step = (chart.umax - chart.umin) / _CONIC_SAMPLES
    pieces = []
    current = []
    for k in range(_CONIC_SAMPLES + 1):
        u = chart.umin + step * k
        v = u * u
        if chart.contains(u, v):
            current.append(chart.to_px(u, v))
        elif current:
            pieces.append(current)
            current = []
    if current:
        pieces.append(current)
    if not pieces:
        return None
    d = " ".join(
        "M" + " L".join(f"{_fmt(x)},{_fmt(y)}" for x, y in piece) for piece in pieces
    )
    return f'  <path class="conic" d="{d}" fill="none" stroke="#888888" stroke-width="1.5"/>'


def _segment(chart, triple):
    clipped = chart.clip_line(triple)
    if clipped is None:
        return None
    (u1, v1), (u2, v2) = clipped
    (x1, y1), (x2, y2) = chart.to_px(u1, v1), chart.to_px(u2, v2)
    return (x1, y1, x2, y2)


def render_svg(params, arrays, viewport=DEFAULT_VIEWPORT, include_chords=True):
    """Render the six points plus the Pascals of the selected arrays.

    Crosshair points and (optionally) the chords entering each selected
    array are drawn as well.  Raises ViewportExcludesAll when no point,
    chord, crosshair or Pascal line intersects the viewport.
    """
    chart = _Chart(viewport)
    visible = 0
    body = []

    conic = _conic_path(chart)
    if conic:
        body.append(conic)

    chord_pairs = []
    seen_pairs = set()
    crosshairs = []
    pascals = []
    for arr in arrays:
        labels = arr.top + arr.bottom
        p = dict(zip("123456", labels))
        for i, j in (("1", "5"), ("2", "4"), ("2", "6"), ("3", "5"), ("1", "6"), ("3", "4")):
            pair = frozenset((p[i], p[j]))
            if pair not in seen_pairs:
                seen_pairs.add(pair)
                chord_pairs.append(tuple(sorted(pair)))
        crosshairs.extend(crosshair_points(params, arr))
        pascals.append(pascal_line(params, arr))

    if include_chords:
        for x, y in chord_pairs:
            ln = join(conic_point(params.value(x)), conic_point(params.value(y)))
            seg = _segment(chart, ln.line_triple())
            if seg is None:
                continue
            visible += 1
            x1, y1, x2, y2 = (_fmt(c) for c in seg)
            body.append(
                f'  <path class="chord" d="M{x1},{y1} L{x2},{y2}"'
                f' stroke="#2e8b57" stroke-width="1" fill="none"/>'
            )

    for pl in pascals:
        seg = _segment(chart, pl.line.line_triple())
        if seg is None:
            continue
        visible += 1
        x1, y1, x2, y2 = (_fmt(c) for c in seg)
        body.append(
            f'  <line class="pascal" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"'
            f' stroke="#1f4fd8" stroke-width="2">'
            f"<title>{pl.array.code}</title></line>"
        )

    for pt in crosshairs:
        affine = _affine_point(pt)
        if affine is None or not chart.contains(*affine):
            continue
        visible += 1
        x, y = chart.to_px(*affine)
        body.append(
            f'  <rect class="crosshair" x="{_fmt(x - 3)}" y="{_fmt(y - 3)}"'
            f' width="6" height="6" fill="#d02828"/>'
        )

    for label in "ABCDEF":
        t = params.value(label)
        u, v = t, t * t
        if not chart.contains(u, v):
            continue
        visible += 1
        x, y = chart.to_px(u, v)
        body.append(f'  <circle class="pt" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#111111"/>')
        body.append(
            f'  <text class="pt-label" x="{_fmt(x + 6)}" y="{_fmt(y - 6)}"'
            f' font-size="14" font-family="sans-serif">{label}</text>'
        )

    if visible == 0:
        raise ViewportExcludesAll("nothing of the figure lies inside the viewport")

    w, h = _fmt(chart.width), _fmt(chart.height)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}"'
        f' viewBox="0 0 {w} {h}">\n'
        f'  <rect width="{w}" height="{h}" fill="#ffffff"/>'
    )
    return head + "\n" + "\n".join(body) + "\n</svg>\n"
