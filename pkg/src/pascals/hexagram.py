"""The forward map: six conic parameters to Pascal lines.

Six distinct points on the conic, labelled A..F and arranged as a 2x3
array, determine three "crosshair" points, one per pair of columns: for
the array [P1 P2 P3; P4 P5 P6] these are

    P1P5 ^ P2P4,   P2P6 ^ P3P5,   P1P6 ^ P3P4

(join of the top of one column with the bottom of another, both ways).
Pascal's theorem says the three crosshairs are collinear; the line is the
Pascal of the array.  Shuffling rows or columns permutes the crosshair
triple but never the line, so arrays are canonicalized modulo the 12
row/column shuffles and exactly 60 distinct Pascals remain.  Which orbit
member supplies "the" labelled crosshair triple is unobservable and we
simply use the canonical representative.

Four specific Pascals get names here: the arrays of ``SPECIAL_ARRAYS``
share the column partition {A,E}|{C,D}|{B,F} for the first three, and the
fourth breaks that symmetry.  They are the inputs the reconstruction
module inverts.  Two classical concurrences (Steiner's and Kirkman's) are
exposed as exact determinant tests.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg
from .errors import (
    ChartDegenerate,
    CoincidentLines,
    CoincidentPoints,
    DegenerateConfiguration,
    InvalidLabels,
)
from .forms import proportional
from .plane import ProjQuadratic, conic_point, incident, join, meet
from .rationals import format_rational, rational

LABELS = ("A", "B", "C", "D", "E", "F")


@dataclass(frozen=True)
class SextupleParams:
    """Conic parameters of the six labelled points [1, t, t^2]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    def __post_init__(self):
        for name in "abcdef":
            object.__setattr__(self, name, rational(getattr(self, name)))
        if len(set(self.as_tuple())) != 6:
            raise DegenerateConfiguration("repeated parameter: the six points must be distinct")

    @classmethod
    def from_iterable(cls, values):
        values = tuple(values)
        if len(values) != 6:
            raise ValueError("need exactly six parameters")
        return cls(*values)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def value(self, label):
        return getattr(self, label.lower())

    def point(self, label):
        return conic_point(self.value(label))

    def swapped(self, *pairs):
        """Exchange the parameter values of the given label pairs."""
        values = {name: getattr(self, name) for name in "abcdef"}
        for x, y in pairs:
            x, y = x.lower(), y.lower()
            values[x], values[y] = values[y], values[x]
        return SextupleParams(**values)


@dataclass(frozen=True)
class PascalArray:
    """A canonical 2x3 arrangement of the labels A..F.

    Always stored as the lexicographically least member (top row then
    bottom row, read as a six-letter word) of the 12-element orbit under
    row swap and simultaneous column permutations.  Build one through
    :func:`canonical_array` or :func:`parse_array_code`.
    """

    top: tuple
    bottom: tuple

    @property
    def code(self):
        return "".join(self.top) + "|" + "".join(self.bottom)

    def shuffles(self):
        """All 12 (top, bottom) pairs denoting the same Pascal."""
        out = []
        for order in permutations(range(3)):
            t = tuple(self.top[i] for i in order)
            b = tuple(self.bottom[i] for i in order)
            out.append((t, b))
            out.append((b, t))
        return out

    def column_partition(self):
        """The partition of the labels into the three columns."""
        return tuple(frozenset((t, b)) for t, b in zip(self.top, self.bottom))


def canonical_array(top, bottom):
    top, bottom = tuple(top), tuple(bottom)
    if sorted(top + bottom) != sorted(LABELS):
        raise InvalidLabels(f"labels must be a permutation of {''.join(LABELS)}")
    best = None
    for order in permutations(range(3)):
        for t, b in ((top, bottom), (bottom, top)):
            cand = (tuple(t[i] for i in order), tuple(b[i] for i in order))
            if best is None or cand < best:
                best = cand
    return PascalArray(*best)


def parse_array_code(code):
    """Parse "XYZ|UVW" into a canonical array."""
    parts = code.strip().upper().split("|")
    if len(parts) != 2 or len(parts[0]) != 3 or len(parts[1]) != 3:
        raise InvalidLabels(f"array code must look like ABC|FDE, got {code!r}")
    return canonical_array(tuple(parts[0]), tuple(parts[1]))


def all_arrays():
    """The 60 canonical arrays, in lexicographic order of their codes."""
    return _ALL_ARRAYS


def _compute_all_arrays():
    seen = {}
    for perm in permutations(LABELS):
        arr = canonical_array(perm[:3], perm[3:])
        seen[arr.code] = arr
    return tuple(seen[c] for c in sorted(seen))


@dataclass(frozen=True)
class PascalLine:
    """A Pascal line together with the array that produced it.

    ``coords`` is the normalized chart pair (s, t) with the line equal to
    the quadratic (t, -s/2, 1) up to scale, when that chart applies.
    """

    array: PascalArray
    line: ProjQuadratic
    coords: tuple = None

    def with_coords(self):
        if self.coords is not None:
            return self
        return PascalLine(self.array, self.line, line_coords(self.line))


def crosshair_points(params, arr):
    """The three crosshair intersection points of an array."""
    top = [params.point(lbl) for lbl in arr.top]
    bot = [params.point(lbl) for lbl in arr.bottom]
    p1, p2, p3 = top
    p4, p5, p6 = bot
    try:
        x1 = meet(join(p1, p5), join(p2, p4))
        x2 = meet(join(p2, p6), join(p3, p5))
        x3 = meet(join(p1, p6), join(p3, p4))
    except (CoincidentPoints, CoincidentLines) as exc:
        raise DegenerateConfiguration(f"array {arr.code}: {exc}") from exc
    return x1, x2, x3


def pascal_line(params, arr):
    """The Pascal line of an array, with all three incidences verified."""
    x1, x2, x3 = crosshair_points(params, arr)
    try:
        ln = join(x1, x2)
    except CoincidentPoints as exc:
        raise DegenerateConfiguration(f"array {arr.code}: coincident crosshairs") from exc
    for x in (x1, x2, x3):
        if not incident(x, ln):
            raise DegenerateConfiguration(f"array {arr.code}: crosshairs not collinear")
    return PascalLine(arr, ln)


def line_coords(line_like):
    """Normalized chart coordinates (s, t) of a line <1, s, t>.

    The underlying quadratic (z0, z1, z2) must have z2 != 0; then the
    unique scaling with line coordinates <1, s, t> has s = -2*z1/z2 and
    t = z0/z2, i.e. the form is proportional to (t, -s/2, 1).
    """
    if isinstance(line_like, PascalLine):
        line_like = line_like.line
    z0, z1, z2 = line_like.form.coeffs
    if z2 == 0:
        raise ChartDegenerate("line has no <1, s, t> coordinates")
    return (-2 * z1 / z2, z0 / z2)


SPECIAL_ARRAYS = (
    canonical_array("ADB", "ECF"),
    canonical_array("ACF", "EDB"),
    canonical_array("ADF", "ECB"),
    canonical_array("ABC", "FDE"),
)

STEINER_TRIPLE = (
    canonical_array("ABC", "FED"),
    canonical_array("ABC", "DFE"),
    canonical_array("ABC", "EDF"),
)

KIRKMAN_TRIPLE = (
    canonical_array("ABC", "FED"),
    canonical_array("ADF", "CEB"),
    canonical_array("ACF", "EBD"),
)


def four_special_pascals(params):
    """The four distinguished Pascals, chart-normalized.

    The first three share the column partition {A,E}|{C,D}|{B,F}; the
    fourth is the symmetry-breaking line the reconstruction needs.
    """
    return tuple(pascal_line(params, arr).with_coords() for arr in SPECIAL_ARRAYS)


def all_sixty(params):
    """All 60 Pascals with coordinates, checked pairwise distinct."""
    lines = [pascal_line(params, arr).with_coords() for arr in all_arrays()]
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if proportional(lines[i].line.form, lines[j].line.form):
                raise DegenerateConfiguration(
                    f"Pascals {lines[i].array.code} and {lines[j].array.code} coincide"
                )
    return lines


def to_json_records(lines):
    """Serialize PascalLines to the {"array", "s", "t"} record list."""
    return [
        {
            "array": pl.array.code,
            "s": format_rational(pl.coords[0]),
            "t": format_rational(pl.coords[1]),
        }
        for pl in (pl.with_coords() for pl in lines)
    ]


def _coord_determinant(params, arrays):
    rows = []
    for arr in arrays:
        s, t = line_coords(pascal_line(params, arr))
        rows.append([Fraction(1), s, t])
    return linalg.det(rows)


def steiner_concurrent(params):
    """Exact concurrency test for the Steiner triple of Pascals."""
    return _coord_determinant(params, STEINER_TRIPLE) == 0


def kirkman_concurrent(params):
    """Exact concurrency test for the Kirkman triple of Pascals."""
    return _coord_determinant(params, KIRKMAN_TRIPLE) == 0


def random_sextuple(rng=None, num_range=(-20, 20), max_den=10):
    """Random distinct rational parameters (numerators and denominators
    bounded to keep downstream big-integer growth modest)."""
    rng = rng or random.Random()
    values = set()
    while len(values) < 6:
        values.add(Fraction(rng.randint(num_range[0], num_range[1]), rng.randint(1, max_den)))
    values = sorted(values)
    rng.shuffle(values)
    return SextupleParams.from_iterable(values)


_ALL_ARRAYS = _compute_all_arrays()
