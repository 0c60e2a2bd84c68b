"""Points and lines of the projective plane, encoded by binary quadratics.

A nonzero quadratic G = (g0, g1, g2) does double duty: it represents the
point [g0, g1, g2] and the line <g2, -2*g1, g0> (homogeneous coordinates
on P^2; a point [z0,z1,z2] lies on a line <l0,l1,l2> when the dot product
vanishes).  With that encoding the basic incidence operations are
transvectants:

    point on line      <->  (G, H)_2 = 0
    join of two points  =   (G, H)_1
    meet of two lines   =   (G, H)_1

The fixed conic is z1^2 = z0*z2, i.e. the forms that are perfect squares
of linear forms; the rational point with parameter t is [1, t, t^2].  The
line with the same coefficients as a point's form is its polar with
respect to that conic.

Representatives are never normalized internally; every predicate here is
scale-invariant and normalization happens only at the I/O boundary.
"""

from dataclasses import dataclass

from .errors import CoincidentLines, CoincidentPoints
from .forms import BinaryForm, transvectant
from .rationals import rational

POINT = "point"
LINE = "line"


@dataclass(frozen=True)
class ProjQuadratic:
    """A nonzero binary quadratic tagged with its intended role.

    The tag is metadata only; it guards against category slips in the
    API and plays no part in the arithmetic.
    """

    form: BinaryForm
    role: str

    def __post_init__(self):
        if self.form.degree != 2:
            raise ValueError("projective elements are quadratic forms")
        if self.form.is_zero():
            raise ValueError("the zero form represents nothing")
        if self.role not in (POINT, LINE):
            raise ValueError(f"unknown role {self.role!r}")

    def point_triple(self):
        """Homogeneous point coordinates [z0, z1, z2]."""
        return self.form.coeffs

    def line_triple(self):
        """Homogeneous line coordinates <g2, -2*g1, g0>."""
        g0, g1, g2 = self.form.coeffs
        return (g2, -2 * g1, g0)


def point(form):
    return ProjQuadratic(form, POINT)


def line(form):
    return ProjQuadratic(form, LINE)


def incident(pt, ln):
    """Exact incidence test via the order-2 pairing."""
    return transvectant(pt.form, ln.form, 2).is_zero()


def join(p, q):
    """The line through two distinct points."""
    t = transvectant(p.form, q.form, 1)
    if t.is_zero():
        raise CoincidentPoints("cannot join a point to itself")
    return ProjQuadratic(t, LINE)


def meet(g, h):
    """The intersection point of two distinct lines."""
    t = transvectant(g.form, h.form, 1)
    if t.is_zero():
        raise CoincidentLines("cannot intersect a line with itself")
    return ProjQuadratic(t, POINT)


def on_conic(element):
    """True iff the underlying form is a scalar times a perfect square."""
    return transvectant(element.form, element.form, 2).is_zero()


def conic_point(t):
    """The conic point [1, t, t^2], i.e. the square of x1 + t*x2."""
    t = rational(t)
    return ProjQuadratic(BinaryForm((1, t, t * t)), POINT)


def polar(pt):
    """The polar line of a point with respect to the fixed conic.

    Same underlying form, retagged; a point lies on its own polar exactly
    when it lies on the conic.
    """
    return ProjQuadratic(pt.form, LINE)
