"""Recovering the six conic parameters from the four special Pascals.

The algorithm runs in two stages, all in exact rational arithmetic.

Stage 1 (chords).  The three partition-sharing Pascals l1, l2, l3 meet
pairwise in the triangle points

    mu1 = (l2, l3)_1,   mu2 = (l3, l1)_1,   mu3 = (l1, l2)_1,

which represent AB^EF, AC^DE and BC^DF respectively.  The quadratic-valued
operation

    psi(U, V, W) = 6*(U, V*W)_2 - U*(V, W)_2
                 = 3*[(U, V)_2 * W + (U, W)_2 * V - (V, W)_2 * U]

applied to the triangle points yields, up to scalar, the chords of the
shared column partition:

    psi(mu3, mu1, mu2) ~ ax*ex,  psi(mu1, mu2, mu3) ~ cx*dx,
    psi(mu2, mu3, mu1) ~ bx*fx,

where tx = x1 + t*x2 is the tangent-parameter linear form of a conic
point.  psi is linear in each argument, so the unknown scalings of the mu
representatives are harmless.  The argument orders for the CD and BF
chords follow from the AE case by the letter substitutions (a c)(e d) and
(a b)(e f); they are pinned down by the oracle tests and the symbolic
identity suite rather than trusted.

Stage 2 (labels).  The fourth Pascal lstar passes through AD^BF, BE^CD
and AE^CF, which ties each chord endpoint to a specific letter.  For the
letter a: the line from A to the triangle point mu2 is AC, and the line
from A to the lstar crosshair (lstar, bf-chord)_1 is AD, so the chord CD
must be proportional to (mu2, ax)_1 * ((lstar, bf)_1, ax)_1.  With

    M = 1/2*(U, W)_1*V + 1/2*(U, V)_1*W        (a quartic)
    N = -1/2*(U, V*W)_2 - 1/6*U*(V, W)_2       (a quadratic)

the condition (U, (V, ax)_1 (W, ax)_1)_1 = 0 rewrites as
(M, ax^2)_2 + (N, ax^2)_1 = 0, whose Cayley coefficients are three
quadratic equations in the parameter a:

        [ m2 - n1      n0 - 2*m1    m0      ] [ 1  ]
        [ 2*m3 - n2    -4*m2        2*m1+n0 ] [ a  ]  =  0.
        [ m4           -2*m3 - n2   m2 + n1 ] [ a^2]

Two rows of this rank-2 system determine a as a ratio of 2x2 minors.  The
same template with (U, V, W) = (ae, mu1, (lstar, cd)_1) gives b, and with
(bf, mu3, (lstar, ae)_1) gives c; the partner letters e, f, d then fall
out of exact division of the chords by ax, bx, cx.  A final round trip
through the forward map certifies the answer, so a quadruple of lines
that no sextuple realizes can never produce a silent wrong result.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DegeneratePencil,
    Inconsistent,
    NotDivisible,
    RankDeficient,
    RoundTripFailed,
    VanishingPhi,
    ZeroDenominator,
    DegenerateConfiguration,
)
from .forms import BinaryForm, divide_exact, multiply, proportional, transvectant
from .hexagram import PascalLine, SextupleParams, four_special_pascals
from .plane import LINE, ProjQuadratic


def _form_of(line_like):
    if isinstance(line_like, PascalLine):
        return line_like.line.form
    if isinstance(line_like, ProjQuadratic):
        return line_like.form
    if isinstance(line_like, BinaryForm):
        return line_like
    raise TypeError(f"expected a line, got {type(line_like).__name__}")


def line_from_coords(s, t):
    """The line <1, s, t> as the quadratic (t, -s/2, 1)."""
    s, t = Fraction(s), Fraction(t)
    return ProjQuadratic(BinaryForm((t, -s / 2, 1)), LINE)


@dataclass(frozen=True)
class ChordTriple:
    """Quadratics proportional to the chords AE, CD, BF."""

    lam_ae: ProjQuadratic
    lam_cd: ProjQuadratic
    lam_bf: ProjQuadratic


@dataclass(frozen=True)
class ReconstructionResult:
    params: SextupleParams
    diagnostics: dict


def psi(u, v, w):
    """The chord-recovery operation 6*(U, V*W)_2 - U*(V, W)_2."""
    return transvectant(u, multiply(v, w), 2) * Fraction(6) - multiply(u, transvectant(v, w, 2))


def q_point_forms(l1, l2, l3):
    """Pairwise intersections of three lines: (mu1, mu2, mu3).

    mu_i is the vertex opposite l_i; raises DegeneratePencil when the
    lines are coincident or concurrent.
    """
    f1, f2, f3 = (_form_of(l) for l in (l1, l2, l3))
    pairs = ((f1, f2), (f1, f3), (f2, f3))
    if any(proportional(a, b) for a, b in pairs):
        raise DegeneratePencil("two of the three lines coincide")
    mu1 = transvectant(f2, f3, 1)
    mu2 = transvectant(f3, f1, 1)
    mu3 = transvectant(f1, f2, 1)
    mus = (mu1, mu2, mu3)
    for i in range(3):
        for j in range(i + 1, 3):
            if proportional(mus[i], mus[j]):
                raise DegeneratePencil("the three lines are concurrent")
    return mus


def stage1_chords(l1, l2, l3):
    """Recover the three chords from the partition-sharing Pascals."""
    mu1, mu2, mu3 = q_point_forms(l1, l2, l3)
    chords = []
    for args in ((mu3, mu1, mu2), (mu1, mu2, mu3), (mu2, mu3, mu1)):
        chord = psi(*args)
        if chord.is_zero():
            raise VanishingPhi("chord recovery returned the zero form")
        chords.append(ProjQuadratic(chord, LINE))
    return ChordTriple(*chords)


def stage2_M_N(u, v, w):
    """The forms packaging (U, V, W) for the parameter equations."""
    half = Fraction(1, 2)
    m = transvectant(u, w, 1) * v * half + transvectant(u, v, 1) * w * half
    n = transvectant(u, multiply(v, w), 2) * -half - multiply(u, transvectant(v, w, 2)) * Fraction(1, 6)
    return m, n


def _z_matrix(m, n):
    m0, m1, m2, m3, m4 = m.coeffs
    n0, n1, n2 = n.coeffs
    return [
        [m2 - n1, n0 - 2 * m1, m0],
        [2 * m3 - n2, -4 * m2, 2 * m1 + n0],
        [m4, -2 * m3 - n2, m2 + n1],
    ]


_ROW_PAIRS = ((0, 1), (0, 2), (1, 2))


def solve_parameter(u, v, w):
    """Solve the 3x3 parameter system built from (U, V, W).

    Returns (value, diagnostics) where diagnostics records the row pair
    used (1-based) and the verified rank.  The solve takes the first row
    pair with a nonzero 2x2 denominator, cross-checks the value against
    the other usable pairs, and certifies the kernel and rank before
    returning.
    """
    m, n = stage2_M_N(_form_of(u), _form_of(v), _form_of(w))
    z = _z_matrix(m, n)
    zrank = linalg.rank(z)
    if zrank < 2:
        raise RankDeficient(f"parameter system has rank {zrank}")
    solution = None
    used = None
    for i, j in _ROW_PAIRS:
        denom = z[i][1] * z[j][2] - z[j][1] * z[i][2]
        if denom == 0:
            continue
        x = -(z[i][0] * z[j][2] - z[j][0] * z[i][2]) / denom
        x_sq = (z[i][0] * z[j][1] - z[j][0] * z[i][1]) / denom
        if solution is None:
            if x_sq != x * x:
                raise Inconsistent("row pair solves to incompatible (x, x^2)")
            solution, used = x, (i, j)
        elif x != solution:
            raise Inconsistent("row pairs disagree on the parameter value")
    if solution is None:
        raise ZeroDenominator("all row pairs have a vanishing denominator")
    for row in z:
        if row[0] + row[1] * solution + row[2] * solution * solution != 0:
            raise Inconsistent("solved value is not in the kernel of the system")
    return solution, {"row_pair": (used[0] + 1, used[1] + 1), "rank": zrank}


def _endpoint_from_division(chord_form, known_param, what):
    quotient = divide_exact(chord_form, BinaryForm((Fraction(1), known_param)))
    l0, l1 = quotient.coeffs
    if l0 == 0:
        raise Inconsistent(f"recovered endpoint of {what} lies at infinity")
    return l1 / l0


def reconstruct(l1, l2, l3, lstar):
    """Invert the forward map on the four special Pascals.

    Returns the labelled sextuple (not merely the set of points); the
    fourth line is what makes the labelling unambiguous.  Raises one of
    the structured errors whenever the inputs do not arise from a
    sextuple of distinct conic points.
    """
    f1, f2, f3, fstar = (_form_of(l) for l in (l1, l2, l3, lstar))
    mu1, mu2, mu3 = q_point_forms(f1, f2, f3)
    chords = stage1_chords(f1, f2, f3)
    ae, cd, bf = chords.lam_ae.form, chords.lam_cd.form, chords.lam_bf.form
    for chord in (ae, cd, bf):
        if proportional(fstar, chord):
            raise DegeneratePencil("fourth line coincides with a recovered chord")

    diagnostics = {}
    letter_table = (
        ("a", cd, mu2, bf),
        ("b", ae, mu1, cd),
        ("c", bf, mu3, ae),
    )
    solved = {}
    for letter, u, v, other_chord in letter_table:
        w = transvectant(fstar, other_chord, 1)
        if w.is_zero():
            raise DegeneratePencil("fourth line coincides with a recovered chord")
        solved[letter], diagnostics[letter] = solve_parameter(u, v, w)

    try:
        e = _endpoint_from_division(ae, solved["a"], "chord AE")
        f = _endpoint_from_division(bf, solved["b"], "chord BF")
        d = _endpoint_from_division(cd, solved["c"], "chord CD")
    except NotDivisible as exc:
        raise Inconsistent(f"recovered parameter does not split its chord: {exc}") from exc

    try:
        params = SextupleParams(solved["a"], solved["b"], solved["c"], d, e, f)
    except DegenerateConfiguration as exc:
        raise RoundTripFailed(f"recovered parameters collide: {exc}") from exc

    replayed = four_special_pascals(params)
    for recovered, given in zip(replayed, (f1, f2, f3, fstar)):
        if not proportional(recovered.line.form, given):
            raise RoundTripFailed("recovered sextuple does not reproduce the input lines")
    return ReconstructionResult(params, diagnostics)


def reconstruct_from_coords(coords):
    """Reconstruct from chart coordinates {(s_i, t_i)} of the four lines.

    ``coords`` is a sequence of four (s, t) pairs ordered (l1, l2, l3,
    lstar).
    """
    lines = [line_from_coords(s, t) for s, t in coords]
    return reconstruct(*lines)
