from fractions import Fraction

import pytest

from pascals import (
    BinaryForm,
    CoincidentLines,
    CoincidentPoints,
    conic_point,
    incident,
    join,
    line,
    meet,
    on_conic,
    point,
    polar,
    proportional,
    transvectant,
)

from conftest import random_fraction


def _random_point(rng):
    while True:
        coeffs = [random_fraction(rng, -9, 9, 4) for _ in range(3)]
        if any(coeffs):
            return point(BinaryForm(coeffs))


def test_incidence_by_order_two_pairing():
    p = point(BinaryForm((1, 0, 0)))  # [1, 0, 0]
    ln = line(BinaryForm((0, 0, 1)))  # <1, 0, 0>, the locus z0 = 0
    assert not incident(p, ln)
    assert transvectant(p.form, ln.form, 2) == BinaryForm((1,))


def test_point_on_own_polar_iff_on_conic(rng):
    onconic = conic_point(Fraction(5, 3))
    assert incident(onconic, polar(onconic))
    offconic = point(BinaryForm((0, Fraction(1, 2), 0)))  # [0, 1, 0]
    assert not on_conic(offconic)
    assert not incident(offconic, polar(offconic))


def test_join_of_conic_points_is_the_chord():
    a, b = Fraction(7), Fraction(-3)
    chord = join(conic_point(a), conic_point(b))
    assert proportional(chord.form, BinaryForm((1, 2, -21)))


def test_join_is_incident_with_both_points(rng):
    for _ in range(30):
        p, q = _random_point(rng), _random_point(rng)
        if proportional(p.form, q.form):
            continue
        ln = join(p, q)
        assert incident(p, ln) and incident(q, ln)


def test_meet_of_coordinate_lines():
    # <1,0,0> is the form (0,0,1); <0,1,0> is the form (0,-1/2,0)
    l1 = line(BinaryForm((0, 0, 1)))
    l2 = line(BinaryForm((0, Fraction(-1, 2), 0)))
    assert l1.line_triple() == (1, 0, 0)
    assert l2.line_triple() == (0, 1, 0)
    pt = meet(l1, l2)
    assert proportional(pt.form, BinaryForm((0, 0, 1)))  # the point [0, 0, 1]


def test_two_chords_through_a_point_meet_there(rng):
    for _ in range(20):
        p, q, r = (_random_point(rng) for _ in range(3))
        if proportional(p.form, q.form) or proportional(p.form, r.form):
            continue
        lpq, lpr = join(p, q), join(p, r)
        if proportional(lpq.form, lpr.form):
            continue  # collinear draw
        assert proportional(meet(lpq, lpr).form, p.form)


def test_join_and_meet_reject_coincident_inputs():
    p = conic_point(2)
    with pytest.raises(CoincidentPoints):
        join(p, point(p.form * Fraction(3)))
    l1 = polar(p)
    with pytest.raises(CoincidentLines):
        meet(l1, line(l1.form * Fraction(-2)))


def test_on_conic_examples():
    assert on_conic(point(BinaryForm((1, Fraction(22, 7), Fraction(484, 49)))))
    assert not on_conic(point(BinaryForm((0, Fraction(1, 2), 0))))
    assert on_conic(point(BinaryForm((0, 0, 1))))


def test_conic_points_and_polars(rng):
    for _ in range(100):
        t = random_fraction(rng)
        p = conic_point(t)
        assert p.point_triple() == (1, t, t * t)
        assert on_conic(p)
        assert incident(p, polar(p))


def test_polar_retag_is_involutive():
    p = conic_point(Fraction(0))
    ln = polar(p)
    assert ln.line_triple() == (0, 0, 1)  # tangent z2 = 0 at [1, 0, 0]
    assert point(ln.form).form == p.form


def test_join_of_distinct_conic_points_never_zero(rng):
    for _ in range(50):
        t1, t2 = random_fraction(rng), random_fraction(rng)
        if t1 == t2:
            continue
        assert not join(conic_point(t1), conic_point(t2)).form.is_zero()
