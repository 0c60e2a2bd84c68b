from fractions import Fraction
from itertools import permutations

import pytest

from pascals import (
    BinaryForm,
    ChartDegenerate,
    DegenerateConfiguration,
    InvalidLabels,
    SextupleParams,
    all_arrays,
    all_sixty,
    canonical_array,
    crosshair_points,
    four_special_pascals,
    incident,
    kirkman_concurrent,
    line,
    line_coords,
    meet,
    multiply,
    pascal_line,
    proportional,
    random_sextuple,
    steiner_concurrent,
    transvectant,
)
from pascals.hexagram import KIRKMAN_TRIPLE, SPECIAL_ARRAYS, STEINER_TRIPLE, LABELS

from conftest import PAPER_COORDS


# -- arrays ---------------------------------------------------------------


def test_row_and_column_shuffles_share_a_canonical_form():
    base = canonical_array("ABC", "FED")
    assert canonical_array("FED", "ABC") == base
    assert canonical_array("EDF", "BCA") == base


def test_exactly_sixty_canonical_arrays():
    seen = {canonical_array(p[:3], p[3:]) for p in permutations(LABELS)}
    assert len(seen) == 60
    assert len(all_arrays()) == 60
    for arr in all_arrays():
        assert len(arr.shuffles()) == 12


def test_invalid_labels_rejected():
    with pytest.raises(InvalidLabels):
        canonical_array("ABC", "DEA")
    with pytest.raises(InvalidLabels):
        canonical_array("ABC", "DEG")


def test_repeated_parameter_rejected():
    with pytest.raises(DegenerateConfiguration):
        SextupleParams(1, 1, 2, 3, 4, 5)


# -- single Pascal lines ---------------------------------------------------


def test_paper_pascal_line_l1(paper_params):
    pl = pascal_line(paper_params, canonical_array("ADB", "ECF"))
    assert proportional(pl.line.form, BinaryForm((Fraction(5, 36), Fraction(37, 72), 1)))


def test_paper_pascal_line_lstar(paper_params):
    pl = pascal_line(paper_params, canonical_array("ABC", "FDE"))
    assert proportional(pl.line.form, BinaryForm((Fraction(7, 74), Fraction(21, 148), 1)))


def test_all_shuffles_give_proportional_lines(paper_params):
    arr = canonical_array("ADB", "ECF")
    reference = pascal_line(paper_params, arr).line.form
    for top, bottom in arr.shuffles():
        from pascals.hexagram import PascalArray

        shuffled = PascalArray(top, bottom)  # bypass canonicalization on purpose
        assert proportional(pascal_line(paper_params, shuffled).line.form, reference)


def test_crosshairs_are_on_the_line(paper_params, rng):
    draws = [paper_params] + [random_sextuple(rng) for _ in range(3)]
    for params in draws:
        for arr in all_arrays()[:12]:
            pl = pascal_line(params, arr)
            for x in crosshair_points(params, arr):
                assert incident(x, pl.line)


# -- the four special Pascals ----------------------------------------------


def test_four_special_pascals_paper_values(paper_params):
    lines = four_special_pascals(paper_params)
    for key, pl in zip(("l1", "l2", "l3", "lstar"), lines):
        assert pl.coords == PAPER_COORDS[key]


def test_line_coords_normalization(paper_params):
    lam1 = four_special_pascals(paper_params)[0]
    s, t = lam1.coords
    assert (s, t) == (Fraction(-37, 36), Fraction(5, 36))
    # scaling the form does not change the chart coordinates
    scaled = line(lam1.line.form * Fraction(3))
    assert line_coords(scaled) == (s, t)


def test_line_coords_chart_degenerate():
    with pytest.raises(ChartDegenerate):
        line_coords(line(BinaryForm((0, 1, 0))))


def test_partition_swap_fixes_first_three(rng):
    for _ in range(20):
        params = random_sextuple(rng)
        base = four_special_pascals(params)
        swapped = four_special_pascals(params.swapped(("a", "e"), ("c", "d"), ("b", "f")))
        assert [pl.coords for pl in swapped[:3]] == [pl.coords for pl in base[:3]]


def test_symmetries_that_permute_the_special_pascals(rng):
    for _ in range(20):
        params = random_sextuple(rng)
        base = [pl.coords for pl in four_special_pascals(params)]
        sw = [pl.coords for pl in four_special_pascals(params.swapped(("a", "f"), ("b", "e"), ("c", "d")))]
        assert sw[0] == base[0] and sw[3] == base[3]
        assert sw[1] == base[2] and sw[2] == base[1]
        sw = [pl.coords for pl in four_special_pascals(params.swapped(("a", "d"), ("b", "f"), ("c", "e")))]
        assert sw[1] == base[1] and sw[3] == base[3]
        assert sw[0] == base[2] and sw[2] == base[0]


def test_q_points_match_chord_transvectants(rng):
    for _ in range(10):
        params = random_sextuple(rng)
        l1, l2, l3, _ = four_special_pascals(params)

        def chord(u, v):
            return multiply(
                BinaryForm((1, params.value(u))), BinaryForm((1, params.value(v)))
            )

        pi1 = transvectant(chord("a", "b"), chord("e", "f"), 1)
        pi2 = transvectant(chord("a", "c"), chord("d", "e"), 1)
        pi3 = transvectant(chord("b", "c"), chord("d", "f"), 1)
        assert proportional(meet(l2.line, l3.line).form, pi1)
        assert proportional(meet(l3.line, l1.line).form, pi2)
        assert proportional(meet(l1.line, l2.line).form, pi3)


# -- all sixty --------------------------------------------------------------


def test_sixty_distinct_on_paper_params(paper_params):
    lines = all_sixty(paper_params)
    assert len(lines) == 60
    codes = [pl.array.code for pl in lines]
    assert codes == sorted(codes)
    for pl in lines:
        assert pl.coords is not None


def test_sixty_distinct_on_random_draws(rng):
    done = skipped = 0
    while done < 3:
        params = random_sextuple(rng)
        try:
            assert len(all_sixty(params)) == 60
        except DegenerateConfiguration:
            skipped += 1
            assert skipped < 20
            continue
        done += 1


# -- classical concurrences --------------------------------------------------


def test_steiner_and_kirkman_on_paper_params(paper_params):
    assert steiner_concurrent(paper_params)
    assert kirkman_concurrent(paper_params)


def test_steiner_and_kirkman_on_random_draws(rng):
    for _ in range(25):
        params = random_sextuple(rng)
        assert steiner_concurrent(params)
        assert kirkman_concurrent(params)


def test_generic_triple_is_not_concurrent(paper_params):
    # the three partition-sharing special Pascals bound a genuine triangle
    from pascals import linalg

    rows = []
    for arr in SPECIAL_ARRAYS[:3]:
        s, t = line_coords(pascal_line(paper_params, arr))
        rows.append([Fraction(1), s, t])
    assert linalg.det(rows) != 0


def test_named_triples_are_distinct_arrays():
    assert len(set(STEINER_TRIPLE)) == 3
    assert len(set(KIRKMAN_TRIPLE)) == 3
    assert set(STEINER_TRIPLE) != set(KIRKMAN_TRIPLE)
