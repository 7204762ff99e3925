from fractions import Fraction

import pytest

from quartic_acm.schemes import (
    PointScheme,
    ag_check,
    cayley_bacharach,
    classify_degree8,
    gorenstein_symmetry,
    hilbert_function,
    hilbert_profile,
    ideal_dimension,
    make_cube_points,
    make_random_points,
    make_twisted_cubic_points,
    quadrics_through,
)

from conftest import random_invertible_int_matrix


def collinear8():
    return PointScheme(tuple((1, Fraction(t), 0, 0) for t in range(8)))


def coplanar8():
    # eight distinct points in the plane x3 = 0
    return PointScheme(
        tuple((1, Fraction(t), Fraction(t * t), 0) for t in range(8))
    )


class TestPointScheme:
    def test_normalization(self):
        s = PointScheme(((2, 4, 0, 6),))
        assert s.points[0] == (1, 2, 0, 3)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            PointScheme(((1, 0, 0, 0), (2, 0, 0, 0)))

    def test_zero_point_rejected(self):
        with pytest.raises(ValueError):
            PointScheme(((0, 0, 0, 0),))

    def test_json_round_trip(self, cube):
        assert PointScheme.from_json(cube.to_json()) == cube


class TestHilbertFunction:
    def test_single_point(self):
        s = PointScheme(((1, 2, 3, 4),))
        for t in range(4):
            assert hilbert_function(s, t) == 1

    def test_cube_profile_values(self, cube):
        assert hilbert_function(cube, 1) == 4
        assert hilbert_function(cube, 2) == 7
        assert hilbert_function(cube, 3) == 8

    def test_twisted_cubic_quadric_count(self, tc8):
        assert hilbert_function(tc8, 2) == 7
        assert ideal_dimension(tc8, 2) == 3

    def test_nondecreasing_and_stabilizes(self, cube, tc8):
        for s in (cube, tc8, collinear8()):
            values = [hilbert_function(s, t) for t in range(9)]
            assert values == sorted(values)
            assert all(v == s.degree for v in values[s.degree - 1:])


class TestIdealDimension:
    def test_cube_quadrics(self, cube):
        assert ideal_dimension(cube, 2) == 3

    def test_general_points(self):
        s = make_random_points(7, 8)
        assert ideal_dimension(s, 2) == 2

    def test_empty_scheme(self):
        assert ideal_dimension(PointScheme(()), 1) == 4


class TestHilbertProfile:
    def test_cube(self, cube):
        profile = hilbert_profile(cube)
        assert profile.hf == (1, 4, 7, 8)
        assert profile.hvec == (1, 3, 3, 1)
        assert profile.socle_degree == 3

    def test_collinear(self):
        profile = hilbert_profile(collinear8())
        assert profile.hvec == (1,) * 8
        assert profile.socle_degree == 7

    def test_general(self):
        profile = hilbert_profile(make_random_points(7, 8))
        assert profile.hvec == (1, 3, 4)

    def test_hvec_sums_to_degree(self, cube, tc8):
        for s in (cube, tc8, collinear8(), make_random_points(3, 6)):
            profile = hilbert_profile(s)
            assert sum(profile.hvec) == s.degree
            assert profile.hvec[0] == 1


class TestGorensteinSymmetry:
    def test_1331(self, cube):
        assert gorenstein_symmetry(hilbert_profile(cube), 8)

    def test_134_fails(self):
        assert not gorenstein_symmetry(hilbert_profile(make_random_points(7, 8)), 8)

    def test_12221(self):
        # five collinear-free points realizing the (1,2,2,2,1) shape:
        # 8 points on a plane conic
        s = PointScheme(tuple((1, Fraction(t), Fraction(t * t), 0) for t in range(8)))
        profile = hilbert_profile(s)
        assert profile.hvec == (1, 2, 2, 2, 1)
        assert gorenstein_symmetry(profile, 8)

    def test_palindrome_equivalence(self, cube, tc8):
        for s in (cube, tc8, collinear8(), coplanar8(), make_random_points(5, 8)):
            profile = hilbert_profile(s)
            palindrome = profile.hvec == profile.hvec[::-1]
            assert gorenstein_symmetry(profile, s.degree) == palindrome


class TestCayleyBacharach:
    def test_cube_quadrics_cb(self, cube):
        result = cayley_bacharach(cube, 2)
        assert result.holds
        assert result.base_dimension == 3
        for k in range(8):
            assert ideal_dimension(cube.without(k), 2) == 3

    def test_general_points_fail(self):
        s = make_random_points(7, 8)
        result = cayley_bacharach(s, 2)
        assert not result.holds
        assert result.offender in s.points
        k = s.points.index(result.offender)
        assert ideal_dimension(s.without(k), 2) == 3 > ideal_dimension(s, 2) == 2

    def test_single_point_m0(self):
        s = PointScheme(((1, 0, 0, 0),))
        assert not cayley_bacharach(s, 0).holds


class TestAgCheck:
    def test_cube_is_ag(self, cube):
        verdict = ag_check(cube)
        assert verdict.is_ag
        assert verdict.cb.twist == 2  # socle degree 3, CB twist sigma - 1

    def test_twisted_cubic_is_ag(self, tc8):
        assert ag_check(tc8).is_ag

    def test_general_not_ag_symmetry(self):
        verdict = ag_check(make_random_points(7, 8))
        assert not verdict.is_ag
        assert verdict.failed_condition == "hilbert-symmetry"

    def test_collinear_is_ag(self):
        # points on a line are aG (hypersurface case); hvec all ones
        assert ag_check(collinear8()).is_ag


class TestClassifyDegree8:
    def test_cube_n4(self, cube):
        verdict = classify_degree8(cube)
        assert verdict.kind == "n4-type"
        assert verdict.quadric_quotient[:2] == (8, 8)

    def test_twisted_cubic_n6(self, tc8):
        verdict = classify_degree8(tc8)
        assert verdict.kind == "n6-type"
        assert verdict.quadric_quotient == (10, 13, 16)  # grows like 3t + 1

    def test_general_not_ag(self):
        assert classify_degree8(make_random_points(7, 8)).kind == "not-aG"

    def test_coplanar_excluded(self):
        assert classify_degree8(coplanar8()).kind == "plane-excluded"

    def test_wrong_degree(self):
        with pytest.raises(ValueError):
            classify_degree8(make_random_points(1, 7))

    def test_permutation_invariance(self, cube, tc8):
        import random as _random

        rng = _random.Random(5)
        for s in (cube, tc8):
            pts = list(s.points)
            rng.shuffle(pts)
            assert classify_degree8(PointScheme(tuple(pts))).kind == classify_degree8(s).kind

    def test_quadrics_through_cube_are_split(self, cube):
        qs = quadrics_through(cube)
        assert len(qs) == 3
        for q in qs:
            for pt in cube.points:
                assert q.evaluate(pt) == 0


class TestCoordinateInvariance:
    def test_verdicts_stable_under_projective_change(self, rng, cube, tc8):
        general = make_random_points(7, 8)
        for s in (cube, tc8, general):
            base_profile = hilbert_profile(s)
            base_cb = cayley_bacharach(s, 2).holds
            base_kind = classify_degree8(s).kind
            for _ in range(3):
                m = random_invertible_int_matrix(rng)
                moved = s.apply_matrix(m)
                assert hilbert_profile(moved) == base_profile
                assert cayley_bacharach(moved, 2).holds == base_cb
                assert classify_degree8(moved).kind == base_kind


class TestConstructors:
    def test_cube_points(self, cube):
        assert cube.degree == 8
        assert (1, 1, 1, 1) in cube.points

    def test_twisted_cubic(self, tc8):
        assert tc8.points[2] == (1, 2, 4, 8)

    def test_duplicate_parameters_rejected(self):
        with pytest.raises(ValueError):
            make_twisted_cubic_points([0, 1, 1, 3, 4, 5, 6, 7])

    def test_random_reproducible(self):
        assert make_random_points(1, 8) == make_random_points(1, 8)
