"""Acceptance suite: one test per criterion, each printing a PASS line.

All checks are exact (integer/rational equality); the only tolerances are
the stated runtime budgets.
"""

import random
import time
from fractions import Fraction

import pytest

from quartic_acm.algebra import Polynomial, monomial_basis, poly_parse
from quartic_acm.pfaffian import SkewPolyMatrix, determinant, pfaffian
from quartic_acm.picard import (
    CohomologyFlags,
    PicardLattice,
    euler_characteristic,
    extension_family_dim,
    reduced_hilbert_poly,
    stability_classify,
    watanabe_classify,
)
from quartic_acm.schemes import (
    PointScheme,
    ag_check,
    cayley_bacharach,
    classify_degree8,
    gorenstein_symmetry,
    hilbert_profile,
    ideal_dimension,
    make_cube_points,
    make_random_points,
    make_twisted_cubic_points,
)
from quartic_acm.surface import (
    QuarticSurface,
    build_phi_n8,
    pfaffian_rep_from_quadrics,
    smoothness_probe,
    verify_representation,
)

from conftest import random_homogeneous, random_invertible_int_matrix, random_skew_int


def report(number, text):
    print(f"ACCEPTANCE {number:2d} PASS: {text}")


def test_criterion_01_pfaffian_identity_suite():
    rng = random.Random(1)
    start = time.time()
    count = 0
    for _ in range(50):
        for n in (2, 4, 6, 8):
            m = random_skew_int(rng, n)
            pf = pfaffian(m)
            assert pf * pf == determinant(m)
            count += 1
    elapsed = time.time() - start
    assert count == 200
    assert elapsed < 10.0
    report(1, f"pf(M)^2 = det(M) for 200 random skew matrices in {elapsed:.2f}s")


def test_criterion_02_pfaffian_representation():
    rng = random.Random(2)
    for _ in range(50):
        qs = [
            Polynomial(
                {
                    e: Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                    for e in monomial_basis(2)
                }
            )
            for _ in range(6)
        ]
        f = qs[0] * qs[1] + qs[2] * qs[3] + qs[4] * qs[5]
        if f.is_zero():
            continue
        m = pfaffian_rep_from_quadrics(*qs)
        assert (pfaffian(m) - f).is_zero()
        check = verify_representation(m, QuarticSurface(f), "pfaffian")
        assert check.matches and check.scale == 1
    report(2, "50 random quadric sextuples: pf = q1q2 + q3q4 + q5q6, lambda = 1")


def test_criterion_03_n8_block_identity():
    rng = random.Random(3)
    for _ in range(10):
        a = [[random_homogeneous(rng, 1, -4, 4) for _ in range(4)] for _ in range(4)]
        signs = set()
        for _ in range(5):  # 5 random B per A: 50 pairs total
            b_upper = {
                (i, j): random_homogeneous(rng, 2, -4, 4)
                for i in range(4)
                for j in range(i + 1, 4)
            }
            result = build_phi_n8(SkewPolyMatrix(4, b_upper), a)
            assert not result.degenerate
            assert result.pf == result.det_a * result.sign
            signs.add(result.sign)
        assert len(signs) == 1  # sign constant across B for fixed A
    report(3, "50 random (B, A): pf([[B,A],[-A^T,0]]) = +/-det(A), sign B-independent")


def test_criterion_04_hilbert_profiles():
    cube = make_cube_points()
    tc8 = make_twisted_cubic_points(list(range(8)))
    for scheme in (cube, tc8):
        profile = hilbert_profile(scheme)
        assert profile.hf == (1, 4, 7, 8)
        assert profile.hvec == (1, 3, 3, 1)
    collinear = PointScheme(tuple((1, Fraction(t), 0, 0) for t in range(8)))
    assert hilbert_profile(collinear).hvec == (1,) * 8
    report(4, "cube and twisted-cubic schemes: hf (1,4,7,8), hvec (1,3,3,1); "
              "collinear hvec (1,)*8")


def test_criterion_05_ag_classifier():
    start = time.time()
    cube = make_cube_points()
    tc8 = make_twisted_cubic_points(list(range(8)))
    assert ag_check(cube).is_ag
    assert classify_degree8(cube).kind == "n4-type"
    assert ag_check(tc8).is_ag
    assert classify_degree8(tc8).kind == "n6-type"
    general = make_random_points(7, 8)
    verdict = ag_check(general)
    assert not verdict.is_ag and verdict.failed_condition == "hilbert-symmetry"
    assert classify_degree8(general).kind == "not-aG"
    coplanar = PointScheme(tuple((1, Fraction(t), Fraction(t * t), 0) for t in range(8)))
    assert classify_degree8(coplanar).kind == "plane-excluded"
    elapsed = time.time() - start
    assert elapsed < 5.0
    report(5, f"cube n4-type, twisted cubic n6-type, general not-aG, coplanar "
              f"plane-excluded in {elapsed:.2f}s")


def test_criterion_06_cayley_bacharach():
    cube = make_cube_points()
    assert ideal_dimension(cube, 2) == 3
    for k in range(8):
        assert ideal_dimension(cube.without(k), 2) == 3
    assert cayley_bacharach(cube, 2).holds
    general = make_random_points(7, 8)
    assert ideal_dimension(general, 2) == 2
    result = cayley_bacharach(general, 2)
    assert not result.holds
    k = general.points.index(result.offender)
    assert ideal_dimension(general.without(k), 2) == 3
    report(6, "CB holds on the cube scheme (all 8 removals keep dimension 3); "
              "fails 2 -> 3 on general points")


def test_criterion_07_riemann_roch_families():
    vanishing = CohomologyFlags(h0_D_minus_h_vanishes=True, h0_2h_minus_D_vanishes=True)
    for d_square, dh in ((0, 4), (2, 5), (4, 6)):
        lat = PicardLattice(((4, dh), (dh, d_square)), (1, 0))
        d = (0, 1)
        c1 = tuple(2 * a - 2 * b for a, b in zip(d, lat.h))
        assert euler_characteristic(lat, 1, c1, 0) == -6
        assert extension_family_dim(lat, d, vanishing) == 6
    report(7, "chi(O(2D-2h)) = -6 and family dimension 6 (P^5) for all three "
              "cases (Dh, D^2) in {(4,0), (5,2), (6,4)}")


def test_criterion_08_watanabe_table():
    effective = CohomologyFlags(D_effective=True)
    with_vanishing = CohomologyFlags(
        D_effective=True, h0_D_minus_h_vanishes=True, h0_2h_minus_D_vanishes=True
    )
    probes = [
        ((-2, 1), effective, "a"),
        ((-2, 2), effective, "a"),
        ((-2, 3), effective, "a"),
        ((0, 3), effective, "b"),
        ((0, 4), effective, "b"),
        ((2, 5), effective, "c"),
        ((4, 6), with_vanishing, "d"),
        ((4, 4), effective, "none"),
    ]
    for (d_square, dh), flags, expected in probes:
        lat = PicardLattice(((4, dh), (dh, d_square)), (1, 0))
        assert watanabe_classify(lat, (0, 1), flags) == expected
    report(8, "eight probe classes map to (a, a, a, b, b, c, d, none)")


def test_criterion_09_stability_trichotomy():
    for d_square, dh, kind in (
        (4, 6, "unstable"),
        (2, 5, "unstable"),
        (0, 4, "strictly_semistable"),
    ):
        lat = PicardLattice(((4, dh), (dh, d_square)), (1, 0))
        assert stability_classify(lat, (0, 1)).kind == kind
    rng = random.Random(9)
    for _ in range(100):
        a = rng.randint(-3, 4)
        s = rng.randint(-9, 9)
        u = 4 * a + s - 2 * a * a - s * a - 4
        lat = PicardLattice(((4, s), (s, 2 * u)), (1, 0))
        d = (a, 1)
        comp = lat.complement(d)
        assert lat.pair(d, comp) == 8
        p1 = reduced_hilbert_poly(lat, 1, d, 0)
        p2 = reduced_hilbert_poly(lat, 1, comp, 0)
        total = reduced_hilbert_poly(lat, 2, tuple(2 * x for x in lat.h), 8)
        assert tuple(x + y for x, y in zip(p1, p2)) == tuple(2 * x for x in total)
    report(9, "(6,4) and (5,2) unstable, (4,0) strictly semistable; reduced-"
              "polynomial additivity on 100 random lattices")


def test_criterion_10_smoothness_probe():
    fermat = QuarticSurface(poly_parse("x0^4+x1^4+x2^4+x3^4"))
    start = time.time()
    cert = smoothness_probe(fermat, [7, 11])
    assert cert.all_smooth
    singular = smoothness_probe(QuarticSurface(poly_parse("x0^2*x1^2")), [7])
    assert not singular.all_smooth
    (p, witness), = singular.witnesses()
    assert witness is not None
    start_big = time.time()
    big = smoothness_probe(fermat, [101])
    big_elapsed = time.time() - start_big
    assert big.all_smooth
    assert big_elapsed < 5.0
    report(10, f"Fermat smooth mod 7, 11, 101 ({big_elapsed:.2f}s at p=101); "
               f"x0^2*x1^2 singular at {witness}")


def test_criterion_11_property_suite():
    rng = random.Random(11)
    # pairing symmetry and chi(D) = chi(-D)
    for _ in range(50):
        s, u = rng.randint(-6, 6), rng.randint(-4, 4)
        lat = PicardLattice(((4, s), (s, 2 * u)), (1, 0))
        d1 = (rng.randint(-4, 4), rng.randint(-4, 4))
        d2 = (rng.randint(-4, 4), rng.randint(-4, 4))
        assert lat.pair(d1, d2) == lat.pair(d2, d1)
        assert euler_characteristic(lat, 1, d1, 0) == euler_characteristic(
            lat, 1, tuple(-x for x in d1), 0
        )
    # hvec palindrome <=> symmetry check
    for scheme in (
        make_cube_points(),
        make_twisted_cubic_points(list(range(8))),
        make_random_points(7, 8),
        PointScheme(tuple((1, Fraction(t), 0, 0) for t in range(8))),
    ):
        profile = hilbert_profile(scheme)
        palindrome = profile.hvec == profile.hvec[::-1]
        assert gorenstein_symmetry(profile, scheme.degree) == palindrome
    # coordinate-change invariance of scheme verdicts: 20 random changes
    targets = [
        (make_cube_points(), "n4-type"),
        (make_random_points(7, 8), "not-aG"),
    ]
    changes = 0
    for scheme, kind in targets:
        profile = hilbert_profile(scheme)
        for _ in range(10):
            m = random_invertible_int_matrix(rng)
            moved = scheme.apply_matrix(m)
            assert hilbert_profile(moved) == profile
            assert classify_degree8(moved).kind == kind
            changes += 1
    assert changes == 20
    report(11, "pairing symmetry, chi sign symmetry, palindrome equivalence and "
               "20 coordinate-change invariance checks")


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
