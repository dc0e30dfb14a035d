import random
from itertools import product as iproduct

import pytest

from jordannil import cohomology as coh
from jordannil import linalg
from jordannil.algebra import Algebra, is_isomorphism, zero_algebra
from jordannil.field import GF, QQ, UnsupportedFieldError
from jordannil.orbits import (allowable_points, act_on_h2, automorphism_group,
                              grassmannian_points, h2_action_matrix,
                              orbit_of_point, orbit_representatives,
                              point_forms)


def test_aut_group_sizes():
    f3 = GF(3)
    assert len(automorphism_group(zero_algebra(f3, 2))) == 48   # |GL(2,3)|
    j22 = Algebra(f3, 2, {(1, 1, 2): 1})
    assert len(automorphism_group(j22)) == 6


def test_aut_group_matches_exhaustive_gl_scan():
    f3 = GF(3)
    j22 = Algebra(f3, 2, {(1, 1, 2): 1})
    brute = set()
    for flat in iproduct(range(3), repeat=4):
        m = (flat[:2], flat[2:])
        if linalg.invert(f3, m) is not None and is_isomorphism(j22, j22, m):
            brute.add(m)
    assert set(automorphism_group(j22).elements) == brute


def test_aut_contains_identity_and_preserves_products():
    f2 = GF(2)
    j33 = Algebra(f2, 3, {(1, 2, 3): 1})
    aut = automorphism_group(j33)
    assert linalg.identity(f2, 3) in aut
    for phi in aut:
        assert is_isomorphism(j33, j33, phi)


def test_aut_needs_prime_field():
    with pytest.raises(UnsupportedFieldError):
        automorphism_group(zero_algebra(QQ, 1))


def test_aut_j32_has_stated_shape():
    # images: phi(a) free with a11 != 0, phi(b) = a11²·b, phi(c) in span{b,c}
    f3 = GF(3)
    j32 = Algebra(f3, 3, {(1, 1, 2): 1})
    aut = automorphism_group(j32)
    assert len(aut) == 108   # 2 * 3 * 3 * 3 * 2 free parameters
    for m in aut:
        a11 = m[0][0]
        assert a11 != 0
        assert m[1] == (0, (a11 * a11) % 3, 0)
        assert m[2][0] == 0


def test_aut_j33_alpha_has_stated_shape():
    # phi(c) = a33·c with a33 determined by phi(a)² = phi(c) and
    # phi(b)² = alpha·phi(c); the cross products of the images vanish
    for p, alpha in ((3, 1), (3, 2), (5, 1), (5, 2)):
        fld = GF(p)
        j33 = Algebra(fld, 3, {(1, 1, 3): 1, (2, 2, 3): alpha})
        for m in automorphism_group(j33):
            assert m[2][0] == 0 and m[2][1] == 0
            a33 = m[2][2]
            assert a33 == (m[0][0] ** 2 + alpha * m[0][1] ** 2) % p
            assert (alpha * a33) % p == \
                (m[1][0] ** 2 + alpha * m[1][1] ** 2) % p
            assert (m[0][0] * m[1][0] + alpha * m[0][1] * m[1][1]) % p == 0


def test_aut_group_closed_under_product_and_inverse():
    f3 = GF(3)
    j22 = Algebra(f3, 2, {(1, 1, 2): 1})
    elems = set(automorphism_group(j22).elements)
    for m in elems:
        assert linalg.invert(f3, m) in elems
        for m2 in elems:
            assert linalg.mat_mul(f3, m, m2) in elems


def test_act_on_h2_examples():
    f3 = GF(3)
    j21 = zero_algebra(f3, 2)
    h2 = coh.h2_space(j21)
    v = (1, 2, 0)
    assert act_on_h2(h2, linalg.identity(f3, 2), v) == v
    # phi = diag(1,2) sends S(2,2) to 4*S(2,2) = S(2,2) mod 3
    phi = ((1, 0), (0, 2))
    assert act_on_h2(h2, phi, (0, 0, 1)) == (0, 0, 1)


def test_act_on_h2_rejects_non_automorphism():
    # the pull-back of a cocycle by a map outside Aut can leave Z²
    f3 = GF(3)
    j22 = Algebra(f3, 2, {(1, 1, 2): 1})
    h2 = coh.h2_space(j22)
    not_aut = ((1, 0), (1, 1))
    assert not is_isomorphism(j22, j22, not_aut)
    with pytest.raises(ValueError):
        act_on_h2(h2, not_aut, (1,))


def test_act_composition_law():
    rnd = random.Random(6)
    f3 = GF(3)
    j21 = zero_algebra(f3, 2)
    h2 = coh.h2_space(j21)
    aut = automorphism_group(j21).elements
    for _ in range(20):
        p = aut[rnd.randrange(len(aut))]
        q = aut[rnd.randrange(len(aut))]
        v = tuple(rnd.randrange(3) for _ in range(h2.dim))
        composed = linalg.mat_mul(f3, q, p)
        assert act_on_h2(h2, composed, v) == act_on_h2(h2, q, act_on_h2(h2, p, v))


def test_grassmannian_counts():
    assert len(list(grassmannian_points(2, 1, GF(2)))) == 3
    assert len(list(grassmannian_points(3, 2, GF(3)))) == 13
    assert len(list(grassmannian_points(4, 4, GF(5)))) == 1
    pts = list(grassmannian_points(3, 1, GF(3)))
    assert len(pts) == 13 and len(set(pts)) == 13
    for pt in pts:
        assert linalg.rank(GF(3), pt.coords) == 1


def test_grassmannian_rejects_bad_input():
    with pytest.raises(UnsupportedFieldError):
        list(grassmannian_points(2, 1, QQ))
    with pytest.raises(ValueError):
        list(grassmannian_points(2, 3, GF(2)))


def test_orbit_representative_examples():
    f3 = GF(3)
    reps = orbit_representatives(zero_algebra(f3, 1), 1)
    assert [pt.coords for pt in reps] == [((1,),)]
    j22 = Algebra(f3, 2, {(1, 1, 2): 1})
    reps = orbit_representatives(j22, 1)
    assert [pt.coords for pt in reps] == [((1,),)]   # H² is spanned by S(2,1)
    assert orbit_representatives(zero_algebra(f3, 1), 2) == []


def test_orbits_partition_allowable_points():
    f3 = GF(3)
    j21 = zero_algebra(f3, 2)
    h2 = coh.h2_space(j21)
    aut = automorphism_group(j21)
    allowable = set(allowable_points(j21, h2, 1))
    reps = orbit_representatives(j21, 1)
    union = set()
    total = 0
    for pt in reps:
        orbit = orbit_of_point(h2, aut, pt)
        assert orbit <= allowable           # U_r is stable under Aut
        assert len(aut) % len(orbit) == 0   # orbit-stabilizer
        assert not (orbit & union)
        union |= orbit
        total += len(orbit)
    assert union == allowable and total == len(allowable)


def test_allowable_stable_under_aut_random():
    rnd = random.Random(14)
    f2 = GF(2)
    j21 = zero_algebra(f2, 2)
    h2 = coh.h2_space(j21)
    aut = automorphism_group(j21).elements
    pts = allowable_points(j21, h2, 1)
    for pt in pts:
        phi = aut[rnd.randrange(len(aut))]
        m = h2_action_matrix(h2, phi)
        moved = [linalg.vec_mat(f2, row, m) for row in pt.coords]
        red, _ = linalg.rref(f2, moved)
        forms = [h2.lift(r) for r in red]
        rad = coh.radical(list(forms))
        assert rad.intersection(j21.centre()).is_zero()


def test_point_forms_lift():
    f2 = GF(2)
    j21 = zero_algebra(f2, 2)
    h2 = coh.h2_space(j21)
    reps = orbit_representatives(j21, 2)
    for pt in reps:
        forms = point_forms(h2, pt)
        assert len(forms) == 2
        for form in forms:
            assert h2.z2.contains(form)
