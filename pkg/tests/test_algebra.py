import random
from fractions import Fraction

import pytest

from jordannil import linalg, tables
from jordannil.algebra import Algebra, zero_algebra
from jordannil.field import GF, QQ


def j22(fld=QQ):
    return Algebra(fld, 2, {(1, 1, 2): 1})


def j34(fld=QQ):
    return Algebra(fld, 3, {(1, 1, 2): 1, (1, 2, 3): 1})


def test_product_examples():
    a = j22()
    assert a.product((1, 0), (1, 0)) == (0, 1)            # a² = b
    assert a.product((1, 2), (0, 0)) == (0, 0)
    b = j34()
    assert b.product((1, 1, 0), (1, 1, 0)) == (0, 1, 2)   # (a+b)² = b + 2c


def test_product_commutative_random():
    rnd = random.Random(5)
    for fld in (QQ, GF(3)):
        a = j34(fld)
        for _ in range(50):
            if fld.is_prime_field:
                x = tuple(rnd.randrange(3) for _ in range(3))
                y = tuple(rnd.randrange(3) for _ in range(3))
            else:
                x = tuple(Fraction(rnd.randint(-4, 4)) for _ in range(3))
                y = tuple(Fraction(rnd.randint(-4, 4)) for _ in range(3))
            assert a.product(x, y) == a.product(y, x)


def test_product_dimension_mismatch():
    with pytest.raises(ValueError):
        j22().product((1, 0, 0), (1, 0))


def test_constants_reject_bad_indices():
    with pytest.raises(ValueError):
        Algebra(QQ, 2, {(2, 1, 1): 1})   # needs i <= j
    with pytest.raises(ValueError):
        Algebra(QQ, 1, {(1, 1, 2): 1})


def test_jordan_catalog_and_edge_cases(all_catalog_entries):
    for case, entry in all_catalog_entries:
        a = entry.algebra(tables.entry_field(case))
        assert a.check_jordan(), entry.entry_id
    assert zero_algebra(QQ, 3).check_jordan()
    idem = Algebra(QQ, 2, {(1, 1, 1): 1})
    assert idem.check_jordan()
    assert idem.is_nilpotent() == (False, None)


def test_jordan_strategies_agree_f5():
    # linearization is equivalent to the pointwise identity when char ∤ 6
    rnd = random.Random(9)
    f5 = GF(5)
    for _ in range(60):
        consts = {}
        for i in range(1, 3):
            for j in range(i, 3):
                for k in range(1, 3):
                    c = rnd.randrange(5) if rnd.random() < 0.5 else 0
                    if c:
                        consts[(i, j, k)] = c
        a = Algebra(f5, 2, consts)
        assert a._jordan_pointwise() == a._jordan_linearized()


def test_jordan_pointwise_implies_linearized_f3():
    # over F_3 only one direction holds; the pointwise reading is the
    # definition and is what check_jordan uses
    rnd = random.Random(10)
    f3 = GF(3)
    seen_jordan = 0
    for _ in range(150):
        consts = {}
        for i in range(1, 3):
            for j in range(i, 3):
                for k in range(1, 3):
                    c = rnd.randrange(3) if rnd.random() < 0.6 else 0
                    if c:
                        consts[(i, j, k)] = c
        a = Algebra(f3, 2, consts)
        if a._jordan_pointwise():
            seen_jordan += 1
            assert a._jordan_linearized()
    assert seen_jordan > 5


def test_jordan_strategies_agree_on_catalog_over_f3():
    for entry in tables.catalog("closed"):
        a = entry.algebra(GF(3))
        assert a._jordan_pointwise() and a._jordan_linearized()


def test_associativity(catalog_algebra):
    assert catalog_algebra("closed", "J_{4,7}").is_associative()
    assert not catalog_algebra("closed", "J_{4,6}").is_associative()
    assert zero_algebra(QQ, 2).is_associative()


def test_centre_examples(catalog_algebra):
    assert zero_algebra(QQ, 2).centre().dim == 2
    c = j22().centre()
    assert c.dim == 1 and c.contains((0, 1))
    j32 = catalog_algebra("closed", "J_{3,2}")
    c = j32.centre()
    assert c.dim == 2 and c.contains((0, 1, 0)) and c.contains((0, 0, 1))


def test_lower_central_series_examples(catalog_algebra):
    z = zero_algebra(QQ, 2)
    assert [s.dim for s in z.lower_central_series()] == [2, 0]
    assert [s.dim for s in j34().lower_central_series()] == [3, 2, 1, 0]
    j411 = catalog_algebra("closed", "J_{4,11}")
    assert [s.dim for s in j411.lower_central_series()] == [4, 3, 2, 1, 0]


def test_is_nilpotent_examples():
    assert j22().is_nilpotent() == (True, 3)
    assert zero_algebra(QQ, 1).is_nilpotent() == (True, 2)
    assert Algebra(QQ, 2, {(1, 1, 1): 1}).is_nilpotent() == (False, None)


def test_change_basis_identity_and_scaling():
    a = j22()
    ident = linalg.identity(QQ, 2)
    assert a.change_basis(ident) == a
    scaled = a.change_basis(((Fraction(2), Fraction(0)),
                             (Fraction(0), Fraction(1))))
    assert scaled == Algebra(QQ, 2, {(1, 1, 2): 4})
    with pytest.raises(ValueError):
        a.change_basis(((1, 1), (1, 1)))


def test_change_basis_paper_example():
    # a -> a+b, b -> a-b, c -> 2c turns (ab=c) into (a²=c, b²=-c)
    a = Algebra(QQ, 3, {(1, 2, 3): 1})
    p = ((1, 1, 0), (1, -1, 0), (0, 0, 2))
    assert a.change_basis(p) == Algebra(QQ, 3, {(1, 1, 3): 1, (2, 2, 3): -1})


def test_change_basis_is_group_action():
    rnd = random.Random(3)
    f5 = GF(5)
    a = j34(f5)
    ident = linalg.identity(f5, 3)
    for _ in range(10):
        while True:
            p = tuple(tuple(rnd.randrange(5) for _ in range(3)) for _ in range(3))
            if linalg.invert(f5, p) is not None:
                break
        while True:
            q = tuple(tuple(rnd.randrange(5) for _ in range(3)) for _ in range(3))
            if linalg.invert(f5, q) is not None:
                break
        assert a.change_basis(ident) == a
        assert a.change_basis(p).change_basis(q) == \
            a.change_basis(linalg.mat_mul(f5, q, p))


def test_direct_sum_examples(catalog_algebra):
    assert j22().direct_sum(zero_algebra(QQ, 1)) == \
        catalog_algebra("closed", "J_{3,2}")
    assert zero_algebra(QQ, 1).direct_sum(zero_algebra(QQ, 1)) == \
        zero_algebra(QQ, 2)
    a = j34()
    assert a.direct_sum(zero_algebra(QQ, 0)) == a
    with pytest.raises(ValueError):
        j22().direct_sum(j22(GF(3)))


def test_fingerprint_examples(catalog_algebra):
    z = zero_algebra(QQ, 3)
    assert z.fingerprint() == (3, 3, (3, 0), 0, 2, True, 0)
    j46 = catalog_algebra("closed", "J_{4,6}")
    assert j46.fingerprint() == (4, 1, (4, 2, 1, 0), 2, 4, False, 1)
    assert catalog_algebra("closed", "J_{4,7}").fingerprint().is_associative


def test_fingerprint_invariant_under_change_basis(all_catalog_entries):
    rnd = random.Random(17)
    f3 = GF(3)
    for case, entry in all_catalog_entries:
        fld = GF(2) if case == "char2" else f3
        try:
            a = entry.algebra(fld)
        except ZeroDivisionError:
            continue
        fp = a.fingerprint()
        n = a.dim
        done = 0
        while done < 100:
            p = tuple(tuple(rnd.randrange(fld.p) for _ in range(n))
                      for _ in range(n))
            if linalg.invert(fld, p) is None:
                continue
            done += 1
            assert a.change_basis(p).fingerprint() == fp


def test_nilpotent_implies_nontrivial_centre(all_catalog_entries):
    for case, entry in all_catalog_entries:
        a = entry.algebra(tables.entry_field(case))
        nilpotent, _ = a.is_nilpotent()
        assert nilpotent and (a.dim == 0 or a.centre().dim >= 1)


def test_direct_sum_fingerprint_additive(catalog_algebra):
    a = catalog_algebra("closed", "J_{3,4}")
    b = j22()
    s = a.direct_sum(b)
    assert s.fingerprint().dim == a.dim + b.dim
    assert s.fingerprint().dim_centre == \
        a.fingerprint().dim_centre + b.fingerprint().dim_centre


def test_quotient_by_centre():
    a = j34()
    q = a.quotient_by_centre()           # J_{3,4}/span{c} is a² = b
    assert q == j22()


def test_zero_dim_algebra():
    a = zero_algebra(QQ, 0)
    assert a.is_nilpotent() == (True, 1)
    assert a.check_jordan() and a.is_associative()
