import random
from fractions import Fraction

import pytest

from jordannil.field import GF, QQ, PrimeField, UnsupportedFieldError


def test_inverse_examples():
    assert QQ.inv(QQ.of(1)) == 1
    assert GF(5).inv(2) == 3
    assert QQ.inv(Fraction(3, 4)) == Fraction(4, 3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)
    with pytest.raises(ZeroDivisionError):
        GF(7).inv(0)


def test_double_inverse_is_identity():
    for p in (2, 3, 5, 11):
        f = GF(p)
        for x in range(1, p):
            assert f.inv(f.inv(x)) == x
    rnd = random.Random(1)
    for _ in range(20):
        x = Fraction(rnd.randint(-30, 30), rnd.randint(1, 30))
        if x:
            assert QQ.inv(QQ.inv(x)) == x


def test_is_square_examples():
    assert GF(5).is_square(0)
    assert GF(5).is_square(-1)        # 2^2 = 4 = -1 mod 5
    assert not GF(3).is_square(-1)    # squares mod 3 are {0, 1}
    assert QQ.is_square(Fraction(4, 9))
    assert not QQ.is_square(Fraction(2))
    assert not QQ.is_square(Fraction(-4))
    assert QQ.is_square(QQ.zero)


def test_square_counts_odd_p():
    for p in (3, 5, 7, 11):
        f = GF(p)
        squares = [x for x in range(1, p) if f.is_square(x)]
        assert len(squares) == (p - 1) // 2


def test_square_class_representatives():
    assert GF(2).square_class_representatives() == [1]
    assert GF(3).square_class_representatives() == [1, 2]
    assert GF(5).square_class_representatives() == [1, 2]
    assert GF(7).square_class_representatives() == [1, 3]
    with pytest.raises(UnsupportedFieldError):
        QQ.square_class_representatives()


def test_enumerate():
    assert list(GF(2).elements()) == [0, 1]
    assert list(GF(3).elements()) == [0, 1, 2]
    assert len(list(GF(5).elements())) == 5
    with pytest.raises(UnsupportedFieldError):
        QQ.elements()


def test_field_axioms_random_triples():
    rnd = random.Random(42)
    fields = [GF(3), GF(7), QQ]
    for f in fields:
        for _ in range(50):
            if f.is_prime_field:
                x, y, z = (rnd.randrange(f.p) for _ in range(3))
            else:
                x, y, z = (Fraction(rnd.randint(-9, 9), rnd.randint(1, 9))
                           for _ in range(3))
            assert f.mul(x, f.mul(y, z)) == f.mul(f.mul(x, y), z)
            assert f.add(x, f.add(y, z)) == f.add(f.add(x, y), z)
            assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
            if y:
                assert f.mul(y, f.inv(y)) == f.one


def test_prime_check():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    assert GF(2).p == 2


def test_parse_render():
    assert QQ.parse("7/2") == Fraction(7, 2)
    assert QQ.parse("-3") == -3
    assert QQ.render(Fraction(-1, 2)) == "-1/2"
    assert GF(5).parse("7") == 2
    assert GF(5).parse("-1") == 4
    with pytest.raises(ValueError):
        QQ.parse("x")
    with pytest.raises(ValueError):
        GF(3).parse("1/2x")


def test_fraction_coercion_into_prime_field():
    assert GF(5).of(Fraction(1, 2)) == 3   # 2 * 3 = 6 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        GF(5).of(Fraction(1, 5))
