"""Exact ground fields: the rationals and prime fields F_p.

A field object is the arithmetic context; elements are plain values
(`fractions.Fraction` for Q, ints in [0, p) for F_p).  Everything is exact,
there is no floating point anywhere in the package.
"""

from fractions import Fraction
from math import isqrt


class UnsupportedFieldError(ValueError):
    """Raised when an operation needs a field kind it does not support."""


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of Rationals and PrimeField."""

    kind = None           # "Q" or "Fp"
    characteristic = 0

    @property
    def is_prime_field(self):
        return self.kind == "Fp"

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc


class Rationals(Field):
    """The field Q with arbitrary-precision Fraction elements."""

    kind = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(x)

    def is_square(self, x):
        x = self.of(x)
        if x < 0:
            return False
        n, d = x.numerator, x.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def square_class_representatives(self):
        raise UnsupportedFieldError(
            "Q*/(Q*)^2 is infinite; pass square-class parameters explicitly")

    def elements(self):
        raise UnsupportedFieldError("cannot enumerate Q")

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc

    def render(self, x):
        return str(x)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The prime field F_p; elements are ints reduced to [0, p)."""

    kind = "Fp"

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, x, y):
        return (x + y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, self.p - 2, self.p)

    def is_square(self, x):
        x = x % self.p
        if x == 0 or self.p == 2:
            return True
        return pow(x, (self.p - 1) // 2, self.p) == 1

    def square_class_representatives(self):
        # {1} for p = 2, {1, q} with q the smallest non-residue for odd p
        if self.p == 2:
            return [1]
        for q in range(2, self.p):
            if not self.is_square(q):
                return [1, q]
        raise AssertionError("odd prime field without non-residue")

    def elements(self):
        return iter(range(self.p))

    def parse(self, text):
        try:
            return int(text.strip()) % self.p
        except ValueError as exc:
            raise ValueError(f"bad F_{self.p} literal {text!r}") from exc

    def render(self, x):
        return str(x % self.p)

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()

_gf_cache = {}


def GF(p):
    """The prime field F_p (cached per p)."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]
