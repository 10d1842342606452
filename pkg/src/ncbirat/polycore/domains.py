"""Coefficient domains: the integers, the rationals and prime fields.

Values are plain Python objects (``int``, ``fractions.Fraction`` and
:class:`ModInt`) so that every layer above can use ordinary arithmetic
operators.  Mixing a :class:`ModInt` with a ``Fraction`` raises ``TypeError``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class DomainError(ValueError):
    """Raised for coefficient-domain mismatches or unsupported conversions."""


class BadReduction(DomainError):
    """A rational number cannot be reduced modulo ``p`` (``p`` divides its denominator)."""

    def __init__(self, value, p):
        super().__init__(f"cannot reduce {value} modulo {p}")
        self.value = value
        self.p = p


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class ModInt:
    """A residue modulo a prime, stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise DomainError(f"mixed residues mod {self.p} and mod {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "ModInt":
        if self.v == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return ModInt(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * ModInt(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Domain:
    name = "?"
    characteristic = 0
    is_field = False

    def convert(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def to_fraction(self, x) -> Fraction:
        """Canonical rational representative (residues map to ``[0, p)``)."""
        return Fraction(int(x)) if isinstance(x, ModInt) else Fraction(x)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Domain) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class IntegerRing(Domain):
    name = "ZZ"

    def convert(self, x):
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise DomainError(f"{x!r} is not an integer")

    def contains(self, x):
        return isinstance(x, int)


class RationalField(Domain):
    name = "QQ"
    is_field = True

    def convert(self, x):
        if isinstance(x, ModInt):
            raise DomainError("cannot lift a residue to QQ")
        return Fraction(x)

    def contains(self, x):
        return isinstance(x, Fraction)


class PrimeField(Domain):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def convert(self, x):
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise DomainError(f"residue mod {x.p} in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise BadReduction(x, self.p)
            return ModInt(x.numerator, self.p) / x.denominator
        return ModInt(int(x), self.p)

    def contains(self, x):
        return isinstance(x, ModInt) and x.p == self.p


ZZ = IntegerRing()
QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_from_name(name: str) -> Domain:
    if name == "ZZ":
        return ZZ
    if name == "QQ":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise DomainError(f"unknown domain {name!r}")


def field_for_characteristic(char: int) -> Domain:
    return QQ if char == 0 else GF(char)
