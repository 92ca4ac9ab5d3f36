"""Prime-field arithmetic with a canonical multiplicative generator.

Elements are stored by their canonical representative in ``[0, q)``.  Hot
loops elsewhere in the package work on plain ints and only wrap results in
:class:`FieldElement` at API boundaries.
"""

from __future__ import annotations

from typing import Iterator, Union

Q_MAX = 1 << 31


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


class Field:
    """The prime field F_q together with its smallest generator ``gamma``."""

    __slots__ = ("q", "gamma", "_order_factors")

    def __init__(self, q: int):
        q = int(q)
        if not 2 < q < Q_MAX:
            raise ValueError(f"q={q} out of range: need 2 < q < 2^31")
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        self.q = q
        self._order_factors = tuple(prime_factors(q - 1))
        self.gamma = next(g for g in range(2, q) if self.is_generator(g))

    def is_generator(self, g: int) -> bool:
        g %= self.q
        if g == 0:
            return False
        return all(pow(g, (self.q - 1) // p, self.q) != 1 for p in self._order_factors)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("Field", self.q))

    def __repr__(self):
        return f"Field(q={self.q}, gamma={self.gamma})"

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(v, self) for v in range(self.q))

    # int-level helpers used by the rest of the package

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.q)
        return pow(a, self.q - 2, self.q)

    def gamma_pow(self, e: int) -> int:
        return pow(self.gamma, e % (self.q - 1), self.q)


Operand = Union["FieldElement", int]


class FieldElement:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: Field):
        self.value = int(value) % field.q
        self.field = field

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"F_{self.field.q} vs F_{other.field.q}")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v, self.field)

    def __add__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inv(o))

    def __rtruediv__(self, other: Operand):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * self.field.inv(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return self._wrap(pow(self.value, e, self.field.q))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"
