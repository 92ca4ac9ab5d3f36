"""Dense univariate polynomials over a prime field."""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .gf import Field, FieldElement, FieldMismatchError

NEG_INF = float("-inf")

Scalar = Union[FieldElement, int]


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial; ``coeffs[d]`` is the coefficient of ``x**d``.

    The zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[Scalar], field: Field):
        q = field.q
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatchError(f"coefficient from F_{c.field.q} in F_{q}")
                vals.append(c.value)
            else:
                vals.append(int(c) % q)
        self.coeffs = _trim(vals)
        self.field = field

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls((), field)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls((1,), field)

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls((0, 1), field)

    @classmethod
    def monomial(cls, field: Field, d: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * d + [int(c)], field)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], field: Field) -> "Polynomial":
        """Monic polynomial prod (x - r) over the given multiset of roots."""
        q = field.q
        out = [1]
        for r in roots:
            r = int(r) % q
            nxt = [0] * (len(out) + 1)
            for d, c in enumerate(out):
                nxt[d + 1] = (nxt[d + 1] + c) % q
                nxt[d] = (nxt[d] - r * c) % q
            out = nxt
        return cls(out, field)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficient vector padded with zeros to ``length`` entries."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    # evaluation

    def eval_int(self, x: int) -> int:
        q = self.field.q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % q
        return acc

    def __call__(self, x: Scalar) -> FieldElement:
        if isinstance(x, FieldElement) and x.field != self.field:
            raise FieldMismatchError(f"evaluating F_{self.field.q} polynomial at F_{x.field.q} point")
        return FieldElement(self.eval_int(int(x)), self.field)

    def scale_argument(self, c: Scalar) -> "Polynomial":
        """The polynomial x -> f(c*x)."""
        q = self.field.q
        c = int(c) % q
        out, p = [], 1
        for a in self.coeffs:
            out.append(a * p % q)
            p = p * c % q
        return Polynomial(out, self.field)

    # ring operations

    def _check(self, other: "Polynomial"):
        if other.field != self.field:
            raise FieldMismatchError(f"F_{self.field.q} vs F_{other.field.q}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial((other,), self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        q = self.field.q
        return Polynomial([(x + (b[i] if i < len(b) else 0)) % q for i, x in enumerate(a)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.field)
        q = self.field.q
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial([c % q for c in out], self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = Polynomial.one(self.field), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "Polynomial"):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q = self.field.q
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = self.field.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db] * inv_lead % q
            quot[shift] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] = (rem[shift + i] - c * b) % q
        return Polynomial(quot, self.field), Polynomial(rem[:db], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def multiplicity(self, sigma: Scalar) -> int:
        """Multiplicity of ``sigma`` as a root, by repeated exact division."""
        if self.is_zero():
            raise ValueError("multiplicity undefined for the zero polynomial")
        lin = Polynomial((-int(sigma), 1), self.field)
        f, m = self, 0
        while True:
            quot, rem = divmod(f, lin)
            if not rem.is_zero():
                return m
            f, m = quot, m + 1

    # comparison / serialization

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.q))

    def sort_key(self, length: int = 0) -> tuple[int, ...]:
        return self.coeffs + (0,) * max(length - len(self.coeffs), 0)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[int], field: Field) -> "Polynomial":
        return cls(coeffs, field)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)
