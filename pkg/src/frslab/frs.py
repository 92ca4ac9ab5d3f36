"""Folded Reed-Solomon codes over prime fields.

Coordinates are 0-based throughout: symbol ``i`` of ``encode(f)`` is
``(f(a_i), f(g a_i), ..., f(g^(s-1) a_i))`` where ``g`` is the field's
generator.  Words are tuples of ``n`` tuples of ``s`` ints.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .gf import Field
from .linalg import ENUMERATION_CAP, EnumerationCapError
from .poly import Polynomial

Word = tuple[tuple[int, ...], ...]
Rational = Fraction

# codebooks up to this many field entries are cached on the code object
_CODEBOOK_CACHE_ENTRIES = 1 << 24
_CHUNK = 1 << 15


class FrsCode:
    """FRS code with parameters (q, k, s, n) and evaluation points ``alphas``.

    By default ``alphas[i] = gamma**(s*i)`` so the folding orbits tile an
    initial segment of the generator's cycle.
    """

    def __init__(self, q: Union[int, Field], k: int, s: int, n: int, alphas: Optional[Sequence[int]] = None):
        field = q if isinstance(q, Field) else Field(q)
        q = field.q
        if k < 1 or s < 1 or n < 1:
            raise ValueError(f"need k, s, n >= 1 (got k={k}, s={s}, n={n})")
        if q <= k:
            raise ValueError(f"need q > k (got q={q}, k={k})")
        if n * s > q - 1:
            raise ValueError(f"need n*s <= q-1 (got n*s={n * s}, q-1={q - 1})")
        self.field = field
        self.q, self.k, self.s, self.n = q, k, s, n
        if alphas is None:
            alphas = [field.gamma_pow(s * i) for i in range(n)]
        alphas = [int(a) % q for a in alphas]
        if len(alphas) != n:
            raise ValueError(f"expected {n} evaluation points, got {len(alphas)}")
        if 0 in alphas:
            raise ValueError(f"alpha_{alphas.index(0)} = 0 has a degenerate folding orbit")
        self.alphas: tuple[int, ...] = tuple(alphas)
        self.points: tuple[tuple[int, ...], ...] = tuple(
            tuple(a * field.gamma_pow(j) % q for j in range(s)) for a in alphas
        )
        owner: dict[int, int] = {}
        for i, orbit in enumerate(self.points):
            for x in orbit:
                if x in owner:
                    raise ValueError(
                        f"folding orbits of alpha_{owner[x]}={alphas[owner[x]]} and "
                        f"alpha_{i}={alphas[i]} overlap at {x}"
                    )
                owner[x] = i
        self.rate = Fraction(k, n * s)
        self.Q = tuple(Polynomial.from_roots(orbit, field) for orbit in self.points)
        flat = [x for orbit in self.points for x in orbit]
        # power table: _powers[d, p] = point_p ** d
        self._powers = np.array([[pow(x, d, q) for x in flat] for d in range(k)], dtype=np.int64).reshape(k, n * s)
        self._codebook = None

    def __repr__(self):
        return f"FrsCode(q={self.q}, k={self.k}, s={self.s}, n={self.n}, alphas={list(self.alphas)})"

    def __eq__(self, other):
        return isinstance(other, FrsCode) and (self.q, self.k, self.s, self.n, self.alphas) == (
            other.q, other.k, other.s, other.n, other.alphas)

    def __hash__(self):
        return hash((self.q, self.k, self.s, self.n, self.alphas))

    @property
    def distance(self) -> Fraction:
        """Fractional distance 1 - R."""
        return 1 - self.rate

    @property
    def max_pair_agreement(self) -> int:
        """Most coordinates on which two distinct codewords can agree."""
        return (self.k - 1) // self.s

    def descriptor(self) -> dict:
        return {"q": self.q, "k": self.k, "s": self.s, "n": self.n, "alphas": list(self.alphas)}

    @classmethod
    def from_descriptor(cls, d: dict) -> "FrsCode":
        return cls(d["q"], d["k"], d["s"], d["n"], d.get("alphas"))

    # messages and words

    def message(self, f) -> Polynomial:
        """Coerce a Polynomial or coefficient sequence to a message polynomial."""
        if not isinstance(f, Polynomial):
            f = Polynomial(f, self.field)
        elif f.field != self.field:
            raise ValueError(f"message over F_{f.field.q}, code is over F_{self.q}")
        if f.degree >= self.k:
            raise ValueError(f"message degree {f.degree} >= k={self.k}")
        return f

    def word(self, w) -> Word:
        """Validate and normalize a word (any nested sequence of n x s ints)."""
        w = tuple(tuple(int(v) % self.q for v in sym) for sym in w)
        if len(w) != self.n or any(len(sym) != self.s for sym in w):
            raise ValueError(f"word shape mismatch: expected {self.n} symbols of length {self.s}")
        return w

    def encode(self, f) -> Word:
        f = self.message(f)
        return tuple(tuple(f.eval_int(x) for x in orbit) for orbit in self.points)

    def encode_array(self, messages: np.ndarray) -> np.ndarray:
        """Encode an (M, k) int array of coefficient rows into an (M, n, s) array."""
        messages = np.asarray(messages, dtype=np.int64) % self.q
        acc = np.zeros((messages.shape[0], self.n * self.s), dtype=np.int64)
        for d in range(self.k):
            acc = (acc + np.outer(messages[:, d], self._powers[d])) % self.q
        return acc.reshape(-1, self.n, self.s)

    def word_array(self, y) -> np.ndarray:
        return np.array(self.word(y), dtype=np.int64).reshape(self.n, self.s)

    def residue(self, g, i: int) -> Polynomial:
        """``g mod Q_i``; determines symbol ``i`` of the encoding of ``g``."""
        g = self.message(g)
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate {i} out of range for n={self.n}")
        return g % self.Q[i]

    def symbol_constraints(self, i: int, symbol: Sequence[int]) -> list[tuple[list[int], int]]:
        """Linear conditions on message coefficients for agreement with ``symbol`` at ``i``."""
        q = self.q
        out = []
        for x, v in zip(self.points[i], symbol):
            out.append(([pow(x, d, q) for d in range(self.k)], int(v) % q))
        return out

    # distances

    def agreement(self, w1, w2) -> int:
        w1, w2 = self.word(w1), self.word(w2)
        return sum(a == b for a, b in zip(w1, w2))

    def in_ball(self, w1, w2, rho: Fraction) -> bool:
        """True iff the number of disagreeing symbols is strictly below rho * n."""
        return self.within(self.agreement(w1, w2), rho)

    def within(self, agreement: int, rho: Fraction) -> bool:
        rho = Fraction(rho)
        return (self.n - agreement) * rho.denominator < rho.numerator * self.n

    def min_agreement(self, rho: Fraction) -> int:
        """Smallest agreement count that puts a word inside B(y, rho)."""
        # n - N < rho n  <=>  N > n (1 - rho)
        return max(math.floor(self.n * (1 - Fraction(rho))) + 1, 0)

    def tau(self, r: int) -> Fraction:
        """s R / (s - r + 1) = k / (n (s - r + 1))."""
        if not 0 <= r <= self.s:
            raise ValueError(f"tau_r needs 0 <= r <= s={self.s} (got r={r})")
        return Fraction(self.k, self.n * (self.s - r + 1))

    # brute-force codebook

    def num_messages(self) -> int:
        return self.q**self.k

    def iter_codebook(self, cap: int = ENUMERATION_CAP):
        """Yield (messages, words) array chunks over all q**k messages in lex order."""
        total = self.num_messages()
        if total > cap:
            raise EnumerationCapError(total, cap)
        if self._codebook is not None:
            yield self._codebook
            return
        cacheable = total * self.n * self.s <= _CODEBOOK_CACHE_ENTRIES
        it = itertools.product(range(self.q), repeat=self.k)
        parts = []
        while True:
            block = list(itertools.islice(it, _CHUNK))
            if not block:
                break
            msgs = np.array(block, dtype=np.int64)
            words = self.encode_array(msgs)
            if cacheable:
                parts.append((msgs, words))
            else:
                yield msgs, words
        if cacheable:
            self._codebook = (np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts]))
            yield self._codebook


def random_word(code: FrsCode, rng: np.random.Generator) -> Word:
    return code.word(rng.integers(0, code.q, size=(code.n, code.s)).tolist())


def random_message(code: FrsCode, rng: np.random.Generator) -> Polynomial:
    return Polynomial(rng.integers(0, code.q, size=code.k).tolist(), code.field)
