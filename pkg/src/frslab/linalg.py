"""Exact linear algebra over F_q and affine subspaces of message polynomials.

Messages of a dimension-k code are identified with coefficient vectors in
F_q^k.  An :class:`AffineSubspace` is ``offset + span(basis)`` inside that
space, or the distinguished empty subspace of dimension -1.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .gf import Field, FieldMismatchError
from .poly import Polynomial

ENUMERATION_CAP = 10**6

Vector = tuple[int, ...]


class EnumerationCapError(RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} items, cap is {cap}")
        self.required = required
        self.cap = cap


class MatrixFq:
    """Row-major matrix over F_q with deterministic Gaussian elimination."""

    def __init__(self, rows: Iterable[Sequence[int]], field: Field, cols: Optional[int] = None):
        q = field.q
        self.rows: tuple[Vector, ...] = tuple(tuple(int(v) % q for v in r) for r in rows)
        if cols is None:
            if not self.rows:
                raise ValueError("cols required for a matrix with no rows")
            cols = len(self.rows[0])
        if any(len(r) != cols for r in self.rows):
            raise ValueError("ragged matrix rows")
        self.cols = cols
        self.field = field

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.cols

    @classmethod
    def identity(cls, n: int, field: Field) -> "MatrixFq":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    def rref(self, pivot_cols: Optional[int] = None) -> tuple[list[list[int]], list[int]]:
        """Reduced row-echelon form and pivot columns.

        Pivots are searched only among the first ``pivot_cols`` columns; for each
        column the first nonzero entry at or below the current pivot row is used.
        """
        q = self.field.q
        R = [list(r) for r in self.rows]
        limit = self.cols if pivot_cols is None else pivot_cols
        pivots: list[int] = []
        prow = 0
        for col in range(limit):
            if prow == len(R):
                break
            found = next((i for i in range(prow, len(R)) if R[i][col]), None)
            if found is None:
                continue
            R[prow], R[found] = R[found], R[prow]
            inv = self.field.inv(R[prow][col])
            R[prow] = [v * inv % q for v in R[prow]]
            pr = R[prow]
            for i in range(len(R)):
                c = R[i][col]
                if i != prow and c:
                    R[i] = [(a - c * b) % q for a, b in zip(R[i], pr)]
            pivots.append(col)
            prow += 1
        return R, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[Vector]:
        """Independent basis of {x : M x = 0}, one vector per free column."""
        R, pivots = self.rref()
        return _kernel_from_rref(R, pivots, self.cols, self.field.q)

    def solve(self, b: Sequence[int]) -> Optional[tuple[Vector, list[Vector]]]:
        """Solve ``M x = b``; returns (particular, kernel basis) or None."""
        if len(b) != self.nrows:
            raise ValueError(f"rhs has length {len(b)}, matrix has {self.nrows} rows")
        q = self.field.q
        aug = MatrixFq([list(r) + [v] for r, v in zip(self.rows, b)], self.field, self.cols + 1)
        R, pivots = aug.rref(pivot_cols=self.cols)
        if any(row[-1] for row in R[len(pivots):]):
            return None
        x = [0] * self.cols
        for row, col in zip(R, pivots):
            x[col] = row[-1]
        core = [row[:-1] for row in R]
        return tuple(x), _kernel_from_rref(core, pivots, self.cols, q)

    def matvec(self, x: Sequence[int]) -> Vector:
        q = self.field.q
        return tuple(sum(a * b for a, b in zip(r, x)) % q for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, MatrixFq) and self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"MatrixFq({[list(r) for r in self.rows]}, q={self.field.q})"


def _kernel_from_rref(R, pivots, cols, q) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for row, col in zip(R, pivots):
            v[col] = (-row[free]) % q
        basis.append(tuple(v))
    return basis


def rank_of(vectors: Sequence[Sequence[int]], field: Field, cols: int) -> int:
    if not vectors:
        return 0
    return MatrixFq(vectors, field, cols).rank()


class AffineSubspace:
    """``offset + span(basis)`` in F_q^k, or EMPTY (``offset is None``).

    Vectors are coefficient tuples of length ``k`` (index = power of x).
    """

    __slots__ = ("field", "k", "offset", "basis")

    def __init__(self, field: Field, k: int, offset: Optional[Sequence[int]], basis: Sequence[Sequence[int]] = (), check: bool = True):
        q = field.q
        self.field = field
        self.k = k
        if offset is None:
            if basis:
                raise ValueError("EMPTY subspace cannot carry a basis")
            self.offset = None
            self.basis: tuple[Vector, ...] = ()
            return
        self.offset = tuple(int(v) % q for v in offset)
        self.basis = tuple(tuple(int(v) % q for v in b) for b in basis)
        if len(self.offset) != k or any(len(b) != k for b in self.basis):
            raise ValueError(f"vectors must have length k={k}")
        if check and rank_of(self.basis, field, k) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def empty(cls, field: Field, k: int) -> "AffineSubspace":
        return cls(field, k, None)

    @classmethod
    def point(cls, f: Polynomial, k: int) -> "AffineSubspace":
        return cls(f.field, k, f.padded(k))

    @classmethod
    def full(cls, field: Field, k: int) -> "AffineSubspace":
        return cls(field, k, (0,) * k, [tuple(int(i == j) for j in range(k)) for i in range(k)])

    @classmethod
    def from_polys(cls, offset: Polynomial, basis: Sequence[Polynomial], k: int) -> "AffineSubspace":
        return cls(offset.field, k, offset.padded(k), [b.padded(k) for b in basis])

    @property
    def dim(self) -> int:
        return -1 if self.offset is None else len(self.basis)

    def is_empty(self) -> bool:
        return self.offset is None

    @property
    def offset_poly(self) -> Optional[Polynomial]:
        return None if self.offset is None else Polynomial(self.offset, self.field)

    @property
    def basis_polys(self) -> list[Polynomial]:
        return [Polynomial(b, self.field) for b in self.basis]

    def member(self, coords: Sequence[int]) -> Vector:
        """The point ``offset + sum(coords[u] * basis[u])``."""
        if self.offset is None:
            raise ValueError("EMPTY subspace has no members")
        q = self.field.q
        out = list(self.offset)
        for c, b in zip(coords, self.basis):
            if c:
                for d, v in enumerate(b):
                    out[d] = (out[d] + c * v) % q
        return tuple(out)

    def contains(self, f) -> bool:
        if self.offset is None:
            return False
        v = f.padded(self.k) if isinstance(f, Polynomial) else tuple(int(c) % self.field.q for c in f)
        if isinstance(f, Polynomial) and f.field != self.field:
            raise FieldMismatchError("polynomial from a different field")
        q = self.field.q
        diff = [(a - b) % q for a, b in zip(v, self.offset)]
        if not self.basis:
            return not any(diff)
        return rank_of(list(self.basis) + [diff], self.field, self.k) == len(self.basis)

    __contains__ = contains

    def slice(self, constraints: Iterable[tuple[Sequence[int], int]]) -> "AffineSubspace":
        """Members satisfying every affine constraint ``row . coeffs == rhs``."""
        if self.offset is None:
            return self
        q = self.field.q
        rows, rhs = [], []
        for row, b in constraints:
            if len(row) != self.k:
                raise ValueError(f"constraint row has length {len(row)}, expected k={self.k}")
            rows.append([sum(a * v for a, v in zip(row, bv)) % q for bv in self.basis])
            rhs.append((b - sum(a * v for a, v in zip(row, self.offset))) % q)
        if not rows:
            return self
        if not self.basis:
            return self if not any(rhs) else AffineSubspace.empty(self.field, self.k)
        sol = MatrixFq(rows, self.field, len(self.basis)).solve(rhs)
        if sol is None:
            return AffineSubspace.empty(self.field, self.k)
        particular, kern = sol
        return AffineSubspace(
            self.field,
            self.k,
            self.member(particular),
            [_combine(self.basis, kv, q) for kv in kern],
            check=False,
        )

    def size(self) -> int:
        return 0 if self.offset is None else self.field.q ** len(self.basis)

    def enumerate(self, cap: int = ENUMERATION_CAP) -> Iterator[Polynomial]:
        """Every member exactly once, lexicographic in the basis coordinates."""
        for v in self.enumerate_vectors(cap):
            yield Polynomial(v, self.field)

    def enumerate_vectors(self, cap: int = ENUMERATION_CAP) -> Iterator[Vector]:
        if self.offset is None:
            return iter(())
        need = self.size()
        if need > cap:
            raise EnumerationCapError(need, cap)
        return (self.member(c) for c in itertools.product(range(self.field.q), repeat=len(self.basis)))

    def member_array(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        """All members as an int64 array of shape (q**dim, k), same order as :meth:`enumerate`."""
        if self.offset is None:
            return np.zeros((0, self.k), dtype=np.int64)
        need = self.size()
        if need > cap:
            raise EnumerationCapError(need, cap)
        q, r = self.field.q, len(self.basis)
        grids = np.array(list(itertools.product(range(q), repeat=r)), dtype=np.int64).reshape(need, r)
        out = np.tile(np.array(self.offset, dtype=np.int64), (need, 1))
        for u, b in enumerate(self.basis):
            out = (out + np.outer(grids[:, u], np.array(b, dtype=np.int64))) % q
        return out

    def same_set(self, other: "AffineSubspace") -> bool:
        if self.field != other.field or self.k != other.k or self.dim != other.dim:
            return False
        if self.offset is None:
            return True
        if not other.contains(self.offset) or not self.contains(other.offset):
            return False
        return rank_of(list(self.basis) + list(other.basis), self.field, self.k) == len(self.basis)

    def __eq__(self, other):
        return isinstance(other, AffineSubspace) and self.same_set(other)

    __hash__ = None

    def to_dict(self) -> dict:
        if self.offset is None:
            return {"k": self.k, "dim": -1, "offset": None, "basis": []}
        return {
            "k": self.k,
            "dim": self.dim,
            "offset": list(Polynomial(self.offset, self.field).coeffs),
            "basis": [list(Polynomial(b, self.field).coeffs) for b in self.basis],
        }

    @classmethod
    def from_dict(cls, d: dict, field: Field) -> "AffineSubspace":
        k = d["k"]
        if d["offset"] is None:
            return cls.empty(field, k)
        pad = lambda v: list(v) + [0] * (k - len(v))
        return cls(field, k, pad(d["offset"]), [pad(b) for b in d["basis"]])

    def __repr__(self):
        if self.offset is None:
            return "AffineSubspace(EMPTY)"
        return f"AffineSubspace(dim={self.dim}, offset={self.offset}, basis={list(self.basis)})"


def _combine(basis: Sequence[Vector], coords: Sequence[int], q: int) -> Vector:
    out = [0] * len(basis[0])
    for c, b in zip(coords, basis):
        if c:
            for d, v in enumerate(b):
                out[d] = (out[d] + c * v) % q
    return tuple(out)


def affine_hull(points: Sequence[Polynomial], k: Optional[int] = None) -> AffineSubspace:
    """Smallest affine subspace containing ``points``.

    The basis is the nonzero rows of the RREF of the difference vectors, so the
    result depends only on the point set and the choice of ``points[0]``.
    """
    if not points:
        raise ValueError("affine hull of an empty point set")
    field = points[0].field
    if k is None:
        k = max(1, max(len(p.coeffs) for p in points))
    q = field.q
    base = points[0].padded(k)
    diffs = [[(a - b) % q for a, b in zip(p.padded(k), base)] for p in points[1:]]
    if not diffs:
        return AffineSubspace(field, k, base)
    R, pivots = MatrixFq(diffs, field, k).rref()
    return AffineSubspace(field, k, base, R[: len(pivots)], check=False)
