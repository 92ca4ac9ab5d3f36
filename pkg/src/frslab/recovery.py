"""Explicit list-recovery family: many codewords, few symbols per coordinate.

Coordinates ``0..p-1`` are split into ``m`` residue classes (coordinate ``j``
belongs to class ``j % m``).  Basis polynomial ``f_c`` is the product of the
``Q_j`` over the prefix coordinates *outside* class ``c``, so every
combination ``sum_c beta_c f_c`` reduces modulo ``Q_j`` to a multiple of a
single ``f_{j % m} mod Q_j``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import BoundReport
from .frs import FrsCode
from .linalg import ENUMERATION_CAP, EnumerationCapError, rank_of
from .poly import Polynomial


def prefix_length(k: int, s: int, m: int) -> int:
    """p = floor(m floor((k-1)/s) / (m-1))."""
    return m * ((k - 1) // s) // (m - 1)


def m_for_eps(R: Fraction, eps: Fraction) -> int:
    return math.ceil(Fraction(R) / Fraction(eps)) + 1


@dataclass(frozen=True)
class CounterexampleFamily:
    code: FrsCode
    m: int
    p: int
    basis: tuple[Polynomial, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        code = self.code
        if len(self.basis) != self.m:
            raise ValueError(f"expected {self.m} basis polynomials, got {len(self.basis)}")
        if len(set(self.B)) != len(self.B) or not self.B:
            raise ValueError("coefficient set B must be nonempty with distinct elements")
        for c, f in enumerate(self.basis):
            if f.degree > code.k - 1:
                raise ValueError(f"deg f_{c} = {f.degree} exceeds k-1 = {code.k - 1}")
        if rank_of([f.padded(code.k) for f in self.basis], code.field, code.k) != self.m:
            raise ValueError("basis polynomials are linearly dependent")
        for c in range(self.m):
            # f_c is the only basis element not divisible by Q_c
            if (self.basis[c] % code.Q[c]).is_zero():
                raise ValueError(f"independence witness fails: f_{c} vanishes mod Q_{c}")

    @property
    def ell(self) -> int:
        return len(self.B)

    def members(self, cap: int = ENUMERATION_CAP):
        """Yield (betas, g) over all of G = {sum beta_c f_c : beta_c in B}."""
        need = self.ell**self.m
        if need > cap:
            raise EnumerationCapError(need, cap)
        zero = Polynomial.zero(self.code.field)
        for betas in itertools.product(self.B, repeat=self.m):
            g = zero
            for beta, f in zip(betas, self.basis):
                g = g + f * beta
            yield betas, g

    def candidate_symbols(self, j: int) -> set[tuple[int, ...]]:
        """The ell scalings of (f_{j mod m} mod Q_j), as symbols."""
        base = self.basis[j % self.m] % self.code.Q[j]
        return {tuple((base * b).eval_int(x) for x in self.code.points[j]) for b in self.B}

    def to_dict(self, per_coordinate_sizes: Sequence[int] = ()) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "ell": self.ell,
            "B": list(self.B),
            "basis": [f.to_list() for f in self.basis],
            "per_coordinate_sizes": list(per_coordinate_sizes),
        }


def build_counterexample(code: FrsCode, m: int, B: Sequence[int]) -> CounterexampleFamily:
    if m < 2:
        raise ValueError(f"need m >= 2 (got m={m})")
    B = tuple(int(b) % code.q for b in B)
    if not B:
        raise ValueError("need a nonempty coefficient set B")
    p = prefix_length(code.k, code.s, m)
    if p < 1:
        raise ValueError(f"m*floor((k-1)/s) = {m * ((code.k - 1) // code.s)} < m-1 = {m - 1}: prefix is empty")
    if p > code.n:
        raise ValueError(f"prefix length p={p} exceeds n={code.n}")
    if m > p:
        raise ValueError(f"m={m} exceeds p={p}: some residue class of the prefix is empty")
    basis = []
    for c in range(m):
        f = Polynomial.one(code.field)
        for j in range(p):
            if j % m != c:
                f = f * code.Q[j]
        basis.append(f)
    return CounterexampleFamily(code, m, p, tuple(basis), B)


def verify_counterexample(fam: CounterexampleFamily, cap: int = ENUMERATION_CAP) -> BoundReport:
    """|G| = ell^m, each prefix coordinate shows <= ell symbols drawn from the predicted list,
    and the prefix covers at least a rate fraction of the coordinates."""
    code = fam.code
    symbols: list[set] = [set() for _ in range(fam.p)]
    encodings = set()
    residue_ok = True
    in_candidates = True
    cands = [fam.candidate_symbols(j) for j in range(fam.p)]
    residues = [fam.basis[j % fam.m] % code.Q[j] for j in range(fam.p)]
    count = 0
    for betas, g in fam.members(cap):
        count += 1
        w = code.encode(g)
        encodings.add(w)
        for j in range(fam.p):
            symbols[j].add(w[j])
            in_candidates = in_candidates and w[j] in cands[j]
            residue_ok = residue_ok and (g % code.Q[j]) == residues[j] * betas[j % fam.m]
    sizes = [len(s) for s in symbols]
    distinct_ok = len(encodings) == fam.ell**fam.m == count
    lhs = max(sizes)
    prefix_frac = Fraction(fam.p, code.n)
    holds = distinct_ok and lhs <= fam.ell and in_candidates and residue_ok and prefix_frac >= code.rate
    return BoundReport(
        "counterexample", lhs, fam.ell, holds, m=fam.m,
        details={
            "G_size": len(encodings),
            "expected_G_size": fam.ell**fam.m,
            "p": fam.p,
            "prefix_fraction": prefix_frac,
            "rate": code.rate,
            "per_coordinate_sizes": str(sizes),
            "in_candidate_lists": in_candidates,
            "residue_identity": residue_ok,
        },
    )
