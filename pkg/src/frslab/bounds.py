"""Agreement graphs and executable checks of the FRS list-size bounds.

Every ``check_*`` function returns a :class:`BoundReport`.  All thresholds are
exact :class:`~fractions.Fraction` values; ``holds`` is False only if the
stated inequality fails on the concrete instance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .decode import brute_force_list
from .frs import FrsCode
from .linalg import ENUMERATION_CAP, AffineSubspace, affine_hull, rank_of
from .poly import Polynomial

Number = Union[int, Fraction]

CSV_FIELDS = ("bound", "lhs", "rhs", "holds", "r", "t", "m", "rho_num", "rho_den", "seed")


def _json_num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


@dataclass
class BoundReport:
    bound: str
    lhs: Number
    rhs: Number
    holds: bool
    r: Optional[int] = None
    t: Optional[int] = None
    m: Optional[int] = None
    rho: Optional[Fraction] = None
    seed: Optional[int] = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "bound": self.bound,
            "lhs": _json_num(self.lhs),
            "rhs": _json_num(self.rhs),
            "holds": self.holds,
            "r": self.r,
            "t": self.t,
            "m": self.m,
            "rho_num": None if self.rho is None else self.rho.numerator,
            "rho_den": None if self.rho is None else self.rho.denominator,
            "seed": self.seed,
        }
        if self.details:
            out["details"] = {k: _json_num(v) for k, v in self.details.items()}
        return out

    def csv_row(self) -> list:
        d = self.to_dict()
        return ["" if d[k] is None else d[k] for k in CSV_FIELDS]


@dataclass(frozen=True)
class AgreementGraph:
    """Bipartite graph: left vertex ``u`` ~ right vertex ``j`` iff codeword ``u`` agrees with y at ``j``."""

    codewords: tuple[Polynomial, ...]
    n: int
    neighbors: tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.codewords)

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(u, j) for u, nb in enumerate(self.neighbors) for j in nb}

    @property
    def E(self) -> int:
        return sum(len(nb) for nb in self.neighbors)

    @property
    def n_G(self) -> int:
        return len(frozenset().union(*self.neighbors)) if self.neighbors else 0

    def left_degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]

    def right_degrees(self) -> list[int]:
        deg = [0] * self.n
        for nb in self.neighbors:
            for j in nb:
                deg[j] += 1
        return deg

    def induced(self, members: Sequence[int]) -> "AgreementGraph":
        return AgreementGraph(tuple(self.codewords[u] for u in members), self.n, tuple(self.neighbors[u] for u in members))


def agreement_graph(code: FrsCode, codewords: Sequence[Polynomial], y) -> AgreementGraph:
    y = code.word(y)
    fs = [code.message(f) for f in codewords]
    if len({f.coeffs for f in fs}) != len(fs):
        raise ValueError("agreement graph needs distinct codewords")
    nbrs = []
    for f in fs:
        w = code.encode(f)
        nbrs.append(frozenset(j for j in range(code.n) if w[j] == y[j]))
    return AgreementGraph(tuple(fs), code.n, tuple(nbrs))


def slice_dims(code: FrsCode, A: AffineSubspace, y) -> list[int]:
    """dim of {f in A : f agrees with y at i} for each coordinate; -1 marks an empty slice."""
    if A.is_empty():
        raise ValueError("slice dimensions of an EMPTY subspace")
    y = code.word(y)
    return [A.slice(code.symbol_constraints(i, y[i])).dim for i in range(code.n)]


def _dim_in_range(code: FrsCode, r: int):
    if r > code.s:
        raise ValueError(f"dimension r={r} exceeds s={code.s}; tau_r undefined")


def check_gk(code: FrsCode, A: AffineSubspace, y) -> BoundReport:
    """sum_i max(r_i, 0) <= r tau_r n = r k / (s - r + 1)."""
    r = A.dim
    if r < 0:
        raise ValueError("check_gk needs a nonempty subspace")
    _dim_in_range(code, r)
    dims = slice_dims(code, A, y)
    lhs = sum(max(d, 0) for d in dims)
    rhs = r * code.tau(r) * code.n
    return BoundReport("gk", lhs, rhs, lhs <= rhs, r=r, details={"slice_dims": str(dims)})


def folded_wronskian(fs: Sequence[Polynomial]) -> Polynomial:
    """det [f_u(g^j x)]_{j,u} by cofactor expansion over F_q[x]."""
    if not fs:
        raise ValueError("folded Wronskian of an empty sequence")
    fld = fs[0].field
    if any(f.field != fld for f in fs):
        raise ValueError("polynomials from different fields")
    r = len(fs)
    width = max(1, max(len(f.coeffs) for f in fs))
    if rank_of([f.padded(width) for f in fs], fld, width) != r:
        raise ValueError("folded Wronskian needs linearly independent polynomials")
    M = [[f.scale_argument(fld.gamma_pow(j)) for f in fs] for j in range(r)]
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        # rows r-len(cols) .. r-1 against the given columns
        if not cols:
            return Polynomial.one(fld)
        got = memo.get(cols)
        if got is not None:
            return got
        row = r - len(cols)
        acc = Polynomial.zero(fld)
        for pos, c in enumerate(cols):
            entry = M[row][c]
            if entry.is_zero():
                continue
            term = entry * minor(cols[:pos] + cols[pos + 1 :])
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(tuple(range(r)))


def check_wronskian_multiplicity(code: FrsCode, A: AffineSubspace, y) -> BoundReport:
    """Each g^j a_i (j <= s-r) is a root of W of multiplicity >= r_i, and
    sum_i r_i (s-r+1) <= deg W <= r k."""
    r = A.dim
    if r < 1:
        raise ValueError("Wronskian check needs dim A >= 1")
    _dim_in_range(code, r)
    W = folded_wronskian(A.basis_polys)
    dims = slice_dims(code, A, y)
    short = []
    for i, ri in enumerate(dims):
        if ri < 1:
            continue
        for j in range(code.s - r + 1):
            sigma = code.points[i][j]
            mult = W.multiplicity(sigma)
            if mult < ri:
                short.append((i, j, mult, ri))
    lhs = sum(max(d, 0) for d in dims) * (code.s - r + 1)
    rhs = r * code.k
    holds = not short and lhs <= W.degree <= rhs
    return BoundReport(
        "wronskian", lhs, rhs, holds, r=r,
        details={"deg_W": W.degree, "slice_dims": str(dims), "short_roots": str(short)},
    )


def member_agreements(code: FrsCode, A: AffineSubspace, y, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Agreement with y of every member of A, in enumeration order."""
    members = A.member_array(cap)
    if not len(members):
        return np.zeros(0, dtype=np.int64)
    words = code.encode_array(members)
    return (words == code.word_array(y)).all(axis=2).sum(axis=1)


def count_in_ball(code: FrsCode, A: AffineSubspace, y, rho: Fraction, cap: int = ENUMERATION_CAP) -> int:
    return int((member_agreements(code, A, y, cap) >= code.min_agreement(rho)).sum())


def srivastava_radius(code: FrsCode, r: int, t: int) -> Fraction:
    return Fraction(t, t + 1) * (1 - code.tau(r))


def check_srivastava(code: FrsCode, A: AffineSubspace, y, t: int, cap: int = ENUMERATION_CAP) -> BoundReport:
    """|B(y, t/(t+1) (1 - tau_r)) ∩ A| <= (t-1) r + 1, plus the <= t base case when r = 1."""
    r = A.dim
    if r < 0:
        raise ValueError("check_srivastava needs a nonempty subspace")
    if not r <= t <= code.s:
        raise ValueError(f"need r <= t <= s (got r={r}, t={t}, s={code.s})")
    rho = srivastava_radius(code, r, t)
    agree = member_agreements(code, A, y, cap)
    lhs = int((agree >= code.min_agreement(rho)).sum())
    rhs = (t - 1) * r + 1
    holds = lhs <= rhs
    details = {}
    if r == 1:
        base_rho = Fraction(t, t + 1) * (1 - code.rate)
        base = int((agree >= code.min_agreement(base_rho)).sum())
        details = {"base_case_list": base, "base_case_bound": t}
        holds = holds and base <= t
    return BoundReport("srivastava", lhs, rhs, holds, r=r, t=t, rho=rho, details=details)


@dataclass(frozen=True)
class CzPartition:
    """Cells H_0..H_r of a codeword list; ``cells[i][0]`` is the representative f^(i)."""

    cells: tuple[tuple[Polynomial, ...], ...]
    k: int

    @property
    def r(self) -> int:
        return len(self.cells) - 1

    def cell_of(self) -> dict[tuple[int, ...], int]:
        return {f.coeffs: i for i, cell in enumerate(self.cells) for f in cell}


def _canonical(fs: Sequence[Polynomial], k: int) -> list[Polynomial]:
    return sorted(fs, key=lambda f: f.padded(k))


def cz_partition(codewords: Sequence[Polynomial], k: Optional[int] = None, verify: bool = True) -> CzPartition:
    """Greedy spanning representatives and the layered partition of the list."""
    if not codewords:
        raise ValueError("partition of an empty list")
    if k is None:
        k = max(1, max(len(f.coeffs) for f in codewords))
    if len({f.coeffs for f in codewords}) != len(codewords):
        raise ValueError("partition needs distinct codewords")
    ordered = _canonical(codewords, k)
    reps: list[Polynomial] = []
    hulls: list[AffineSubspace] = []
    for f in ordered:
        if not hulls or not hulls[-1].contains(f):
            reps.append(f)
            hulls.append(affine_hull(reps, k))
    cells: list[list[Polynomial]] = [[] for _ in reps]
    for f in ordered:
        cells[next(i for i, h in enumerate(hulls) if h.contains(f))].append(f)
    part = CzPartition(tuple(tuple(c) for c in cells), k)
    if verify and not cross_picks_independent(part):
        raise RuntimeError("cross-pick selection is affinely dependent")
    return part


def cross_picks_independent(part: CzPartition) -> bool:
    """Every choice of one element per cell is affinely independent (hence every sub-choice too)."""
    fld = part.cells[0][0].field
    q, k = fld.q, part.k
    for pick in itertools.product(*part.cells):
        base = pick[0].padded(k)
        diffs = [[(a - b) % q for a, b in zip(f.padded(k), base)] for f in pick[1:]]
        if rank_of(diffs, fld, k) != len(diffs):
            return False
    return True


def check_cz_edge_bound(code: FrsCode, codewords: Sequence[Polynomial], y) -> BoundReport:
    """E_G <= (m-1) n tau_r + n_G with r the affine dimension of the list.

    Also records, for every right vertex j touching t_j cells of the partition,
    whether the agreement slice of the hull at j has dimension >= t_j - 1.
    """
    G = agreement_graph(code, codewords, y)
    hull = affine_hull(list(G.codewords), code.k)
    r = hull.dim
    _dim_in_range(code, r)
    rhs = (G.m - 1) * code.n * code.tau(r) + G.n_G
    part = cz_partition(list(G.codewords), code.k)
    where = part.cell_of()
    yy = code.word(y)
    slice_ok = True
    for j in range(code.n):
        cells_hit = {where[f.coeffs] for f, nb in zip(G.codewords, G.neighbors) if j in nb}
        if cells_hit:
            rj = hull.slice(code.symbol_constraints(j, yy[j])).dim
            slice_ok = slice_ok and rj >= len(cells_hit) - 1
    return BoundReport(
        "cz-edge", G.E, rhs, G.E <= rhs, r=r, m=G.m,
        details={"n_G": G.n_G, "cells": len(part.cells), "slice_vs_cells_ok": slice_ok},
    )


def cz_radius(code: FrsCode, t: int) -> Fraction:
    return Fraction(t, t + 1) * (1 - code.tau(t))


def check_cz_theorem(code: FrsCode, y, t: int, cap: int = ENUMERATION_CAP) -> BoundReport:
    """|B(y, t/(t+1) (1 - tau_t)) ∩ C| <= t by exhaustive enumeration."""
    if not 0 <= t <= code.s:
        raise ValueError(f"need 0 <= t <= s={code.s} (got t={t})")
    rho = cz_radius(code, t)
    L = brute_force_list(code, y, rho, cap)
    return BoundReport("cz-theorem", len(L), t, len(L) <= t, t=t, rho=rho)


def singleton_floor(R: Fraction, eps: Fraction) -> Fraction:
    """Generalized Singleton lower bound (1 - R - eps) / eps on the list size."""
    R, eps = Fraction(R), Fraction(eps)
    if not 0 < eps < 1 - R:
        raise ValueError(f"need 0 < eps < 1 - R (got R={R}, eps={eps})")
    return (1 - R - eps) / eps


def chain_parameters(eps: Fraction) -> tuple[int, int]:
    """(t, s) = (ceil(2/eps), ceil(3/eps^2))."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return math.ceil(2 / eps), math.ceil(3 / eps**2)


def check_parameter_chain(eps: Fraction, R: Fraction) -> BoundReport:
    """t/(t+1) (1 - tau_t) >= 1 - R - eps, with tau_t = s R / (s - t + 1)."""
    eps, R = Fraction(eps), Fraction(R)
    t, s = chain_parameters(eps)
    tau = s * R / (s - t + 1)
    rho = Fraction(t, t + 1) * (1 - tau)
    target = 1 - R - eps
    return BoundReport(
        "params", target, rho, target <= rho, t=t, rho=rho,
        details={"s": s, "eps": eps, "R": R, "tau_t": tau, "in_regime": tau < 1},
    )
