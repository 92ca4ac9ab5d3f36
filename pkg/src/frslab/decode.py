"""List decoding: linear-algebraic interpolation, certificate pruning, and the oracle.

The interpolation decoder finds a nonzero ``(A_0, ..., A_m)`` with

    A_0(x) + sum_u A_u(x) * y_{i, j+u-1} = 0   at every point x = g^j a_i, j <= s-m,

and returns the affine space of messages ``f`` for which
``A_0(x) + sum_u A_u(x) f(g^(u-1) x)`` vanishes identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .frs import FrsCode, Word
from .linalg import ENUMERATION_CAP, AffineSubspace, MatrixFq
from .poly import Polynomial


@dataclass(frozen=True)
class Interpolant:
    m: int
    D: int
    A: tuple[Polynomial, ...]

    def residual(self, f: Polynomial) -> Polynomial:
        """A_0(x) + sum_u A_u(x) f(g^(u-1) x)."""
        field_ = self.A[0].field
        out = self.A[0]
        for u in range(1, self.m + 1):
            out = out + self.A[u] * f.scale_argument(field_.gamma_pow(u - 1))
        return out


def interpolation_degree(code: FrsCode, m: int) -> int:
    """D = floor((n(s-m+1) - k + 1) / (m+1)); unknowns then exceed constraints."""
    if not 1 <= m <= code.s:
        raise ValueError(f"need 1 <= m <= s={code.s} (got m={m})")
    constraints = code.n * (code.s - m + 1)
    top = constraints - code.k + 1
    if top < 0:
        raise ValueError(
            f"infeasible m={m}: n(s-m+1)={constraints} constraints is {-top} short of the k-1={code.k - 1} "
            "needed for a nonnegative degree bound"
        )
    return top // (m + 1)


def gw_radius(code: FrsCode, m: int) -> Fraction:
    """Largest radius at which every codeword is guaranteed to lie in :func:`gw_subspace`.

    A codeword agreeing with ``y`` on N coordinates makes the residual vanish at
    N(s-m+1) distinct points, so it is forced to zero once N(s-m+1) > D+k-1.
    """
    D = interpolation_degree(code, m)
    need = (D + code.k - 1) // (code.s - m + 1) + 1
    return max(Fraction(code.n - need + 1, code.n), Fraction(0))


def gw_interpolate(code: FrsCode, y, m: int) -> Interpolant:
    y = code.word(y)
    D = interpolation_degree(code, m)
    q, k = code.q, code.k
    rows = []
    for i, orbit in enumerate(code.points):
        for j in range(code.s - m + 1):
            x = orbit[j]
            pw = [pow(x, d, q) for d in range(D + k)]
            row = list(pw)
            for u in range(1, m + 1):
                yv = y[i][j + u - 1]
                row.extend(pw[d] * yv % q for d in range(D + 1))
            rows.append(row)
    ncols = (D + k) + m * (D + 1)
    kern = MatrixFq(rows, code.field, ncols).kernel()
    if not kern:
        raise ValueError(f"no nonzero interpolant: {ncols} unknowns vs {len(rows)} constraints")
    v = kern[0]
    polys = [Polynomial(v[: D + k], code.field)]
    for u in range(m):
        start = D + k + u * (D + 1)
        polys.append(Polynomial(v[start : start + D + 1], code.field))
    return Interpolant(m, D, tuple(polys))


def gw_subspace(code: FrsCode, y, m: int) -> AffineSubspace:
    """Affine space of messages annihilated by the interpolant (EMPTY if none)."""
    interp = gw_interpolate(code, y, m)
    q, k, D = code.q, code.k, interp.D
    gamma_pow = code.field.gamma_pow
    # B_d(x) = sum_u g^((u-1) d) A_u(x), so the residual is A_0 + sum_d f_d x^d B_d(x)
    B = []
    for d in range(k):
        acc = [0] * (D + 1)
        for u in range(1, interp.m + 1):
            c = gamma_pow((u - 1) * d)
            for e, a in enumerate(interp.A[u].coeffs):
                acc[e] = (acc[e] + c * a) % q
        B.append(acc)
    rows = [[(B[d][e - d] if 0 <= e - d <= D else 0) for d in range(k)] for e in range(D + k)]
    rhs = [(-c) % q for c in interp.A[0].padded(D + k)]
    sol = MatrixFq(rows, code.field, k).solve(rhs)
    if sol is None:
        return AffineSubspace.empty(code.field, k)
    particular, kern = sol
    return AffineSubspace(code.field, k, particular, kern, check=False)


def default_m(code: FrsCode, eps: Fraction) -> int:
    return min(code.s, math.ceil(2 / Fraction(eps)))


def brute_force_list(code: FrsCode, y, rho: Fraction, cap: int = ENUMERATION_CAP) -> list[Polynomial]:
    """Exact ``B(y, rho) ∩ C`` by enumerating all q**k messages, in lex coefficient order."""
    yarr = code.word_array(y)
    need = code.min_agreement(rho)
    out = []
    for msgs, words in code.iter_codebook(cap):
        agree = (words == yarr).all(axis=2).sum(axis=1)
        for row in msgs[agree >= need]:
            out.append(Polynomial(row.tolist(), code.field))
    return out


@dataclass(frozen=True)
class Certificate:
    coords: tuple[int, ...]
    codeword: Optional[Polynomial]


@dataclass
class PruneResult:
    codewords: list[Polynomial]
    hits: dict[tuple[int, ...], int]
    certificates: list[Certificate] = field(repr=False)
    trials: int = 0
    abandoned: int = 0

    def hit_rate(self, f: Polynomial) -> float:
        return self.hits.get(f.coeffs, 0) / self.trials


def trials_needed(eps: Fraction, r: int, q: int, eta: Fraction) -> int:
    """ceil(ln(r q / eta) / eps**r): enough walks to catch each member w.p. >= 1 - eta."""
    r = max(r, 1)
    return math.ceil(math.log(r * q / float(eta)) / float(Fraction(eps)) ** r)


def prune_certificates(code: FrsCode, y, A: AffineSubspace, rho: Fraction, trials: int, seed: int) -> PruneResult:
    """Random certificate walks inside ``A``.

    Each walk starts from ``A`` and slices by agreement with ``y`` at uniformly
    random coordinates until the slice has dimension <= 0.  A walk that draws
    ``n`` coordinates in a row without shrinking is abandoned.  Trial ``t`` uses
    its own stream spawned from ``SeedSequence(seed)``, so results do not
    depend on execution order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if A.is_empty():
        raise ValueError("certificate walks need a nonempty affine space")
    y = code.word(y)
    n = code.n
    slices: dict[frozenset, AffineSubspace] = {frozenset(): A}

    def slice_at(chosen: frozenset, i: int) -> tuple[frozenset, AffineSubspace]:
        key = chosen | {i}
        sub = slices.get(key)
        if sub is None:
            sub = slices[chosen].slice(code.symbol_constraints(i, y[i]))
            slices[key] = sub
        return key, sub

    verdict: dict[tuple[int, ...], bool] = {}
    hits: dict[tuple[int, ...], int] = {}
    certs: list[Certificate] = []
    abandoned = 0
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.Generator(np.random.PCG64(child))
        draws = rng.integers(0, n, size=n * (A.dim + 1)).tolist()
        chosen, sub, coords, stale = frozenset(), A, [], 0
        while sub.dim > 0:
            if not draws:
                draws = rng.integers(0, n, size=n).tolist()
            i = draws.pop(0)
            coords.append(i)
            before = sub.dim
            chosen, sub = slice_at(chosen, i)
            stale = 0 if sub.dim < before else stale + 1
            if stale >= n:
                break
        if sub.dim > 0:
            abandoned += 1
            continue
        if sub.dim < 0:
            certs.append(Certificate(tuple(coords), None))
            continue
        f = Polynomial(sub.offset, code.field)
        certs.append(Certificate(tuple(coords), f))
        ok = verdict.get(f.coeffs)
        if ok is None:
            ok = verdict[f.coeffs] = code.in_ball(code.encode(f), y, rho)
        if ok:
            hits[f.coeffs] = hits.get(f.coeffs, 0) + 1
    found = sorted(hits, key=lambda c: c + (0,) * (code.k - len(c)))
    return PruneResult([Polynomial(c, code.field) for c in found], hits, certs, trials, abandoned)
