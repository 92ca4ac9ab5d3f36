"""Seeded samplers, randomized verification suites, and the list-size fuzzer.

Sample ``i`` of a suite run with seed ``seed`` draws from
``numpy.random.default_rng(sample_seeds(seed, N)[i])``; the per-sample seed is
stored on each report so any single instance can be replayed on its own.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import bounds
from .bounds import BoundReport
from .decode import brute_force_list, default_m, gw_radius, gw_subspace, prune_certificates
from .frs import FrsCode, Word, random_message, random_word
from .linalg import AffineSubspace, affine_hull
from .poly import Polynomial


def sample_seeds(seed: int, count: int) -> list[int]:
    return np.random.SeedSequence(seed).generate_state(count, dtype=np.uint32).tolist()


def random_subspace(code: FrsCode, rng: np.random.Generator, r: int) -> AffineSubspace:
    """Uniform offset plus ``r`` independent directions (rejection sampled)."""
    if not 0 <= r <= code.k:
        raise ValueError(f"need 0 <= r <= k={code.k}")
    while True:
        vecs = rng.integers(0, code.q, size=(r + 1, code.k)).tolist()
        try:
            return AffineSubspace(code.field, code.k, vecs[0], vecs[1:])
        except ValueError:
            continue


def planted_word(code: FrsCode, rng: np.random.Generator, centers: Sequence[Polynomial], noise: float = 0.25) -> Word:
    """Each symbol copied from a random center, or uniformly random with probability ``noise``."""
    encs = [code.encode(f) for f in centers]
    out = []
    for j in range(code.n):
        if not encs or rng.random() < noise:
            out.append(tuple(rng.integers(0, code.q, size=code.s).tolist()))
        else:
            out.append(encs[int(rng.integers(len(encs)))][j])
    return tuple(out)


def sample_word(code: FrsCode, rng: np.random.Generator, A: Optional[AffineSubspace] = None) -> Word:
    """Mixture: a quarter uniform words, the rest planted around 1-3 codewords (members of ``A`` if given)."""
    if rng.random() < 0.25:
        return random_word(code, rng)
    howmany = int(rng.integers(1, 4))
    if A is not None and not A.is_empty():
        centers = [Polynomial(A.member(rng.integers(0, code.q, size=A.dim).tolist()), code.field) for _ in range(howmany)]
    else:
        centers = [random_message(code, rng) for _ in range(howmany)]
    noise = float(rng.choice([0.0, 0.125, 0.25]))
    return planted_word(code, rng, centers, noise)


def _suite(samples: int, seed: int, body: Callable[[np.random.Generator, int], list[BoundReport]]) -> list[BoundReport]:
    out = []
    for i, ss in enumerate(sample_seeds(seed, samples)):
        for rep in body(np.random.default_rng(ss), i):
            rep.seed = ss
            out.append(rep)
    return out


def suite_gk(code: FrsCode, samples: int, seed: int, dims: Sequence[int] = (1, 2, 3)) -> list[BoundReport]:
    dims = [r for r in dims if r <= min(code.s, code.k)]

    def body(rng, i):
        A = random_subspace(code, rng, dims[i % len(dims)])
        return [bounds.check_gk(code, A, sample_word(code, rng, A))]

    return _suite(samples, seed, body)


def suite_wronskian(code: FrsCode, samples: int, seed: int, dims: Sequence[int] = (1, 2, 3)) -> list[BoundReport]:
    dims = [r for r in dims if 1 <= r <= min(code.s, code.k)]

    def body(rng, i):
        A = random_subspace(code, rng, dims[i % len(dims)])
        return [bounds.check_wronskian_multiplicity(code, A, sample_word(code, rng, A))]

    return _suite(samples, seed, body)


def srivastava_pairs(code: FrsCode) -> list[tuple[int, int]]:
    return [(r, t) for r in range(1, min(code.s, code.k) + 1) for t in range(r, code.s + 1)]


def suite_srivastava(code: FrsCode, samples: int, seed: int, pairs: Optional[Sequence[tuple[int, int]]] = None) -> list[BoundReport]:
    """``samples`` random (A, y) for every (r, t) pair."""
    pairs = list(pairs) if pairs is not None else srivastava_pairs(code)
    out = []
    for r, t in pairs:

        def body(rng, i, r=r, t=t):
            A = random_subspace(code, rng, r)
            return [bounds.check_srivastava(code, A, sample_word(code, rng, A), t)]

        out.extend(_suite(samples, seed * 1009 + 31 * r + t, body))
    return out


def nonempty_sublists(items: Sequence, limit: int = 12):
    if len(items) > limit:
        raise ValueError(f"list of {len(items)} codewords has too many sublists")
    for size in range(1, len(items) + 1):
        yield from itertools.combinations(items, size)


def suite_cz_edge(code: FrsCode, samples: int, seed: int, rho: Optional[Fraction] = None) -> list[BoundReport]:
    """Edge bound on every nonempty sublist of the oracle list at ``rho`` (default: the distance 1 - R).

    Sublists whose affine hull has dimension above ``s`` are outside the bound's
    range and are skipped.
    """
    rho = code.distance if rho is None else Fraction(rho)

    def body(rng, i):
        y = sample_word(code, rng)
        L = brute_force_list(code, y, rho)
        subs = [list(sub) for sub in nonempty_sublists(L) if affine_hull(list(sub), code.k).dim <= code.s]
        return [bounds.check_cz_edge_bound(code, sub, y) for sub in subs]

    return _suite(samples, seed, body)


def suite_cz_theorem(code: FrsCode, samples: int, seed: int, t: int) -> list[BoundReport]:
    return _suite(samples, seed, lambda rng, i: [bounds.check_cz_theorem(code, sample_word(code, rng), t)])


def suite_gw(code: FrsCode, samples: int, seed: int, m: int) -> list[BoundReport]:
    """Oracle list at the guaranteed radius must sit inside the decoded subspace of dim <= m-1."""
    rho = gw_radius(code, m)

    def body(rng, i):
        y = sample_word(code, rng)
        A = gw_subspace(code, y, m)
        L = brute_force_list(code, y, rho)
        missing = sum(not A.contains(f) for f in L)
        return [BoundReport("gw-containment", missing, 0, missing == 0 and A.dim <= m - 1, r=A.dim, m=m, rho=rho,
                            details={"list_size": len(L), "dim": A.dim})]

    return _suite(samples, seed, body)


def suite_prune(code: FrsCode, samples: int, seed: int, eps: Fraction, trials: int, m: Optional[int] = None) -> list[BoundReport]:
    """Certificate pruning inside the decoded subspace against the oracle at rho = (1 - R) - eps.

    ``lhs`` counts pruned codewords missing from the oracle (soundness needs 0);
    ``details['complete']`` records exact equality with the oracle list.
    """
    eps = Fraction(eps)
    rho = code.distance - eps
    m = default_m(code, eps) if m is None else m

    def body(rng, i):
        y = sample_word(code, rng)
        truth = brute_force_list(code, y, rho)
        A = gw_subspace(code, y, m)
        if A.is_empty():
            found, abandoned = [], 0
        else:
            res = prune_certificates(code, y, A, rho, trials, int(rng.integers(1 << 31)))
            found, abandoned = res.codewords, res.abandoned
        keys = {f.coeffs for f in truth}
        extra = sum(f.coeffs not in keys for f in found)
        return [BoundReport("prune", extra, 0, extra == 0, r=A.dim, m=m, rho=rho, details={
            "oracle_size": len(truth), "found": len(found), "abandoned": abandoned,
            "complete": [f.coeffs for f in found] == [f.coeffs for f in truth],
        })]

    return _suite(samples, seed, body)


def suite_parameter_chain(eps_values: Sequence[Fraction], grid: int = 20) -> list[BoundReport]:
    """Rates R = j/(grid+1) * (s-t+1)/s for j = 1..grid, all strictly inside tau_t < 1."""
    out = []
    for eps in eps_values:
        t, s = bounds.chain_parameters(eps)
        top = Fraction(s - t + 1, s)
        for j in range(1, grid + 1):
            out.append(bounds.check_parameter_chain(eps, Fraction(j, grid + 1) * top))
    return out


def _score(code: FrsCode, y: Word, need: int, t: int):
    _, words = next(code.iter_codebook())
    agree = (words == code.word_array(y)).all(axis=2).sum(axis=1)
    top = np.sort(agree)[::-1][: t + 1]
    return (int((agree >= need).sum()), int(top.sum())), agree


def fuzz_cz(code: FrsCode, t: int, seed: int, restarts: int = 10, steps: int = 200) -> list[tuple[Word, BoundReport]]:
    """Hill-climb on y to maximize the list size at the Chen-Zhang radius.

    Each step overwrites one symbol of y with the matching symbol of a
    high-agreement codeword (or a random one); non-worsening moves are kept.
    Returns the best word of every restart with its theorem check.
    """
    need = code.min_agreement(bounds.cz_radius(code, t))
    msgs, words = next(code.iter_codebook())
    out = []
    for ss in sample_seeds(seed, restarts):
        rng = np.random.default_rng(ss)
        centers = [random_message(code, rng) for _ in range(t + 1)]
        y = planted_word(code, rng, centers, noise=0.0)
        score, agree = _score(code, y, need, t)
        for _ in range(steps):
            j = int(rng.integers(code.n))
            if rng.random() < 0.2:
                src = int(rng.integers(len(msgs)))
            else:
                leaders = np.argsort(-agree, kind="stable")[: t + 1]
                src = int(leaders[int(rng.integers(len(leaders)))])
            cand = list(y)
            cand[j] = tuple(int(v) for v in words[src, j])
            cand = tuple(cand)
            new_score, new_agree = _score(code, cand, need, t)
            if new_score >= score:
                y, score, agree = cand, new_score, new_agree
        rep = bounds.check_cz_theorem(code, y, t)
        rep.seed = ss
        rep.details["fuzz_steps"] = steps
        out.append((y, rep))
    return out


def summarize(reports: Sequence[BoundReport]) -> dict:
    violations = [r for r in reports if not r.holds and r.details.get("in_regime", True)]
    return {"total": len(reports), "holds": sum(r.holds for r in reports), "violations": len(violations)}
