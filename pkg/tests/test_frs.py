import itertools
from fractions import Fraction

import numpy as np
import pytest

from frslab.frs import FrsCode, random_message, random_word
from frslab.poly import Polynomial


def test_default_alphas(small_code):
    expected = tuple(pow(2, 3 * i, 13) for i in range(4))
    assert expected == (1, 8, 12, 5)
    assert small_code.alphas == expected
    orbits = [x for orbit in small_code.points for x in orbit]
    assert sorted(orbits) == list(range(1, 13))


@pytest.mark.parametrize("args, match", [
    ((13, 3, 3, 5), "n\\*s"),
    ((13, 14, 2, 4), "q > k"),
    ((4, 1, 1, 1), "not prime"),
])
def test_parameter_errors(args, match):
    with pytest.raises(ValueError, match=match):
        FrsCode(*args)


def test_overlapping_orbits_rejected():
    with pytest.raises(ValueError, match="overlap"):
        FrsCode(13, 2, 2, 2, alphas=[1, 2])
    with pytest.raises(ValueError, match="overlap"):
        FrsCode(13, 2, 2, 2, alphas=[3, 3])
    with pytest.raises(ValueError):
        FrsCode(13, 2, 2, 2, alphas=[0, 3])


def test_custom_alphas():
    code = FrsCode(13, 2, 2, 2, alphas=[1, 4])
    assert code.points == ((1, 2), (4, 8))


def test_rate_is_exact(small_code):
    assert small_code.rate == Fraction(1, 4)
    assert small_code.distance == Fraction(3, 4)


def test_encode_examples(small_code):
    assert small_code.encode([]) == ((0, 0, 0),) * 4
    assert small_code.encode([7]) == ((7, 7, 7),) * 4
    code = FrsCode(13, 2, 2, 6)
    assert code.alphas[0] == 1
    assert code.encode([0, 1])[0] == (1, 2)


def test_encode_rejects_high_degree(small_code):
    with pytest.raises(ValueError, match="degree"):
        small_code.encode([0, 0, 0, 1])


def test_encode_matches_definition(small_code):
    rng = np.random.default_rng(0)
    for _ in range(20):
        f = random_message(small_code, rng)
        w = small_code.encode(f)
        for i, a in enumerate(small_code.alphas):
            assert w[i] == tuple(f.eval_int(a * pow(2, j, 13) % 13) for j in range(3))


def test_encode_array_matches_scalar(recovery_code):
    rng = np.random.default_rng(1)
    msgs = rng.integers(0, 13, size=(50, 5))
    arr = recovery_code.encode_array(msgs)
    for row, enc in zip(msgs, arr):
        assert tuple(map(tuple, enc.tolist())) == recovery_code.encode(row.tolist())


def test_linearity(recovery_code):
    code = recovery_code
    rng = np.random.default_rng(2)
    for _ in range(30):
        f, g = random_message(code, rng), random_message(code, rng)
        a, b = (int(v) for v in rng.integers(0, 13, 2))
        lhs = code.encode(f * a + g * b)
        rhs = tuple(tuple((a * x + b * y) % 13 for x, y in zip(s, t)) for s, t in zip(code.encode(f), code.encode(g)))
        assert lhs == rhs


def test_residue_examples(recovery_code):
    code = recovery_code
    g = code.Q[1] * Polynomial([3, 1], code.field)
    assert code.residue(g, 1).is_zero()
    assert code.encode(g)[1] == (0, 0)
    assert code.residue(Polynomial([9], code.field), 4) == Polynomial([9], code.field)


def test_residue_reproduces_symbols(recovery_code):
    code = recovery_code
    rng = np.random.default_rng(3)
    for _ in range(100):
        g = random_message(code, rng)
        w = code.encode(g)
        for i in range(code.n):
            res = code.residue(g, i)
            assert res.degree < code.s
            assert tuple(res.eval_int(x) for x in code.points[i]) == w[i]


def test_zero_symbol_iff_divisible(recovery_code):
    code = recovery_code
    rng = np.random.default_rng(4)
    for _ in range(200):
        g = random_message(code, rng)
        if rng.random() < 0.5:
            i = int(rng.integers(code.n))
            g = code.Q[i] * Polynomial(rng.integers(0, 13, size=code.k - code.s).tolist(), code.field)
        w = code.encode(g)
        for i in range(code.n):
            assert (w[i] == (0,) * code.s) == (g % code.Q[i]).is_zero()


def test_distinct_codewords_never_agree_small(small_code):
    # floor((k-1)/s) = 0: every coordinate separates all 2197 codewords
    _, words = next(small_code.iter_codebook())
    for i in range(small_code.n):
        assert len({tuple(s) for s in words[:, i, :].tolist()}) == 13**3


@pytest.mark.parametrize("params", [(13, 3, 3, 4), (13, 5, 2, 6), (17, 4, 2, 8)])
def test_pairwise_agreement_bound(params):
    # pairs differ by a nonzero message; its zero symbols are the pair's agreements
    code = FrsCode(*params)
    msgs, words = next(code.iter_codebook())
    zeros = (words == 0).all(axis=2).sum(axis=1)
    nonzero = msgs.any(axis=1)
    assert zeros[nonzero].max() <= code.max_pair_agreement <= code.rate * code.n


def test_agreement_and_ball(small_code):
    code = small_code
    w = code.encode([1, 2, 3])
    assert code.agreement(w, w) == 4
    assert code.in_ball(w, w, Fraction(1, 100))
    assert not code.in_ball(w, w, Fraction(0))
    v = (w[0], w[1], w[2], (0, 0, 0) if w[3] != (0, 0, 0) else (1, 1, 1))
    assert code.agreement(w, v) == 3
    assert not code.in_ball(w, v, Fraction(1, 4))
    assert code.in_ball(w, v, Fraction(1, 4) + Fraction(1, 1000))
    with pytest.raises(ValueError):
        code.agreement(w, w[:3])


def test_ball_monotone_in_radius(small_code):
    rng = np.random.default_rng(5)
    radii = [Fraction(j, 16) for j in range(18)]
    for _ in range(30):
        a, b = random_word(small_code, rng), random_word(small_code, rng)
        inside = [small_code.in_ball(a, b, r) for r in radii]
        assert inside == sorted(inside)


def test_min_agreement(small_code):
    assert small_code.min_agreement(Fraction(1, 2)) == 3
    assert small_code.min_agreement(Fraction(3, 4)) == 2
    assert small_code.min_agreement(Fraction(0)) == 5
    assert small_code.min_agreement(Fraction(2)) == 0


def test_tau(small_code):
    assert small_code.tau(1) == small_code.rate
    assert small_code.tau(2) == Fraction(3, 8)
    assert small_code.tau(3) == Fraction(3, 4)
    with pytest.raises(ValueError):
        small_code.tau(4)


def test_descriptor_round_trip(small_code):
    assert FrsCode.from_descriptor(small_code.descriptor()) == small_code
