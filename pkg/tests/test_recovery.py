import itertools
from fractions import Fraction

import pytest

from frslab.frs import FrsCode
from frslab.poly import Polynomial
from frslab.recovery import (
    CounterexampleFamily,
    build_counterexample,
    m_for_eps,
    prefix_length,
    verify_counterexample,
)


def test_example_family(recovery_code):
    code = recovery_code
    fam = build_counterexample(code, 2, [1, 2])
    assert fam.p == prefix_length(5, 2, 2) == 2 * 2 // 1 == 4
    # 1-based f_1 = Q_2 Q_4, f_2 = Q_1 Q_3
    assert fam.basis[0] == code.Q[1] * code.Q[3]
    assert fam.basis[1] == code.Q[0] * code.Q[2]
    assert [f.degree for f in fam.basis] == [4, 4]


def test_independence_witness_mod_Q1(recovery_code):
    fam = build_counterexample(recovery_code, 2, [1, 2])
    Q = recovery_code.Q
    assert not (fam.basis[0] % Q[0]).is_zero()
    assert (fam.basis[1] % Q[0]).is_zero()
    # no nontrivial combination vanishes: c1 f1 + c2 f2 = 0 forces c1 = 0 mod Q_1, then c2 = 0
    for c1, c2 in itertools.product(range(13), repeat=2):
        if (c1, c2) != (0, 0):
            assert not (fam.basis[0] * c1 + fam.basis[1] * c2).is_zero()


def test_verify_example(recovery_code):
    rep = verify_counterexample(build_counterexample(recovery_code, 2, [1, 2]))
    assert rep.holds
    assert rep.details["G_size"] == 4
    assert rep.lhs <= 2
    assert rep.details["prefix_fraction"] == Fraction(4, 6)


def test_direct_symbol_counts(recovery_code):
    code = recovery_code
    fam = build_counterexample(code, 2, [1, 2])
    words = set()
    for b1, b2 in itertools.product([1, 2], repeat=2):
        words.add(code.encode(fam.basis[0] * b1 + fam.basis[1] * b2))
    assert len(words) == 4
    for j in range(4):
        assert len({w[j] for w in words}) <= 2


def test_ell_three(recovery_code):
    rep = verify_counterexample(build_counterexample(recovery_code, 2, [1, 2, 3]))
    assert rep.holds and rep.details["G_size"] == 9 and rep.rhs == 3 and rep.lhs <= 3


def test_growth_with_ell(recovery_code):
    sizes = [verify_counterexample(build_counterexample(recovery_code, 2, range(1, ell + 1))).details["G_size"]
             for ell in (1, 2, 3)]
    assert sizes == [1, 4, 9]


def test_singleton_scaling_set(recovery_code):
    fam = build_counterexample(recovery_code, 2, [0])
    members = [g for _, g in fam.members()]
    assert len(members) == 1 and members[0].is_zero()
    assert verify_counterexample(fam).holds


def test_m_exceeding_p():
    code = FrsCode(13, 5, 2, 6)
    with pytest.raises(ValueError):
        build_counterexample(code, 5, [1, 2])


def test_infeasible_parameters():
    with pytest.raises(ValueError, match="m >= 2"):
        build_counterexample(FrsCode(13, 5, 2, 6), 1, [1])
    with pytest.raises(ValueError, match="prefix is empty"):
        build_counterexample(FrsCode(13, 2, 3, 4), 2, [1])
    with pytest.raises(ValueError, match="exceeds n"):
        build_counterexample(FrsCode(31, 9, 2, 3), 2, [1])


def test_corrupted_family_rejected(recovery_code):
    fam = build_counterexample(recovery_code, 2, [1, 2])
    with pytest.raises(ValueError, match="dependent"):
        CounterexampleFamily(recovery_code, 2, fam.p, (fam.basis[1], fam.basis[1]), (1, 2))


def test_larger_family():
    code = FrsCode(29, 7, 2, 14)
    fam = build_counterexample(code, 3, [1, 2])
    assert fam.p == 3 * 3 // 2 == 4
    rep = verify_counterexample(fam)
    assert rep.holds and rep.details["G_size"] == 8


def test_residue_identity_exact(recovery_code):
    fam = build_counterexample(recovery_code, 2, [1, 2, 3])
    Q = recovery_code.Q
    for betas, g in fam.members():
        for j in range(fam.p):
            c = j % fam.m
            assert g % Q[j] == (fam.basis[c] % Q[j]) * betas[c]


def test_m_for_eps():
    assert m_for_eps(Fraction(5, 12), Fraction(5, 12)) == 2
    assert m_for_eps(Fraction(1, 2), Fraction(1, 8)) == 5


def test_family_json(recovery_code):
    d = build_counterexample(recovery_code, 2, [1, 2]).to_dict([2, 2, 2, 2])
    assert d["m"] == 2 and d["p"] == 4 and d["ell"] == 2
    assert all(len(b) == 5 for b in d["basis"])
