import pytest

from permfact import oracle
from permfact.core import Partition, PreconditionError, class_size, partitions, stirling_unsigned
from permfact.products import (
    FIXED_FIRST,
    TRIPLE,
    TripleCount,
    a0_hooks,
    a_hooks,
    a_hooks_distribution,
    a_rr,
    common_fixed_point_split,
    corollary15_eval,
    equal_cycles_printed,
    eq17_printed,
    erratum_witnesses,
    hook_pair,
    hooks_report,
    lemma31_eval,
    onestage_recurrence,
    theorem33_printed,
)

P = Partition


def test_two_cycle_conventions():
    assert a_rr(2, 4).value == 30
    assert a_rr(2, 4, FIXED_FIRST).value == 5 == eq17_printed(2, 4)
    assert a_rr(3, 4).value == 0
    t = a_rr(2, 4)
    assert t.to(FIXED_FIRST, P([4])) == TripleCount(5, FIXED_FIRST)
    assert t.to(FIXED_FIRST, P([4])).to(TRIPLE, P([4])) == t
    with pytest.raises(ValueError):
        a_rr(1, 3, "other")
    with pytest.raises(PreconditionError):
        a_rr(1, 0)


@pytest.mark.parametrize("r", range(1, 9))
def test_two_cycles_vs_enumeration(r):
    for m in range(1, r + 1):
        assert a_rr(m, r).value == oracle.a_count(m, P([r]), P([r]))


def test_hook_pair():
    assert hook_pair(3, 2, 1) == (P([4, 1]), P([3, 1, 1]))
    with pytest.raises(PreconditionError):
        hook_pair(2, 1, 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_fixed_point_free_counts(n):
    for i in range(2, n + 1):
        j = n - i
        for t in range(j + 1):
            lam, mu = hook_pair(i, j, t)
            for m in range(0, n + 1):
                assert a0_hooks(m, i, j, t) == oracle.a_s_count(m, 0, lam, mu)


def test_identity_second_factor():
    # i = 1: mu is the identity, so sigma is determined by alpha
    for j in range(0, 6):
        for t in range(j + 1):
            lam, _ = hook_pair(1, j, t)
            dist = a_hooks_distribution(1, j, t)
            assert dist == {lam.length: class_size(lam)}


def test_hooks_report_shape():
    r = hooks_report(3, 2, 1)
    assert r["lambda"] == P([4, 1]) and r["mu"] == P([3, 1, 1])
    assert r["mass_ok"] and r["parity_ok"]
    assert r["mass"] == class_size(P([4, 1])) * class_size(P([3, 1, 1]))


def test_full_cycle_times_hook():
    for n in range(2, 8):
        for i in range(2, n + 1):
            for m in range(1, n + 1):
                assert lemma31_eval(m, i, n - i) == oracle.a_count(m, P([n]), P([i] + [1] * (n - i)))
    with pytest.raises(PreconditionError):
        lemma31_eval(1, 1, 1)


def test_printed_hook_sums():
    assert equal_cycles_printed(3, 2, 1) == 6
    assert a_hooks(3, 2, 1, 0) == oracle.a_count(3, *hook_pair(2, 1, 0)) == 3
    assert theorem33_printed(3, 3, 0, 0) == 1 and a_hooks(3, 3, 0, 0) == 2
    assert theorem33_printed(1, 2, 3, 0) == 30 and a_hooks(1, 2, 3, 0) == 0
    with pytest.raises(PreconditionError):
        theorem33_printed(2, 3, 0, 0)


def test_erratum_witnesses_are_real():
    for w in erratum_witnesses():
        assert w["printed"] != w["truth"] == w["adopted"], w["id"]


@pytest.mark.parametrize("n", range(1, 6))
def test_split_and_one_stage(n):
    for lam in partitions(n):
        for mu in partitions(n):
            for m in range(1, n + 1):
                assert common_fixed_point_split(lam, mu, m)["ok"]
                if mu.m(1):
                    left, right = corollary15_eval(lam, mu, m)
                    assert left == right
                    if not lam.m(2):
                        left, right = onestage_recurrence(lam, mu, m)
                        assert left == right


def test_one_stage_preconditions():
    with pytest.raises(PreconditionError):
        corollary15_eval(P([3]), P([3]), 1)
    with pytest.raises(PreconditionError):
        onestage_recurrence(P([2, 1]), P([2, 1]), 1)


def test_stirling_column_sums():
    for r in range(1, 8):
        assert sum(a_rr(m, r, FIXED_FIRST).value for m in range(1, r + 1)) == class_size(P([r]))
    assert stirling_unsigned(5, 2) == 50
    assert a_rr(1, 3).value == 2  # alpha = beta among the two 3-cycles
