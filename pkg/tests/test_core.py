from fractions import Fraction
from math import factorial

import pytest

from permfact.core import (
    Composition,
    ConsistencyError,
    Partition,
    Permutation,
    PreconditionError,
    binom,
    class_members,
    class_size,
    compose,
    compositions,
    exact_div,
    falling,
    gen_binom,
    hook,
    partitions,
    rational_from_json,
    rational_to_json,
    stirling_unsigned,
    z_lambda,
)


def test_partition_normalizes_and_counts():
    lam = Partition([1, 3, 2, 1])
    assert lam == (3, 2, 1, 1) and lam.n == 7 and lam.length == 4
    assert lam.m(1) == 2 and lam.m(5) == 0
    assert Partition.parse("(3, 2,1,1)") == lam
    with pytest.raises(PreconditionError):
        Partition([2, 0])


def test_partition_sign_and_conjugate():
    assert Partition([2, 1]).sign == -1
    assert Partition([3]).sign == 1
    assert Partition([4, 2, 1]).conjugate() == Partition([3, 2, 1, 1])


def test_up_down_strip():
    lam = Partition([3, 2, 1, 1])
    assert lam.down(1) == Partition([3, 2, 1])
    assert lam.down(3) == Partition([2, 2, 1, 1])
    assert lam.up(2) == Partition([3, 3, 1, 1])
    assert lam.strip_ones(2) == Partition([3, 2])
    with pytest.raises(PreconditionError):
        lam.down(4)
    with pytest.raises(PreconditionError):
        lam.strip_ones(3)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(lam) for lam in partitions(n)) == factorial(n)


def test_class_size_examples():
    assert class_size(Partition([5])) == 24
    assert z_lambda(Partition([2, 2])) == 8
    assert class_size(Partition([2, 2])) == 3


@pytest.mark.parametrize("lam", [Partition([3, 1]), Partition([2, 2, 1]), Partition([4, 2])])
def test_class_members_have_right_type(lam):
    members = class_members(lam)
    assert len(members) == class_size(lam) == len(set(members))
    assert all(Permutation(p).cycle_type() == lam for p in members)


def test_hook():
    assert hook(5, 2) == Partition([3, 1, 1])
    assert hook(4, 3) == Partition([1, 1, 1, 1])
    with pytest.raises(PreconditionError):
        hook(3, 3)


def test_compositions():
    assert [len(compositions(m)) for m in range(1, 7)] == [1, 2, 4, 8, 16, 32]
    assert compositions(4, 2) == [Composition([1, 3]), Composition([2, 2]), Composition([3, 1])]
    c = Composition([2, 1, 3])
    assert (c.m, c.k, c.factorial_product()) == (6, 3, 12)
    assert c.block_labels() == (0, 0, 1, 2, 2, 2)
    assert c.decrement(1) == Composition([2, 3]) and c.decrement(0) == Composition([1, 1, 3])
    assert Composition.parse("1,1") == Composition([1, 1])
    with pytest.raises(PreconditionError):
        Composition([1, 0])


def test_compose_convention():
    p = Permutation.from_cycles([(1, 2, 3), (4, 5), (6, 7)], 7)
    q = Permutation.from_cycles([(1, 3, 7, 5, 2)], 7)
    assert p * q.inverse() == Permutation.from_cycles([(1, 3, 2, 4, 5, 6, 7)], 7)
    a = Permutation.from_cycles([(1, 2)], 3)
    b = Permutation.from_cycles([(2, 3)], 3)
    # b first: 2 -> 3 -> 3, 3 -> 2 -> 1
    assert compose(a, b).oneline() == [2, 3, 1]


def test_permutation_helpers():
    p = Permutation.from_oneline([2, 1, 3, 5, 4])
    assert p.cycles() == [(1, 2), (3,), (4, 5)]
    assert p.cycle_count() == 3 and p.fixed_points() == [3] and p.sign() == 1
    assert p * p.inverse() == Permutation.identity(5)
    with pytest.raises(PreconditionError):
        Permutation([0, 0, 1])
    with pytest.raises(PreconditionError):
        Permutation.from_cycles([(1, 2), (2, 3)], 3)


def test_falling():
    assert falling(5, 3) == 60 and falling(5, 0) == 1 and falling(2, 3) == 0
    assert falling(4, -1) == Fraction(1, 5)
    with pytest.raises(PreconditionError):
        falling(-1, -1)
    with pytest.raises(PreconditionError):
        falling(3, -2)


def test_binomials():
    assert binom(5, 2) == 10 and binom(2, 5) == 0 and binom(-1, 0) == 0 and binom(3, -1) == 0
    assert gen_binom(-1, 3) == -1 and gen_binom(-2, 2) == 3 and gen_binom(4, 2) == 6


def test_stirling():
    assert [stirling_unsigned(4, m) for m in range(5)] == [0, 6, 11, 6, 1]
    assert sum(stirling_unsigned(6, m) for m in range(7)) == factorial(6)
    with pytest.raises(PreconditionError):
        stirling_unsigned(-1, 0)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ConsistencyError):
        exact_div(7, 2)


def test_rational_json_roundtrip():
    q = Fraction(-22, 7)
    assert rational_to_json(q) == {"num": "-22", "den": "7"}
    assert rational_from_json(rational_to_json(q)) == q
