from math import factorial

import pytest

from permfact.characters import (
    HookIndex,
    character_table,
    column_orthogonality,
    conn_coeff_characters,
    hook_character,
    littlewood_sum,
    mn_character,
    nu_rho_characters,
)
from permfact.core import Partition, class_size, partitions
from permfact.oracle import connection_coefficient


def test_s3_table():
    t = character_table(3)
    assert t[Partition([2, 1]), Partition([1, 1, 1])] == 2
    assert t[Partition([2, 1]), Partition([3])] == -1
    assert t[Partition([1, 1, 1]), Partition([2, 1])] == -1


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality_and_degrees(n):
    parts = partitions(n)
    ident = Partition([1] * n)
    assert sum(mn_character(pi, ident) ** 2 for pi in parts) == factorial(n)
    for pi in parts:
        norm = sum(class_size(mu) * mn_character(pi, mu) ** 2 for mu in parts)
        assert norm == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    assert column_orthogonality(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_hook_formula_matches_ribbon_rule(n):
    for i in range(n):
        h = HookIndex(n, i)
        for lam in partitions(n):
            assert hook_character(h, lam) == mn_character(h.partition, lam)


def test_binomial_convention_witness():
    lam = Partition([2, 2])
    assert littlewood_sum(1, lam, "generalized") == mn_character(Partition([3, 1]), lam) == -1
    assert littlewood_sum(1, lam, "truncated") == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_connection_coefficients_vs_enumeration(n):
    full = Partition([n])
    for mu in partitions(n):
        for lam in partitions(n):
            assert conn_coeff_characters(lam, full, mu) == connection_coefficient(lam, full, mu)


def test_nu_rho_characters_example():
    assert nu_rho_characters(Partition([1, 1]), Partition([3, 2, 2])) == 168
