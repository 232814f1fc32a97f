"""Irreducible characters of S_n and connection coefficients."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import (
    ConsistencyError,
    Partition,
    PreconditionError,
    gen_binom,
    hook,
    partitions,
    z_lambda,
)


@dataclass(frozen=True)
class HookIndex:
    """The hook ``(n - i, 1^i)``; ``i = 0`` is the row, ``i = n - 1`` the column."""

    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i < self.n:
            raise PreconditionError(f"hook leg {self.i} out of range for n={self.n}")

    @property
    def partition(self) -> Partition:
        return hook(self.n, self.i)


def _beta_set(pi: Partition) -> tuple[int, ...]:
    ell = len(pi)
    return tuple(p + ell - 1 - i for i, p in enumerate(pi))


def _from_beta(beads) -> Partition:
    beads = sorted(beads, reverse=True)
    ell = len(beads)
    return Partition(b - (ell - 1 - i) for i, b in enumerate(beads) if b - (ell - 1 - i) > 0)


@lru_cache(maxsize=None)
def _mn(pi: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], Partition(mu[1:])
    beads = _beta_set(pi)
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        shape = _from_beta((occupied - {b}) | {target})
        total += (-1) ** height * _mn(shape, rest)
    return total


def mn_character(pi: Partition, mu: Partition) -> int:
    """``chi^pi(mu)`` by ribbon removal, largest part of ``mu`` first."""
    pi, mu = Partition(pi), Partition(mu)
    if pi.n != mu.n:
        raise PreconditionError(f"size mismatch: |{pi}| != |{mu}|")
    return _mn(pi, mu)


def littlewood_sum(i: int, lam: Partition, convention: str = "generalized") -> int:
    """Alternating binomial sum over ``rho |- i`` for the hook ``(n-i, 1^i)``.

    When ``m_1(lam) = 0`` the factor ``binom(m_1 - 1, r_1)`` is ambiguous.
    ``"generalized"`` reads it as ``(-1)^{r_1}`` and agrees with
    :func:`mn_character`; ``"truncated"`` keeps only ``r_1 <= max(m_1 - 1, 0)``
    with ordinary binomials and does not.
    """
    total = 0
    m1 = lam.m(1)
    for rho in partitions(i):
        sign = (-1) ** sum(rho.m(j) for j in range(2, i + 1, 2))
        if convention == "generalized":
            term = gen_binom(m1 - 1, rho.m(1))
        elif convention == "truncated":
            if rho.m(1) > max(m1 - 1, 0):
                continue
            term = comb(max(m1 - 1, 0), rho.m(1))
        else:
            raise ValueError(f"unknown convention {convention!r}")
        for j, r in rho.multiplicities().items():
            if j == 1:
                continue
            term *= comb(lam.m(j), r) if r <= lam.m(j) else 0
        total += sign * term
    return total


def hook_character(h: HookIndex, lam: Partition) -> int:
    lam = Partition(lam)
    if lam.n != h.n:
        raise PreconditionError(f"size mismatch: |{lam}| != {h.n}")
    n, i = h.n, h.i
    if i <= n - i - 1:
        return littlewood_sum(i, lam)
    return lam.sign * littlewood_sum(n - i - 1, lam)


_table_lock = threading.Lock()
_tables: dict[int, dict[tuple[Partition, Partition], int]] = {}


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full table ``{(pi, mu): chi^pi(mu)}`` for ``S_n``, cached per ``n``."""
    with _table_lock:
        table = _tables.get(n)
        if table is None:
            parts = partitions(n)
            table = {(pi, mu): _mn(pi, mu) for pi in parts for mu in parts}
            _tables[n] = table
    return table


def conn_coeff_characters(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^lam_{mu,nu}`` from the character-sum formula."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.n
    if not (mu.n == nu.n == n):
        raise PreconditionError("all three partitions must have the same size")
    table = character_table(n)
    ones = Partition([1] * n)
    s = Fraction(0)
    for pi in partitions(n):
        s += Fraction(table[pi, lam] * table[pi, mu] * table[pi, nu], table[pi, ones])
    value = s * factorial(n) / (z_lambda(mu) * z_lambda(nu))
    if value.denominator != 1:
        raise ConsistencyError(f"non-integer connection coefficient {value}")
    return int(value)


def nu_rho_characters(rho: Partition, lam: Partition) -> int:
    """``nu_rho(lam)`` via the sum restricted to hooks ``i <= a-1`` or ``i >= n-a``.

    Requires ``n > 2a`` so that ``n - a`` is not a part of ``rho``.
    """
    rho, lam = Partition(rho), Partition(lam)
    a, n = rho.n, lam.n
    if a >= n:
        raise PreconditionError(f"need a < n, got a={a}, n={n}")
    if n <= 2 * a:
        raise PreconditionError(f"hook-restricted sum needs n > 2a (n={n}, a={a})")
    s = Fraction(0)
    for i in range(n):
        if i <= a - 1:
            inner = mn_character(hook(a, i), rho)
        elif i >= n - a:
            inner = (-1) ** (n - a - 1) * mn_character(Partition([n - i] + [1] * (i - n + a)), rho)
        else:
            continue
        s += Fraction(hook_character(HookIndex(n, i), lam) * (-1) ** i * inner, comb(n - 1, i))
    value = s * factorial(n) / (n * (n - a) * z_lambda(rho))
    if value.denominator != 1:
        raise ConsistencyError(f"non-integer nu value {value}")
    return int(value)


def nu_full_cycles(lam: Partition) -> int:
    """``c^lam_{(n),(n)}`` via the hook sum with ``chi((n))^2 = 1``."""
    lam = Partition(lam)
    n = lam.n
    s = sum(Fraction(hook_character(HookIndex(n, i), lam), comb(n - 1, i)) for i in range(n))
    value = s * factorial(n) / (n * n)
    if value.denominator != 1:
        raise ConsistencyError(f"non-integer connection coefficient {value}")
    return int(value)


def hook_row(n: int, lam: Partition) -> list[int]:
    return [hook_character(HookIndex(n, i), lam) for i in range(n)]


def column_orthogonality(n: int) -> bool:
    table = character_table(n)
    parts = partitions(n)
    for lam in parts:
        for mu in parts:
            s = sum(table[pi, lam] * table[pi, mu] for pi in parts)
            if s != (z_lambda(lam) if lam == mu else 0):
                return False
    return True


__all__ = [
    "HookIndex",
    "mn_character",
    "hook_character",
    "littlewood_sum",
    "character_table",
    "conn_coeff_characters",
    "nu_rho_characters",
    "nu_full_cycles",
    "hook_row",
    "column_orthogonality",
]
