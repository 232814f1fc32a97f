"""Ground truth by exhaustive enumeration over conjugacy classes of S_n.

Conjugation-invariant tallies (product cycle type, number of common fixed
points) fix ``alpha`` to the first member of its class and scale by the class
size; :func:`representative_scaling_audit` checks this against the full
double enumeration.  Separation tallies look at specific points ``1..m`` and
enumerate every pair of ``C_lam x C_mu``.

The ``symmetrized`` separation method is the shortcut that stays valid for
any ``alpha``: the multiset ``{alpha * beta}`` over both classes is closed under
conjugation, so given its cycle type ``nu`` a product is uniform on ``C_nu``.
Hence ``#separated pairs = sum_nu #pairs(nu) * |X & C_nu| / |C_nu|`` where
``|X & C_nu|`` is itself counted by enumerating ``C_nu``.
"""

from __future__ import annotations

import itertools
import os
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any

import numpy as np

from . import kernel
from .core import (
    Composition,
    Partition,
    Permutation,
    PreconditionError,
    class_members,
    class_size,
    hook,
    partitions,
)

DEFAULT_MAX_N = int(os.environ.get("PERMFACT_ORACLE_MAX_N", "8"))


class OracleBoundError(RuntimeError):
    """Refusal to enumerate above the configured size bound."""

    def __init__(self, n: int, bound: int, pairs: int):
        self.n, self.bound, self.pairs = n, bound, pairs
        super().__init__(
            f"n={n} exceeds oracle bound {bound}; the query needs {pairs} products "
            f"(pass max_n={n} to override; kernel limit {kernel.MAX_KERNEL_N})"
        )


@dataclass
class OracleResult:
    query: dict[str, Any]
    value: Any
    pairs: int
    threads: int
    seconds: float = field(compare=False)


def cost_table(n_max: int = kernel.MAX_KERNEL_N) -> list[dict[str, int]]:
    """Worst-case products for a fixed-representative and a full-class query."""
    rows = []
    for n in range(1, n_max + 1):
        biggest = max(class_size(p) for p in partitions(n))
        rows.append({"n": n, "fixed_alpha_max": biggest, "full_pair_max": biggest * biggest})
    return rows


def _check_bound(n: int, pairs: int, max_n: int | None):
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > min(bound, kernel.MAX_KERNEL_N):
        raise OracleBoundError(n, min(bound, kernel.MAX_KERNEL_N), pairs)


@lru_cache(maxsize=128)
def class_array(lam: Partition) -> np.ndarray:
    arr = np.array(class_members(Partition(lam)), dtype=np.int8).reshape(-1, Partition(lam).n)
    arr.setflags(write=False)
    return arr


def _chunks(betas: np.ndarray, threads: int) -> list[np.ndarray]:
    # Rows are lexicographic, so grouping by the image of point 0 splits the
    # class into contiguous anchor blocks.
    if len(betas) == 0:
        return []
    cuts = np.flatnonzero(np.diff(betas[:, 0])) + 1 if betas.shape[1] else np.array([], dtype=int)
    blocks = np.split(betas, cuts)
    if threads <= 1:
        return blocks
    out = []
    for blk in blocks:
        step = max(1, -(-len(blk) // threads))
        out.extend(blk[i : i + step] for i in range(0, len(blk), step))
    return out


def _tally_block(alphas: np.ndarray, betas: np.ndarray, m_sep: int) -> Counter:
    keys = kernel.pair_keys(alphas, betas, m_sep)
    uniq, counts = np.unique(keys, return_counts=True)
    return Counter(dict(zip(uniq.tolist(), counts.tolist())))


def tally(alphas: np.ndarray, betas: np.ndarray, m_sep: int = 0, threads: int = 1) -> Counter:
    """Key histogram of ``alpha * beta`` over all row pairs."""
    jobs = _chunks(betas, threads)
    total: Counter = Counter()
    if threads <= 1:
        for blk in jobs:
            total.update(_tally_block(alphas, blk, m_sep))
        return total
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(lambda blk: _tally_block(alphas, blk, m_sep), jobs):
            total.update(part)
    return total


@lru_cache(maxsize=512)
def _type_fixed_counts(lam: Partition, mu: Partition) -> dict[tuple[Partition, int], int]:
    return _type_fixed_uncached(lam, mu, 1)


def _type_fixed_uncached(lam, mu, threads):
    n = lam.n
    alphas = class_array(lam)[:1]
    raw = tally(alphas, class_array(mu), 0, threads)
    scale = class_size(lam)
    out: dict[tuple[Partition, int], int] = {}
    for key, c in raw.items():
        typ, fixed, _ = kernel.decode_key(key, n, 0)
        out[typ, fixed] = out.get((typ, fixed), 0) + c * scale
    return out


def triple_counts(lam: Partition, mu: Partition, threads: int = 1, max_n: int | None = None,
                  cache: bool = True) -> OracleResult:
    """``{(type of sigma, common fixed points): #(sigma, alpha, beta)}`` with
    ``sigma * alpha * beta = e``, ``alpha in C_lam``, ``beta in C_mu``.

    ``sigma`` is the inverse of ``alpha * beta`` and so has the same type.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise PreconditionError("lam and mu must have the same size")
    _check_bound(lam.n, class_size(mu), max_n)
    t0 = time.perf_counter()
    if cache and threads == 1:
        value = dict(_type_fixed_counts(lam, mu))
    else:
        value = _type_fixed_uncached(lam, mu, threads)
    return OracleResult(
        {"op": "triples", "lambda": list(lam), "mu": list(mu)},
        value,
        class_size(mu),
        threads,
        time.perf_counter() - t0,
    )


def _counts(lam, mu, max_n=None):
    return triple_counts(lam, mu, max_n=max_n).value


def a_count(m: int, lam: Partition, mu: Partition, max_n: int | None = None) -> int:
    """``a(m, lam, mu)``: triples whose ``sigma`` has ``m`` cycles."""
    return sum(c for (typ, _), c in _counts(Partition(lam), Partition(mu), max_n).items() if len(typ) == m)


def a_s_count(m: int, s: int, lam: Partition, mu: Partition, max_n: int | None = None) -> int:
    """``a_s(m, lam, mu)``: as :func:`a_count` with exactly ``s`` common fixed points."""
    return sum(
        c for (typ, f), c in _counts(Partition(lam), Partition(mu), max_n).items() if len(typ) == m and f == s
    )


def cycle_count_distribution(lam: Partition, mu: Partition, max_n: int | None = None) -> dict[int, int]:
    dist: dict[int, int] = {}
    for (typ, _), c in _counts(Partition(lam), Partition(mu), max_n).items():
        dist[len(typ)] = dist.get(len(typ), 0) + c
    return dict(sorted(dist.items()))


def connection_coefficient(nu: Partition, lam: Partition, mu: Partition, max_n: int | None = None) -> int:
    """``c^nu_{lam,mu}``: factorizations of a fixed type-``nu`` element."""
    nu = Partition(nu)
    pairs = sum(c for (typ, _), c in _counts(Partition(lam), Partition(mu), max_n).items() if typ == nu)
    q, r = divmod(pairs, class_size(nu))
    assert r == 0
    return q


def nu_oracle(rho: Partition, lam: Partition, max_n: int | None = None) -> int:
    """``nu_rho(lam) = c^lam_{(n), (n-a) u rho}`` by enumeration."""
    rho, lam = Partition(rho), Partition(lam)
    n = lam.n
    if rho.n >= n:
        raise PreconditionError("need |rho| < n")
    return connection_coefficient(lam, Partition([n]), Partition([n - rho.n]).union(rho), max_n)


def representative_scaling_audit(lam: Partition, mu: Partition, max_n: int = 6) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    _check_bound(lam.n, class_size(lam) * class_size(mu), max_n)
    full = tally(class_array(lam), class_array(mu), 0)
    fixed = tally(class_array(lam)[:1], class_array(mu), 0)
    scale = class_size(lam)
    return full == Counter({k: v * scale for k, v in fixed.items()})


def _sep_m(m_sep: int, n: int) -> int:
    if m_sep > min(n, kernel.MAX_SEP):
        raise PreconditionError(f"m={m_sep} exceeds min(n, {kernel.MAX_SEP})")
    return m_sep


@lru_cache(maxsize=256)
def _rgs_full(lam: Partition, mu: Partition, m_sep: int) -> dict[tuple[int, ...], int]:
    return _rgs_full_uncached(lam, mu, m_sep, 1)


def _rgs_full_uncached(lam, mu, m_sep, threads):
    raw = tally(class_array(lam), class_array(mu), m_sep, threads)
    out: dict[tuple[int, ...], int] = {}
    for key, c in raw.items():
        rgs = kernel.decode_key(key, lam.n, m_sep)[2]
        out[rgs] = out.get(rgs, 0) + c
    return out


@lru_cache(maxsize=256)
def _rgs_by_type(nu: Partition, m_sep: int) -> dict[tuple[int, ...], int]:
    ident = np.arange(nu.n, dtype=np.int8)[None, :]
    raw = tally(class_array(nu), ident, m_sep)
    out: dict[tuple[int, ...], int] = {}
    for key, c in raw.items():
        rgs = kernel.decode_key(key, nu.n, m_sep)[2]
        out[rgs] = out.get(rgs, 0) + c
    return out


def separation_tally(lam: Partition, mu: Partition, m_sep: int, method: str = "full",
                     threads: int = 1, max_n: int | None = None, cache: bool = True) -> dict[tuple[int, ...], Fraction | int]:
    """Pair counts by the set partition of ``{1..m_sep}`` cut out by the cycles of the product."""
    lam, mu = Partition(lam), Partition(mu)
    n = lam.n
    if mu.n != n:
        raise PreconditionError("lam and mu must have the same size")
    _sep_m(m_sep, n)
    _check_bound(n, class_size(lam) * class_size(mu), max_n)
    if method == "full":
        if cache and threads == 1:
            return dict(_rgs_full(lam, mu, m_sep))
        return _rgs_full_uncached(lam, mu, m_sep, threads)
    if method == "symmetrized":
        out: dict[tuple[int, ...], Fraction] = {}
        for (typ, _), pairs in _counts(lam, mu, max_n).items():
            per = _rgs_by_type(typ, m_sep)
            size = class_size(typ)
            for rgs, c in per.items():
                out[rgs] = out.get(rgs, 0) + Fraction(pairs * c, size)
        return out
    raise ValueError(f"unknown method {method!r}")


def rgs_separates(rgs: tuple[int, ...], comp: Composition, mode: str) -> bool:
    """Whether the induced set partition ``rgs`` separates the blocks of ``comp``."""
    labels = comp.block_labels()
    cyc_of_block: dict[int, set[int]] = {}
    block_of_cyc: dict[int, set[int]] = {}
    for x, h in enumerate(labels):
        cyc_of_block.setdefault(h, set()).add(rgs[x])
        block_of_cyc.setdefault(rgs[x], set()).add(h)
    if any(len(b) > 1 for b in block_of_cyc.values()):
        return False
    if mode == "standard":
        return True
    if mode == "strong":
        return all(len(c) == 1 for c in cyc_of_block.values())
    raise ValueError(f"unknown mode {mode!r}")


def ratio_from_tally(tal: dict[tuple[int, ...], Any], comp: Composition, mode: str) -> Fraction:
    comp = Composition(comp)
    m = comp.m
    total = sum(tal.values())
    good = Counter()
    for rgs, c in tal.items():
        good[rgs[:m]] += c
    hit = sum(c for r, c in good.items() if rgs_separates(r, comp, mode))
    return Fraction(hit) / Fraction(total)


def separation_ratio(lam: Partition, mu: Partition, comp: Composition, mode: str = "strong",
                     method: str = "full", threads: int = 1, max_n: int | None = None) -> Fraction:
    comp = Composition(comp)
    lam = Partition(lam)
    if comp.m > lam.n:
        raise PreconditionError("composition larger than the ground set")
    m_sep = min(lam.n, kernel.MAX_SEP, max(comp.m, 1))
    tal = separation_tally(lam, mu, m_sep, method, threads, max_n)
    return ratio_from_tally(tal, comp, mode)


def parity_separation_tally(n: int, parity: int, m_sep: int) -> dict[tuple[int, ...], int]:
    """Counts of all permutations of sign ``parity`` in ``S_n`` by induced set partition."""
    out: dict[tuple[int, ...], int] = {}
    for lam in partitions(n):
        if lam.sign != parity:
            continue
        for rgs, c in _rgs_by_type(lam, m_sep).items():
            out[rgs] = out.get(rgs, 0) + c
    return out


def uniform_separation_tally(n: int, m_sep: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for lam in partitions(n):
        for rgs, c in _rgs_by_type(lam, m_sep).items():
            out[rgs] = out.get(rgs, 0) + c
    return out


def type_separation_tally(lam: Partition, m_sep: int) -> dict[tuple[int, ...], int]:
    return dict(_rgs_by_type(Partition(lam), m_sep))


def nu_per_sigma(lam: Partition, a: int, rho: Partition | None = None) -> list[int]:
    """For every ``sigma`` of type ``lam``: #beta of type ``(n-a) u rho`` with ``sigma beta^-1`` a full cycle."""
    lam = Partition(lam)
    n = lam.n
    rho = Partition([1] * a) if rho is None else Partition(rho)
    mu = Partition([n - a]).union(rho)
    # beta ranges over C_mu exactly when beta^-1 does.
    keys = kernel.pair_keys(class_array(lam), class_array(mu), 0).reshape(-1, class_size(mu))
    full = n * (n + 1)  # key of an n-cycle; it has no fixed points
    return [int(v) for v in (keys == full).sum(axis=1)]


def conjugacy_invariance_audit(n: int, a_values=None) -> bool:
    if n > 6:
        raise PreconditionError("audit is limited to n <= 6")
    a_values = range(1, n) if a_values is None else a_values
    for lam in partitions(n):
        for a in a_values:
            counts = nu_per_sigma(lam, a)
            if len(set(counts)) > 1:
                return False
    return True


def lehman_enumerate(sigma: Permutation, a: int) -> tuple[int, dict[Permutation, int]]:
    """All Lehman sequences ``(x, b_1, ..., b_{n-1})`` of type ``a`` for ``sigma``.

    Edges ``b_i -> sigma(b_i)`` (``i < a``), ``b_a -> sigma(x)`` and
    ``b_i -> sigma(b_{i-1})`` (``i > a``) must be acyclic.  Each sequence maps
    to ``beta = (b_1)...(b_{a-1})(b_a ... b_{n-1})``; returns the count and
    the fiber size of each ``beta``.
    """
    n = len(sigma)
    if not 1 <= a < n:
        raise PreconditionError("need 1 <= a < n")
    if n > 9:
        raise OracleBoundError(n, 9, factorial(n) * n)
    succ = [-1] * n
    used = [False] * n
    seq: list[int] = []
    fibers: Counter = Counter()

    def closes_cycle(u, v):
        while v != -1:
            if v == u:
                return True
            v = succ[v]
        return False

    def emit():
        images = list(range(n))
        cyc = seq[a - 1:]
        for s, t in zip(cyc, cyc[1:] + cyc[:1]):
            images[s] = t
        fibers[Permutation(images)] += 1

    def extend(i, x):
        # place b_i (1-based i), i >= a
        if i == n:
            emit()
            return
        target = sigma[x] if i == a else sigma[seq[-1]]
        for b in range(n):
            if used[b] or closes_cycle(b, target):
                continue
            used[b] = True
            succ[b] = target
            seq.append(b)
            extend(i + 1, x)
            seq.pop()
            succ[b] = -1
            used[b] = False

    def prefix(i):
        if i == a:
            for x in range(n):
                extend(a, x)
            return
        for b in range(n):
            if used[b] or closes_cycle(b, sigma[b]):
                continue
            used[b] = True
            succ[b] = sigma[b]
            seq.append(b)
            prefix(i + 1)
            seq.pop()
            succ[b] = -1
            used[b] = False

    prefix(1)
    return sum(fibers.values()), dict(fibers)


def factorizing_betas(sigma: Permutation, a: int) -> set[Permutation]:
    """All ``beta`` of type ``(n-a, 1^a)`` with ``sigma * beta^-1`` a full cycle."""
    n = len(sigma)
    out = set()
    for images in class_members(hook(n, a)):
        beta = Permutation(images)
        if len((sigma * beta.inverse()).cycles()) == 1:
            out.add(beta)
    return out


def brute_acyclic_subsets(lam: Partition, a: int) -> int:
    """Acyclic ``(a-1)``-subsets of edges of the functional graph of a type-``lam`` permutation."""
    lam = Partition(lam)
    cycles, start = [], 0
    for p in lam:
        cycles.append(set(range(start, start + p)))
        start += p
    count = 0
    for subset in itertools.combinations(range(lam.n), a - 1):
        chosen = set(subset)
        if not any(c <= chosen for c in cycles):
            count += 1
    return count
