"""Cycle-count distribution of a product of two cycles.

Counts are of triples ``(sigma, alpha, beta)`` with ``sigma alpha beta = e``,
``alpha`` of type ``lam``, ``beta`` of type ``mu`` and ``sigma`` with ``m``
cycles (the *triple* convention).  Fixing ``alpha`` instead divides by
``|C_lam|`` (the *fixed_first_factor* convention).

Hook pairs are written ``(i, j, t)`` for ``lam = (i+t, 1^(j-t))`` and
``mu = (i, 1^j)``, both of size ``n = i + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import (
    Partition,
    PreconditionError,
    binom,
    class_size,
    exact_div,
    falling,
    stirling_unsigned,
)

TRIPLE = "triple"
FIXED_FIRST = "fixed_first_factor"


@dataclass(frozen=True)
class TripleCount:
    value: int
    convention: str

    def to(self, convention: str, lam: Partition) -> "TripleCount":
        if convention == self.convention:
            return self
        size = class_size(lam)
        if convention == TRIPLE:
            return TripleCount(self.value * size, TRIPLE)
        return TripleCount(exact_div(self.value, size), FIXED_FIRST)


def _stirling(n: int, m: int) -> int:
    return stirling_unsigned(n, m) if m >= 0 else 0


def a_rr(m: int, r: int, convention: str = TRIPLE) -> TripleCount:
    """Products of two ``r``-cycles in ``S_r`` with ``m`` cycles."""
    if r < 1:
        raise PreconditionError("need r >= 1")
    if (r - m) % 2:
        ff = 0
    else:
        ff = exact_div(2 * _stirling(r + 1, m), r * (r + 1))
    if convention == FIXED_FIRST:
        return TripleCount(ff, FIXED_FIRST)
    if convention == TRIPLE:
        return TripleCount(ff * factorial(r - 1), TRIPLE)
    raise ValueError(f"unknown convention {convention!r}")


def _arr(m: int, r: int) -> int:
    return a_rr(m, r, TRIPLE).value


def eq17_printed(m: int, r: int) -> int:
    """The printed closed form, which is the fixed-first-factor count."""
    return a_rr(m, r, FIXED_FIRST).value


def hook_pair(i: int, j: int, t: int) -> tuple[Partition, Partition]:
    if i < 1 or not 0 <= t <= j:
        raise PreconditionError("need i >= 1 and 0 <= t <= j")
    return Partition([i + t] + [1] * (j - t)), Partition([i] + [1] * j)


def a0_hooks(m: int, i: int, j: int, t: int) -> int:
    """Triples for the hook pair ``(i, j, t)`` whose two factors share no fixed point."""
    if i < 2 or not 0 <= t <= j:
        raise PreconditionError("need i >= 2 and 0 <= t <= j")
    r = i - j + t
    if r < 0:
        return 0
    if r == 0:
        return exact_div(factorial(i + j), i * (i + t)) if m == 2 else 0
    pre = exact_div(factorial(i + j), factorial(r)) * binom(i - 1, j - t) * binom(i + t - 1, j)
    return pre * _arr(m, r)


def a_hooks(m: int, i: int, j: int, t: int) -> int:
    """``a(m, (i+t, 1^(j-t)), (i, 1^j))`` in the triple convention."""
    lam, _ = hook_pair(i, j, t)
    n = i + j
    if i == 1:
        # the identity second factor forces sigma = alpha^-1
        if m != j - t + 1:
            return 0
        marked = exact_div(factorial(j + 1), (1 + t) * factorial(j - t))
        return exact_div(marked, lam.m(1 + t))
    return sum(binom(n, s) * a0_hooks(m - s, i, j - s, t) for s in range(j - t + 1))


def a_hooks_distribution(i: int, j: int, t: int) -> dict[int, int]:
    out = {}
    for m in range(1, i + j + 1):
        v = a_hooks(m, i, j, t)
        if v:
            out[m] = v
    return out


def hooks_report(i: int, j: int, t: int) -> dict:
    lam, mu = hook_pair(i, j, t)
    dist = a_hooks_distribution(i, j, t)
    mass = sum(dist.values())
    expected = class_size(lam) * class_size(mu)
    return {
        "i": i,
        "j": j,
        "t": t,
        "lambda": lam,
        "mu": mu,
        "distribution": dist,
        "mass": mass,
        "mass_ok": mass == expected,
        "parity_ok": all((i + j + t + m) % 2 == 0 for m in dist),
    }


def lemma31_eval(m: int, i: int, j: int) -> int:
    """``a(m, (i+j), (i, 1^j))``."""
    if i < 2 or j < 0:
        raise PreconditionError("need i >= 2 and j >= 0")
    return exact_div(falling(i + j, j) * falling(i + j - 1, j), factorial(j)) * _arr(m, i)


def theorem33_printed(m: int, i: int, j: int, t: int) -> Fraction:
    """The flattened formula as printed; only claimed when ``i+j+t+m`` is even."""
    if i < 2 or not 0 <= t <= j:
        raise PreconditionError("need i >= 2 and 0 <= t <= j")
    if (i + j + t + m) % 2:
        raise PreconditionError("printed formula assumes i+j+t+m even")
    total = Fraction(0)
    for s in range(max(0, j - i - t + 1), j - t + 1):
        r = i - j + t + s
        term = Fraction(2 * factorial(i + j), factorial(s) * factorial(r + 1))
        term *= binom(i - 1, j - s - t) * binom(i + t - 1, j - s) * _stirling(r + 1, m - s)
        total += term / r
    if i - j + t <= 0:
        total += Fraction(factorial(i + j), i * (i + t))
    return total


def equal_cycles_printed(m: int, i: int, j: int) -> Fraction:
    """Two ``i``-cycles in ``S_(i+j)``, as printed."""
    if i < 2 or j < 0:
        raise PreconditionError("need i >= 2 and j >= 0")
    total = Fraction(0)
    for s in range(max(0, j - i + 1), j + 1):
        r = i - j + s
        term = Fraction(2 * factorial(i + j), factorial(s) * factorial(r + 1))
        total += term * binom(i - 1, j - s) ** 2 * _stirling(r + 1, m - s)
    if i - j <= 0:
        total += Fraction(factorial(i + j), i * i)
    return total


# identities checked against enumeration


def common_fixed_point_split(lam: Partition, mu: Partition, m: int, max_n: int | None = None) -> dict:
    """``a_s(m) = C(n, s) a_0(m - s)`` on stripped partitions, both sides from the oracle."""
    from .oracle import a_count, a_s_count

    lam, mu = Partition(lam), Partition(mu)
    n = lam.n
    rows = {}
    for s in range(min(lam.m(1), mu.m(1)) + 1):
        left = a_s_count(m, s, lam, mu, max_n)
        lam_s, mu_s = lam.strip_ones(s), mu.strip_ones(s)
        if lam_s.n == 0:
            right = 1 if m - s == 0 else 0
        else:
            right = binom(n, s) * a_s_count(m - s, 0, lam_s, mu_s, max_n)
        rows[s] = {"a_s": left, "split": right}
    total = a_count(m, lam, mu, max_n)
    return {
        "terms": rows,
        "total": total,
        "ok": all(r["a_s"] == r["split"] for r in rows.values()) and total == sum(r["a_s"] for r in rows.values()),
    }


def _oracle_a(m, lam, mu, max_n, zero_fixed=False):
    from .oracle import a_count, a_s_count

    if m < 1 or lam.n == 0:
        return 1 if (m == 0 and lam.n == 0) else 0
    return a_s_count(m, 0, lam, mu, max_n) if zero_fixed else a_count(m, lam, mu, max_n)


def corollary15_eval(lam: Partition, mu: Partition, m: int, max_n: int | None = None) -> tuple[int, int]:
    """Both sides of the one-stage identity, from oracle counts."""
    lam, mu = Partition(lam), Partition(mu)
    if mu.m(1) == 0:
        raise PreconditionError("needs a fixed point in mu")
    n = lam.n
    mu1 = mu.down(1)
    left = mu.m(1) * _oracle_a(m, lam, mu, max_n)
    right = 0
    for j in sorted(set(lam)):
        if j >= 2:
            right += n * _oracle_a(m, lam.down(j), mu1, max_n) * (lam.m(j - 1) + 1) * (j - 1)
    if lam.m(1):
        right += n * _oracle_a(m - 1, lam.down(1), mu1, max_n)
    return left, right


def onestage_recurrence(lam: Partition, mu: Partition, m: int, max_n: int | None = None) -> tuple[int, int]:
    """The fixed-point-free one-stage identity, valid when ``lam`` has no 2-cycles."""
    lam, mu = Partition(lam), Partition(mu)
    if mu.m(1) == 0 or lam.m(2):
        raise PreconditionError("needs m_1(mu) != 0 and m_2(lam) = 0")
    n = lam.n
    mu1 = mu.down(1)
    left = mu.m(1) * _oracle_a(m, lam, mu, max_n, True)
    right = 0
    for j in sorted(set(lam)):
        if j >= 3:
            right += n * _oracle_a(m, lam.down(j), mu1, max_n, True) * (lam.m(j - 1) + 1) * (j - 1)
    return left, right


def erratum_witnesses() -> list[dict]:
    """Printed forms that disagree with the triple counts, with desk-size witnesses."""
    from .oracle import a_count

    out = []
    r, m = 4, 2
    out.append({
        "id": "two-cycle-normalization",
        "witness": {"r": r, "m": m},
        "printed": eq17_printed(m, r),
        "truth": a_count(m, Partition([r]), Partition([r])),
        "adopted": _arr(m, r),
        "correction": "multiply by (r-1)! to count triples",
    })
    i, j, m = 2, 1, 3
    out.append({
        "id": "hook-sum-divisor",
        "witness": {"i": i, "j": j, "m": m},
        "printed": equal_cycles_printed(m, i, j),
        "truth": a_count(m, *hook_pair(i, j, 0)),
        "flattened": theorem33_printed(m, i, j, 0),
        "adopted": a_hooks(m, i, j, 0),
        "correction": "divide each summand by i-j+s",
    })
    i, j, t, m = 3, 0, 0, 3
    out.append({
        "id": "hook-sum-normalization",
        "witness": {"i": i, "j": j, "t": t, "m": m},
        "printed": theorem33_printed(m, i, j, t),
        "truth": a_count(m, *hook_pair(i, j, t)),
        "adopted": a_hooks(m, i, j, t),
        "correction": "use triple counts for the inner two-cycle products",
    })
    i, j, t, m = 2, 3, 0, 1
    out.append({
        "id": "hook-sum-boundary-term",
        "witness": {"i": i, "j": j, "t": t, "m": m},
        "printed": theorem33_printed(m, i, j, t),
        "truth": a_count(m, *hook_pair(i, j, t)),
        "adopted": a_hooks(m, i, j, t),
        "correction": "boundary term needs delta_{m-s,2} and binom(n, s) inside the s-sum",
    })
    return out


__all__ = [
    "FIXED_FIRST",
    "TRIPLE",
    "TripleCount",
    "a0_hooks",
    "a_hooks",
    "a_hooks_distribution",
    "a_rr",
    "common_fixed_point_split",
    "corollary15_eval",
    "equal_cycles_printed",
    "eq17_printed",
    "erratum_witnesses",
    "hook_pair",
    "hooks_report",
    "lemma31_eval",
    "onestage_recurrence",
    "theorem33_printed",
]


