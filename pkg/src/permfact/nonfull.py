"""Standard separation for products of two permutations that are not both full cycles.

Here a permutation is ``I``-separated when no cycle meets two blocks of the
canonical set partition of ``[m]`` cut out by ``I``; a block may be spread
over several cycles.  ``sigma^I_{lam,mu}`` is the probability for the product
of uniform elements of ``C_lam`` and ``C_mu``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from math import factorial

from .core import (
    Composition,
    Partition,
    PreconditionError,
    binom,
    compositions,
    hook,
    partitions,
    rational_to_json,
)

STANDARD = "standard"


def _d_eval(n: int, m: int, k: int, sign: int) -> Fraction:
    if n < 1 or m < 0 or k < 0 or k > m:
        raise PreconditionError(f"need n >= 1 and 0 <= k <= m, got n={n}, m={m}, k={k}")
    inner = (-1) ** ((n - m) % 2) * binom(n - 1, k - 2)
    inner += sum(sign ** r * binom(n + m, n + k + r) * binom(n + r + 1, m) for r in range(m - k + 1))
    return Fraction(factorial(n - 1) * inner, (n + k) * binom(n + m, m - k))


def d_coeff(n: int, m: int, k: int) -> Fraction:
    """``D^{m,k}_n`` with an alternating inner sum; binomials outside their support vanish."""
    return _d_eval(n, m, k, -1)


def d_coeff_printed(n: int, m: int, k: int) -> Fraction:
    """The printed form, whose inner sum has no sign; it agrees with :func:`d_coeff` only at ``m = k``."""
    return _d_eval(n, m, k, 1)


def _d(n: int, m: int, k: int) -> Fraction:
    # terms of the two-cycle recursion may reach ground sets smaller than
    # the composition or empty compositions; those sets carry no pairs
    if n < 1 or m < 0 or k < 0 or k > m or m > n:
        return Fraction(0)
    if m == 0:
        return Fraction(0) if k else d_coeff(n, 0, 0)
    return d_coeff(n, m, k)


def sigma_nn(n: int, comp: Composition) -> Fraction:
    """Separation probability for two uniform ``n``-cycles."""
    comp = Composition(comp)
    m, k = comp.m, comp.k
    if not 1 <= m <= n:
        raise PreconditionError(f"need 1 <= m <= n, got m={m}, n={n}")
    return Fraction(factorial(n - m) * comp.factorial_product(), factorial(n - 1) ** 2) * d_coeff(n, m, k)


def sigma_n11_terms(n: int, comp: Composition) -> dict[str, Fraction]:
    """The six weighted ``D`` terms, before the common prefactor."""
    comp = Composition(comp)
    m, k, m1 = comp.m, comp.k, comp.count(1)
    if n < 3 or not 1 <= m <= n:
        raise PreconditionError(f"need n >= 3 and 1 <= m <= n, got n={n}, m={m}")
    return {
        "fixed_inside": (k - m1) * _d(n - 1, m - 1, k),
        "fixed_singleton": m1 * _d(n - 1, m - 1, k - 1),
        "fixed_outside": _d(n - 1, m, k),
        "two_stage_outside": ((n + m - 2) ** 2 - m) * _d(n - 2, m, k),
        "two_stage_one": (m - k) * (2 * n + 2 * m - 7) * _d(n - 2, m - 1, k),
        "two_stage_two": ((m - k - 2) * (m - k) + k - m1) * _d(n - 2, m - 2, k),
    }


def sigma_n11_prefactor(n: int, comp: Composition) -> Fraction:
    comp = Composition(comp)
    return Fraction(factorial(n - comp.m) * comp.factorial_product(), n * n * factorial(n - 2) ** 2)


def sigma_n11(n: int, comp: Composition) -> Fraction:
    """Separation probability for two uniform ``(n-1, 1)``-type permutations."""
    comp = Composition(comp)
    return sigma_n11_prefactor(n, comp) * sum(sigma_n11_terms(n, comp).values())


def sigma_oracle(lam: Partition, mu: Partition, comp: Composition, threads: int = 1,
                 max_n: int | None = None) -> Fraction:
    from .oracle import separation_ratio

    return separation_ratio(lam, mu, comp, STANDARD, "full", threads, max_n)


def n11_grouping_check(n: int, m: int, k: int) -> dict:
    """``sigma^I / prod i_j!`` for two ``(n-1,1)`` factors, grouped by ``m_1(I)``."""
    comps = compositions(m, k)
    if not comps:
        raise PreconditionError(f"no composition of {m} with {k} parts")
    groups: dict[int, dict[str, Fraction]] = defaultdict(dict)
    for c in comps:
        groups[c.count(1)][str(c)] = sigma_n11(n, c) / c.factorial_product()
    bad = [m1 for m1, vals in groups.items() if len(set(vals.values())) > 1]
    return {
        "n": n,
        "m": m,
        "k": k,
        "groups": {m1: {c: str(v) for c, v in vals.items()} for m1, vals in sorted(groups.items())},
        "violations": sorted(bad),
        "ok": not bad,
    }


SIGNATURES = ("printed", "through_a")


def conjecture_signature(comp: Composition, a: int, signature: str = "printed") -> tuple[int, ...]:
    """``(m_1(I), ..., m_{a-1}(I))``, or up to ``m_a(I)`` with ``signature="through_a"``."""
    if signature not in SIGNATURES:
        raise ValueError(f"unknown signature {signature!r}")
    comp = Composition(comp)
    top = a if signature == "printed" else a + 1
    return tuple(comp.count(i) for i in range(1, top))


def conjecture38_scan(n_max: int = 6, a_max: int = 2, m_max: int = 4, threads: int = 1,
                      max_n: int | None = None, signature: str = "printed") -> dict:
    """Oracle scan of ``sigma^I_{(n-a,1^a),lam} / prod i_j!`` grouped by the conjectured signature.

    ``n`` runs from 2 and ``a`` from 0 to ``min(a_max, n-1)``.  With the
    printed signature the ``a = 1`` groups ignore ``m_1(I)`` and split;
    ``signature="through_a"`` also keys on ``m_a(I)``.
    """
    from .oracle import ratio_from_tally, separation_tally
    from . import kernel

    if m_max > kernel.MAX_SEP:
        raise PreconditionError(f"m_max above {kernel.MAX_SEP} is not supported")
    groups: dict[tuple, dict[str, Fraction]] = defaultdict(dict)
    for n in range(2, n_max + 1):
        for a in range(0, min(a_max, n - 1) + 1):
            first = hook(n, a)
            for lam in partitions(n):
                m_sep = min(n, m_max)
                tal = separation_tally(first, lam, m_sep, "full", threads, max_n)
                for m in range(1, m_sep + 1):
                    for comp in compositions(m):
                        v = ratio_from_tally(tal, comp, STANDARD) / comp.factorial_product()
                        key = (a, n, tuple(lam), m, comp.k) + conjecture_signature(comp, a, signature)
                        groups[key][str(comp)] = v
    rows = []
    verified = violations = trivial = 0
    for key in sorted(groups):
        vals = groups[key]
        a, n, lam, m, k = key[:5]
        if len(vals) < 2:
            trivial += 1
            verdict = "trivial"
        elif len(set(vals.values())) == 1:
            verified += 1
            verdict = "consistent"
        else:
            violations += 1
            verdict = "violation"
        rows.append({
            "signature": {"a": a, "n": n, "lambda": list(lam), "m": m, "k": k,
                          "multiplicities": list(key[5:])},
            "compositions": sorted(vals),
            "normalized_values": {c: rational_to_json(v) for c, v in sorted(vals.items())},
            "verdict": verdict,
        })
    return {
        "parameters": {"n_max": n_max, "a_max": a_max, "m_max": m_max, "signature": signature},
        "groups": rows,
        "summary": {"groups": len(rows), "consistent": verified, "violations": violations,
                    "trivial": trivial},
    }


REPORT_KEYS = {"parameters", "groups", "summary"}
GROUP_KEYS = {"signature", "compositions", "normalized_values", "verdict"}
VERDICTS = {"consistent", "violation", "trivial"}


def validate_conjecture_report(report: dict) -> bool:
    """Structural check of a scan report, also after a JSON round trip."""
    report = json.loads(json.dumps(report))
    if set(report) != REPORT_KEYS:
        return False
    for row in report["groups"]:
        if set(row) != GROUP_KEYS or row["verdict"] not in VERDICTS:
            return False
        if sorted(row["normalized_values"]) != sorted(row["compositions"]):
            return False
    s = report["summary"]
    return s["groups"] == len(report["groups"]) == s["consistent"] + s["violations"] + s["trivial"]


__all__ = [
    "conjecture38_scan",
    "conjecture_signature",
    "n11_grouping_check",
    "d_coeff",
    "d_coeff_printed",
    "sigma_n11",
    "sigma_n11_prefactor",
    "sigma_n11_terms",
    "sigma_nn",
    "sigma_oracle",
    "validate_conjecture_report",
]
