"""Factorization counts ``nu_rho(lam)`` of a type-``lam`` permutation as a full
cycle times a permutation of type ``(n-a) u rho``.

Several independent routes are provided: character sums, the acyclic-subset
count behind Lehman sequences, the induction on ``a`` and a handful of closed
forms.  All of them work at the level of cycle types.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import comb, factorial

from . import characters
from .core import (
    Partition,
    PreconditionError,
    binom,
    class_size,
    exact_div,
    falling,
    partitions,
)

METHODS = ("characters", "bijective", "inductive", "closed_form", "oracle")


def _ones(a: int) -> Partition:
    return Partition([1] * a)


def marking(rho: Partition, n: int) -> int:
    """Number of parts equal to ``n - a`` in ``(n-a) u rho``.

    The counting formulas single out one ``(n-a)``-cycle of the second
    factor; when ``rho`` also has parts of that length they count each
    factorization once per choice, so the true value is the formula divided
    by this number.  It is 1 unless ``n - a`` is a part of ``rho``.
    """
    rho = Partition(rho)
    return Partition([n - rho.n]).union(rho).m(n - rho.n)


def nu_boccara(lam: Partition) -> int:
    lam = Partition(lam)
    n = lam.n
    if n < 2:
        raise PreconditionError("need |lam| >= 2")
    return 2 * factorial(n - 2) if lam.sign == -1 else 0


def acyclic_edge_subsets(lam: Partition, a: int) -> int:
    """Number of ``(a-1)``-edge subsets of the functional graph of ``lam`` that contain no cycle."""
    lam = Partition(lam)
    n = lam.n
    if not 1 <= a <= n:
        raise PreconditionError("need 1 <= a <= n")
    # Inclusion-exclusion over the multiset of fully chosen cycles; only
    # cycles of length <= a-1 can fit.
    small = [(i, lam.m(i)) for i in range(1, a)]
    total = 0

    def rec(idx, k, sign, weight):
        nonlocal total
        if idx == len(small):
            total += sign * weight * binom(n - k, a - 1 - k)
            return
        i, mi = small[idx]
        ni = 0
        while ni <= mi and k + ni * i <= a - 1:
            rec(idx + 1, k + ni * i, sign * (-1) ** ni, weight * comb(mi, ni))
            ni += 1

    rec(0, 0, 1, 1)
    return total


def nu_bijective(a: int, lam: Partition) -> int:
    lam = Partition(lam)
    n = lam.n
    if not 1 <= a < n:
        raise PreconditionError("need 1 <= a < n")
    if lam.sign != (-1) ** a:
        return 0
    marked = exact_div(2 * factorial(n - a - 1) * acyclic_edge_subsets(lam, a), a)
    return exact_div(marked, marking(_ones(a), n))


def lehman_count(lam: Partition, a: int) -> int:
    lam = Partition(lam)
    n = lam.n
    if not 1 <= a < n:
        raise PreconditionError("need 1 <= a < n")
    return n * factorial(a - 1) * acyclic_edge_subsets(lam, a) * factorial(n - a)


def lehman_multiplicity(n: int, a: int) -> int:
    if not 1 <= a < n:
        raise PreconditionError("need 1 <= a < n")
    return exact_div(factorial(a - 1) * a * (n - a) * n, 2)


@lru_cache(maxsize=None)
def _inductive(a: int, lam: Partition) -> int:
    if a == 1:
        return nu_boccara(lam)
    s = 0
    for j, mj in lam.multiplicities().items():
        if j >= 2:
            s += _inductive(a - 1, lam.down(j)) * mj * j
    return exact_div(s, a)


def nu_inductive(a: int, lam: Partition) -> int:
    """Descent ``a nu_{1^a}(lam) = sum_{j>=2} m_j j nu_{1^{a-1}}(lam with one j -> j-1)``."""
    lam = Partition(lam)
    if not 1 <= a < lam.n:
        raise PreconditionError("need 1 <= a < n")
    return exact_div(_inductive(a, lam), marking(_ones(a), lam.n))


def _eps_factor(lam: Partition, s: int) -> int:
    return 1 + s * lam.sign


# closed forms, keyed by (family, rho)
def _cf_char_11(lam):
    n, m1 = lam.n, lam.m(1)
    return exact_div(_eps_factor(lam, 1) * factorial(n - 3) * (n - m1), 2)


def _cf_char_2(lam):
    n, m1 = lam.n, lam.m(1)
    return exact_div(_eps_factor(lam, -1) * factorial(n - 3) * (n + m1 - 2), 2)


def _cf_char_111(lam):
    n, m1, m2 = lam.n, lam.m(1), lam.m(2)
    inner = falling(n - 1, 2) - 2 * (m1 - 1) * (n - 2) + falling(m1 - 1, 2) - 2 * m2
    return exact_div(_eps_factor(lam, -1) * factorial(n - 4) * inner, 6)


def _cf_bij_11(lam):
    n, m1 = lam.n, lam.m(1)
    return exact_div(_eps_factor(lam, 1) * factorial(n - 3) * (n - m1), 2)


def _cf_bij_111(lam):
    n, m1, m2 = lam.n, lam.m(1), lam.m(2)
    inner = comb(n, 2) - (n - 1) * m1 + comb(m1, 2) - m2
    return exact_div(_eps_factor(lam, -1) * factorial(n - 4) * inner, 3)


def _cf_ind_11(lam):
    return _cf_bij_11(lam)


def _cf_ind_111(lam):
    n, m1, m2 = lam.n, lam.m(1), lam.m(2)
    inner = falling(n - m1, 2) - 2 * m2
    return exact_div(_eps_factor(lam, -1) * factorial(n - 4) * inner, 6)


def _cf_ind_1111(lam):
    n, m1, m2, m3 = lam.n, lam.m(1), lam.m(2), lam.m(3)
    inner = falling(n - m1, 3) - 6 * m2 * (n - m1 - 2) - 6 * m3
    return exact_div(_eps_factor(lam, 1) * factorial(n - 5) * inner, 24)


CLOSED_FORMS = {
    ("characters", (1, 1)): _cf_char_11,
    ("characters", (2,)): _cf_char_2,
    ("characters", (1, 1, 1)): _cf_char_111,
    ("bijective", (1, 1)): _cf_bij_11,
    ("bijective", (1, 1, 1)): _cf_bij_111,
    ("inductive", (1, 1)): _cf_ind_11,
    ("inductive", (1, 1, 1)): _cf_ind_111,
    ("inductive", (1, 1, 1, 1)): _cf_ind_1111,
}


def no_small_cycles(lam: Partition, a: int) -> bool:
    """True when ``lam`` has no part in ``[2, a-1]``."""
    return all(lam.m(i) == 0 for i in range(2, a))


def nu_small_cycles(a: int, lam: Partition, printed: bool = False) -> int:
    """Closed form for ``lam`` whose only parts below ``a`` are fixed points.

    ``printed`` skips the division by :func:`marking`, which matters only at ``a = n-1``.
    """
    lam = Partition(lam)
    n, b = lam.n, lam.m(1)
    if not 1 <= a < n:
        raise PreconditionError("need 1 <= a < n")
    if not no_small_cycles(lam, a):
        raise PreconditionError(f"{lam} has a part in [2, {a - 1}]")
    if n - a - b + 1 < 0:
        return 0
    num = (1 + (-1) ** a * lam.sign) * factorial(n - a - 1) * factorial(n - b)
    mark = 1 if printed else marking(_ones(a), n)
    return exact_div(num, factorial(a) * factorial(n - a - b + 1) * mark)


def nu_closed_form(rho: Partition, lam: Partition, family: str | None = None, printed: bool = False) -> int:
    """Closed form for ``rho`` in ``{(1,1), (2), (1,1,1), (1,1,1,1)}``.

    ``family`` picks which of the equivalent printed expressions to use
    (``characters``, ``bijective`` or ``inductive``); by default the first
    one available.  ``family="small_cycles"`` uses the formula for ``lam``
    without parts in ``[2, a-1]`` and needs ``rho = 1^a``.  The result is
    divided by :func:`marking` unless ``printed`` is set.
    """
    rho, lam = Partition(rho), Partition(lam)
    a, n = rho.n, lam.n
    if a >= n:
        raise PreconditionError("need |rho| < n")
    if family == "small_cycles":
        if rho != _ones(a):
            raise PreconditionError("small-cycles formula needs rho = 1^a")
        return nu_small_cycles(a, lam, printed)
    fams = [family] if family else ["characters", "bijective", "inductive"]
    for fam in fams:
        fn = CLOSED_FORMS.get((fam, tuple(rho)))
        if fn is not None:
            return fn(lam) if printed else exact_div(fn(lam), marking(rho, n))
    raise PreconditionError(f"no closed form for rho={rho} (family {family})")


def closed_forms_for(rho: Partition) -> list[str]:
    return [fam for (fam, r) in CLOSED_FORMS if r == tuple(Partition(rho))]


def nu_characters(rho: Partition, lam: Partition) -> int:
    """Character route: hook-restricted sum when ``n > 2a``, full sum otherwise."""
    rho, lam = Partition(rho), Partition(lam)
    a, n = rho.n, lam.n
    if a == 0:
        return characters.nu_full_cycles(lam)
    if a >= n:
        raise PreconditionError("need |rho| < n")
    if n > 2 * a:
        return characters.nu_rho_characters(rho, lam)
    return characters.conn_coeff_characters(lam, Partition([n]), Partition([n - a]).union(rho))


def nu(rho: Partition, lam: Partition, method: str = "characters", max_n: int | None = None) -> int:
    rho, lam = Partition(rho), Partition(lam)
    a = rho.n
    if method == "characters":
        return nu_characters(rho, lam)
    if method in ("bijective", "inductive") and rho != _ones(a):
        raise PreconditionError(f"{method} method needs rho = 1^a")
    if method == "bijective":
        return nu_bijective(a, lam)
    if method == "inductive":
        return nu_inductive(a, lam)
    if method == "closed_form":
        return nu_closed_form(rho, lam)
    if method == "oracle":
        from .oracle import nu_oracle

        if a == 0:
            from .oracle import connection_coefficient

            n = lam.n
            return connection_coefficient(lam, Partition([n]), Partition([n]), max_n)
        return nu_oracle(rho, lam, max_n)
    raise ValueError(f"unknown method {method!r}")


def nu_all(rho: Partition, lam: Partition, max_n: int | None = None) -> dict[str, int]:
    """Every applicable method; methods outside their domain are skipped."""
    out = {}
    for method in METHODS:
        try:
            out[method] = nu(rho, lam, method, max_n)
        except PreconditionError:
            continue
    return out


def signature(lam: Partition, a: int) -> tuple[int, ...]:
    lam = Partition(lam)
    return (lam.sign,) + tuple(lam.m(i) for i in range(1, a))


def theorem1_invariance_check(n: int, a: int, rho: Partition | None = None, method: str = "characters") -> dict:
    """Check that ``nu_rho`` is constant on partitions sharing ``(sign, m_1, ..., m_{a-1})``."""
    rho = _ones(a) if rho is None else Partition(rho)
    if rho.n != a or a >= n:
        raise PreconditionError("need |rho| = a < n")
    groups: dict[tuple, dict] = defaultdict(dict)
    for lam in partitions(n):
        groups[signature(lam, a)][lam] = nu(rho, lam, method)
    violations = []
    for sig, vals in sorted(groups.items()):
        if len(set(vals.values())) > 1:
            violations.append({"signature": list(sig), "values": {str(k): v for k, v in vals.items()}})
    return {
        "n": n,
        "a": a,
        "rho": list(rho),
        "groups": len(groups),
        "violations": violations,
        "ok": not violations,
    }


def mass_check(n: int, a: int) -> bool:
    """Every ordered pair (full cycle, hook element) lands in exactly one class."""
    total = sum(class_size(lam) * nu(_ones(a), lam) for lam in partitions(n))
    return total == class_size(Partition([n])) * class_size(Partition([n - a] + [1] * a))


__all__ = [
    "acyclic_edge_subsets",
    "closed_forms_for",
    "lehman_count",
    "lehman_multiplicity",
    "mass_check",
    "no_small_cycles",
    "nu",
    "nu_all",
    "nu_bijective",
    "nu_boccara",
    "nu_characters",
    "nu_closed_form",
    "nu_inductive",
    "nu_small_cycles",
    "theorem1_invariance_check",
]
