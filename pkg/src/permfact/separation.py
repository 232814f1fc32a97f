"""Strong separation probabilities.

A permutation is (strongly) ``I``-separated when the blocks
``J_1, ..., J_k`` of ``[m]`` cut out by the composition ``I`` lie in ``k``
distinct cycles, each block inside one cycle.  ``P^I_{n,a}`` is the
probability for the product of a uniform ``n``-cycle and a uniform permutation
of type ``(n-a, 1^a)``.

The recurrence in ``a`` is the reference engine; it is run on the scaled
quantity ``W^I_{n,a} = (n)_m P^I_{n,a}``, which stays meaningful when an
intermediate ground set is smaller than ``m`` (then ``W = 0``).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .core import (
    Composition,
    ConsistencyError,
    Partition,
    PreconditionError,
    class_size,
    compositions,
    falling,
    hook,
    partitions,
)


def p_uniform(comp: Composition) -> Fraction:
    comp = Composition(comp)
    return Fraction(prod(factorial(i - 1) for i in comp), factorial(comp.m))


def p_odd(n: int, comp: Composition) -> Fraction:
    comp = Composition(comp)
    m, k = comp.m, comp.k
    if n < max(m, 2):
        raise PreconditionError(f"need n >= max(m, 2), got n={n}, m={m}")
    return p_uniform(comp) * (1 + Fraction((-1) ** (n - k + 1) * m * (m - 1), n * (n - 1)))


def p_even(n: int, comp: Composition) -> Fraction:
    return 2 * p_uniform(comp) - p_odd(n, comp)


def r_poly(lam, comp: Composition) -> int:
    """Sum over distinct part indices ``j_1..j_k`` of ``prod (lam_{j_t})_{i_t}``.

    ``lam`` may be any sequence of nonnegative integers.
    """
    comp = Composition(comp)
    parts = tuple(lam)
    total = 0
    for idx in itertools.permutations(range(len(parts)), comp.k):
        term = 1
        for j, i in zip(idx, comp):
            term *= falling(parts[j], i)
            if not term:
                break
        total += term
    return total


def p_type(lam: Partition, comp: Composition) -> Fraction:
    lam, comp = Partition(lam), Composition(comp)
    if comp.m > lam.n:
        raise PreconditionError("composition larger than the partition")
    return Fraction(r_poly(lam, comp), falling(lam.n, comp.m))


def bump_recurrence_sides(lam, comp: Composition) -> tuple[int, int]:
    lam, comp = tuple(lam), Composition(comp)
    n, m = sum(lam), comp.m
    left = 0
    for t, lt in enumerate(lam):
        bumped = lam[:t] + (lt + 1,) + lam[t + 1:]
        left += lt * r_poly(bumped, comp)
    right = (n + m) * r_poly(lam, comp)
    for h, i in enumerate(comp):
        right += i * (i - 1) * r_poly(lam, comp.decrement(h))
    return left, right


def lemma27_check(lam, comp: Composition) -> bool:
    left, right = bump_recurrence_sides(lam, comp)
    return left == right


def _check_product_args(n, a, comp):
    if not 0 <= a < n:
        raise PreconditionError(f"need 0 <= a < n, got a={a}, n={n}")
    if comp.m > n:
        raise PreconditionError(f"need m <= n, got m={comp.m}, n={n}")


def p_product_definition(n: int, a: int, comp: Composition) -> Fraction:
    """Average of ``P^I(lam)`` over the cycle type of the product."""
    from .nu import nu

    comp = Composition(comp)
    _check_product_args(n, a, comp)
    rho = Partition([1] * a)
    total = 0
    for lam in partitions(n):
        v = nu(rho, lam)
        if v:
            total += class_size(lam) * v * p_type(lam, comp)
    return total / (class_size(Partition([n])) * class_size(hook(n, a)))


@lru_cache(maxsize=None)
def _w(n: int, a: int, comp: Composition) -> Fraction:
    """``(n)_m P^I_{n,a}`` for ``a >= 1``."""
    m = comp.m
    if m > n:
        return Fraction(0)
    if a == 1:
        return falling(n, m) * p_odd(n, comp)
    n0 = n - 1
    s = (n0 + m) * _w(n0, a - 1, comp)
    for h, i in enumerate(comp):
        if i > 1:
            s += i * (i - 1) * _w(n0, a - 1, comp.decrement(h))
    return s / n0


@lru_cache(maxsize=None)
def _p_a0(n: int, comp: Composition) -> Fraction:
    m = comp.m
    if m == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(1)  # only I = (1): one point is always separated
    rhs = n * (n + 1) * p_odd(n + 1, comp)
    for h, i in enumerate(comp):
        if i > 1:
            rhs -= i * (i - 1) * _p_a0(n, comp.decrement(h))
    return rhs / ((n - m + 1) * (n + m))


def p_product_recurrence(n: int, a: int, comp: Composition) -> Fraction:
    comp = Composition(comp)
    _check_product_args(n, a, comp)
    if a == 0:
        return _p_a0(n, comp)
    return _w(n, a, comp) / falling(n, comp.m)


PRODUCT_METHODS = {"definition": p_product_definition, "recurrence": p_product_recurrence}


def p_product(n: int, a: int, comp: Composition, method: str = "recurrence") -> Fraction:
    """Strong separation probability for (uniform n-cycle) * (uniform ``(n-a, 1^a)``).

    ``method="both"`` computes both routes and raises on disagreement.
    """
    if method == "both":
        d = p_product_definition(n, a, comp)
        r = p_product_recurrence(n, a, comp)
        if d != r:
            raise ConsistencyError(f"definition {d} != recurrence {r} at n={n}, a={a}, I={comp}")
        return r
    try:
        fn = PRODUCT_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(n, a, comp)


def p_1k_closed(n: int, a: int, k: int) -> Fraction:
    """``P^{(1^k)}_{n,a}`` by iterating the recurrence from ``a = 1``."""
    if not (1 <= a < n and 1 <= k <= n):
        raise PreconditionError("need 1 <= a < n and 1 <= k <= n")
    num = falling(n - k, a - 1) * falling(n + k - 1, a - 1)
    if num == 0:
        return Fraction(0)
    den = falling(n, a - 1) * falling(n - 1, a - 1)
    return Fraction(num, den) * p_odd(n - a + 1, Composition([1] * k))


def p_1k_printed(n: int, a: int, k: int) -> Fraction:
    """The closed form for ``I = (1^k)`` exactly as printed (known to be wrong)."""
    den = falling(n, a - 1) * falling(n - a, a - 1)
    if den == 0:
        raise PreconditionError("printed form has a zero denominator here")
    pre = Fraction(falling(n - 1 + k, a - 1) * falling(n - k, a - 1), den)
    return pre * (1 + Fraction((-1) ** (n - k) * k * (k - 1), n * (n + 1)))


def p_n0_closed(n: int, k: int) -> Fraction:
    if not 1 <= k <= n:
        raise PreconditionError("need 1 <= k <= n")
    base = Fraction(1, factorial(k))
    if (n - k) % 2:
        return base
    return base * (1 + Fraction(2 * k * (k - 1), (n - k + 1) * (n + k)))


def p_n0_printed(n: int, k: int) -> dict:
    """Both printed branches; their stated conditions are identical."""
    base = Fraction(1, factorial(k))
    return {
        "conditions": ["n-k odd", "n-k odd"],
        "values": [base, base * (1 + Fraction(2 * k * (k - 1), (n - k + 1) * (n + k)))],
        "applicable": [(n - k) % 2 == 1, (n - k) % 2 == 1],
    }


SEPARATION_MODES = ("strong", "standard")


def p_tilde(n: int, a: int, comp: Composition, method: str = "recurrence", mode: str = "strong",
            max_n: int | None = None) -> Fraction:
    """``P^I_{n,a} / prod i_h!``; the standard mode is evaluated by enumeration."""
    comp = Composition(comp)
    if mode == "strong":
        value = p_product(n, a, comp, method)
    elif mode == "standard":
        from .oracle import separation_ratio

        _check_product_args(n, a, comp)
        value = separation_ratio(Partition([n]), hook(n, a), comp, "standard", max_n=max_n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return value / comp.factorial_product()


def tilde_symmetry_check(n: int, a: int, m: int, k: int, method: str = "recurrence",
                         mode: str = "strong", max_n: int | None = None) -> dict:
    """Whether ``P^I_{n,a} / prod i_h!`` is constant over compositions of ``m`` with ``k`` parts.

    Under strong separation this already fails at ``a = 1``: the base value
    ``prod (i_h - 1)! / m!`` divided by ``prod i_h!`` still depends on
    ``prod i_h``.  Under standard separation it holds on every tested range.
    """
    comps = compositions(m, k)
    if not comps:
        raise PreconditionError(f"no composition of {m} with {k} parts")
    values = {str(c): p_tilde(n, a, c, method, mode, max_n) for c in comps}
    return {
        "n": n,
        "a": a,
        "m": m,
        "k": k,
        "mode": mode,
        "values": values,
        "ok": len(set(values.values())) == 1,
    }
