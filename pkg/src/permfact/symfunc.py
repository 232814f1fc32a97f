"""Homogeneous symmetric functions as coefficient maps over partitions.

Only two bases are used, power sums ``p`` and monomials ``M``.  The operator
``Delta`` raising the degree by one is given on each basis by its expansion
rule and extended linearly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core import Partition, PreconditionError, class_size, falling, partitions

POWERSUM = "powersum"
MONOMIAL = "monomial"


@dataclass(frozen=True)
class BasisVector:
    degree: int
    basis: str
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in (POWERSUM, MONOMIAL):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.n != self.degree:
                raise PreconditionError(f"{lam} is not a partition of {self.degree}")
            if c:
                clean[lam] = Fraction(c)
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BasisVector):
            return NotImplemented
        return (self.degree, self.basis, self.coeffs) == (other.degree, other.basis, other.coeffs)

    def scale(self, c) -> "BasisVector":
        return BasisVector(self.degree, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def to_json(self) -> dict:
        rows = sorted(self.coeffs.items(), key=lambda kv: partitions(self.degree).index(kv[0]))
        return {str(lam): f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
                for lam, c in rows}


def basis_element(lam: Partition, basis: str) -> BasisVector:
    lam = Partition(lam)
    return BasisVector(lam.n, basis, {lam: 1})


def f_a_direct(n: int, a: int) -> BasisVector:
    """Power-sum expansion with coefficient ``|C_lam| nu_{1^a}(lam) / n!``."""
    from .nu import nu

    if not 0 <= a < n:
        raise PreconditionError("need 0 <= a < n")
    rho = Partition([1] * a)
    return BasisVector(
        n,
        POWERSUM,
        {lam: Fraction(class_size(lam) * nu(rho, lam), factorial(n)) for lam in partitions(n)},
    )


def _marking(n: int, a: int) -> int:
    # parts equal to n - a in (n-a, 1^a): n at a = n-1, else 1
    return n if a == n - 1 else 1


def f_a_marked(n: int, a: int) -> BasisVector:
    """``F_a(n)`` counted with a marked ``(n-a)``-cycle; differs only at ``a = n-1``."""
    return f_a_direct(n, a).scale(_marking(n, a))


def f_a_closed(n: int, a: int, printed: bool = False) -> BasisVector:
    """Monomial expansion ``(n-a-1)!/a! * sum (n - l(lam))_{a-1} M_lam`` over ``n - l(lam) >= a``.

    At ``a = n-1`` the second factor is the identity and the printed sum
    counts it once per fixed point; unless ``printed`` is set the result is
    divided by ``n`` there.
    """
    if n <= 0 or a < 0:
        raise PreconditionError("need n > 0 and a >= 0")
    if a >= n:
        return BasisVector(n, MONOMIAL)
    pre = Fraction(factorial(n - a - 1), factorial(a))
    if not printed:
        pre /= _marking(n, a)
    out = {}
    for lam in partitions(n):
        d = n - lam.length
        if d >= a:
            out[lam] = pre * falling(d, a - 1)
    return BasisVector(n, MONOMIAL, out)


def delta_powersum(v: BasisVector) -> BasisVector:
    if v.basis != POWERSUM:
        raise PreconditionError("expected a power-sum vector")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        for k, mk in lam.multiplicities().items():
            key = lam.up(k)
            out[key] = out.get(key, 0) + c * mk * k
    return BasisVector(v.degree + 1, POWERSUM, out)


def delta_monomial(v: BasisVector) -> BasisVector:
    if v.basis != MONOMIAL:
        raise PreconditionError("expected a monomial vector")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        for j in set(lam):
            key = lam.up(j)
            out[key] = out.get(key, 0) + c * j * (lam.m(j + 1) + 1)
    return BasisVector(v.degree + 1, MONOMIAL, out)


def _times_pk(k: int, mu: Partition) -> dict[Partition, int]:
    """``p_k * M_mu`` in the monomial basis."""
    out: dict[Partition, int] = {}
    # new part k
    nu = mu.union([k])
    out[nu] = out.get(nu, 0) + nu.m(k)
    # some part u grows to u + k
    for u in set(mu):
        parts = list(mu)
        parts.remove(u)
        nu = Partition(parts + [u + k])
        out[nu] = out.get(nu, 0) + nu.m(u + k)
    return out


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _p_to_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    acc = {Partition(): 1}
    for k in lam:
        nxt: dict[Partition, int] = {}
        for mu, c in acc.items():
            for nu, d in _times_pk(k, mu).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        acc = nxt
    return tuple(sorted(acc.items()))


def powersum_to_monomial(v: BasisVector) -> BasisVector:
    if v.basis != POWERSUM:
        raise PreconditionError("expected a power-sum vector")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        with _lock:
            rows = _p_to_m(lam)
        for mu, d in rows:
            out[mu] = out.get(mu, 0) + c * d
    return BasisVector(v.degree, MONOMIAL, out)


def delta_raise_check(n: int, a: int, marked: bool = True) -> bool:
    """``(a+1) F_{a+1}(n+1) == Delta F_a(n)`` in the power-sum basis.

    With ``marked`` the identity is taken on :func:`f_a_marked`, where it
    holds for all ``0 <= a < n``; on the plain series it needs ``a <= n-2``.
    """
    f = f_a_marked if marked else f_a_direct
    return f(n + 1, a + 1).scale(a + 1) == delta_powersum(f(n, a))


def delta_commutes(n: int) -> bool:
    """Delta computed in either basis agrees after changing basis, on every ``p_lam``, ``lam |- n``."""
    for lam in partitions(n):
        v = basis_element(lam, POWERSUM)
        if delta_monomial(powersum_to_monomial(v)) != powersum_to_monomial(delta_powersum(v)):
            return False
    return True


def closed_monomial_check(n: int, a: int) -> bool:
    return powersum_to_monomial(f_a_direct(n, a)) == f_a_closed(n, a)
