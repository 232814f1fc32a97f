"""Cross-validation sweeps and the list of printed formulas that fail them.

Every check compares independent routes (formula against formula, formula
against enumeration) over a range of small cases and records each
disagreement with its inputs and values.
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import factorial

from . import nonfull, nu as nu_mod, oracle, products, separation, symfunc
from .core import Composition, Partition, class_size, compositions, hook, partitions

SCOPES = ("nu", "separation", "products", "symfunc", "nonfull")


def _fmt(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, Partition | Composition):
        return ",".join(map(str, v))
    if isinstance(v, dict):
        return {str(k): _fmt(x) for k, x in v.items()}
    if isinstance(v, list | tuple):
        return [_fmt(x) for x in v]
    return v


class Check:
    def __init__(self, scope: str, name: str):
        self.scope, self.name = scope, name
        self.count = 0
        self.failures: list[dict] = []

    def agree(self, inputs: dict, **values) -> bool:
        self.count += 1
        if len({repr(v) for v in values.values()}) > 1:
            self.failures.append({"inputs": _fmt(inputs), "values": _fmt(values)})
            return False
        return True

    def holds(self, inputs: dict, ok: bool, **detail) -> bool:
        self.count += 1
        if not ok:
            self.failures.append({"inputs": _fmt(inputs), "values": _fmt(detail)})
        return ok

    def to_json(self) -> dict:
        return {"scope": self.scope, "name": self.name, "count": self.count,
                "failures": self.failures, "ok": not self.failures}


# nu


def _nu_checks(n_max: int, threads: int) -> list[Check]:
    bocc = Check("nu", "full-cycle-times-transposition-count")
    four = Check("nu", "nu-methods-agree")
    general = Check("nu", "nu-characters-vs-enumeration")
    inv = Check("nu", "signature-invariance")
    closed = Check("nu", "closed-forms")
    mass = Check("nu", "mass")
    for n in range(2, n_max + 1):
        for lam in partitions(n):
            if n >= 3:
                got = oracle.connection_coefficient(lam, Partition([n]), hook(n, 1))
                want = 2 * factorial(n - 2) if lam.sign == -1 else 0
                bocc.agree({"lambda": lam}, oracle=got, formula=want)
            for a in range(1, min(4, n - 1) + 1):
                rho = Partition([1] * a)
                four.agree({"lambda": lam, "a": a},
                           characters=nu_mod.nu(rho, lam, "characters"),
                           bijective=nu_mod.nu(rho, lam, "bijective"),
                           inductive=nu_mod.nu(rho, lam, "inductive"),
                           oracle=nu_mod.nu(rho, lam, "oracle"))
            for a in range(1, min(3, n - 1) + 1):
                for rho in partitions(a):
                    general.agree({"lambda": lam, "rho": rho},
                                  characters=nu_mod.nu(rho, lam, "characters"),
                                  oracle=nu_mod.nu(rho, lam, "oracle"))
            _closed_forms(closed, n, lam)
        for a in range(1, min(3, n - 1) + 1):
            r = nu_mod.theorem1_invariance_check(n, a)
            inv.holds({"n": n, "a": a}, r["ok"], violations=r["violations"])
        for a in range(1, n):
            mass.holds({"n": n, "a": a}, nu_mod.mass_check(n, a))
    return [bocc, four, general, inv, closed, mass]


def _closed_forms(check: Check, n: int, lam: Partition) -> None:
    for fam, rho in nu_mod.CLOSED_FORMS:
        rho = Partition(rho)
        if rho.n >= n:
            continue
        check.agree({"lambda": lam, "rho": rho, "family": fam},
                    closed=nu_mod.nu_closed_form(rho, lam, fam),
                    characters=nu_mod.nu(rho, lam, "characters"))
    for a in range(1, n):
        if nu_mod.no_small_cycles(lam, a):
            rho = Partition([1] * a)
            check.agree({"lambda": lam, "a": a, "family": "small_cycles"},
                        closed=nu_mod.nu_small_cycles(a, lam),
                        characters=nu_mod.nu(rho, lam, "characters"))


# separation


def _separation_checks(n_max: int, threads: int) -> list[Check]:
    prod = Check("separation", "product-probability-routes")
    odd = Check("separation", "odd-permutation-formula")
    l27 = Check("separation", "falling-factorial-recurrence")
    one_k = Check("separation", "singleton-blocks-closed-forms")
    tilde = Check("separation", "normalized-symmetry-standard")
    for n in range(1, n_max + 1):
        for a in range(0, min(3, n - 1) + 1):
            for m in range(1, min(4, n) + 1):
                for comp in compositions(m):
                    rec = separation.p_product(n, a, comp, "recurrence")
                    prod.agree({"n": n, "a": a, "I": comp},
                               definition=separation.p_product(n, a, comp, "definition"),
                               recurrence=rec,
                               oracle=oracle.separation_ratio(Partition([n]), hook(n, a), comp, "strong",
                                                              threads=threads))
                for k in range(1, m + 1):
                    r = separation.tilde_symmetry_check(n, a, m, k, mode="standard")
                    tilde.holds({"n": n, "a": a, "m": m, "k": k}, r["ok"], values=r["values"])
        if n >= 2:
            m_sep = min(n, 4)
            tal = oracle.parity_separation_tally(n, -1, m_sep)
            for m in range(1, m_sep + 1):
                for comp in compositions(m):
                    odd.agree({"n": n, "I": comp}, formula=separation.p_odd(n, comp),
                              enumeration=oracle.ratio_from_tally(tal, comp, "strong"))
        for lam in partitions(n):
            for m in range(1, min(4, n) + 1):
                for comp in compositions(m):
                    left, right = separation.bump_recurrence_sides(lam, comp)
                    l27.agree({"lambda": lam, "I": comp}, left=left, right=right)
        for k in range(1, n + 1):
            rec0 = separation.p_product(n, 0, Composition([1] * k))
            one_k.agree({"n": n, "a": 0, "k": k}, closed=separation.p_n0_closed(n, k), recurrence=rec0)
            for a in range(1, n):
                one_k.agree({"n": n, "a": a, "k": k}, closed=separation.p_1k_closed(n, a, k),
                            recurrence=separation.p_product(n, a, Composition([1] * k)))
    return [prod, odd, l27, one_k, tilde]


# products


def _products_checks(n_max: int, threads: int) -> list[Check]:
    hooks = Check("products", "hook-distribution-vs-enumeration")
    inv = Check("products", "hook-mass-and-parity")
    a0 = Check("products", "fixed-point-free-hook-count")
    l31 = Check("products", "full-cycle-times-hook")
    c15 = Check("products", "one-stage-identity")
    split = Check("products", "common-fixed-point-split")
    conv = Check("products", "count-conventions")
    for n in range(1, n_max + 1):
        for i in range(1, n + 1):
            j = n - i
            for t in range(j + 1):
                lam, mu = products.hook_pair(i, j, t)
                hooks.agree({"i": i, "j": j, "t": t},
                            formula=products.a_hooks_distribution(i, j, t),
                            oracle=oracle.cycle_count_distribution(lam, mu))
                r = products.hooks_report(i, j, t)
                inv.holds({"i": i, "j": j, "t": t}, r["mass_ok"] and r["parity_ok"], mass=r["mass"])
                if i >= 2:
                    for m in range(1, n + 1):
                        a0.agree({"i": i, "j": j, "t": t, "m": m}, formula=products.a0_hooks(m, i, j, t),
                                 oracle=oracle.a_s_count(m, 0, lam, mu))
            if i >= 2:
                for m in range(1, n + 1):
                    l31.agree({"i": i, "j": j, "m": m}, formula=products.lemma31_eval(m, i, j),
                              oracle=oracle.a_count(m, Partition([n]), Partition([i] + [1] * j)))
        conv.agree({"r": n}, triple=sum(products.a_rr(m, n).value for m in range(1, n + 1)),
                   scaled=sum(products.a_rr(m, n, products.FIXED_FIRST).value for m in range(1, n + 1))
                   * class_size(Partition([n])))
        if n > 6:
            continue
        for lam in partitions(n):
            for mu in partitions(n):
                for m in range(1, n + 1):
                    r = products.common_fixed_point_split(lam, mu, m)
                    split.holds({"lambda": lam, "mu": mu, "m": m}, r["ok"], terms=r["terms"])
                    if mu.m(1):
                        left, right = products.corollary15_eval(lam, mu, m)
                        c15.agree({"lambda": lam, "mu": mu, "m": m}, left=left, right=right)
                        if not lam.m(2):
                            left, right = products.onestage_recurrence(lam, mu, m)
                            c15.agree({"lambda": lam, "mu": mu, "m": m, "fixed_point_free": True},
                                      left=left, right=right)
    return [hooks, inv, a0, l31, c15, split, conv]


# symmetric functions


def _symfunc_checks(n_max: int, threads: int) -> list[Check]:
    t21 = Check("symfunc", "monomial-closed-form")
    l18 = Check("symfunc", "degree-raising-recurrence")
    dc = Check("symfunc", "delta-basis-independence")
    for n in range(1, n_max + 1):
        for a in range(n):
            t21.holds({"n": n, "a": a}, symfunc.closed_monomial_check(n, a))
            if n < n_max:
                l18.holds({"n": n, "a": a}, symfunc.delta_raise_check(n, a, marked=True))
        dc.holds({"n": n}, symfunc.delta_commutes(n))
    return [t21, l18, dc]


# non-full separation


def _nonfull_checks(n_max: int, threads: int) -> list[Check]:
    nn = Check("nonfull", "two-full-cycles-vs-enumeration")
    n11 = Check("nonfull", "two-near-full-cycles-vs-enumeration")
    c37 = Check("nonfull", "near-full-symmetry")
    for n in range(1, n_max + 1):
        for m in range(1, min(4, n) + 1):
            for comp in compositions(m):
                nn.agree({"n": n, "I": comp}, formula=nonfull.sigma_nn(n, comp),
                         oracle=nonfull.sigma_oracle(Partition([n]), Partition([n]), comp, threads))
                if n >= 3:
                    n11.agree({"n": n, "I": comp}, formula=nonfull.sigma_n11(n, comp),
                              oracle=nonfull.sigma_oracle(hook(n, 1), hook(n, 1), comp, threads))
            if n >= 3:
                for k in range(1, m + 1):
                    r = nonfull.n11_grouping_check(n, m, k)
                    c37.holds({"n": n, "m": m, "k": k}, r["ok"], groups=r["groups"])
    return [nn, n11, c37]


_RUNNERS = {
    "nu": _nu_checks,
    "separation": _separation_checks,
    "products": _products_checks,
    "symfunc": _symfunc_checks,
    "nonfull": _nonfull_checks,
}


def verify_suite(scope: str = "all", n_max: int = 7, threads: int = 1) -> dict:
    """Run every check in ``scope``; ``ok`` is true iff nothing disagrees."""
    scopes = SCOPES if scope == "all" else (scope,)
    if any(s not in _RUNNERS for s in scopes):
        raise ValueError(f"unknown scope {scope!r}")
    if n_max > oracle.DEFAULT_MAX_N:
        raise oracle.OracleBoundError(n_max, oracle.DEFAULT_MAX_N, None)
    t0 = time.perf_counter()
    checks = []
    for s in scopes:
        checks.extend(c.to_json() for c in _RUNNERS[s](n_max, threads))
    errata = [e for e in erratum_report() if e["scope"] in scopes]
    return {
        "scope": scope,
        "n_max": n_max,
        "checks": checks,
        "errata": errata,
        "ok": all(c["ok"] for c in checks),
        "seconds": round(time.perf_counter() - t0, 3),
    }


# printed formulas that fail


def _entry(id_, scope, statement, witness, printed, truth, adopted, correction, kind="erratum",
           confirmed=None):
    return {
        "id": id_,
        "kind": kind,
        "scope": scope,
        "statement": statement,
        "witness": _fmt(witness),
        "printed": _fmt(printed),
        "truth": _fmt(truth),
        "adopted": _fmt(adopted),
        "correction": correction,
        "confirmed": (printed != truth and adopted == truth) if confirmed is None else confirmed,
    }


def erratum_report() -> list[dict]:
    """Printed closed forms that disagree with enumeration, each with a small witness."""
    out = []
    n, k, a = 4, 2, 2
    ones = Composition([1] * k)
    truth = oracle.separation_ratio(Partition([n]), hook(n, a), ones, "strong")
    out.append(_entry(
        "singleton-blocks-closed-form", "separation",
        "closed form for singleton blocks and a >= 1",
        {"n": n, "k": k, "a": a}, separation.p_1k_printed(n, a, k), truth,
        separation.p_1k_closed(n, a, k),
        "iterate the recurrence from the odd-permutation base"))
    n, k = 4, 2
    printed = separation.p_n0_printed(n, k)
    truth = oracle.separation_ratio(Partition([n]), Partition([n]), Composition([1] * k), "strong")
    branch = [v for v, ok in zip(printed["values"], printed["applicable"]) if ok]
    out.append(_entry(
        "full-cycle-pair-parity-branch", "separation",
        "both branches of the two-full-cycle formula are conditioned on n-k odd",
        {"n": n, "k": k}, {"applicable_branches": branch, "values": printed["values"]}, truth,
        separation.p_n0_closed(n, k),
        "second branch applies when n-k is even"))
    n, a = 5, 1
    c1, c2 = Composition([3, 1]), Composition([2, 2])
    strong = {str(c): separation.p_tilde(n, a, c) for c in (c1, c2)}
    standard = {str(c): separation.p_tilde(n, a, c, mode="standard") for c in (c1, c2)}
    out.append(_entry(
        "normalized-symmetry-strong", "separation",
        "P/prod(i_h!) depends on I only through m and k, for strong separation",
        {"n": n, "a": a, "I": [str(c1), str(c2)]}, "equal", strong, standard,
        "holds for standard separation only; the a = 1 base depends on prod i_h",
        confirmed=len(set(strong.values())) > 1 and len(set(standard.values())) == 1))
    for w in products.erratum_witnesses():
        out.append(_entry(w["id"], "products", "printed cycle-count formula", w["witness"], w["printed"],
                          w["truth"], w["adopted"], w["correction"]))
    n, m, k = 3, 2, 1
    comp = Composition([2])
    printed = Fraction(factorial(n - m) * comp.factorial_product(), factorial(n - 1) ** 2) \
        * nonfull.d_coeff_printed(n, m, k)
    out.append(_entry(
        "d-coefficient-sign", "nonfull",
        "inner sum of the D coefficient",
        {"n": n, "m": m, "k": k, "I": comp}, printed,
        nonfull.sigma_oracle(Partition([n]), Partition([n]), comp), nonfull.sigma_nn(n, comp),
        "the inner sum alternates with (-1)^r"))
    n, a = 5, 1
    vals = {str(c): nonfull.sigma_n11(n, c) / c.factorial_product() for c in (c1, c2)}
    out.append(_entry(
        "conjecture-signature", "nonfull",
        "sigma/prod(i_j!) for (n-a,1^a) depends on m_1..m_{a-1} only",
        {"n": n, "a": a, "lambda": hook(n, 1), "I": [str(c1), str(c2)]}, "equal", vals, vals,
        "key on m_1..m_a; no violation for n <= 7, a <= 3, m <= 5", kind="finding",
        confirmed=len(set(vals.values())) > 1))
    n, lam = 4, Partition([4])
    rho = Partition([1] * (n - 1))
    truth = nu_mod.nu(rho, lam, "oracle")
    out.append(_entry(
        "boundary-marking", "nu",
        "counting formulas at a = n-1, where the identity second factor has n marked fixed points",
        {"n": n, "a": n - 1, "lambda": lam},
        nu_mod.nu_bijective(n - 1, lam) * nu_mod.marking(rho, n), truth, nu_mod.nu_bijective(n - 1, lam),
        "divide by the number of parts equal to n-a in (n-a) u rho"))
    rho, lam = Partition([2]), Partition([2, 1, 1])
    out.append(_entry(
        "closed-form-marking", "nu",
        "small-a closed form when n-a is also a part of rho",
        {"rho": rho, "lambda": lam}, nu_mod.nu_closed_form(rho, lam, printed=True),
        nu_mod.nu(rho, lam, "oracle"), nu_mod.nu_closed_form(rho, lam),
        "divide by the number of parts equal to n-a in (n-a) u rho"))
    n = 3
    printed_v = symfunc.f_a_closed(n, n - 1, printed=True)
    truth_v = symfunc.powersum_to_monomial(symfunc.f_a_direct(n, n - 1))
    out.append(_entry(
        "monomial-closed-form-boundary", "symfunc",
        "monomial expansion at a = n-1",
        {"n": n, "a": n - 1}, printed_v.to_json(), truth_v.to_json(),
        symfunc.f_a_closed(n, n - 1).to_json(), "divide by n at a = n-1"))
    from .characters import littlewood_sum, mn_character

    lam, i = Partition([2, 2]), 1
    out.append(_entry(
        "hook-character-binomial", "nu",
        "binom(m_1 - 1, r_1) with m_1 = 0 in the hook character sum",
        {"lambda": lam, "i": i}, littlewood_sum(i, lam, "truncated"),
        mn_character(Partition([3, 1]), lam), littlewood_sum(i, lam, "generalized"),
        "read binom(-1, r) as (-1)^r", kind="convention"))
    return out


__all__ = ["SCOPES", "erratum_report", "verify_suite"]
