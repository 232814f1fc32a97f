"""Exit criteria.  Each test collects every disagreement over its full range
and reports them together, so a failure names all offending inputs."""

import json
import subprocess
import sys
import time
from fractions import Fraction
from math import factorial

import pytest

from permfact import nonfull, nu as nu_mod, oracle, products, separation, symfunc, verify
from permfact.core import Composition, Partition, compositions, hook, partitions


def acceptance(number, title):
    return pytest.mark.acceptance(number, title)


def _assert_none(bad, what, limit=25):
    shown = "\n".join(map(str, bad[:limit]))
    more = f"\n... {len(bad) - limit} more" if len(bad) > limit else ""
    assert not bad, f"{len(bad)} {what}:\n{shown}{more}"


def _boundary(rho, n):
    return nu_mod.marking(rho, n) > 1


# 1


@acceptance(1, "full cycle times (n-1,1): 2(n-2)! on odd types, 0 on even, n <= 8")
def test_c1_full_cycle_times_n11():
    bad = []
    for n in range(3, 9):
        for lam in partitions(n):
            got = oracle.connection_coefficient(lam, Partition([n]), hook(n, 1))
            want = 2 * factorial(n - 2) if lam.sign == -1 else 0
            if got != want:
                bad.append((tuple(lam), got, want))
    _assert_none(bad, "mismatches")


# 2


@acceptance(2, "nu_{1^a}: characters = bijective = inductive = oracle; general rho vs oracle")
def test_c2_four_way():
    bad = []
    for n in range(2, 9):
        for lam in partitions(n):
            for a in range(1, min(4, n - 1) + 1):
                rho = Partition([1] * a)
                vals = {m: nu_mod.nu(rho, lam, m) for m in ("characters", "bijective", "inductive", "oracle")}
                if len(set(vals.values())) != 1:
                    bad.append((tuple(lam), a, vals))
    _assert_none(bad, "disagreements")


@acceptance(2, "nu_{1^a}: characters = bijective = inductive = oracle; general rho vs oracle")
def test_c2_general_rho():
    bad = []
    for n in range(2, 9):
        for a in range(1, min(3, n - 1) + 1):
            for rho in partitions(a):
                for lam in partitions(n):
                    c, o = nu_mod.nu(rho, lam, "characters"), nu_mod.nu(rho, lam, "oracle")
                    if c != o:
                        bad.append((tuple(rho), tuple(lam), c, o))
    _assert_none(bad, "disagreements")


# 3


@acceptance(3, "nu_rho constant on (sign, m_1..m_{a-1}) classes, n <= 10, a <= 3")
def test_c3_invariance():
    bad = []
    for n in range(2, 11):
        method = "oracle" if n <= 8 else "characters"
        for a in range(1, min(3, n - 1) + 1):
            for rho in partitions(a):
                groups = {}
                for lam in partitions(n):
                    groups.setdefault(nu_mod.signature(lam, a), set()).add(nu_mod.nu(rho, lam, method))
                bad.extend((n, tuple(rho), sig, sorted(v)) for sig, v in groups.items() if len(v) > 1)
    _assert_none(bad, "non-constant classes")


# 4


def _closed_form_cases(printed):
    for n in range(2, 11):
        for lam in partitions(n):
            ref = {}
            for fam, rho in nu_mod.CLOSED_FORMS:
                rho = Partition(rho)
                if rho.n >= n:
                    continue
                if rho not in ref:
                    ref[rho] = nu_mod.nu(rho, lam, "characters")
                yield (fam, rho, lam, nu_mod.nu_closed_form(rho, lam, fam, printed), ref[rho])
            for a in range(2, n):
                if nu_mod.no_small_cycles(lam, a):
                    rho = Partition([1] * a)
                    want = nu_mod.nu(rho, lam, "inductive")
                    yield ("small_cycles", rho, lam, nu_mod.nu_small_cycles(a, lam, printed), want)


@acceptance(4, "printed small-a closed forms and the small-cycles formula equal nu, n <= 10")
def test_c4_closed_forms_printed():
    bad = [(fam, tuple(rho), tuple(lam), got, want, "marked" if _boundary(rho, lam.n) else "unmarked")
           for fam, rho, lam, got, want in _closed_form_cases(printed=True) if got != want]
    _assert_none(bad, "printed closed-form mismatches (family, rho, lambda, printed, nu, case)")


@acceptance(4, "printed small-a closed forms and the small-cycles formula equal nu, n <= 10")
def test_c4_printed_mismatches_are_marking_only():
    # each printed mismatch is the true count times the number of (n-a)-parts
    for fam, rho, lam, got, want in _closed_form_cases(printed=True):
        if got != want:
            assert _boundary(rho, lam.n) and got == want * nu_mod.marking(rho, lam.n), (fam, rho, lam)


@acceptance(4, "printed small-a closed forms and the small-cycles formula equal nu, n <= 10")
def test_c4_closed_forms_adopted():
    bad = [(fam, tuple(rho), tuple(lam), got, want)
           for fam, rho, lam, got, want in _closed_form_cases(printed=False) if got != want]
    _assert_none(bad, "adopted closed-form mismatches")


# 5


@acceptance(5, "monomial closed form for n <= 8, 0 <= a < n; degree-raising identity n <= 7")
def test_c5_monomial_closed_form_printed():
    bad = []
    for n in range(1, 9):
        for a in range(n):
            got = symfunc.powersum_to_monomial(symfunc.f_a_direct(n, a))
            want = symfunc.f_a_closed(n, a, printed=True)
            if got != want:
                bad.append((n, a, got.to_json(), want.to_json()))
    _assert_none(bad, "printed monomial expansions that differ (n, a, direct, printed)")


@acceptance(5, "monomial closed form for n <= 8, 0 <= a < n; degree-raising identity n <= 7")
def test_c5_monomial_closed_form_adopted():
    bad = [(n, a) for n in range(1, 9) for a in range(n) if not symfunc.closed_monomial_check(n, a)]
    _assert_none(bad, "adopted monomial expansions that differ")


@acceptance(5, "monomial closed form for n <= 8, 0 <= a < n; degree-raising identity n <= 7")
def test_c5_degree_raising_plain():
    bad = [(n, a) for n in range(1, 8) for a in range(n) if not symfunc.delta_raise_check(n, a, marked=False)]
    _assert_none(bad, "(n, a) where (a+1) F_{a+1}(n+1) != Delta F_a(n)")


@acceptance(5, "monomial closed form for n <= 8, 0 <= a < n; degree-raising identity n <= 7")
def test_c5_degree_raising_marked():
    bad = [(n, a) for n in range(1, 8) for a in range(n) if not symfunc.delta_raise_check(n, a, marked=True)]
    _assert_none(bad, "(n, a) where the marked identity fails")


# 6


@acceptance(6, "strong separation: routes vs enumeration, anchors, odd formula, normalized symmetry")
def test_c6_product_routes():
    bad = []
    for n in range(1, 8):
        for a in range(0, min(3, n - 1) + 1):
            for m in range(1, min(4, n) + 1):
                for comp in compositions(m):
                    o = oracle.separation_ratio(Partition([n]), hook(n, a), comp, "strong")
                    d = separation.p_product(n, a, comp, "definition")
                    r = separation.p_product(n, a, comp, "recurrence")
                    if not d == r == o:
                        bad.append((n, a, str(comp), d, r, o))
    _assert_none(bad, "disagreements (n, a, I, definition, recurrence, oracle)")


@acceptance(6, "strong separation: routes vs enumeration, anchors, odd formula, normalized symmetry")
def test_c6_anchors():
    assert separation.p_product(4, 2, Composition([1, 1])) == Fraction(5, 9)
    assert oracle.separation_ratio(Partition([4]), hook(4, 2), Composition([1, 1])) == Fraction(5, 9)
    assert separation.p_product(3, 0, Composition([1, 1])) == Fraction(1, 2)
    assert oracle.separation_ratio(Partition([3]), Partition([3]), Composition([1, 1])) == Fraction(1, 2)


@acceptance(6, "strong separation: routes vs enumeration, anchors, odd formula, normalized symmetry")
def test_c6_odd_permutations():
    bad = []
    for n in range(2, 9):
        m_sep = min(n, 6)
        tal = oracle.parity_separation_tally(n, -1, m_sep)
        for m in range(1, m_sep + 1):
            for comp in compositions(m):
                f = separation.p_odd(n, comp)
                e = oracle.ratio_from_tally(tal, comp, "strong")
                if f != e:
                    bad.append((n, str(comp), f, e))
    _assert_none(bad, "disagreements")


@acceptance(6, "strong separation: routes vs enumeration, anchors, odd formula, normalized symmetry")
def test_c6_normalized_symmetry_strong():
    bad = []
    for n in range(2, 8):
        for a in range(n):
            for m in range(1, n + 1):
                for k in range(1, m + 1):
                    r = separation.tilde_symmetry_check(n, a, m, k)
                    if not r["ok"]:
                        bad.append((n, a, m, k, {c: str(v) for c, v in r["values"].items()}))
    _assert_none(bad, "composition groups where P/prod(i_h!) is not constant (n, a, m, k, values)")


# 7


@acceptance(7, "printed formulas flagged with their witnesses; adopted forms pass the sweeps")
def test_c7_flags():
    report = {e["id"]: e for e in verify.erratum_report()}
    expected = {
        "singleton-blocks-closed-form": ("11/8", "5/9"),
        "two-cycle-normalization": (5, 30),
        "hook-sum-divisor": ("6", 3),
    }
    for key, (printed, truth) in expected.items():
        e = report[key]
        assert e["confirmed"] and e["printed"] == printed and e["truth"] == truth, e
    assert report["singleton-blocks-closed-form"]["witness"] == {"n": 4, "k": 2, "a": 2}
    assert report["two-cycle-normalization"]["witness"] == {"r": 4, "m": 2}
    assert report["hook-sum-divisor"]["witness"] == {"i": 2, "j": 1, "m": 3}
    branch = report["full-cycle-pair-parity-branch"]
    assert branch["confirmed"] and branch["truth"] == "11/18"
    assert branch["printed"]["applicable_branches"] == []
    assert branch["printed"]["values"][1] == "11/18"
    assert all(e["confirmed"] for e in report.values())


@acceptance(7, "printed formulas flagged with their witnesses; adopted forms pass the sweeps")
def test_c7_direct_witnesses():
    assert separation.p_1k_printed(4, 2, 2) == Fraction(11, 8)
    assert oracle.separation_ratio(Partition([4]), hook(4, 2), Composition([1, 1])) == Fraction(5, 9)
    printed = separation.p_n0_printed(4, 2)
    assert not any(printed["applicable"]) and printed["values"][1] == Fraction(11, 18)
    assert oracle.separation_ratio(Partition([4]), Partition([4]), Composition([1, 1])) == Fraction(11, 18)
    assert products.eq17_printed(2, 4) == 5
    assert oracle.a_count(2, Partition([4]), Partition([4])) == 30
    assert products.equal_cycles_printed(3, 2, 1) == 6
    assert oracle.a_count(3, *products.hook_pair(2, 1, 0)) == 3


@acceptance(7, "printed formulas flagged with their witnesses; adopted forms pass the sweeps")
def test_c7_adopted_separation_sweeps():
    bad = []
    for n in range(2, 9):
        for k in range(1, min(n, 6) + 1):
            ones = Composition([1] * k)
            o = oracle.separation_ratio(Partition([n]), Partition([n]), ones)
            if separation.p_n0_closed(n, k) != o:
                bad.append(("a=0", n, k))
            for a in range(1, n):
                o = oracle.separation_ratio(Partition([n]), hook(n, a), ones)
                if separation.p_1k_closed(n, a, k) != o:
                    bad.append(("1^k", n, a, k))
    _assert_none(bad, "adopted separation forms disagreeing with enumeration")


@acceptance(7, "printed formulas flagged with their witnesses; adopted forms pass the sweeps")
def test_c7_adopted_product_sweeps():
    bad = []
    for r in range(1, 9):
        for m in range(1, r + 1):
            if products.a_rr(m, r).value != oracle.a_count(m, Partition([r]), Partition([r])):
                bad.append(("a_rr", r, m))
    for n in range(2, 9):
        for i in range(2, n + 1):
            j = n - i
            for m in range(1, n + 1):
                if products.a_hooks(m, i, j, 0) != oracle.a_count(m, *products.hook_pair(i, j, 0)):
                    bad.append(("two hooks", i, j, m))
    _assert_none(bad, "adopted product forms disagreeing with enumeration")


# 8


@acceptance(8, "hook-pair cycle distributions, mass and parity, identities for n <= 6")
def test_c8_hook_distribution():
    bad = []
    for n in range(1, 9):
        for i in range(1, n + 1):
            j = n - i
            for t in range(j + 1):
                lam, mu = products.hook_pair(i, j, t)
                f = products.a_hooks_distribution(i, j, t)
                o = oracle.cycle_count_distribution(lam, mu)
                if f != o:
                    bad.append((i, j, t, f, o))
    _assert_none(bad, "distribution mismatches (i, j, t, formula, oracle)")


@acceptance(8, "hook-pair cycle distributions, mass and parity, identities for n <= 6")
def test_c8_mass_parity():
    bad = []
    for n in range(1, 9):
        for i in range(1, n + 1):
            for t in range(n - i + 1):
                r = products.hooks_report(i, n - i, t)
                if not (r["mass_ok"] and r["parity_ok"]):
                    bad.append((i, n - i, t))
    _assert_none(bad, "invariant failures")


@acceptance(8, "hook-pair cycle distributions, mass and parity, identities for n <= 6")
def test_c8_identities():
    bad = []
    for n in range(1, 7):
        for i in range(2, n + 1):
            for m in range(1, n + 1):
                if products.lemma31_eval(m, i, n - i) != oracle.a_count(m, Partition([n]), Partition([i] + [1] * (n - i))):
                    bad.append(("full cycle times hook", i, n - i, m))
        for lam in partitions(n):
            for mu in partitions(n):
                if not mu.m(1):
                    continue
                for m in range(1, n + 1):
                    left, right = products.corollary15_eval(lam, mu, m)
                    if left != right:
                        bad.append(("one-stage", tuple(lam), tuple(mu), m, left, right))
    _assert_none(bad, "identity failures")


# 9


@acceptance(9, "standard separation for two n-cycles and two (n-1,1)'s, anchors, grouping")
def test_c9_formulas_vs_oracle():
    bad = []
    for n in range(1, 8):
        for m in range(1, min(4, n) + 1):
            for comp in compositions(m):
                f = nonfull.sigma_nn(n, comp)
                o = nonfull.sigma_oracle(Partition([n]), Partition([n]), comp)
                if f != o:
                    bad.append(("nn", n, str(comp), f, o))
                if n >= 3:
                    f = nonfull.sigma_n11(n, comp)
                    o = nonfull.sigma_oracle(hook(n, 1), hook(n, 1), comp)
                    if f != o:
                        bad.append(("n11", n, str(comp), f, o))
    _assert_none(bad, "disagreements")


@acceptance(9, "standard separation for two n-cycles and two (n-1,1)'s, anchors, grouping")
def test_c9_anchors():
    c11 = Composition([1, 1])
    assert nonfull.sigma_nn(3, c11) == Fraction(1, 2)
    assert nonfull.sigma_oracle(Partition([3]), Partition([3]), c11) == Fraction(1, 2)
    assert nonfull.sigma_n11(3, c11) == Fraction(1, 3)
    assert nonfull.sigma_oracle(Partition([2, 1]), Partition([2, 1]), c11) == Fraction(1, 3)


@acceptance(9, "standard separation for two n-cycles and two (n-1,1)'s, anchors, grouping")
def test_c9_grouping():
    bad = []
    for n in range(3, 8):
        for m in range(1, min(4, n) + 1):
            for k in range(1, m + 1):
                r = nonfull.n11_grouping_check(n, m, k)
                if not r["ok"]:
                    bad.append(r)
                groups = {}
                for c in compositions(m, k):
                    v = nonfull.sigma_oracle(hook(n, 1), hook(n, 1), c) / c.factorial_product()
                    groups.setdefault(c.count(1), set()).add(v)
                bad.extend(("oracle", n, m, k, m1) for m1, vs in groups.items() if len(vs) > 1)
    _assert_none(bad, "grouping failures")


# 10


@acceptance(10, "normalized separation scan for (n-a,1^a) factors runs with a valid report")
def test_c10_scan(tmp_path):
    report = nonfull.conjecture38_scan(n_max=6, a_max=2, m_max=4)
    assert nonfull.validate_conjecture_report(report)
    path = tmp_path / "scan.json"
    path.write_text(json.dumps(report))
    assert nonfull.validate_conjecture_report(json.loads(path.read_text()))
    s = report["summary"]
    assert s["groups"] > 0
    print(f"scan: {s['groups']} groups, {s['consistent']} consistent, "
          f"{s['violations']} violations, {s['trivial']} trivial")


# 11


@acceptance(11, "verify --scope all --n-max 7 under 10 minutes; thread-count determinism")
def test_c11_verify_runtime():
    # a fresh interpreter, so no cached enumeration is reused
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "permfact", "verify", "--scope", "all", "--n-max", "7"],
                          capture_output=True, text=True, timeout=600)
    elapsed = time.perf_counter() - t0
    assert elapsed < 600, elapsed
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    failed = [(c["scope"], c["name"]) for c in doc["result"]["checks"] if not c["ok"]]
    _assert_none(failed, "failing checks")
    print(f"verify all n<=7: {elapsed:.1f}s wall, {len(doc['result']['checks'])} checks")


@acceptance(11, "verify --scope all --n-max 7 under 10 minutes; thread-count determinism")
def test_c11_thread_determinism():
    cases = [(Partition([7]), hook(7, 2)), (hook(7, 1), hook(7, 1)), (Partition([4, 3]), Partition([3, 2, 2]))]
    for lam, mu in cases:
        tri = [oracle.triple_counts(lam, mu, threads=t, cache=False).value for t in (1, 2, 8)]
        assert tri[0] == tri[1] == tri[2]
        sep = [oracle.separation_tally(lam, mu, 4, threads=t, cache=False) for t in (1, 2, 8)]
        assert sep[0] == sep[1] == sep[2]
