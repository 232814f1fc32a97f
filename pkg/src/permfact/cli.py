"""Command-line front end.

Exit codes: 0 success or agreement, 1 usage error, 2 disagreement found,
3 refusal because a query exceeds the enumeration bound.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__, characters, kernel, nonfull, nu as nu_mod, oracle, products, separation, symfunc, verify
from .core import Composition, Partition, PreconditionError, class_size, hook

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_REFUSED = 0, 1, 2, 3
CACHE_ENV = "PERMFACT_CACHE_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("parts must be positive")
    return vals


def _partition(text: str) -> Partition:
    return Partition(_ints(text)) if text.strip() else Partition()


def _composition(text: str) -> Composition:
    return Composition(_ints(text))


def plain(v):
    """JSON-ready copy with every number as a decimal string."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Partition | Composition):
        return ",".join(map(str, v))
    if isinstance(v, dict):
        return {k if isinstance(k, str) else str(plain(k)): plain(x) for k, x in v.items()}
    if isinstance(v, list | tuple):
        return [plain(x) for x in v]
    return v


# subcommands; each returns (result, agreed)


def cmd_nu(args):
    rho, lam = args.rho, args.lam
    if rho.n >= lam.n:
        raise PreconditionError("need |rho| < |lambda|")
    if args.method == "all":
        values = nu_mod.nu_all(rho, lam, args.max_n)
    else:
        values = {args.method: nu_mod.nu(rho, lam, args.method, args.max_n)}
    agreed = len(set(values.values())) <= 1
    return {"rho": rho, "lambda": lam, "values": values, "agree": agreed}, agreed


def cmd_char(args):
    pi, mu = args.pi, args.mu
    value = characters.mn_character(pi, mu)
    out = {"pi": pi, "mu": mu, "character": value}
    agreed = True
    if pi.length and pi == hook(pi.n, pi.length - 1):
        h = characters.HookIndex(pi.n, pi.length - 1)
        out["hook_formula"] = characters.hook_character(h, mu)
        agreed = out["hook_formula"] == value
    return out, agreed


def cmd_sep(args):
    n, a, comp = args.n, args.a, args.I
    methods = ["definition", "recurrence", "oracle"] if args.method == "all" else [args.method]
    if args.mode == "standard" and args.method not in ("oracle", "all"):
        raise UsageError("standard separation is only available from the oracle")
    values = {}
    for m in methods:
        if m == "oracle":
            values[m] = oracle.separation_ratio(Partition([n]), hook(n, a), comp, args.mode,
                                                threads=args.threads, max_n=args.max_n)
        elif args.mode == "strong":
            values[m] = separation.p_product(n, a, comp, m)
    agreed = len(set(values.values())) <= 1
    return {"n": n, "a": a, "I": comp, "mode": args.mode, "values": values, "agree": agreed}, agreed


def cmd_products(args):
    r = products.hooks_report(args.i, args.j, args.t)
    ok = r["mass_ok"] and r["parity_ok"]
    if args.check_oracle:
        lam, mu = products.hook_pair(args.i, args.j, args.t)
        r["oracle"] = oracle.cycle_count_distribution(lam, mu, args.max_n)
        r["oracle_agree"] = r["oracle"] == r["distribution"]
        ok = ok and r["oracle_agree"]
    return r, ok


def cmd_symfunc(args):
    n, a = args.n, args.a
    direct = symfunc.f_a_direct(n, a)
    mono = symfunc.powersum_to_monomial(direct)
    closed = symfunc.f_a_closed(n, a)
    agreed = mono == closed
    return {"n": n, "a": a, "powersum": direct.to_json(), "monomial": mono.to_json(),
            "closed_form": closed.to_json(), "agree": agreed}, agreed


def cmd_oracle(args):
    t0 = time.perf_counter()
    if args.what == "triples":
        res = oracle.triple_counts(args.lam, args.mu, args.threads, args.max_n, cache=False)
        rows = [{"type": typ, "common_fixed": s, "count": c} for (typ, s), c in sorted(res.value.items())]
        result = {"lambda": args.lam, "mu": args.mu, "counts": rows,
                  "distribution": oracle.cycle_count_distribution(args.lam, args.mu, args.max_n),
                  "pairs": res.pairs}
    else:
        if args.I is None:
            raise UsageError("oracle sep needs --I")
        value = oracle.separation_ratio(args.lam, args.mu, args.I, args.mode, threads=args.threads,
                                        max_n=args.max_n)
        result = {"lambda": args.lam, "mu": args.mu, "I": args.I, "mode": args.mode, "value": value,
                  "pairs": class_size(args.lam) * class_size(args.mu)}
    meta = {"threads": args.threads, "seconds": round(time.perf_counter() - t0, 6)}
    return result, True, meta


def cmd_conjecture(args):
    report = nonfull.conjecture38_scan(args.n_max, args.a_max, args.m_max, args.threads, args.max_n,
                                       args.signature)
    if args.out:
        Path(args.out).write_text(json.dumps(plain(report), indent=2, sort_keys=True) + "\n")
    # violations are findings, so the scan itself succeeds
    return report, True


def cmd_verify(args):
    report = verify.verify_suite(args.scope, args.n_max, args.threads)
    meta = {"seconds": report.pop("seconds")}
    return report, report["ok"], meta


def cmd_erratum(args):
    return {"errata": verify.erratum_report()}, True


COMMANDS = {
    "nu": cmd_nu,
    "char": cmd_char,
    "sep": cmd_sep,
    "products": cmd_products,
    "symfunc": cmd_symfunc,
    "oracle": cmd_oracle,
    "conjecture": cmd_conjecture,
    "verify": cmd_verify,
    "erratum": cmd_erratum,
}
UNCACHED = {"oracle", "conjecture"}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="permfact", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"permfact {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--max-n", type=int, default=None, help="override the enumeration bound")
    common.add_argument("--verify-cache", action="store_true",
                        help=f"recompute cache hits and compare ({CACHE_ENV} selects the cache)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("nu", parents=[common], help="factorization counts")
    s.add_argument("--rho", type=_partition, required=True)
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--method", choices=list(nu_mod.METHODS) + ["all"], default="all")

    s = sub.add_parser("char", parents=[common], help="irreducible character value")
    s.add_argument("--pi", type=_partition, required=True)
    s.add_argument("--mu", type=_partition, required=True)

    s = sub.add_parser("sep", parents=[common], help="separation probability of a full cycle times a hook")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--I", type=_composition, required=True)
    s.add_argument("--method", choices=["definition", "recurrence", "oracle", "all"], default="all")
    s.add_argument("--mode", choices=["strong", "standard"], default="strong")

    s = sub.add_parser("products", parents=[common], help="cycle counts of a hook pair product")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--t", type=int, default=0)
    s.add_argument("--check-oracle", action="store_true")

    s = sub.add_parser("symfunc", parents=[common], help="generating series in power-sum and monomial bases")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", type=int, required=True)

    s = sub.add_parser("oracle", parents=[common], help="brute-force enumeration")
    s.add_argument("what", choices=["triples", "sep"])
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--mu", type=_partition, required=True)
    s.add_argument("--I", type=_composition, default=None)
    s.add_argument("--mode", choices=["strong", "standard"], default="strong")

    s = sub.add_parser("conjecture", parents=[common], help="scan normalized separation probabilities")
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--a-max", type=int, default=2)
    s.add_argument("--m-max", type=int, default=4)
    s.add_argument("--signature", choices=list(nonfull.SIGNATURES), default="printed")
    s.add_argument("--out", default=None)

    s = sub.add_parser("verify", parents=[common], help="cross-validation sweeps")
    s.add_argument("--scope", choices=list(verify.SCOPES) + ["all"], default="all")
    s.add_argument("--n-max", type=int, default=7)

    sub.add_parser("erratum", parents=[common], help="printed formulas that fail, with witnesses")
    return p


# cache


def _params(args) -> dict:
    skip = {"command", "format", "threads", "verify_cache", "out"}
    return {k: plain(v) for k, v in sorted(vars(args).items()) if k not in skip}


def _cache_path(args) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root or args.command in UNCACHED:
        return None
    key = json.dumps({"command": args.command, "params": _params(args), "version": __version__},
                     sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    return Path(root) / f"{args.command}-{digest}.json"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _run(args):
    out = COMMANDS[args.command](args)
    result, agreed = out[0], out[1]
    meta = out[2] if len(out) > 2 else {}
    return plain(result), agreed, meta


def execute(args) -> tuple[dict, int]:
    path = _cache_path(args)
    cached = None
    if path is not None and path.exists():
        try:
            cached = json.loads(path.read_text())
        except (OSError, ValueError):
            cached = None
        if cached is not None and cached.get("version") != __version__:
            cached = None
    meta = {"cache": "off" if path is None else "miss"}
    if cached is not None and not args.verify_cache:
        result, agreed = cached["result"], cached["agree"]
        meta["cache"] = "hit"
    else:
        result, agreed, extra = _run(args)
        meta.update(extra)
        if cached is not None:
            same = _canonical(cached["result"]) == _canonical(result)
            meta["cache"] = "verified" if same else "mismatch"
            if not same:
                agreed = False
        elif path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(_canonical({"version": __version__, "result": result, "agree": agreed}))
    doc = {
        "command": args.command,
        "parameters": _params(args),
        "result": result,
        "agree": agreed,
        "meta": dict(meta, version=__version__, backend=kernel.BACKEND),
    }
    return doc, EXIT_OK if agreed else EXIT_DISAGREE


# table view


def _table_rows(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _table_rows(v, f"{prefix}{k}.")
    elif isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        for i, v in enumerate(obj):
            yield from _table_rows(v, f"{prefix}{i}.")
    else:
        yield prefix.rstrip("."), obj if not isinstance(obj, list) else " ".join(map(str, obj))


def render_table(doc: dict) -> str:
    rows = list(_table_rows(doc["result"]))
    if "agree" not in doc["result"]:
        rows.append(("agree", doc["agree"]))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        doc, code = execute(args)
    except oracle.OracleBoundError as e:
        print(json.dumps({"command": args.command, "error": "refused", "message": str(e),
                          "cost_table": plain(oracle.cost_table())}), file=sys.stderr)
        return EXIT_REFUSED
    except (PreconditionError, UsageError) as e:
        print(f"permfact {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(render_table(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
