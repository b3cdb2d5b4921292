"""Command-line front end: spectra, witnesses, verification and oracle cross-checks.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 unachievable
target or argument outside the supported domain, 3 budget refusal, 4 parse error.
Failures also print one JSON object to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb
from pathlib import Path

from .errors import BudgetExceeded, DomainError, NotAchievable, ParseError
from .kk import kk_min_shadow
from .mac import (
    MacWitness,
    VERIFY_N,
    brute_S,
    construct_mac,
    middle,
    missing_size_witness,
    phi,
    theorem1_member,
    theorem1_range,
)
from .setfam import (
    DEFAULT_BUDGET,
    elset,
    exhaustive_min_shadow,
    format_family_text,
    is_maximal_antichain,
    parse_family_text,
    shadow_set,
)
from .spectrum import psi, sigma, sigma_bruteforce, witness_family

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNACHIEVABLE = 2
EXIT_BUDGET = 3
EXIT_PARSE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        _fail(EXIT_PARSE, message, {"reason": "bad arguments"})


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _fail(code: int, message: str, reason: dict | None = None):
    payload = {"error": message}
    payload.update(reason or {})
    print(json.dumps(payload), file=sys.stderr)
    raise _Exit(code)


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        _fail(EXIT_PARSE, f"{args.command} needs {', '.join(missing)}", {"reason": "bad arguments"})


def _span(args, default: tuple[int, int]) -> range:
    lo, hi = args.range if args.range else default
    return range(lo, hi + 1)


def _table(rows: list[dict], fmt: str, text_key=None) -> str:
    """Rows of equal keys as json (list), csv (header + rows) or text."""
    if fmt == "json":
        return json.dumps(rows) + "\n"
    if fmt == "csv":
        if not rows:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if text_key:
        return "".join(text_key(r) + "\n" for r in rows)
    return "".join(" ".join(f"{k}={v}" for k, v in r.items()) + "\n" for r in rows)


def _progress(done: int, total: int) -> None:
    print(f"shard {done}/{total}", file=sys.stderr)


# subcommands -----------------------------------------------------------------


def cmd_sigma(args) -> str:
    _need(args, "k")
    k = args.k
    ts = _span(args, (1, args.t if args.t is not None else k + 1))
    if ts.stop - 1 > k + 1 or ts.start < 1:
        raise DomainError(f"exact spectra need 1 <= t <= k+1 = {k + 1}")
    specs = [(t, sigma(t, k)) for t in ts]
    if args.format == "json":
        return json.dumps({"k": k, "rows": [{"t": t, "runs": [list(r) for r in s.runs]} for t, s in specs]}) + "\n"
    if args.format == "csv":
        return "".join(s.compact() + "\n" for _, s in specs)
    return "".join(str(s) + "\n" for _, s in specs)


def cmd_fig1(args) -> str:
    k = 50 if args.k is None else args.k
    ts = _span(args, (1, args.t if args.t is not None else min(14, k + 1)))
    if ts.stop - 1 > k + 1 or ts.start < 1:
        raise DomainError(f"exact spectra need 1 <= t <= k+1 = {k + 1}")
    rows = [{"t": t, "lo": lo, "hi": hi} for t in ts for lo, hi in sigma(t, k).runs]
    return _table(rows, args.format)


def cmd_psi(args) -> str:
    if args.k is None and args.range is None:
        _need(args, "k")
    ks = _span(args, (args.k, args.k)) if args.range else [args.k]
    rows = []
    for k in ks:
        rep = psi(k)
        rows.append({"k": k, "psi": rep.psi, "t_star": rep.t_star})
    return _table(rows, args.format)


def cmd_phi(args) -> str:
    if args.n is None and args.range is None:
        _need(args, "n")
    ns = _span(args, (args.n, args.n)) if args.range else [args.n]
    rows = []
    for n in ns:
        row = {"n": n, "phi": phi(n)}
        if n >= 5:
            row["missing_size"] = missing_size_witness(n)
        rows.append(row)
    if args.format == "csv" and len({len(r) for r in rows}) > 1:
        for r in rows:
            r.setdefault("missing_size", "")
        rows = [{"n": r["n"], "phi": r["phi"], "missing_size": r["missing_size"]} for r in rows]
    return _table(rows, args.format)


def _membership(n: int, m: int, exact: set[int] | None) -> tuple[str, str]:
    if exact is not None:
        return ("member" if m in exact else "non-member"), "exhaustive"
    lo, _ = theorem1_range(n)
    if m >= lo and not theorem1_member(n, m):
        return "non-member", "certified gap"
    try:
        return "member", construct_mac(n, m).origin
    except NotAchievable:
        return "unknown", "no construction"


def cmd_sn(args) -> str:
    _need(args, "n")
    n = args.n
    top = comb(n, middle(n))
    ms = _span(args, (1, top))
    exact = set(brute_S(n)) if n <= 6 else None
    rows = []
    for m in ms:
        if not 1 <= m <= top:
            rows.append({"m": m, "status": "non-member", "how": "out of range"})
            continue
        status, how = _membership(n, m, exact)
        rows.append({"m": m, "status": status, "how": how})
    return _table(rows, args.format)


def _shadow_payload(F, s: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"kind": "shadow", "n": F.n, "k": F.k, "size": len(F), "shadow": s, "sets": F.as_lists()}) + "\n"
    return format_family_text(F.n, F.members, {"kind": "shadow", "k": F.k, "size": len(F), "shadow": s})


def _mac_payload(w: MacWitness, fmt: str) -> str:
    if fmt == "json":
        return w.to_json() + "\n"
    claims = {"kind": "mac", "size": w.size, "maximal": "true" if w.maximal else "false"}
    return format_family_text(w.n, w.members(), claims)


def cmd_witness(args) -> str:
    if args.kind == "shadow":
        _need(args, "s", "t", "k")
        F = witness_family(args.s, args.t, args.k)
        out = _shadow_payload(F, args.s, args.format)
    else:
        _need(args, "n", "m")
        w = construct_mac(args.n, args.m)
        out = _mac_payload(w, args.format)
    checks = verify_text(out)
    if not all(ok for _, ok, _ in checks):
        _fail(EXIT_FAILED, "emitted witness failed re-verification", {"reason": "verification failed", "checks": _checks_json(checks)})
    return out


def _check(name: str, claimed, found) -> tuple[str, bool, str]:
    return name, claimed == found, f"claimed {claimed}, found {found}"


def _verify_shadow(n: int, sets: list[int], claims: dict) -> list[tuple[str, bool, str]]:
    out = []
    if "k" in claims:
        k = int(claims["k"])
        bad = [s for s in sets if s.bit_count() != k]
        out.append(("uniform", not bad, f"{len(bad)} sets not of size {k}"))
    if "size" in claims:
        out.append(_check("size", int(claims["size"]), len(sets)))
    if "shadow" in claims:
        out.append(_check("shadow", int(claims["shadow"]), len(shadow_set(sets))))
    return out


def _verify_mac(n: int, sets: list[int], claims: dict) -> list[tuple[str, bool, str]]:
    out = []
    if "size" in claims:
        out.append(_check("size", int(claims["size"]), len(sets)))
    method = "scan" if n <= VERIFY_N else "levels"
    antichain, maximal = is_maximal_antichain(sets, n, method=method)
    out.append(("antichain", antichain, "no set contains another" if antichain else "two members are comparable"))
    if str(claims.get("maximal", "true")).lower() in ("true", "1", "yes"):
        out.append(("maximal", antichain and maximal, "nothing can be added" if maximal else "some set can be added"))
    return out


def verify_text(text: str) -> list[tuple[str, bool, str]]:
    """Recompute every claim in a witness file (text or JSON)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        try:
            n = int(data["n"])
            if "levels" in data:
                sets = [elset(s) for rows in data["levels"].values() for s in rows]
                claims = {"kind": "mac", "size": data.get("size"), "maximal": data.get("maximal", True)}
                claims = {k: v for k, v in claims.items() if v is not None}
            else:
                sets = [elset(s) for s in data["sets"]]
                claims = {k: data[k] for k in ("kind", "k", "size", "shadow") if k in data}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"witness JSON is missing fields: {exc}") from exc
        if any(s >> n for s in sets):
            raise ParseError(f"set outside [1, {n}]")
    else:
        n, sets, claims = parse_family_text(text)
    if len(set(sets)) != len(sets):
        return [("distinct", False, "a set is listed twice")]
    kind = claims.get("kind", "shadow" if "shadow" in claims else "mac")
    if kind == "shadow":
        return _verify_shadow(n, sets, claims)
    if kind == "mac":
        return _verify_mac(n, sets, claims)
    raise ParseError(f"unknown witness kind {kind!r}")


def _checks_json(checks) -> list[dict]:
    return [{"claim": name, "pass": ok, "detail": detail} for name, ok, detail in checks]


def cmd_verify(args) -> tuple[str, int]:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.path}: {exc}") from exc
    checks = verify_text(text)
    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        out = json.dumps({"pass": passed, "checks": _checks_json(checks)}) + "\n"
    elif args.format == "csv":
        out = _table([{"claim": n, "pass": ok, "detail": d} for n, ok, d in checks], "csv")
    else:
        out = "".join(f"{'PASS' if ok else 'FAIL'} {n}: {d}\n" for n, ok, d in checks)
    return out, EXIT_OK if passed else EXIT_FAILED


def cmd_oracle(args) -> tuple[str, int]:
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    rows = []
    if args.target == "sigma":
        _need(args, "k")
        ts = _span(args, (1, args.t if args.t is not None else args.k + 1))
        for t in ts:
            exact = sigma(t, args.k)
            brute = sigma_bruteforce(t, args.k, budget=budget, jobs=args.jobs, progress=_progress)
            rows.append({"t": t, "agree": exact == brute, "sigma": exact.compact(), "bruteforce": brute.compact()})
    elif args.target == "S":
        _need(args, "n")
        n = args.n
        oracle = brute_S(n, budget=args.budget) if n == 7 else brute_S(n)
        for m in range(1, comb(n, middle(n)) + 1):
            try:
                construct_mac(n, m)
                built = True
            except NotAchievable:
                built = False
            rows.append({"m": m, "agree": built == (m in oracle), "oracle": m in oracle, "constructed": built})
    else:
        _need(args, "n", "k")
        ts = _span(args, (1, args.t if args.t is not None else 1))
        for t in ts:
            if t > comb(args.n, args.k):
                continue
            kk = kk_min_shadow(t, args.k)
            ex = exhaustive_min_shadow(args.n, args.k, t, node_budget=budget)
            rows.append({"t": t, "agree": kk == ex, "kk": kk, "exhaustive": ex})
    ok = all(r["agree"] for r in rows)
    return _table(rows, args.format), EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "sigma": cmd_sigma,
    "fig1": cmd_fig1,
    "psi": cmd_psi,
    "phi": cmd_phi,
    "sn": cmd_sn,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("k", "t", "n", "m", "s"):
        common.add_argument(f"--{flag}", type=int)
    common.add_argument("--range", type=parse_range, metavar="LO..HI")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--budget", type=int)
    common.add_argument("--jobs", type=int, default=1)

    parser = _Parser(prog="shadowspec", description="Shadow spectra and maximal antichain sizes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("sigma", parents=[common], help="shadow spectrum rows for t = 1..T (or --range of t)")
    sub.add_parser("fig1", parents=[common], help="plot-ready runs of sigma(t, k), default k=50, t<=14")
    sub.add_parser("psi", parents=[common], help="largest non-shadow size for --k or a --range of k")
    sub.add_parser("phi", parents=[common], help="smallest missing maximal antichain size for --n or a --range of n")
    sub.add_parser("sn", parents=[common], help="membership of sizes m (--range) in S(n)")
    w = sub.add_parser("witness", parents=[common], help="emit a verified witness")
    w.add_argument("kind", choices=["shadow", "mac"])
    v = sub.add_parser("verify", parents=[common], help="recompute every claim in a witness file")
    v.add_argument("path")
    o = sub.add_parser("oracle", parents=[common], help="cross-check against brute force")
    o.add_argument("target", choices=["sigma", "S", "kk"])
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
        out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
        if args.out:
            Path(args.out).write_text(out)
        else:
            sys.stdout.write(out)
        return code
    except _Exit as exc:
        return exc.code
    except NotAchievable as exc:
        print(json.dumps({"error": str(exc), **exc.reason}), file=sys.stderr)
        return EXIT_UNACHIEVABLE
    except DomainError as exc:
        print(json.dumps({"error": str(exc), "reason": "outside supported domain"}), file=sys.stderr)
        return EXIT_UNACHIEVABLE
    except BudgetExceeded as exc:
        print(json.dumps({"error": str(exc), "reason": "budget", "required": exc.required, "budget": exc.budget}), file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(json.dumps({"error": str(exc), "reason": "parse error"}), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
