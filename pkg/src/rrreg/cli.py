"""Command-line interface: ``rrreg <command> ...``.

Exit codes: 0 success, 1 bad input, 2 a cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import CHECKS, DEFAULT_CHECKS, br_watch, run_checks
from .equigen import power_ideal
from .errors import InputError, InternalCheckError
from .explorer import FAMILIES, ExploreJob, run_job
from .parsing import parse_form_pair, parse_ideal
from .ratliff_rush import rr_closure
from .redcheck import is_reduction_at, reduction_number_of, sample_reductions
from .render import extra_points, render_ascii, render_svg
from .report import analyze
from .staircase import format_monomial

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def parse_field(text: str):
    """``q`` for the rationals, ``p:<prime>`` for GF(p) with ``p < 2^31``."""
    if text == "q":
        return "q"
    if text.startswith("p:") and text[2:].isdigit():
        p = int(text[2:])
        if not _is_prime(p) or p >= 1 << 31:
            raise InputError(f"{p} is not a prime below 2^31")
        return p
    raise InputError(f"field must be 'q' or 'p:<prime>', got {text!r}")


def _check_field_size(field, d: int, cap: int):
    if field != "q" and field <= d * cap:
        raise InputError(f"prime {field} too small: need p > d * cap = {d * cap}")


def _gens(ideal) -> str:
    return ", ".join(format_monomial(g.i, g.j) for g in ideal.gens)


def cmd_analyze(args) -> int:
    spec = parse_ideal(args.ideal)
    rep = analyze(spec, include_rr=args.rr, max_n=args.max_n)
    if args.json:
        print(rep.to_json(indent=2 if args.pretty else None))
        return EXIT_OK
    rows = [
        ("ideal", f"d={rep.d}; a={','.join(map(str, rep.A))}"),
        ("e = d^2", rep.e),
        ("r_J (J = (x^d, y^d))", rep.r_J),
        ("reg R", rep.regR),
        ("reg F", rep.regF),
        ("s (Ratliff-Rush index)", rep.s),
        ("s* (Ratliff-Rush regularity)", rep.s_star),
        ("s*_ini", rep.s_ini),
        ("reg R = reg F", "yes" if rep.eu_equal else "no"),
        ("class", f"{rep.eu_class} (all: {', '.join(rep.eu_classes)})"),
        ("s* < r_J (r_J same for all J)", "yes" if rep.invariance else "no"),
        ("fiber ring Cohen-Macaulay", "yes" if rep.is_cm else "no"),
        ("fiber ring Buchsbaum", "yes" if rep.is_buchsbaum else "no"),
        ("dim H^1 in degrees 1..", " ".join(map(str, rep.h1)) or "-"),
    ]
    w = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{w}}  {v}")
    if rep.rr_generators:
        for n, gens in rep.rr_generators.items():
            print(f"closure of I^{n}: " + ", ".join(format_monomial(i, j) for i, j in gens))
    return EXIT_OK


def cmd_rr(args) -> int:
    E = parse_ideal(args.ideal).resolved
    rep = analyze(E)
    ns = [args.n] if args.n is not None else range(1, (args.max_n or max(rep.regR, 1) + 1) + 1)
    out = []
    for n in ns:
        if n < 1:
            raise InputError("n must be at least 1")
        entry = rr_closure(E, n, rep.regR)
        In = power_ideal(E, n)
        out.append({
            "n": n,
            "closure": [list(g) for g in entry.closure.gens],
            "power": [list(g) for g in In.gens],
            "equal": entry.closure == In,
            "t_used": entry.t_used,
            "stabilized": entry.stabilized,
        })
    if args.json:
        print(json.dumps({"schema": 1, "d": E.d, "A": E.exponents, "regR": rep.regR, "entries": out}))
        return EXIT_OK
    for e in out:
        tag = "= I^n" if e["equal"] else "strictly contains I^n"
        print(f"n={e['n']} (t={e['t_used']}), {tag}:")
        print("  " + ", ".join(format_monomial(i, j) for i, j in e["closure"]))
    return EXIT_OK


def cmd_staircase(args) -> int:
    E = parse_ideal(args.ideal).resolved
    if args.n < 1:
        raise InputError("n must be at least 1")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(E, args.n))
        print(f"wrote {args.svg}")
    if not args.svg or args.ascii:
        sys.stdout.write(render_ascii(E, args.n))
    if args.json:
        print(json.dumps({"schema": 1, "n": args.n, "extra": [list(p) for p in extra_points(E, args.n)]}))
    return EXIT_OK


def cmd_reduce(args) -> int:
    spec = parse_ideal(args.ideal)
    E = spec.resolved
    field = parse_field(args.field)
    rep = analyze(E)
    cap = args.max_n if args.max_n is not None else rep.regR + 1
    _check_field_size(field, E.d, cap)
    if args.forms is None:
        smp = sample_reductions(E, args.trials, args.seed, field=field, regR=rep.regR, s_star=rep.s_star)
        data = {
            "schema": 1,
            "d": E.d,
            "A": E.exponents,
            "trials": smp.trials,
            "rejected": smp.rejected,
            "histogram": {str(k): v for k, v in smp.histogram.items()},
            "anchor_r": smp.anchor_r,
            "min_r": smp.min_r,
            "max_r": smp.max_r,
            "lower_bound_br": smp.lower_bound_br,
            "s_star": smp.s_star,
            "watch": smp.watch,
            "note": smp.note,
        }
        if args.json:
            print(json.dumps(data))
        else:
            print(f"random reductions: {smp.trials} trials, {smp.rejected} degenerate draws rejected")
            print("histogram (incl. (x^d, y^d)): " + ", ".join(f"r={k}: {v}" for k, v in smp.histogram.items()))
            print(f"br(I) >= {smp.lower_bound_br}; s* = {smp.s_star}")
            if smp.note:
                print(smp.note)
        return EXIT_OK
    f, g = parse_form_pair(args.forms, E.d)
    if args.n is not None:
        ok = is_reduction_at(E, f, g, args.n, field)
        result = {"n": args.n, "is_reduction": ok}
        text = f"({f}) I^{args.n} + ({g}) I^{args.n} {'=' if ok else '!='} I^{args.n + 1}"
    else:
        r = reduction_number_of(E, f, g, cap, field)
        result = {"reduction_number": r, "cap": cap}
        text = f"reduction number of ({f}, {g}): " + (str(r) if r is not None else f"none <= {cap}")
    if args.json:
        print(json.dumps({"schema": 1, "f": str(f), "g": str(g), **result}))
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    E = parse_ideal(args.ideal).resolved
    rep = analyze(E)
    names = args.checks.split(",") if args.checks else DEFAULT_CHECKS
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise InputError(f"unknown checks: {', '.join(unknown)}")
    res = run_checks(E, names, rep)
    if args.trials:
        field = parse_field(args.field)
        _check_field_size(field, E.d, rep.regR + 1)
        w = br_watch(E, rep, args.trials, args.seed, field)
        res["sampled_reductions"] = "pass" if w["consistent"] else "fail"
    if args.json:
        print(json.dumps({"schema": 1, "d": E.d, "A": E.exponents, "checks": res}))
    else:
        w = max(len(k) for k in res)
        for k, v in res.items():
            desc = CHECKS[k].description if k in CHECKS else "sampled reduction numbers above s* equal reg R"
            print(f"{v.upper():<4}  {k:<{w}}  {desc}")
    return EXIT_CHECK if "fail" in res.values() else EXIT_OK


def cmd_explore(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    try:
        job = ExploreJob(
            family=args.family,
            d=args.d,
            checks=checks,
            count=args.count,
            seed=args.seed,
            watch_trials=args.trials,
            field=parse_field(args.field),
            output=args.out,
            fmt=args.format,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        summary = run_job(job, workers=args.workers)
    except OSError as exc:
        raise InputError(f"cannot write output: {exc}") from exc
    data = summary.to_dict()
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
    if args.json:
        print(json.dumps(data))
    else:
        print(f"{summary.records} ideals, {len(summary.failures)} failed checks, "
              f"{len(summary.watch)} br watch cases, {summary.seconds:.2f}s")
        for f in summary.failures[:20]:
            print(f"  FAIL {f['check']}: {f['ideal']} {f['error']}")
        for w in summary.watch:
            print(f"  WATCH {w['ideal']}: s*={w['s_star']} > sampled {w['lower_bound_br']} ({w['note']})")
    return EXIT_OK if summary.ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rrreg", description="Ratliff-Rush closures and regularity of equal-degree monomial ideals in k[x,y].")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ideal_help = "ideal, e.g. 'x^7, x^6*y, x^2*y^5, y^7' or 'd=7; a=0,1,5,7'"

    a = sub.add_parser("analyze", help="all invariants of one ideal")
    a.add_argument("ideal", help=ideal_help)
    a.add_argument("--json", action="store_true")
    a.add_argument("--pretty", action="store_true", help="indent JSON")
    a.add_argument("--rr", action="store_true", help="include closure generators")
    a.add_argument("--max-n", type=int, help="last n for --rr")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("rr", help="Ratliff-Rush closures of powers")
    r.add_argument("ideal", help=ideal_help)
    r.add_argument("-n", type=int, help="a single power")
    r.add_argument("--max-n", type=int, help="powers 1..N (default reg R + 1)")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rr)

    s = sub.add_parser("staircase", help="draw I^n and its closure")
    s.add_argument("ideal", help=ideal_help)
    s.add_argument("-n", type=int, default=1)
    s.add_argument("--svg", metavar="PATH", help="write an SVG file")
    s.add_argument("--ascii", action="store_true", help="also print ASCII when --svg is given")
    s.add_argument("--json", action="store_true", help="also print the extra closure points as JSON")
    s.set_defaults(func=cmd_staircase)

    d = sub.add_parser("reduce", help="reduction number of (f, g), or sample random reductions")
    d.add_argument("ideal", help=ideal_help)
    d.add_argument("forms", nargs="?", help="'f | g', e.g. 'x^7 | x^6*y + y^7'; omit to sample")
    d.add_argument("-n", type=int, help="only test (f, g) I^n = I^(n+1)")
    d.add_argument("--max-n", type=int, help="cap for the search (default reg R + 1)")
    d.add_argument("--field", default="q", help="q or p:<prime>")
    d.add_argument("--trials", type=int, default=50)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", help="run the consistency checks on one ideal")
    v.add_argument("ideal", help=ideal_help)
    v.add_argument("--checks", help="comma-separated subset of: " + ",".join(CHECKS))
    v.add_argument("--trials", type=int, default=0, help="also sample this many reductions")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--field", default="q")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("explore", help="batch checks over a family of ideals")
    e.add_argument("--family", choices=FAMILIES, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--count", type=int, default=0, help="sample size for the random family")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--checks", help="comma-separated check names")
    e.add_argument("--trials", type=int, default=0, help="random reductions per ideal for the br watch")
    e.add_argument("--field", default="q")
    e.add_argument("--out", help="append records to this file")
    e.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    e.add_argument("--summary", help="write the summary JSON here")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--json", action="store_true", help="print the summary as JSON")
    e.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
