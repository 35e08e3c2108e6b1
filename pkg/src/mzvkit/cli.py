"""Command-line front end: ``mzvkit compute|verify|list``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 precision failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import closed_forms as cf
from .exact import format_rat, interp_trunc, parse_rat, zt_trunc, zts_trunc
from .identity_suite import CATALOGUE, GridError, verify
from .index_algebra import parse_index
from .numeric import PrecisionError, default_digits, eval_zeta_poly, series_S_direct, xi_numeric
from .zetapoly import Zeta, ZetaPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.what} needs " + ", ".join("--" + m for m in missing))


def _digits(args) -> int:
    return args.digits if args.digits is not None else default_digits()


def _poly_doc(poly: ZetaPoly, digits: int, extra: dict | None = None) -> dict:
    red = cf.reduce_to_single(poly)
    doc = {"poly": poly.to_json(), "numeric": eval_zeta_poly(poly, digits).to_json(),
           "reduced": red.poly.to_json()}
    if red.flagged:
        doc["flagged"] = [s.to_json() for s in red.flagged]
    doc["text"] = {"poly": str(poly), "reduced": str(red.poly)}
    if extra:
        doc.update(extra)
    return doc


def compute(args) -> dict:
    what = args.what
    if what in ("ztrunc", "zstar"):
        _need(args, "N", "index")
        w = parse_index(args.index)
        star = args.star or what == "zstar"
        if args.N < 0 or (star and args.N == 0 and w.depth):
            raise UsageError("N out of range")
        v = zts_trunc(args.N, w) if star else zt_trunc(args.N, w)
        return {"value": format_rat(v)}
    if what == "interp":
        _need(args, "N", "k")
        P = interp_trunc(args.N, args.k)
        if args.t is not None:
            return {"t": format_rat(args.t), "value": format_rat(P(args.t))}
        return {"value": str(P)}
    digits = _digits(args)
    if what == "series":
        _need(args, "l1", "l2", "r1", "r2")
        return {"value": series_S_direct(args.l1, args.l2, args.r1, args.r2, digits).to_json()}
    if what == "xi":
        _need(args, "index", "s")
        return {"value": xi_numeric(parse_index(args.index), args.s, digits).to_json()}
    if what == "reduce":
        _need(args, "index")
        w = parse_index(args.index)
        if not w.admissible or w.depth == 0:
            raise UsageError("reduce needs a nonempty admissible index")
        return _poly_doc(ZetaPoly.symbol(Zeta(w, args.star)), digits)
    if what == "closed":
        _need(args, "l1", "l2", "r1", "r2")
        l1, l2, r1, r2 = args.l1, args.l2, args.r1, args.r2
        if l1 == 0 and r1 >= 1:
            return _poly_doc(cf.stirling_series_closed(l2, r1, r2), digits)
        if l2 == 0 and r1 >= 1:
            return _poly_doc(cf.zetastar_series_closed(l1, r1, r2), digits)
        if r1 == 0:
            chk = cf.arakawa_relation(l1, l2, r2, digits)
            return chk.to_json()
        split = cf.general_S1(l1, l2, r1, r2, digits)
        return {"S1": split.describe_s1(), "S1_numeric": split.s1.to_json(),
                "S2_numeric": split.s2.to_json(), "numeric": split.total.to_json(),
                "direct": split.direct.to_json()}
    raise UsageError(f"unknown compute target {what}")


def _render_text(doc) -> str:
    if isinstance(doc, dict) and set(doc) == {"value"}:
        v = doc["value"]
        return f"{v['value']} +/- {v['radius']}" if isinstance(v, dict) else str(v)
    if isinstance(doc, dict) and "text" in doc:
        lines = [f"poly:    {doc['text']['poly']}", f"reduced: {doc['text']['reduced']}",
                 f"numeric: {doc['numeric']['value']} +/- {doc['numeric']['radius']}"]
        if doc.get("flagged"):
            lines.append("flagged: " + ", ".join(str(Zeta.from_json(s)) for s in doc["flagged"]))
        return "\n".join(lines)
    return json.dumps(doc, indent=2)


def _emit(doc, args):
    text = _render_text(doc) if args.format == "text" else json.dumps(doc, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verify_text(reports) -> str:
    lines = []
    for r in reports:
        status = "ok" if r.ok else "FAIL"
        lines.append(f"{r.identity_id:22s} {status:4s} {r.cases_total - r.cases_failed}/{r.cases_total}"
                     f"  ({r.elapsed * 1000:.0f} ms)")
        if r.first_failure:
            lines.append(f"    first failure: {r.first_failure}")
    return "\n".join(lines)


def run_verify(args) -> int:
    ids = list(CATALOGUE) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in CATALOGUE:
        raise UsageError(f"unknown identity {args.identity!r}; see `list`")
    if args.grid and args.identity == "all":
        raise UsageError("--grid applies to a single identity")
    reports = [verify(i, args.grid) for i in ids]
    if args.format == "text":
        text = _verify_text(reports)
    else:
        payload = reports[0].to_json() if len(reports) == 1 else {
            "reports": [r.to_json() for r in reports],
            "cases_total": sum(r.cases_total for r in reports),
            "cases_failed": sum(r.cases_failed for r in reports)}
        text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def run_list(args) -> int:
    if args.format == "json":
        print(json.dumps([{"id": i.id, "description": i.description, "grid": i.default_grid()}
                          for i in CATALOGUE.values()], indent=2))
    else:
        for i in CATALOGUE.values():
            print(f"{i.id:22s} {i.description}\n{'':22s} grid: {i.default_grid()}")
    return EXIT_OK


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mzvkit", description="Truncated and infinite multiple zeta values.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate a value")
    c.add_argument("what", choices=["ztrunc", "zstar", "interp", "series", "xi", "closed", "reduce"])
    c.add_argument("--N", type=int)
    c.add_argument("--index", help="comma-separated index word, e.g. 2,1,1")
    c.add_argument("--star", action="store_true", help="use the star variant")
    c.add_argument("--k", type=int)
    for name in ("l1", "l2", "r1", "r2", "s"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--t", type=_rat, help="rational p/q")
    c.add_argument("--digits", type=int)
    c.add_argument("--out")
    c.add_argument("--format", choices=["json", "text"], default="json")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("identity", help="catalogue id or 'all'")
    v.add_argument("--grid", help='override, e.g. "N<=15,r<=2,a<=3,b<=3"')
    v.add_argument("--out")
    v.add_argument("--format", choices=["json", "text"], default="json")

    ls = sub.add_parser("list", help="list identity ids")
    ls.add_argument("--format", choices=["json", "text"], default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "list":
            return run_list(args)
        if args.command == "verify":
            return run_verify(args)
        if args.digits is not None and args.digits < 1:
            raise UsageError("--digits must be positive")
        _emit(compute(args), args)
        return EXIT_OK
    except PrecisionError as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (UsageError, GridError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
