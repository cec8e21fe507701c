"""
Command-line front end and the JSON encoding of exact results.

Every number is written exactly.  Rationals are strings "num/den" (or just
"num" for integers), and the ring elements nest as follows::

    SPoly    {"s": {"<exp>": "num/den", ...}}
    USeries  {"u_min": int, "coeffs": ["num/den", ...], "u_order": int}
    Scalar   {"t": {"<exp>": SPoly or USeries, ...}}
    QSeries  {"dmax": int, "constant": "num/den", "q": {"<d>": value, ...}}
    BpsTable {"genus": g, "side": ..., "dmax": ..., "hmax": ...,
              "entries": [{"d": d, "h": h, "n": n}, ...], "report": {...}}

Exit codes: 0 success, 2 a verification failed, 3 bad arguments, 4 the
requested truncation was too small.
"""
import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, BoundsError, KleinRGWError, TruncationError, VerificationError

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_ARGUMENT = 3
EXIT_TRUNCATION = 4

SUITES = ("klein-axioms", "splitting", "sfs", "r-alpha", "sphere-cy", "torus", "functoriality", "bridge")


# JSON encoding


def rational_to_json(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def rational_from_json(text):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ArgumentError("expected a rational string, got %r" % (text,))
    return Fraction(text)


def spoly_to_json(p):
    return {"s": {str(e): rational_to_json(c) for e, c in p.items()}}


def spoly_from_json(doc):
    from .ring import SPoly
    return SPoly({int(e): rational_from_json(c) for e, c in doc["s"].items()})


def useries_to_json(x):
    return {"u_min": x.start, "coeffs": [rational_to_json(c) for c in x.coeffs], "u_order": x.order}


def useries_from_json(doc):
    from .ring import USeries
    return USeries([rational_from_json(c) for c in doc["coeffs"]], int(doc["u_min"]), int(doc["u_order"]))


def scalar_to_json(x):
    return {"t": {str(e): value_to_json(c) for e, c in x.items()}}


def scalar_from_json(doc):
    from .ring import Scalar
    return Scalar({int(e): value_from_json(c) for e, c in doc["t"].items()})


def qseries_to_json(x):
    return {"dmax": x.dmax, "constant": rational_to_json(x.constant),
            "q": {str(d): value_to_json(x.coeffs[d]) for d in x.degrees()}}


def qseries_from_json(doc):
    from .ring import QSeries
    return QSeries({int(d): value_from_json(c) for d, c in doc["q"].items()},
                   int(doc["dmax"]), rational_from_json(doc["constant"]))


def value_to_json(x):
    """Encode any exact value: rational, SPoly, USeries, Scalar or QSeries."""
    from .ring import QSeries, Scalar, SPoly, USeries
    if isinstance(x, bool):
        raise TypeError("booleans are not exact ring values")
    if isinstance(x, (int, Fraction)):
        return rational_to_json(x)
    if isinstance(x, SPoly):
        return spoly_to_json(x)
    if isinstance(x, USeries):
        return useries_to_json(x)
    if isinstance(x, Scalar):
        return scalar_to_json(x)
    if isinstance(x, QSeries):
        return qseries_to_json(x)
    raise TypeError("cannot encode %r" % (x,))


def value_from_json(doc):
    if isinstance(doc, (str, int)) and not isinstance(doc, bool):
        return rational_from_json(doc)
    if isinstance(doc, dict):
        if "s" in doc:
            return spoly_from_json(doc)
        if "u_min" in doc:
            return useries_from_json(doc)
        if "t" in doc:
            return scalar_from_json(doc)
        if "q" in doc:
            return qseries_from_json(doc)
    raise ArgumentError("unrecognised exact value %r" % (doc,))


def bps_table_to_json(table):
    entries = []
    for (d, h), n in sorted(table.values.items()):
        entries.append({"d": d, "h": h, "n": int(n) if n.denominator == 1 else rational_to_json(n)})
    report = {
        "integrality_failures": [{"d": f["d"], "h": f["h"], "value": rational_to_json(f["value"])}
                                 for f in table.report.get("integrality_failures", [])],
        "max_h": {str(d): h for d, h in sorted(table.report.get("max_h", {}).items())},
    }
    return {"genus": table.genus, "side": table.side, "dmax": table.dmax, "hmax": table.hmax,
            "entries": entries, "report": report}


def bps_table_from_json(doc):
    from .gv import BpsTable
    table = BpsTable(int(doc["genus"]), doc["side"], int(doc["dmax"]), int(doc["hmax"]))
    values = {}
    for e in doc["entries"]:
        values[(int(e["d"]), int(e["h"]))] = rational_from_json(e["n"])
    table.values = values
    table.entries = {k: int(v) for k, v in values.items() if v.denominator == 1}
    report = doc.get("report", {})
    table.report = {
        "integrality_failures": [{"d": int(f["d"]), "h": int(f["h"]), "value": rational_from_json(f["value"])}
                                 for f in report.get("integrality_failures", [])],
        "max_h": {int(d): int(h) for d, h in report.get("max_h", {}).items()},
    }
    return table


def operator_to_json(op):
    entries = [{"in": [list(p) for p in ins], "out": [list(p) for p in outs], "value": scalar_to_json(c)}
               for (ins, outs), c in sorted(op.entries.items())]
    return {"d": op.d, "n_in": op.n_in, "n_out": op.n_out, "basis": op.basis, "entries": entries}


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True)


# configuration


@dataclass
class RunConfig:
    """Validated command options shared by the subcommands."""

    d: int = None
    dmax: int = None
    genus: int = None
    level: int = None
    levels: tuple = None
    boundary: tuple = ()
    u_order: int = None
    hmax: int = None
    fmt: str = "json"

    def validate(self):
        from .combinatorics import check_degree
        if self.d is not None:
            check_degree(self.d)
        if self.dmax is not None and self.dmax < 1:
            raise BoundsError("dmax must be at least 1, got %d" % self.dmax)
        if self.genus is not None and self.genus < 0:
            raise BoundsError("genus must be non-negative, got %d" % self.genus)
        if self.u_order is not None and self.u_order < 0:
            raise BoundsError("u-order must be non-negative, got %d" % self.u_order)
        if self.hmax is not None and self.hmax < 0:
            raise BoundsError("hmax must be non-negative, got %d" % self.hmax)
        if self.level is not None and self.levels is not None:
            raise ArgumentError("give either --level or --levels, not both")
        return self


def _parse_profile(text):
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise ArgumentError("boundary profile %r is not a comma-separated list of integers" % text)
    if not parts or any(p <= 0 for p in parts):
        raise ArgumentError("boundary profile %r must list positive parts" % text)
    return tuple(sorted(parts, reverse=True))


def _config(args):
    cfg = RunConfig(
        d=getattr(args, "d", None),
        dmax=getattr(args, "dmax", None),
        genus=getattr(args, "genus", None),
        level=getattr(args, "level", None),
        levels=tuple(args.levels) if getattr(args, "levels", None) else None,
        boundary=tuple(_parse_profile(b) for b in (getattr(args, "boundary", None) or ())),
        u_order=getattr(args, "u_order", None),
        hmax=getattr(args, "hmax", None),
        fmt=getattr(args, "format", "json"),
    )
    return cfg.validate()


def _order(cfg):
    from .ring import DEFAULT_U_ORDER
    return DEFAULT_U_ORDER if cfg.u_order is None else cfg.u_order


# commands


def _level_steps(d, k, positive, negative, order):
    """Operators whose product acts by the k-th power of the level-decreasing tube."""
    from .tqft import TqftOperator, elementary_operator
    op = TqftOperator.identity(d)
    if k:
        step = elementary_operator("tube", d, positive) if k > 0 else elementary_operator(negative, d, order=order)
        op = step.power(abs(k))
    return op


def _doublet_composition(g, k1, k2, d, order):
    """cup . (level tubes) . G^g . cap, the doublet surface built from elementary pieces."""
    from .tqft import elementary_operator
    op = elementary_operator("G", d).power(g).compose(elementary_operator("cap", d))
    op = _level_steps(d, k1, (1, 0), "A", order).compose(op)
    op = _level_steps(d, k2, (0, 1), "Abar", order).compose(op)
    return elementary_operator("cup", d).compose(op).scalar()


def cmd_invariant(cfg, out):
    from .tqft import (
        closed_invariant, doublet_invariant, doublet_relative_invariant, relative_invariant,
    )
    if cfg.d is None or cfg.genus is None:
        raise ArgumentError("invariant needs --d and --genus")
    if cfg.level is None and cfg.levels is None:
        raise ArgumentError("invariant needs --level k or --levels k1 k2")
    order = _order(cfg)
    g, d = cfg.genus, cfg.d
    composition = None
    if cfg.levels is not None:
        k1, k2 = cfg.levels
        kind = "doublet"
        if cfg.boundary:
            kind = "doublet-relative"
            formula = doublet_relative_invariant(g, k1, k2, d, cfg.boundary, order)
        else:
            formula = doublet_invariant(g, k1, k2, d, order)
            composition = _doublet_composition(g, k1, k2, d, order)
    else:
        kind = "closed"
        if cfg.boundary:
            kind = "relative"
            formula = relative_invariant(g, cfg.level, d, cfg.boundary, order)
        else:
            formula = closed_invariant(g, cfg.level, d, order)
            composition = closed_invariant(g, cfg.level, d, order, route="composition")
    agree = None if composition is None else formula.agrees(composition)
    doc = {
        "kind": kind, "d": d, "genus": g,
        "level": cfg.level if cfg.levels is None else list(cfg.levels),
        "boundary": [list(b) for b in cfg.boundary],
        "u_order": order,
        "value": scalar_to_json(formula),
        "provenance": {
            "formula": scalar_to_json(formula),
            "composition": None if composition is None else scalar_to_json(composition),
            "agree": agree,
        },
    }
    if cfg.fmt == "json":
        out.write(dumps(doc) + "\n")
    else:
        out.write("%s\n" % (formula,))
        if composition is not None:
            out.write("composition route %s\n" % ("agrees" if agree else "DISAGREES"))
    if agree is False:
        raise VerificationError("formula and composition routes disagree")
    return EXIT_OK


def cmd_gv(cfg, out):
    from .gv import gv_verify
    if cfg.genus is None or cfg.dmax is None:
        raise ArgumentError("gv needs --genus and --dmax")
    report = gv_verify(cfg.genus, cfg.dmax, cfg.hmax, cfg.u_order)
    doc = {
        "genus": cfg.genus, "dmax": cfg.dmax,
        "real": bps_table_to_json(report.real),
        "complex": bps_table_to_json(report.complex),
        "checks": report.checks,
        "ok": report.ok,
    }
    if cfg.fmt == "json":
        out.write(dumps(doc) + "\n")
    else:
        for side, table in (("real", report.real), ("complex", report.complex)):
            out.write("%s BPS states, genus %d\n" % (side, cfg.genus))
            for (d, h), n in sorted(table.values.items()):
                out.write("  n[%d,%d] = %s\n" % (d, h, n))
        for name, ok in report.checks.items():
            out.write("%s %s\n" % ("PASS" if ok else "FAIL", name))
    if not report.ok:
        raise VerificationError("GV checks failed", report.failures)
    return EXIT_OK


def _degrees(cfg, default_max):
    return [cfg.d] if cfg.d is not None else list(range(1, default_max + 1))


def _suite_cases(suite, cfg, args):
    """Yield (case name, ok) pairs for one verification suite."""
    from . import dsl, gv, oracles, tqft
    from .combinatorics import partitions_of
    if suite == "klein-axioms":
        for d in _degrees(cfg, 6):
            for name, ok in tqft.klein_axiom_report(d).items():
                yield "d=%d %s" % (d, name), ok
    elif suite == "splitting":
        order = 12 if cfg.u_order is None else cfg.u_order
        genera = [cfg.genus] if cfg.genus is not None else range(0, 4)
        levels = [cfg.level] if cfg.level is not None else range(-2, 3)
        for d in _degrees(cfg, 3):
            for g in genera:
                for k in levels:
                    for split in tqft.enumerate_splits(g, k):
                        yield "d=%d g=%d k=%d %s %s" % (d, g, k, split.kind, split.params), \
                            tqft.split_check(g, k, d, split, order).ok
    elif suite == "sfs":
        for d in _degrees(cfg, 8):
            report = oracles.sfs_report(d)
            for rho in partitions_of(d):
                ok = report.brute[rho] == report.formula[rho] and report.element.get(rho, report.brute[rho]) == report.brute[rho]
                yield "indicator %s" % (tuple(rho),), ok
            for alpha in partitions_of(d):
                yield "identity %s" % (tuple(alpha),), oracles.sfs_identity_check(alpha)
    elif suite == "r-alpha":
        for d in _degrees(cfg, 10):
            report = oracles.r_alpha_crosscheck(d)
            yield "d=%d exponential = fiber sum" % d, not report.mismatches
            yield "d=%d parity vanishing" % d, not report.parity_violations
    elif suite == "sphere-cy":
        report = gv.sphere_cy_report(cfg.dmax or 8, 20 if cfg.u_order is None else cfg.u_order)
        for name, ok in report.checks.items():
            yield name, ok
    elif suite == "torus":
        report = gv.torus_report(cfg.dmax or 10)
        for name, ok in report.checks.items():
            yield name, ok
    elif suite == "functoriality":
        rng = random.Random(args.seed)
        order = 8 if cfg.u_order is None else cfg.u_order
        dmax = min(cfg.d or 4, 4)
        for i in range(args.cases):
            d = rng.randint(1, dmax)
            compose_ok, tensor_ok, texts = dsl.functoriality_check(rng, d, order)
            yield "d=%d compose %s" % (d, texts[0]), compose_ok
            yield "d=%d tensor %s" % (d, texts[1]), tensor_ok
    elif suite == "bridge":
        report = tqft.bridge_report(cfg.dmax or 5, cfg.genus if cfg.genus is not None else 3,
                                    20 if cfg.u_order is None else cfg.u_order)
        for (g, d), ok in sorted(report.items()):
            yield "g=%d d=%d" % (g, d), ok
    else:
        raise ArgumentError("unknown suite %r; expected one of %s" % (suite, ", ".join(SUITES)))


def cmd_verify(cfg, args, out):
    cases = []
    for name, ok in _suite_cases(args.suite, cfg, args):
        ok = bool(ok)
        cases.append({"case": name, "ok": ok})
        if cfg.fmt != "json":
            out.write("%s %s\n" % ("PASS" if ok else "FAIL", name))
            out.flush()
    passed = all(c["ok"] for c in cases)
    if cfg.fmt == "json":
        out.write(dumps({"suite": args.suite, "cases": cases, "ok": passed}) + "\n")
    else:
        out.write("%s: %d/%d cases pass\n" % (args.suite, sum(c["ok"] for c in cases), len(cases)))
    if not passed:
        raise VerificationError("suite %s failed" % args.suite)
    return EXIT_OK


def cmd_eval(cfg, args, out):
    from .dsl import evaluate, parse, typecheck
    from .ring import Scalar
    if cfg.d is None:
        raise ArgumentError("eval needs --d")
    node = parse(args.expr)
    arity = typecheck(node)
    result = evaluate(node, cfg.d, _order(cfg))
    if cfg.fmt == "json":
        value = scalar_to_json(result) if isinstance(result, Scalar) else operator_to_json(result)
        out.write(dumps({"expr": args.expr, "d": cfg.d, "arity": list(arity), "value": value}) + "\n")
    elif isinstance(result, Scalar):
        out.write("%s\n" % (result,))
    else:
        for (ins, outs), c in sorted(result.entries.items()):
            out.write("%s -> %s: %s\n" % ([tuple(p) for p in ins], [tuple(p) for p in outs], c))
    return EXIT_OK


def cmd_chars(cfg, args, out):
    from .characters import character_table, compute_table
    if cfg.d is None:
        raise ArgumentError("chars needs --d")
    table = compute_table(cfg.d) if args.no_cache else character_table(cfg.d)
    if cfg.fmt == "json":
        out.write(dumps({"d": table.d, "partitions": [list(p) for p in table.partitions],
                         "values": [list(r) for r in table.values]}) + "\n")
    else:
        labels = [",".join(map(str, p)) for p in table.partitions]
        width = max(max(len(x) for x in labels), max(len(str(v)) for r in table.values for v in r))
        out.write(" " * (width + 1) + " ".join(x.rjust(width) for x in labels) + "\n")
        for label, row in zip(labels, table.values):
            out.write(label.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row) + "\n")
    return EXIT_OK


# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGUMENT, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--cache-dir", help="directory for cached character tables")

    parser = _Parser(prog="kleinrgw", description="Local real Gromov-Witten invariants from the Klein TQFT.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariant", parents=[common], help="closed, doublet or relative invariants")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--levels", type=int, nargs=2, metavar=("K1", "K2"), help="doublet levels")
    p.add_argument("--boundary", action="append", metavar="PROFILE",
                   help="a boundary profile such as 2,1; repeat for several pairs")
    p.add_argument("--u-order", type=int)

    p = sub.add_parser("gv", parents=[common], help="extract and verify BPS states")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--hmax", type=int)
    p.add_argument("--u-order", type=int)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--dmax", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("--u-order", type=int)
    p.add_argument("--cases", type=int, default=200, help="functoriality cases")
    p.add_argument("--seed", type=int, default=0, help="functoriality seed")

    p = sub.add_parser("eval", parents=[common], help="evaluate a cobordism expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--u-order", type=int)

    p = sub.add_parser("chars", parents=[common], help="print the character table of S_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--no-cache", action="store_true", help="recompute without reading or writing the cache")
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        from .characters import CACHE_ENV
        os.environ[CACHE_ENV] = args.cache_dir
    try:
        cfg = _config(args)
        if args.command == "invariant":
            return cmd_invariant(cfg, out)
        if args.command == "gv":
            return cmd_gv(cfg, out)
        if args.command == "verify":
            return cmd_verify(cfg, args, out)
        if args.command == "eval":
            return cmd_eval(cfg, args, out)
        return cmd_chars(cfg, args, out)
    except VerificationError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY
    except TruncationError as exc:
        print("truncation too small: %s" % exc, file=sys.stderr)
        return EXIT_TRUNCATION
    except (ArgumentError, BoundsError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ARGUMENT
    except KleinRGWError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
