"""Command-line interface.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from .atlas import CACHE_ENV, classify_cached, run_atlas, summarize, to_csv, to_json_report
from .cleanness import (
    IndependentChecker,
    clean_witness,
    feckly_witness,
    is_clean_ring,
)
from .ideals import SIDES, TWO_SIDED, all_ideals
from .ring import DEFAULT_MAX_ORDER, FiniteRing, idempotents
from .spectra import (
    JSPEC,
    MAX,
    SpaceError,
    SpectrumSpace,
    clopen_sets,
    is_discrete,
    is_hausdorff,
    is_normal,
    is_strongly_zero_dimensional,
    j_spectrum,
    load_space,
    max_spectrum,
)
from .specs import SpecError, build, default_corpus, load_spec
from .theorems import check_all_theorems
from .zlocal import ZLocalError, ZLocalRing, format_rational, parse_primes

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj: Any, fmt: str = "json", out: str | None = None) -> None:
    if fmt == "table" and isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        text = "\n".join(f"{k:<{width}}  {_plain(v)}" for k, v in obj.items()) + "\n"
    else:
        text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _plain(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return v if isinstance(v, str) else json.dumps(v)


def _ring(args: argparse.Namespace) -> Any:
    try:
        return build(load_spec(args.spec), args.max_order)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def _finite(args: argparse.Namespace) -> FiniteRing:
    R = _ring(args)
    if not isinstance(R, FiniteRing):
        raise InputError("this command needs a finite ring spec")
    return R


# -- commands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        spec = load_spec(args.spec)
        rec = classify_cached(spec, args.max_order, args.cache_dir)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    _emit(rec.to_json(), args.format, args.out)
    return EXIT_OK if rec.theorems_pass else EXIT_FAIL


def finite_witness_report(R: FiniteRing, a: int, mode: str) -> dict:
    chk = IndependentChecker(R)
    out: dict[str, Any] = {"ring": R.name, "mode": mode, "element": R.format(a)}
    if mode == "clean":
        w = clean_witness(R, a)
        candidates = len(idempotents(R))
        if w is not None:
            chk.check_clean(w)
            transcript = ["a = e + u: ok", "e * e = e: ok", "u has a two-sided inverse: ok"]
    else:
        w = feckly_witness(R, a)
        candidates = R.order
        if w is not None:
            chk.check_feckly(w)
            transcript = ["a = e + u: ok", "R u R = R: ok",
                          f"e r (1 - e) in J(R) for all {R.order} r: ok", "e^2 - e in J(R): ok"]
    if w is None:
        out.update(witness=None, note=f"exhaustive search over {candidates} candidates found none")
    else:
        out.update(witness=w.to_json(), validation=transcript)
    return out


def zlocal_witness_report(Z: ZLocalRing, literal: str, mode: str) -> dict:
    x = Z.element(literal)
    out: dict[str, Any] = {"ring": Z.name, "mode": mode, "element": format_rational(x)}
    if mode == "clean":
        for e in (0, 1):
            if Z.is_unit(x - e):
                out.update(witness={"a": format_rational(x), "e": str(e),
                                    "u": format_rational(x - e)},
                           validation=["a = e + u: ok", "e idempotent: ok", "u unit: ok"])
                return out
        out.update(witness=None, note="idempotents are 0 and 1; neither x nor x - 1 is a unit")
        return out
    d = Z.feckly_witness(x)
    out.update(witness=d.to_json(),
               validation=["a = e + u: ok", "u unit (hence full): ok", "e - e^2 in J: ok"])
    return out


def cmd_witness(args: argparse.Namespace) -> int:
    R = _ring(args)
    try:
        if isinstance(R, ZLocalRing):
            report = zlocal_witness_report(R, args.element, args.mode)
        else:
            report = finite_witness_report(R, R.parse(args.element), args.mode)
    except (ValueError, ZLocalError) as exc:
        raise InputError(str(exc)) from exc
    _emit(report, "json", args.out)
    return EXIT_OK


def space_report(space: SpectrumSpace) -> dict:
    return {
        "provenance": space.provenance,
        **space.to_json(),
        "clopen": sorted((space.labels(c) for c in clopen_sets(space)), key=lambda c: (len(c), c)),
        "discrete": is_discrete(space),
        "hausdorff": is_hausdorff(space),
        "normal": is_normal(space),
        "strongly_zero_dimensional": is_strongly_zero_dimensional(space),
    }


def cmd_spectrum(args: argparse.Namespace) -> int:
    try:
        data = load_spec(args.spec)
        if isinstance(data, dict) and "points" in data:
            space = load_space(data)
        else:
            R = build(data, args.max_order)
            if not isinstance(R, FiniteRing):
                raise InputError("spectrum needs a finite ring spec or an abstract space")
            space = max_spectrum(R) if args.space == MAX else j_spectrum(R)
    except (ValueError, TypeError, KeyError, SpaceError) as exc:
        raise InputError(str(exc)) from exc
    _emit(space_report(space), "json", args.out)
    return EXIT_OK


def cmd_ideals(args: argparse.Namespace) -> int:
    R = _finite(args)
    lattice = all_ideals(R, args.side)
    _emit({
        "ring": R.name,
        "side": args.side,
        "count": len(lattice),
        "ideals": [I.literals() for I in lattice],
        "covers": lattice.covers(),
    }, "json", args.out)
    return EXIT_OK


def cmd_theorems(args: argparse.Namespace) -> int:
    R = _finite(args)
    report = check_all_theorems(R)
    doc = report.to_json()
    if not report.passed:
        doc["counterexample"] = [e.to_json() for e in report.failures()][0]
    _emit(doc, "json", args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_atlas(args: argparse.Namespace) -> int:
    try:
        specs = load_spec(args.corpus) if args.corpus else default_corpus()
    except SpecError as exc:
        raise InputError(str(exc)) from exc
    if not isinstance(specs, list):
        raise InputError("corpus must be a JSON list of ring specs")
    rows = run_atlas(specs, args.jobs, args.max_order, args.cache_dir, args.timings)
    text = to_csv(rows) if args.format == "csv" else to_json_report(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    s = summarize(rows)
    print(f"atlas: {s['total']} rings, {s['passed']} passed, {s['failed']} failed, "
          f"{s['errors']} errors", file=sys.stderr)
    return EXIT_OK if s["passed"] == s["total"] else EXIT_FAIL


def cmd_zlocal(args: argparse.Namespace) -> int:
    try:
        Z = ZLocalRing(parse_primes(args.primes))
        if args.action == "classify":
            c = Z.classify()
            Q = Z.quotient_mod_J()
            c["quotient_mod_J"] = {"ring": Q.name, "order": Q.order, "is_clean": is_clean_ring(Q)}
            _emit(c, "json", args.out)
            return EXIT_OK if c["clean_iff_feckly_and_pm"] else EXIT_FAIL
        if args.element is None:
            raise InputError("--element is required")
        if args.action == "member":
            _emit({"ring": Z.name, "element": args.element, "member": Z.contains(args.element)},
                  "json", args.out)
            return EXIT_OK
        _emit(zlocal_witness_report(Z, args.element, args.mode), "json", args.out)
        return EXIT_OK
    except ZLocalError as exc:
        raise InputError(str(exc)) from exc


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="refuse to build rings larger than this (default %(default)s)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"classification cache directory (env {CACHE_ENV})")

    p = argparse.ArgumentParser(prog="feckly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classification record for one ring")
    c.add_argument("spec", help="ring-spec JSON file or inline JSON")
    c.add_argument("--format", choices=["json", "table"], default="json")
    c.set_defaults(func=cmd_classify)

    w = sub.add_parser("witness", parents=[common], help="clean or feckly decomposition")
    w.add_argument("spec")
    w.add_argument("--element", required=True)
    w.add_argument("--mode", choices=["clean", "feckly"], default="feckly")
    w.set_defaults(func=cmd_witness)

    s = sub.add_parser("spectrum", parents=[common], help="Max / J-spec space or an abstract space")
    s.add_argument("spec", help="ring spec, or {'points': [...], 'closed': [...]}")
    s.add_argument("--space", choices=[MAX, JSPEC], default=MAX)
    s.set_defaults(func=cmd_spectrum)

    i = sub.add_parser("ideals", parents=[common], help="dump the ideal lattice")
    i.add_argument("spec")
    i.add_argument("--side", choices=list(SIDES), default=TWO_SIDED)
    i.set_defaults(func=cmd_ideals)

    t = sub.add_parser("theorems", parents=[common], help="run the theorem harness")
    t.add_argument("spec")
    t.set_defaults(func=cmd_theorems)

    a = sub.add_parser("atlas", parents=[common], help="classify a corpus of ring specs")
    a.add_argument("corpus", nargs="?", help="JSON list of specs (default: shipped corpus)")
    a.add_argument("--jobs", type=int, default=1)
    a.add_argument("--format", choices=["json", "csv"], default="json")
    a.add_argument("--timings", action="store_true", help="add per-ring seconds to each record")
    a.set_defaults(func=cmd_atlas)

    z = sub.add_parser("zlocal", parents=[common], help="semilocal subrings Z_S of Q")
    z.add_argument("action", choices=["classify", "witness", "member"])
    z.add_argument("--primes", required=True, help="comma-separated, e.g. 2,3")
    z.add_argument("--element", help="'num/den' or an integer")
    z.add_argument("--mode", choices=["clean", "feckly"], default="feckly")
    z.set_defaults(func=cmd_zlocal)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
