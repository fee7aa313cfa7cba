"""Command line: ``ribbonyd check|eval|oracle``.

Exit status 0 on success, 1 on a semantic failure (an axiom fails, the
datum is uncertified), 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import ring as R
from .data import BUILTIN_NAMES, GROUP_BUILTINS, GROUPS, builtin, builtin_yd, check_jones_shadow, group_class
from .evaluation import UncertifiedDatum, evaluate, framed_invariant, normalization_factor
from .hopf import certify_hopf, group_algebra
from .io import DataFormatError, datum_from_json, hopf_from_json, ribbon_yd_from_json, yd_from_json
from .oracle import OracleLimit, count_meridian_homs, kauffman_bracket
from .report import CheckReport
from .ribbon import TwistNotScalar, certify_ribbon, check_prop_r35, ribbon_datum_from_yd
from .tangle import BraidWord, TangleMismatchError, TangleSyntaxError, braid_closure, parse_tangle, writhe
from .yd import check_yd

INPUT_ERRORS = (OSError, DataFormatError, R.ScalarSyntaxError, R.RingError, TangleSyntaxError,
                TangleMismatchError, KeyError, ValueError)


class InputError(Exception):
    pass


def _read_arg(text: str) -> str:
    """``@path`` reads the file, anything else is literal."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return fh.read()
    return text


# -- check --------------------------------------------------------------------

def _check_hopf_target(src: str, is_builtin: bool) -> CheckReport:
    if is_builtin:
        if src not in GROUPS:
            raise InputError(f"unknown built-in Hopf algebra {src!r}; choose from {', '.join(GROUPS)}")
        return certify_hopf(group_algebra(GROUPS[src]))
    return certify_hopf(hopf_from_json(src))


def _check_yd_target(src: str, is_builtin: bool) -> CheckReport:
    if is_builtin:
        if src not in GROUP_BUILTINS:
            raise InputError(f"unknown built-in YD module {src!r}; choose from {', '.join(GROUP_BUILTINS)}")
        return check_yd(builtin_yd(src).yd)
    return check_yd(yd_from_json(src))


def _check_ribbon_target(src: str, is_builtin: bool) -> CheckReport:
    rep = CheckReport()
    if is_builtin:
        if src not in BUILTIN_NAMES:
            raise InputError(f"unknown built-in datum {src!r}; choose from {', '.join(BUILTIN_NAMES)}")
        if src == "jones":
            rep.extend(certify_ribbon(builtin(src)))
            rep.extend(check_jones_shadow())
            return rep
        r = builtin_yd(src)
    else:
        r = ribbon_yd_from_json(src)
        if r is None:
            return certify_ribbon(datum_from_json(src))
    rep.extend(check_yd(r.yd))
    rep.extend(certify_ribbon(ribbon_datum_from_yd(r)))
    rep.extend(check_prop_r35(r))
    return rep


CHECKERS = {"hopf": _check_hopf_target, "yd": _check_yd_target, "ribbon": _check_ribbon_target}


def cmd_check(args, out) -> int:
    targets = [(b, True) for b in args.builtin] + [(f, False) for f in args.files]
    if not targets:
        raise InputError("nothing to check: give files or --builtin NAME")
    ok = True
    for k, (src, is_builtin) in enumerate(targets):
        rep = CHECKERS[args.target](src, is_builtin)
        if len(targets) > 1:
            if k:
                print(file=out)
            print(f"== {'builtin ' if is_builtin else ''}{src} ==", file=out)
        print(rep, file=out)
        ok = ok and rep.ok
    return 0 if ok else 1


# -- eval -----------------------------------------------------------------------

def _load_datum(name: str):
    if name in BUILTIN_NAMES:
        return builtin(name)
    try:
        return datum_from_json(name)
    except FileNotFoundError:
        raise InputError(f"{name!r} is neither a built-in ({', '.join(BUILTIN_NAMES)}) nor a readable file")


def _braid(text: str, strands: Optional[int]) -> BraidWord:
    return BraidWord.parse(text, strands)


def _eval_one(datum_name: str, braid_text: str, strands: Optional[int], normalize: bool, unsafe: bool) -> str:
    d = _load_datum(datum_name)
    t = braid_closure(_braid(braid_text, strands))
    return R.format_scalar(framed_invariant(t, d, normalize, unsafe))


def _eval_batch_line(job):
    return _eval_one(*job)


def cmd_eval(args, out) -> int:
    d = _load_datum(args.datum)
    if args.batch:
        words = [ln.split("#", 1)[0].strip() for ln in _read_arg("@" + args.batch).splitlines()]
        words = [w for w in words if w]
        jobs = [(args.datum, w, args.strands, args.normalize, args.unsafe) for w in words]
        if args.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                values = list(ex.map(_eval_batch_line, jobs))
        else:
            values = [_eval_batch_line(j) for j in jobs]
        for w, v in zip(words, values):
            print(f"{w}\t{v}", file=out)
        return 0
    if (args.tangle is None) == (args.braid is None):
        raise InputError("give exactly one of --tangle, --braid or --batch")
    if args.tangle is not None:
        t = parse_tangle(_read_arg(args.tangle))
    else:
        t = braid_closure(_braid(args.braid, args.strands))
    if args.raw_matrix or not t.is_closed:
        if args.normalize and not t.is_closed:
            raise InputError("--normalize needs a closed tangle")
        f = evaluate(t, d, args.unsafe)
        if args.normalize:
            f = f.scale(normalization_factor(d, writhe(t)))
        print(f, file=out)
        return 0
    print(R.format_scalar(framed_invariant(t, d, args.normalize, args.unsafe)), file=out)
    return 0


# -- oracle ---------------------------------------------------------------------

def cmd_oracle(args, out) -> int:
    b = _braid(args.braid, args.strands)
    if args.kind == "kauffman":
        print(R.format_scalar(kauffman_bracket(b)), file=out)
    else:
        if args.group not in GROUPS:
            raise InputError(f"unknown group {args.group!r}; choose from {', '.join(GROUPS)}")
        g = GROUPS[args.group]
        print(count_meridian_homs(b, g, group_class(g, args.cls)), file=out)
    return 0


# -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ribbonyd", description="Certify ribbon Yetter-Drinfeld data and evaluate tangles.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run an axiom checker")
    c.add_argument("target", choices=sorted(CHECKERS))
    c.add_argument("files", nargs="*")
    c.add_argument("--builtin", action="append", default=[], metavar="NAME")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("eval", help="evaluate a tangle or a braid closure")
    e.add_argument("--datum", required=True, help=f"built-in ({', '.join(BUILTIN_NAMES)}) or ribbon JSON file")
    e.add_argument("--tangle", help="slice DSL text, or @file")
    e.add_argument("--braid", help='braid word such as "1 -2 1"')
    e.add_argument("--strands", type=int)
    e.add_argument("--batch", metavar="FILE", help="one braid word per line")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--normalize", action="store_true", help="multiply by twist^-writhe")
    e.add_argument("--raw-matrix", action="store_true", help="print the matrix instead of the scalar")
    e.add_argument("--unsafe", action="store_true", help="skip certification")
    e.set_defaults(func=cmd_eval)

    o = sub.add_parser("oracle", help="brute-force reference values")
    osub = o.add_subparsers(dest="kind", required=True)
    k = osub.add_parser("kauffman")
    k.add_argument("--braid", required=True)
    k.add_argument("--strands", type=int)
    h = osub.add_parser("count-homs")
    h.add_argument("--group", default="s3")
    h.add_argument("--class", dest="cls", default="transpositions")
    h.add_argument("--braid", required=True)
    h.add_argument("--strands", type=int)
    for q in (k, h):
        q.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UncertifiedDatum as exc:
        print("error: datum is not certified (pass --unsafe to evaluate anyway)", file=err)
        print(exc.report, file=err)
        return 1
    except TwistNotScalar as exc:
        print(f"error: cannot normalize: {exc}", file=err)
        return 1
    except OracleLimit as exc:
        print(f"error: {exc}", file=err)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
