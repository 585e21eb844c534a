"""Command-line driver.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
errors (unreadable or malformed files, bound violations).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ssj
from .cw import UndecidableError, is_categorically_finite
from .homalg import simplicial_homology
from .linab import homology_coefficients, linearise, space_object, sum_over_W
from .retract import collapse
from .sgrp import fundamental_group, word_str
from .sset import BoundError, validate
from .suites import SUITES, run_suite


class InputError(Exception):
    pass


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, ensure_ascii=False) + "\n")


def _load(path: str) -> ssj.SSJSpace:
    try:
        return ssj.load(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except ssj.SSJError as exc:
        raise InputError(f"{path}:{exc}") from None


def _graded(h: dict) -> dict:
    return {str(k): v for k, v in sorted(h.items())}


def _need(args, degree: int, what: str) -> None:
    if degree > args.max_dim:
        raise InputError(f"{what} needs degree {degree} but --max-dim is {args.max_dim}")


def cmd_validate(args) -> int:
    S = _load(args.file)
    rep = validate(S.space, args.max_dim)
    counts = {str(n): len(S.space.nondegenerate(n)) for n in range(args.max_dim + 1)}
    report = {"name": S.name, "valid": rep.ok, "checked": rep.checked, "nondegenerate": counts}
    if not rep.ok:
        report["violation"] = rep.violation
    if S.group is not None:
        arep = S.group_action().check(args.max_dim)
        report["action_valid"] = arep.ok
    _emit(report)
    return 0 if report["valid"] and report.get("action_valid", True) else 1


def cmd_homology(args) -> int:
    S = _load(args.file)
    _need(args, args.range + 1, "homology")
    _emit({"name": S.name, "bound": args.max_dim, "homology": _graded(simplicial_homology(S.space, args.range))})
    return 0


def cmd_pi1(args) -> int:
    S = _load(args.file)
    _need(args, 3, "the loop group presentation")
    try:
        P = fundamental_group(S.space)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"name": S.name, "generators": [repr(g) for g in P.generators],
           "relators": [word_str(r) for r in P.relators], "abelianised": P.abelianised()})
    return 0


def _retractive(args):
    S = _load(args.file)
    try:
        return S, ssj.retractive(S, args.max_dim)
    except ssj.SSJError as exc:
        raise InputError(f"{args.file}:{exc}") from None


def cmd_linearise(args) -> int:
    S, Y = _retractive(args)
    top = args.max_dim - 1
    A = sum_over_W(linearise(Y))
    _emit({"name": S.name, "bound": args.max_dim, "ranks": {str(n): A.rank(n) for n in range(A.top + 1)},
           "homotopy": _graded(A.moore_homotopy(top))})
    return 0


def cmd_collapse(args) -> int:
    S, Y = _retractive(args)
    C = collapse(Y)
    _emit({"name": S.name, "bound": args.max_dim,
           "relative_nondegenerate": {str(n): len(C.relative_nondegenerate(n)) for n in range(C.bound + 1)},
           "homology": _graded(simplicial_homology(C.total, args.max_dim - 1))})
    return 0


def cmd_orbits(args) -> int:
    S, Y = _retractive(args)
    out = {}
    for n in range(Y.bound + 1):
        out[str(n)] = sorted(len(Y.stabilizer(x)) for x, _ in Y.orbit_representatives(n))
    _emit({"name": S.name, "group_order": len(Y.G), "stabiliser_orders": out,
           "orbits": {k: len(v) for k, v in out.items()}})
    return 0


def cmd_hcoeff(args) -> int:
    S, Y = _retractive(args)
    K = _load(args.K)
    Kobj = space_object(Y.base, K.space, args.max_dim)
    try:
        h = homology_coefficients(Kobj, linearise(Y), args.max_dim - 1)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"name": S.name, "K": K.name, "bound": args.max_dim, "homology": _graded(h)})
    return 0


def cmd_cw_check(args) -> int:
    S, Y = _retractive(args)
    try:
        v = is_categorically_finite(Y)
    except UndecidableError as exc:
        _emit({"name": S.name, "finite": None, "reason": str(exc)})
        return 1
    report = {"name": S.name, "finite": v.finite, "length": v.length, "verified": bool(v.verified),
              "cells": [[n, repr(Y.r(x))] for n, x in v.cells]}
    if not v.verified:
        report["failing_step"] = v.verified.failing_step
        report["reason"] = v.verified.reason
    _emit(report)
    return 0 if v else 1


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(['all', *SUITES])}")
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="retractive", description="Retractive spaces over simplicial G-sets.")
    p.add_argument("--max-dim", type=int, default=4, help="degree bound for every computation (default 4)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, file=True):
        sp = sub.add_parser(name, help=helptext)
        if file:
            sp.add_argument("file")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check simplicial identities and the group action")
    add("homology", cmd_homology, "integral homology from normalized chains").add_argument(
        "--range", type=int, default=3, help="top degree")
    add("pi1", cmd_pi1, "loop-group presentation of π1 and its abelianisation")
    add("linearise", cmd_linearise, "π_* of the fibrewise linearisation summed over the base")
    add("collapse", cmd_collapse, "collapse the base to a point")
    add("orbits", cmd_orbits, "orbit representatives of relative nondegenerate simplices")
    add("hcoeff", cmd_hcoeff, "homology with coefficients in the linearised object").add_argument(
        "--K", required=True, help="SSJ file for K")
    add("cw-check", cmd_cw_check, "finiteness certificate")
    v = add("verify", cmd_verify, "run a named property suite", file=False)
    v.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_dim < 1:
        print("error: --max-dim must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (InputError, BoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
