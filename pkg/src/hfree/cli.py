"""Command-line entry point.

Six subcommand groups: construct (builders), analyze (profile reports),
verify (certificates), oracle (exact search and extraction), bounds
(formula evaluation and region CSV), compute (vector calculus).

Exit codes: 0 success, 1 when a requested check produced a verified-false
certificate, 2 on usage or input errors. With --out the artifact goes to
the named file and a <out>.manifest.json records input/output digests;
without it, output goes to stdout and no manifest is written.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Sequence

from . import __version__
from .bounds import bounds_eval, format_region_csv, region_grid
from .certify import Certificate, jsonable
from .constructions import (
    build_fdk,
    build_level_intersecting,
    build_sunflower,
    merge_families,
    pad_family,
    take_subfamily,
    verify_uniform_pattern,
)
from .core import (
    Even,
    a_from_b,
    b_from_a,
    eip_extract,
    evenness_classify,
    venn_profile,
)
from .errors import HFreeError
from .geometry import build_plane, dual_family, verify_3design
from .linalg import (
    a_from_d,
    bdw_identity_check,
    d_from_b,
    vdm_identity_check,
)
from .oracle import (
    bvector_pattern,
    ex_exact,
    hfree_extract,
    homogeneous_extract,
    sunflower_extract,
    sunflower_pattern,
)
from .storage import dumps_family, load_family, write_manifest


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _span(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if hi else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _json(payload) -> str:
    return json.dumps(jsonable(payload), indent=2, sort_keys=True) + "\n"


def _family_payload(handler):
    def run(args):
        fam, inputs = handler(args)
        return dumps_family(fam), 0, inputs

    return run


@_family_payload
def _construct_sunflower(args):
    return build_sunflower(args.m, args.r, args.core), []


@_family_payload
def _construct_fdk(args):
    return build_fdk(args.m, args.d), []


@_family_payload
def _construct_levelint(args):
    return build_level_intersecting(args.m, args.level), []


@_family_payload
def _construct_merge(args):
    fam = merge_families(load_family(args.left), load_family(args.right))
    return fam, [args.left, args.right]


@_family_payload
def _construct_pad(args):
    return pad_family(load_family(args.family), args.extra), [args.family]


@_family_payload
def _construct_sub(args):
    return take_subfamily(load_family(args.family), args.take), [args.family]


def _construct_plane(args):
    plane = build_plane(args.q)
    if args.emit == "dual":
        return dumps_family(dual_family(plane)), 0, []
    payload = {
        "q": plane.q,
        "points": plane.point_labels(),
        "circles": [list(c) for c in plane.circles],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n", 0, []


def _analyze(args):
    fam = load_family(args.family)
    if args.what == "profile":
        prof = venn_profile(fam.edges)
        payload = {
            "k": prof.k,
            "cells": [
                {"edges": list(s), "count": c}
                for s, c in sorted(prof.cells.items())
            ],
        }
    elif args.what == "eip":
        got = eip_extract(fam.edges)
        if isinstance(got, tuple):
            payload = {"eip": True, "b": list(got)}
        else:
            payload = {"eip": False, "violation": asdict(got)}
    else:
        verdict = evenness_classify(fam.edges)
        if isinstance(verdict, Even):
            payload = {"even": True}
        else:
            payload = {"even": False, "violation": asdict(verdict)}
    return _json(payload), 0, [args.family]


def _cert_exit(cert: Certificate, inputs: list[str]):
    return cert.to_json(), 0 if cert.result else 1, inputs


def _verify_pattern(args):
    fam = load_family(args.family)
    return _cert_exit(verify_uniform_pattern(fam, args.b), [args.family])


def _verify_design(args):
    return _cert_exit(verify_3design(build_plane(args.q)), [])


def _verify_identity(args):
    if args.which == "vdm":
        if args.x is None or args.y is None or args.z is None:
            raise ValueError("vdm needs --x, --y and --z")
        instances = [
            (x, y, z)
            for x in range(args.x[0], args.x[1] + 1)
            for y in range(args.y[0], args.y[1] + 1)
            for z in range(args.z[0], args.z[1] + 1)
            if z <= y
        ]
        if not instances:
            raise ValueError("ranges select no (x, y, z) with z <= y")
        if len(instances) == 1:
            return _cert_exit(vdm_identity_check(*instances[0]), [])
        witness = None
        for x, y, z in instances:
            cert = vdm_identity_check(x, y, z)
            if not cert.result:
                witness = {"x": x, "y": y, "z": z, **cert.witness}
                break
        sweep = Certificate(
            claim="vdm_identity_sweep",
            parameters={
                "x": f"{args.x[0]}:{args.x[1]}",
                "y": f"{args.y[0]}:{args.y[1]}",
                "z": f"{args.z[0]}:{args.z[1]}",
                "instances": len(instances),
            },
            result=witness is None,
            witness=witness,
        )
        return _cert_exit(sweep, [])
    if args.k is None or args.m is None:
        raise ValueError("bdw needs --k and --m")
    instances = [
        (k, m)
        for k in range(args.k[0], args.k[1] + 1)
        for m in range(args.m[0], args.m[1] + 1)
        if m >= k
    ]
    if not instances:
        raise ValueError("ranges select no (k, m) with m >= k")
    if len(instances) == 1:
        return _cert_exit(bdw_identity_check(*instances[0]), [])
    witness = None
    for k, m in instances:
        cert = bdw_identity_check(k, m)
        if not cert.result:
            witness = {"k": k, "m": m, **cert.witness}
            break
    sweep = Certificate(
        claim="bdw_identity_sweep",
        parameters={
            "k": f"{args.k[0]}:{args.k[1]}",
            "m": f"{args.m[0]}:{args.m[1]}",
            "instances": len(instances),
        },
        result=witness is None,
        witness=witness,
    )
    return _cert_exit(sweep, [])


def _oracle_ex(args):
    fam = load_family(args.family)
    pattern = (
        bvector_pattern(args.b) if args.b is not None
        else sunflower_pattern(args.sunflower)
    )
    got = ex_exact(fam, pattern)
    payload = {
        "pattern": pattern.name,
        "value": got.value,
        "witness": list(got.witness),
        "explored": got.explored,
        "subfamily": {"version": 1, "edges": [list(e) for e in got.subfamily.edges]},
    }
    return _json(payload), 0, [args.family]


def _predicate(text: str, ell: int):
    if text == "empty":
        if ell == 2:
            return lambda a, b: not set(a) & set(b)
        return lambda a, b, c: not set(a) & set(b) & set(c)
    if text.startswith("size:"):
        n = int(text[5:])
        if ell == 2:
            return lambda a, b: len(set(a) & set(b)) == n
        return lambda a, b, c: len(set(a) & set(b) & set(c)) == n
    raise ValueError(f"unknown predicate {text!r}; use empty or size:N")


def _oracle_extract(args):
    fam = load_family(args.family)
    inputs = [args.family]
    if args.algo == "sunflower":
        if args.r is None:
            raise ValueError("sunflower extraction needs --r")
        return dumps_family(sunflower_extract(fam, args.r)), 0, inputs
    if args.algo == "hfree":
        if not args.patterns:
            raise ValueError("hfree extraction needs --patterns")
        pats = [load_family(p) for p in args.patterns]
        sub, cert = hfree_extract(fam, pats)
        payload = {
            "family": {"version": 1, "edges": [list(e) for e in sub.edges]},
            "certificate": cert.to_jsonable(),
        }
        return _json(payload), 0 if cert.result else 1, inputs + list(args.patterns)
    if args.pred is None:
        raise ValueError("homogeneous extraction needs --pred")
    sub, verdict = homogeneous_extract(fam, args.ell, _predicate(args.pred, args.ell))
    payload = {
        "family": {"version": 1, "edges": [list(e) for e in sub.edges]},
        "verdict": verdict,
    }
    return _json(payload), 0, inputs


def _bounds_eval(args):
    if args.k is not None and args.k != len(args.b):
        raise ValueError(f"--k {args.k} contradicts a length-{len(args.b)} --b")
    rep = bounds_eval(args.b, args.m)
    payload = {"b": list(args.b), "m": args.m, **asdict(rep)}
    return _json(payload), 0, []


def _bounds_region(args):
    rows = region_grid(args.m, args.b1, args.b2, args.log_step)
    return format_region_csv(rows), 0, []


def _compute(args):
    if args.what == "dfromb":
        payload = {"d": list(d_from_b(args.b, args.m))}
    elif args.what == "afromd":
        payload = {"a": list(a_from_d(args.d, args.m))}
    elif args.what == "bfroma":
        payload = {"b": list(b_from_a(args.a))}
    else:
        payload = {"a": list(a_from_b(args.b))}
    return _json(payload), 0, []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfree",
        description="exact toolkit for extremal hypergraph families",
    )
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, handler, **kwargs):
        p = group.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--out", help="write the artifact here plus a manifest")
        return p

    construct = top.add_parser(
        "construct", help="build families and planes"
    ).add_subparsers(dest="what", required=True)
    p = sub(construct, "sunflower", _construct_sunflower)
    p.add_argument("--m", type=int, required=True, help="number of petals")
    p.add_argument("--r", type=int, required=True, help="edge size")
    p.add_argument("--core", type=int, required=True, help="core size")
    p = sub(construct, "fdk", _construct_fdk)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=_ints, required=True, help="multiplicities d1,..,dk")
    p = sub(construct, "levelint", _construct_levelint)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--L", dest="level", type=int, required=True)
    p = sub(construct, "merge", _construct_merge)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = sub(construct, "pad", _construct_pad)
    p.add_argument("--family", required=True)
    p.add_argument("--extra", type=int, required=True)
    p = sub(construct, "sub", _construct_sub)
    p.add_argument("--family", required=True)
    p.add_argument("--take", type=int, required=True)
    p = sub(construct, "plane", _construct_plane)
    p.add_argument("--q", type=int, required=True, help="odd prime order")
    p.add_argument("--emit", choices=("design", "dual"), default="design")

    analyze = top.add_parser("analyze", help="report family structure")
    analyze_sub = analyze.add_subparsers(dest="what", required=True)
    for name in ("profile", "eip", "even"):
        p = sub(analyze_sub, name, _analyze)
        p.add_argument("--family", required=True)

    verify = top.add_parser("verify", help="emit certificates").add_subparsers(
        dest="what", required=True
    )
    p = sub(verify, "pattern", _verify_pattern)
    p.add_argument("--family", required=True)
    p.add_argument("--b", type=_ints, required=True, help="cell counts b1,..,bk")
    p = sub(verify, "identity", _verify_identity)
    p.add_argument("--which", choices=("vdm", "bdw"), required=True)
    p.add_argument("--x", type=_span, help="N or LO:HI")
    p.add_argument("--y", type=_span)
    p.add_argument("--z", type=_span)
    p.add_argument("--k", type=_span)
    p.add_argument("--m", type=_span)
    p = sub(verify, "design", _verify_design)
    p.add_argument("--q", type=int, required=True)

    oracle = top.add_parser("oracle", help="exact search and extraction")
    oracle_sub = oracle.add_subparsers(dest="what", required=True)
    p = sub(oracle_sub, "ex", _oracle_ex)
    p.add_argument("--family", required=True)
    mx = p.add_mutually_exclusive_group(required=True)
    mx.add_argument("--b", type=_ints, help="forbid exact cell counts b1,..,bk")
    mx.add_argument("--sunflower", type=int, help="forbid q-edge sunflowers")
    p = sub(oracle_sub, "extract", _oracle_extract)
    p.add_argument("--algo", choices=("sunflower", "hfree", "homog"), required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--r", type=int, help="edge size for sunflower extraction")
    p.add_argument("--patterns", nargs="+", help="forbidden family files")
    p.add_argument("--ell", type=int, choices=(2, 3), default=2)
    p.add_argument("--pred", help="empty or size:N")

    bounds = top.add_parser("bounds", help="bound formulas and region maps")
    bounds_sub = bounds.add_subparsers(dest="what", required=True)
    p = sub(bounds_sub, "eval", _bounds_eval)
    p.add_argument("--b", type=_ints, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, help="optional cross-check of len(b)")
    p = sub(bounds_sub, "region", _bounds_region)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b1", type=_span, required=True, help="LO:HI")
    p.add_argument("--b2", type=_span, required=True, help="LO:HI")
    p.add_argument("--log-step", type=float, default=1.25)

    compute = top.add_parser("compute", help="b/a/d vector calculus")
    compute_sub = compute.add_subparsers(dest="what", required=True)
    p = sub(compute_sub, "dfromb", _compute)
    p.add_argument("--b", type=_ints, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub(compute_sub, "afromd", _compute)
    p.add_argument("--d", type=_ints, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub(compute_sub, "bfroma", _compute)
    p.add_argument("--a", type=_ints, required=True)
    p = sub(compute_sub, "afromb", _compute)
    p.add_argument("--b", type=_ints, required=True)

    return parser


def dispatch(argv: Sequence[str]) -> int:
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code, inputs = args.handler(args)
        out = getattr(args, "out", None)
        if out is None:
            sys.stdout.write(text)
        else:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
            write_manifest(["hfree", *argv], inputs, [out], __version__)
    except (HFreeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
