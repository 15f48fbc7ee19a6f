"""Command-line front end: ``curve-spectra <command> ...``.

JSON reports go to stdout with sorted keys, diagnostics to stderr.

Exit codes:
  0  success
  1  verify found a failing assertion
  2  input does not parse or validate
  3  requested count is outside the spectrum
  4  filling-pair search exhausted its bound (raise --max-v)
  5  sporadic surface
  6  compare precondition (closed surfaces of genus >= 2 only)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions, search
from .analysis import DistanceClass, classify_distance, disjoint_curve_classes, intersection_number, reduce
from .errors import (
    InvalidConfiguration,
    NoPairFound,
    OutOfSpectrum,
    ParseError,
    PreconditionViolated,
    SchemaError,
    SporadicSurface,
)
from .geodesics import count_geodesics, count_tight_geodesics
from .ribbon import decode, encode, surface_type, to_dot, validate
from .theory import require_nonsporadic, spectrum_table

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_SPECTRUM = 3
EXIT_NO_PAIR = 4
EXIT_SPORADIC = 5
EXIT_COMPARE = 6


class _Exit(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _err(msg):
    sys.stderr.write(msg.rstrip("\n") + "\n")


def _load(path):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {path}: {exc}")
    try:
        config = decode(data)
    except (ParseError, SchemaError) as exc:
        raise _Exit(EXIT_INPUT, str(exc))
    report = validate(config)
    if not report.ok:
        code = EXIT_SPORADIC if report.codes() == {"sporadic"} else EXIT_INPUT
        raise _Exit(code, json.dumps({"violations": report.to_json()}, sort_keys=True))
    return config


def _surface(args):
    genus = args.genus if args.genus is not None else args.g
    punct = args.punctures if args.punctures is not None else args.n
    if genus is None or punct is None:
        raise _Exit(EXIT_INPUT, "genus and punctures are required")
    try:
        require_nonsporadic(genus, punct)
    except SporadicSurface as exc:
        raise _Exit(EXIT_SPORADIC, str(exc))
    return genus, punct


def cmd_analyze(args):
    config = _load(args.input)
    st = surface_type(config)
    try:
        dist = classify_distance(config)
    except PreconditionViolated as exc:
        raise _Exit(EXIT_INPUT, str(exc))
    out = {"surface": list(st), "i": intersection_number(config), "distance": dist.value}
    if dist is DistanceClass.EXACTLY_TWO:
        out["geodesics"] = count_geodesics(config).to_json()
        out["tight"] = count_tight_geodesics(config).to_json()
        out.update(disjoint_curve_classes(reduce(config).config).to_json())
    _emit(out)
    return EXIT_OK


def _constructed(genus, punct, max_v):
    done = []
    for k in sorted(spectrum_table(genus, punct)):
        try:
            constructions.construct(genus, punct, k, max_v)
        except NoPairFound:
            continue
        done.append(k)
    return done


def cmd_construct(args):
    genus, punct = _surface(args)
    try:
        plan = constructions.plan_for_k(genus, punct, args.count)
        config = constructions.realize(plan, args.max_v)
    except OutOfSpectrum as exc:
        raise _Exit(EXIT_SPECTRUM, str(exc))
    except NoPairFound as exc:
        raise _Exit(EXIT_NO_PAIR, f"{exc}; raise --max-v")
    if args.out:
        Path(args.out).write_bytes(encode(config))
    summary = {
        "surface": [genus, punct],
        "vertices": config.n_vertices,
        "geodesics": count_geodesics(config).to_json(),
        "tight": count_tight_geodesics(config).to_json(),
        "plan": plan.to_json(),
        "certified": True,
        "out": args.out,
    }
    _emit(summary)
    return EXIT_OK


def cmd_spectrum(args):
    genus, punct = _surface(args)
    out = {
        "surface": [genus, punct],
        "theoretical": sorted(spectrum_table(genus, punct)),
        "constructed": _constructed(genus, punct, constructions.DEFAULT_MAX_V),
    }
    if args.max_v is not None:
        rep = search.empirical_spectrum(genus, punct, args.max_v, tight=args.tight, jobs=args.jobs)
        out["empirical"] = rep.to_json()
    _emit(out)
    return EXIT_OK


def cmd_verify(args):
    genus, punct = _surface(args)
    max_v = args.max_v if args.max_v is not None else (args.v if args.v is not None else 8)
    rep = search.verify_theorems(genus, punct, max_v, jobs=args.jobs)
    out = rep.to_json()
    if not rep.passed:
        directory = Path(args.counterexamples)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for name, res in sorted(rep.assertions.items()):
            for i, example in enumerate(res.counterexamples):
                path = directory / f"{name}_{i}.json"
                path.write_text(example if example.endswith("\n") else example + "\n")
                paths.append(str(path))
        out["counterexample_files"] = paths
        _emit(out)
        return EXIT_VERIFY
    _emit(out)
    return EXIT_OK


def _parse_pair(text):
    try:
        g, n = (int(x) for x in text.split(","))
    except ValueError:
        raise _Exit(EXIT_INPUT, f"expected G,N, got {text!r}")
    return g, n


def cmd_compare(args):
    a = _parse_pair(args.a or args.first)
    b = _parse_pair(args.b or args.second)
    for g, n in (a, b):
        if n != 0 or g < 2:
            raise _Exit(EXIT_COMPARE, f"compare needs closed surfaces of genus >= 2, got ({g}, {n})")
    sa, sb = sorted(spectrum_table(*a)), sorted(spectrum_table(*b))
    same = sa == sb
    _emit(
        {
            "a": {"surface": list(a), "spectrum": sa},
            "b": {"surface": list(b), "spectrum": sb},
            "identical": same,
            "verdict": "identical" if same else "distinct",
        }
    )
    return EXIT_OK


def cmd_export_dot(args):
    config = _load(args.input)
    text = to_dot(config, Path(args.input).stem.replace("-", "_") or "configuration")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_surface(p, with_v=False):
    p.add_argument("g", type=int, nargs="?", help="genus (positional form)")
    p.add_argument("n", type=int, nargs="?", help="punctures (positional form)")
    if with_v:
        p.add_argument("v", type=int, nargs="?", help="max V (positional form)")
    p.add_argument("--genus", type=int)
    p.add_argument("--punctures", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curve-spectra",
        description="Count geodesics between curve pairs at distance two in the curve complex.",
        epilog="exit codes: 0 ok, 1 verify failed, 2 bad input, 3 out of spectrum, "
        "4 no filling pair found, 5 sporadic surface, 6 compare precondition",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report distance and geodesic counts of a configuration")
    p.add_argument("input", nargs="?")
    p.add_argument("--input", dest="input_flag")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a certified configuration with K geodesics")
    _add_surface(p)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--max-v", type=int, default=constructions.DEFAULT_MAX_V)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="theoretical, constructed and empirical spectra")
    _add_surface(p)
    p.add_argument("--max-v", type=int, default=None)
    p.add_argument("--tight", action="store_true")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check the distance-two theorems over the enumerated universe")
    _add_surface(p, with_v=True)
    p.add_argument("--max-v", type=int, default=None, help="search bound (default 8)")
    p.add_argument("--counterexamples", default="counterexamples")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="compare spectra of two closed surfaces")
    p.add_argument("first", nargs="?")
    p.add_argument("second", nargs="?")
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("export-dot", help="Graphviz rendering of a configuration")
    p.add_argument("input", nargs="?")
    p.add_argument("--input", dest="input_flag")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "input_flag"):
        args.input = args.input_flag or args.input
        if not args.input:
            parser.error("an input file is required")
    if args.command == "compare" and not ((args.a or args.first) and (args.b or args.second)):
        parser.error("compare needs two surfaces")
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            _err(str(exc))
        return exc.code
    except InvalidConfiguration as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
