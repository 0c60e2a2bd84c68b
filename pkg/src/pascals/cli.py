"""Command-line entry point: JSON in, JSON (or SVG) out, all exact.

Commands:

    forward            six parameters -> the four special Pascals
                       (--all adds every one of the sixty)
    reconstruct        four Pascals (JSON) -> the six parameters
    verify-identities  run the symbolic identity suite
    render             draw selected Pascals as an SVG figure

Exit codes: 0 success, 2 parse error, 3 degenerate geometry,
4 reconstruction failure, 5 identity-verification failure.
Errors are reported as one JSON object on stderr:
``{"error": {"code": ..., "message": ...}}``.
"""

import argparse
import json
import sys

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateConfiguration,
    InvalidLabels,
    NotDivisible,
    PascalError,
    ReconstructionFailure,
    ViewportExcludesAll,
)
from .hexagram import (
    SPECIAL_ARRAYS,
    SextupleParams,
    all_sixty,
    four_special_pascals,
    parse_array_code,
    to_json_records,
)
from .identities import run_all_checks
from .rationals import format_rational, parse_rational
from .reconstruction import reconstruct_from_coords
from .svgfig import DEFAULT_VIEWPORT, render_svg

LINE_KEYS = ("l1", "l2", "l3", "lstar")


class CliParseError(PascalError):
    """Bad flags, malformed rationals or malformed JSON."""


def _parse_params(text):
    parts = [p for p in text.split(",")]
    if len(parts) != 6:
        raise CliParseError(f"--params needs six comma-separated rationals, got {len(parts)}")
    try:
        values = [parse_rational(p) for p in parts]
    except ValueError as exc:
        raise CliParseError(str(exc)) from exc
    return SextupleParams.from_iterable(values)


def _parse_viewport(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise CliParseError("--viewport needs umin,umax,vmin,vmax")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise CliParseError(str(exc)) from exc


def _write_output(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _coords_payload(pascal):
    s, t = pascal.coords
    return {"s": format_rational(s), "t": format_rational(t)}


def cmd_forward(args):
    params = _parse_params(args.params)
    lines = four_special_pascals(params)
    payload = dict(zip(LINE_KEYS, (_coords_payload(pl) for pl in lines)))
    if args.all:
        payload["all"] = to_json_records(all_sixty(params))
    _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def cmd_reconstruct(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            raw = handle.read()
    else:
        raw = sys.stdin.read()
    try:
        payload = json.loads(raw)
        coords = [
            (parse_rational(payload[key]["s"]), parse_rational(payload[key]["t"]))
            for key in LINE_KEYS
        ]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliParseError(f"malformed input: {exc}") from exc
    result = reconstruct_from_coords(coords)
    out = {
        "params": {k: format_rational(v) for k, v in zip("abcdef", result.params.as_tuple())},
        "diagnostics": {
            letter: {"row_pair": list(diag["row_pair"]), "rank": diag["rank"]}
            for letter, diag in result.diagnostics.items()
        },
    }
    _write_output(json.dumps(out, indent=2) + "\n", args.output)
    return 0


def cmd_verify_identities(args):
    results = run_all_checks()
    for name, ok in results:
        print(f"{name:25s} {'PASS' if ok else 'FAIL'}")
    return 0 if all(ok for _, ok in results) else 5


def cmd_render(args):
    params = _parse_params(args.params)
    if args.arrays:
        arrays = [parse_array_code(code) for code in args.arrays.split(",")]
    else:
        arrays = list(SPECIAL_ARRAYS)
    viewport = _parse_viewport(args.viewport) if args.viewport else DEFAULT_VIEWPORT
    svg = render_svg(params, arrays, viewport, include_chords=not args.no_chords)
    _write_output(svg, args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pascals",
        description="Exact Pascal-line synthesis, reconstruction and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fwd = sub.add_parser("forward", help="compute the four special Pascals of a sextuple")
    fwd.add_argument("--params", required=True, help='six rationals, e.g. "7,-3,2,5,-4,1"')
    fwd.add_argument("--all", action="store_true", help="include all sixty Pascals")
    fwd.add_argument("--output", help="write JSON here instead of stdout")
    fwd.set_defaults(func=cmd_forward)

    rec = sub.add_parser("reconstruct", help="recover the sextuple from four Pascals")
    rec.add_argument("--input", help="JSON file (default: stdin)")
    rec.add_argument("--output", help="write JSON here instead of stdout")
    rec.set_defaults(func=cmd_reconstruct)

    ver = sub.add_parser("verify-identities", help="run the symbolic identity suite")
    ver.set_defaults(func=cmd_verify_identities)

    ren = sub.add_parser("render", help="draw selected Pascals as SVG")
    ren.add_argument("--params", required=True, help='six rationals, e.g. "7,-3,2,5,-4,1"')
    ren.add_argument(
        "--arrays",
        help='comma-separated array codes like "ABD|EFC" (default: the four special Pascals)',
    )
    ren.add_argument("--viewport", help='"umin,umax,vmin,vmax" (default: -10,10,-5,55)')
    ren.add_argument("--no-chords", action="store_true", help="omit the chord segments")
    ren.add_argument("--output", help="write SVG here instead of stdout")
    ren.set_defaults(func=cmd_render)
    return parser


def _exit_code(exc):
    if isinstance(exc, (CliParseError, InvalidLabels)):
        return 2
    if isinstance(exc, (ReconstructionFailure, NotDivisible)):
        return 4
    if isinstance(
        exc,
        (DegenerateConfiguration, CoincidentPoints, CoincidentLines, ViewportExcludesAll),
    ):
        return 3
    return 2


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PascalError as exc:
        report = {"error": {"code": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(report), file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(json.dumps({"error": {"code": "IOError", "message": str(exc)}}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
