"""Command-line front end.

Exit status: 0 on success, 1 on an invalid object or failed verification,
2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import archmap as am
from . import enumeration as en
from . import factorization as fz
from . import forest as fo
from . import parking as pk
from . import render, verify
from .errors import KFactorError, ParseError

KINDS = ("fact", "forest", "parking")


def _read(args) -> str:
    if args.infile and args.infile != "-":
        with open(args.infile) as fh:
            return fh.read()
    return sys.stdin.read()


def _write(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "outfile", None) and args.outfile != "-":
        with open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def parse_object(kind: str, text: str, k: Optional[int]):
    if not text.strip():
        raise ParseError("no input")
    if kind == "fact":
        f = fz.from_json(text, k) if _is_json(text) else fz.parse_text(text, k)
        fz.validate(f)
        return f
    if kind == "forest":
        return fo.forest_from_json(text, k) if _is_json(text) else fo.forest_from_text(text, k or 1)
    if kind == "parking":
        return pk.from_json(text, k) if _is_json(text) else pk.parse_text(text, k or 1)
    raise ValueError(kind)


def format_object(kind: str, obj, fmt: str) -> str:
    if kind == "fact":
        return fz.to_json(obj) if fmt == "json" else fz.to_text(obj)
    if kind == "forest":
        return fo.forest_to_json(obj) if fmt == "json" else fo.forest_to_text(obj)
    return pk.to_json(obj) if fmt == "json" else pk.to_text(obj)


def convert(obj, src: str, dst: str):
    if src == dst:
        return obj
    if src == "forest":
        f = am.jcdal_inverse(obj)
    elif src == "parking":
        f = pk.L_inverse(obj)
    else:
        f = obj
    if dst == "fact":
        return f
    if dst == "forest":
        return am.jcdal(f, check=False)
    return pk.L(f)


def object_stats(kind: str, obj) -> dict:
    if kind == "fact":
        d = {"k": obj.k, "n": obj.n}
        d.update(fz.area_stats(obj).as_dict())
        d["least"] = list(obj.least())
        d["differences"] = [c[-1] - c[0] for c in obj.factors]
        return d
    if kind == "forest":
        d = {"n": obj.n}
        d.update(fo.stats(obj).as_dict())
        return d
    return {"k": obj.k, "n": obj.n, "disp": pk.disp(obj)}


def _format_stats(d: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(d)
    return "\n".join(
        f"{key}={','.join(map(str, v)) if isinstance(v, list) else v}" for key, v in d.items()
    )


def cmd_convert(args) -> int:
    obj = parse_object(args.src, _read(args), args.k)
    _write(args, format_object(args.dst, convert(obj, args.src, args.dst), args.format))
    return 0


def cmd_stats(args) -> int:
    obj = parse_object(args.type, _read(args), args.k)
    _write(args, _format_stats(object_stats(args.type, obj), args.format))
    return 0


def cmd_count(args) -> int:
    out = [str(en.expected_count(args.n, args.k))]
    status = 0
    if args.enumerate:
        found = sum(1 for _ in en.k_factorizations(args.n, args.k))
        out.append(f"enumerated={found}")
        status = 0 if found == en.expected_count(args.n, args.k) else 1
    _write(args, "\n".join(out))
    return status


def cmd_verify(args) -> int:
    if args.grid:
        cells = verify.DEFAULT_GRID
    elif args.n is None:
        raise ParseError("verify needs --n (or --grid)")
    else:
        cells = [(args.n, args.k)]
    reports = verify.run_grid(args.suite, cells, jobs=args.jobs)
    if args.json:
        _write(args, json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        _write(args, "\n".join(r.to_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_enumerate(args) -> int:
    gen = {
        "fact": en.k_factorizations,
        "forest": en.k_forests,
        "parking": en.k_parking_functions,
    }[args.what](args.n, args.k)
    _write(args, "\n".join(format_object(args.what, obj, args.format) for obj in gen))
    return 0


def cmd_render(args) -> int:
    f = parse_object("fact", _read(args), args.k)
    draw = render.render_svg if args.format == "svg" else render.render_ascii
    _write(args, draw(f, dual=args.dual))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfactor",
        description="Bijections between cycle factorizations, k-forests and k-parking functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, with_format=True):
        p.add_argument("--in", dest="infile", metavar="FILE", help="input file (default: stdin)")
        p.add_argument("--out", dest="outfile", metavar="FILE", help="output file (default: stdout)")
        if with_format:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("convert", help="map an object to another family")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("--k", type=int, default=None)
    io(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stats", help="print every statistic of an object")
    p.add_argument("--type", choices=KINDS, required=True)
    p.add_argument("--k", type=int, default=None)
    io(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("count", help="print (kn+1)^(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--enumerate", action="store_true", help="also count by enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run exhaustive checks")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--grid", action="store_true", help="use the default (n, k) grid")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON summary instead of text lines")
    p.add_argument("--out", dest="outfile", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list every object of a size")
    p.add_argument("--what", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", dest="outfile", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="draw the arch diagram of a factorization")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--dual", action="store_true", help="overlay the dual tree")
    p.add_argument("--k", type=int, default=None)
    io(p, with_format=False)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"kfactor: parse error: {e}", file=sys.stderr)
        return 2
    except KFactorError as e:
        print(f"kfactor: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"kfactor: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
