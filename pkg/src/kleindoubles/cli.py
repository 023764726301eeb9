"""Command-line front end.

Exit codes: 0 success, 1 domain or validation error, 2 syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .casebook import run_cases
from .catalog import classify_standard_doubles, complex_double, orienting_double, schottky_double
from .covering import CoverSpec, cover_report, identity_spec
from .errors import HomomorphismError, HypothesisError, InconsistentComplex
from .homomorphisms import parse_hom, standard_epis_C2
from .moduli import psi_image, real_curve_types
from .permgroups import make_named_group, parse_subgroup, trivial_subgroup
from .signatures import (
    SignatureError,
    SignatureSyntaxError,
    algebraic_genus,
    canonical_presentation,
    euler_char_orb,
    parse_signature,
    parse_top_type,
    surface_symbol,
)
from .tower import build_tower


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _grid(text: str) -> tuple[int, int]:
    try:
        gmax, kmax = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected gmax,kmax") from None
    if gmax < 1 or kmax < 1:
        raise argparse.ArgumentTypeError("grid bounds must be >= 1")
    return gmax, kmax


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_parse(args) -> int:
    sig = parse_signature(args.signature)
    pres = canonical_presentation(sig)
    payload = {
        "signature": str(sig),
        "euler_char_orb": str(euler_char_orb(sig)),
        "generators": [g.name for g in pres.generators],
        "relators": [str(r) for r in pres.relators],
        "symbol": [label for label, _ in surface_symbol(sig)],
    }
    if sig.is_surface:
        payload["algebraic_genus"] = algebraic_genus(sig.top_type())
    lines = [f"signature       {payload['signature']}",
             f"orbifold chi    {payload['euler_char_orb']}"]
    if "algebraic_genus" in payload:
        lines.append(f"algebraic genus {payload['algebraic_genus']}")
    lines.append(f"generators      {' '.join(payload['generators'])}")
    lines.append("relators")
    lines += [f"  {r}" for r in payload["relators"]]
    lines.append(f"symbol          {' '.join(payload['symbol'])}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_epis(args) -> int:
    t = parse_top_type(args.type)
    epis = standard_epis_C2(t)
    payload = {"type": str(t), "count": len(epis),
               "epimorphisms": [{"row": a.row, "assignment": str(a)} for a in epis]}
    text = _table(["row", "E C A"], [[a.row, str(a)] for a in epis])
    _emit(args, payload, f"{t}: {len(epis)} standard epimorphisms onto C2\n{text}")
    return 0


def cmd_doubles(args) -> int:
    t = parse_top_type(args.type)
    records = classify_standard_doubles(t)
    orienting, parts = orienting_double(t)
    schottky, s_parts = schottky_double(t)
    natural = {
        "complex": str(complex_double(t)),
        "orienting": f"{orienting}" + (f" x{parts}" if parts > 1 else ""),
        "schottky": f"{schottky}" + (f" x{s_parts}" if s_parts > 1 else ""),
    }
    payload = {"type": str(t), "rows": [r.as_dict() for r in records], "natural": natural}
    rows = [[r.row, str(r.assignment), r.boundary, "+" if r.orientable else "-", r.genus, r.label]
            for r in records]
    text = _table(["row", "assignment", "B", "orientability", "genus", "label"], rows)
    text += "\n\n" + "\n".join(f"{k:<9} {v}" for k, v in natural.items())
    _emit(args, payload, text)
    return 0


def cmd_tower(args) -> int:
    tower = build_tower(parse_top_type(args.type))
    payload = tower.as_dict()
    extra = [
        f"fixed circles: s {tower.fix_circle_counts['s']}, t {tower.fix_circle_counts['t']}, "
        f"st {tower.fix_circle_counts['st']}",
        f"DX minus Fix(s): {tower.cut_components} components",
    ]
    _emit(args, payload, tower.diagram() + "\n\n" + "\n".join(extra))
    return 0


def cmd_cover(args) -> int:
    sig = parse_signature(args.signature)
    if args.hom is None:
        if args.group is not None:
            raise HomomorphismError("--group needs --hom")
        spec = identity_spec(sig)
    else:
        group = make_named_group(args.group or "c2")
        hom = parse_hom(canonical_presentation(sig), group, args.hom)
        subgroup = (parse_subgroup(group, args.subgroup) if args.subgroup
                    else trivial_subgroup(group))
        spec = CoverSpec(hom, subgroup)
    report = cover_report(spec)
    payload = report.to_json()
    if report.signature is not None:
        text = str(report.signature)
    else:
        text = " + ".join(f"{n} x {s}" for s, n in report.component_signatures)
    if args.verbose:
        text += (f"\nindex {report.index}, components {report.components}, "
                 f"chi {report.euler_char}, surface group {report.is_surface_group}")
    _emit(args, payload, text)
    return 0


def cmd_moduli(args) -> int:
    types = real_curve_types(args.genus)
    rows, out = [], []
    for rc in types:
        dx = psi_image(rc) if rc.top_type.boundary else None
        rows.append([str(rc.top_type), rc.top_type.boundary,
                     dx.genus if dx else "-"])
        out.append({"type": str(rc.top_type), "k": rc.top_type.boundary,
                    "psi_genus": dx.genus if dx else None})
    payload = {"p": args.genus, "types": out}
    text = f"real curves of algebraic genus {args.genus}\n"
    text += _table(["type", "k", "psi genus"], rows)
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    gmax, kmax = args.grid
    results = run_cases(gmax, kmax)
    payload = {"grid": [gmax, kmax],
               "cases": [{"name": r.name, "source": r.source, "ok": r.ok, "detail": r.detail}
                         for r in results],
               "passed": all(r.ok for r in results)}
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name} [{r.source}]: {r.detail}" for r in results]
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} cases pass")
    _emit(args, payload, "\n".join(lines))
    return 0 if payload["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kleindoubles", description="Doubles of Klein surfaces via NEC coverings.")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", parents=[fmt], help="canonical presentation of a signature")
    p.add_argument("signature")
    p.set_defaults(func=cmd_parse)

    for name, func, helptext in (
        ("epis", cmd_epis, "standard epimorphisms onto C2"),
        ("doubles", cmd_doubles, "classified standard doubles"),
        ("tower", cmd_tower, "the C2 x C2 tower of the double of doubles"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("type", help='"g=2,-,k=3", "(2;-;3)" or a surface signature')
        p.set_defaults(func=func)

    p = sub.add_parser("cover", parents=[fmt], help="signature of a subgroup of an NEC group")
    p.add_argument("signature")
    p.add_argument("--hom", help='e.g. "x1->st, e1->ts, c1.0->s, ..."')
    p.add_argument("--group", help="c2, klein4, cN, dN")
    p.add_argument("--subgroup", help='generators of H, e.g. "s"; default trivial')
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("moduli", parents=[fmt], help="real curve types of algebraic genus p")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("verify-paper", parents=[fmt], help="replay all published cases")
    p.add_argument("--grid", type=_grid, default=(5, 5))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (_UsageError, SignatureSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HypothesisError, HomomorphismError, SignatureError, InconsistentComplex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
