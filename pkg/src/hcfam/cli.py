"""Command-line front end: ``hcfam <subcommand> ...``.

Every subcommand calls one library operation and prints its JSON report
(or a plain-text rendering of the same data).  Exit codes: 0 success,
1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import catalog, classify, envalg, formats, liefam, morphisms, projline
from .arith import parse_poly_expr, parse_scalar
from .errors import HcfamError, ParseError, UsageError

MAX_INDEX = 4096


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)

    def exit(self, status: int = 0, message: str | None = None):
        if status:
            raise UsageError(message or "invalid usage")
        super().exit(status, message)


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= v <= MAX_INDEX:
        raise argparse.ArgumentTypeError(f"{v} is outside 0..{MAX_INDEX}")
    return v


def _integer(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if abs(v) > MAX_INDEX:
        raise argparse.ArgumentTypeError(f"{v} is outside -{MAX_INDEX}..{MAX_INDEX}")
    return v


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return formats.loads(text)


def _load_family(path: str):
    return formats.parse_family_obj(_read_json(path))[0]


def _load_morphism(arg: str, localized: bool):
    if arg.lstrip().startswith("{"):
        return formats.parse_morphism_obj(formats.loads(arg))
    if os.path.exists(arg):
        return formats.parse_morphism_obj(_read_json(arg))
    return formats.parse_morphism_tuple(arg, localized)


def _ring_rows(rows) -> list:
    return [[formats.emit_poly(c) for c in row] for row in rows]


# subcommand handlers: each returns a JSON-ready object

def cmd_catalog(a) -> Any:
    if a.kind == "g":
        return formats.emit_family(catalog.make_g(a.index))
    real = catalog.make_l(a.index) if a.kind == "l" else catalog.make_s(a.index)
    return formats.emit_family(real.family, list(real.embedding))


def cmd_classify(a) -> Any:
    res = classify.classify_extension(_load_family(a.file))
    return {"n": res.n, "c": str(res.scale_c), "canonical_change": _ring_rows(res.canonical_change),
            "labels": res.label}


def cmd_validate(a) -> Any:
    f = _load_family(a.file)
    return {"valid": True, "rank": f.rank, "base": f.base.value}


def cmd_fiber(a) -> Any:
    f = _load_family(a.file)
    t = parse_scalar(a.t)
    inv = liefam.fiber_invariants(liefam.fiber_at(f, t))
    return {"t": str(t), "killing_det": str(inv.killing_det), "killing_rank": inv.killing_rank,
            "derived_dim": inv.derived_dim, "center_dim": inv.center_dim}


def cmd_hom(a) -> Any:
    return morphisms.hom_space(a.m, a.n, a.localized).to_json()


def cmd_compose(a) -> Any:
    phi = formats.parse_morphism_tuple(a.first, a.localized)
    psi = formats.parse_morphism_tuple(a.second, a.localized)
    return morphisms.compose(phi, psi).to_json()


def cmd_apply(a) -> Any:
    phi = _load_morphism(a.morphism, a.localized)
    v = formats.parse_element(_read_json(a.element), phi.source)
    return formats.emit_element(morphisms.apply(phi, v))


def cmd_pullback(a) -> Any:
    return formats.emit_family(morphisms.pullback(_load_family(a.file), parse_poly_expr(a.mu)))


def cmd_casimir(a) -> Any:
    out: dict[str, Any] = {"n": a.n, "casimir": envalg.casimir(a.n).to_json()}
    if a.probe_pbw is not None or a.probe_coeff is not None:
        d = 2 if a.probe_pbw is None else a.probe_pbw
        D = 4 if a.probe_coeff is None else a.probe_coeff
        if d > envalg.MAX_PROBE_PBW or D > envalg.MAX_PROBE_COEFF:
            raise UsageError(f"probe limited to --probe-pbw <= {envalg.MAX_PROBE_PBW}, "
                             f"--probe-coeff <= {envalg.MAX_PROBE_COEFF}")
        dims = {str(deg): len(envalg.center_probe(a.n, deg, D)) for deg in range(d + 1)}
        out["probe"] = {"pbw_degree": d, "coeff_degree": D, "dimensions": dims}
    return out


def cmd_p1(a) -> Any:
    e = projline.make_p1(a.m, a.n, a.k)
    if a.action == "classify":
        return {**e.to_json(), "splitting": projline.splitting_type(e), "h0_dim": projline.expected_h0(e)}
    return projline.global_sections(e, a.max_degree).to_json()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report to this file")

    p = _Parser(prog="hcfam", description="Families of Harish-Chandra pairs over the line.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report to this file")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("catalog", parents=[common], help="emit a catalog family")
    s.add_argument("kind", choices=("g", "l", "s"))
    s.add_argument("index", type=_natural)
    s.set_defaults(run=cmd_catalog)

    for name, fn in (("classify", cmd_classify), ("validate", cmd_validate)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.set_defaults(run=fn)

    s = sub.add_parser("fiber", parents=[common], help="invariants of the fiber at x = t")
    s.add_argument("file")
    s.add_argument("--t", required=True)
    s.set_defaults(run=cmd_fiber)

    s = sub.add_parser("hom", parents=[common])
    s.add_argument("m", type=_natural)
    s.add_argument("n", type=_natural)
    s.add_argument("--localized", action="store_true")
    s.set_defaults(run=cmd_hom)

    s = sub.add_parser("compose", parents=[common], help='compose "m,n,c,k,s" then "n,p,c,k,s"')
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--localized", action="store_true")
    s.set_defaults(run=cmd_compose)

    s = sub.add_parser("apply", parents=[common], help="apply a morphism to an element file")
    s.add_argument("morphism", help="morphism JSON file, inline JSON, or m,n,c,k,s")
    s.add_argument("element")
    s.add_argument("--localized", action="store_true")
    s.set_defaults(run=cmd_apply)

    s = sub.add_parser("pullback", parents=[common])
    s.add_argument("file")
    s.add_argument("--mu", required=True, help='polynomial such as "x^3"')
    s.set_defaults(run=cmd_pullback)

    s = sub.add_parser("casimir", parents=[common])
    s.add_argument("n", type=_natural)
    s.add_argument("--probe-pbw", type=_natural, default=None)
    s.add_argument("--probe-coeff", type=_natural, default=None)
    s.set_defaults(run=cmd_casimir)

    s = sub.add_parser("p1", parents=[common], help="extensions over the projective line")
    s.add_argument("action", choices=("classify", "sections"))
    s.add_argument("m", type=_natural)
    s.add_argument("n", type=_natural)
    s.add_argument("k", type=_integer)
    s.add_argument("--max-degree", type=_natural, default=None)
    s.set_defaults(run=cmd_p1)
    return p


def _use_color(stream) -> bool:
    mode = os.environ.get("HCFAM_COLOR", "auto")
    return mode != "never" and hasattr(stream, "isatty") and stream.isatty()


def render_text(obj: Any, color: bool = False, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, val in obj.items():
            name = f"\033[1m{key}\033[0m" if color else str(key)
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{name}:")
                lines.append(render_text(val, color, indent + 1))
            else:
                lines.append(f"{pad}{name}: {_inline(val)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(v)}" if _flat(v) or not isinstance(v, (dict, list))
                         else f"{pad}-\n" + render_text(v, color, indent + 1) for v in obj)
    return pad + _inline(obj)


def _flat(val) -> bool:
    if isinstance(val, list):
        return all(not isinstance(v, (dict, list)) for v in val)
    return False


def _inline(val) -> str:
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, list):
        return "[" + ", ".join(_inline(v) for v in val) + "]"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_inline(v)}" for k, v in val.items()) + "}"
    return str(val)


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    fmt, out_path = "json", None
    try:
        args = build_parser().parse_args(argv)
        fmt, out_path = args.format, args.out
        report = args.run(args)
        code = 0
    except (ParseError, UsageError) as exc:
        report, code = exc.to_json(), 2
    except HcfamError as exc:
        report, code = exc.to_json(), 1
    except RecursionError:
        report, code = {"error": "ParseError", "message": "input nested too deeply"}, 2

    if fmt == "text":
        text = render_text(report, color=out_path is None and _use_color(stdout)) + "\n"
    else:
        text = formats.dumps(report)
    if out_path is not None and code == 0:
        try:
            Path(out_path).write_text(text, encoding="utf-8")
        except OSError as exc:
            text, code = formats.dumps({"error": "UsageError", "message": f"cannot write {out_path}: {exc}"}), 2
        else:
            return 0
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
