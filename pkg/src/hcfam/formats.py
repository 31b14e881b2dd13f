"""JSON wire formats for families, elements, morphisms and polynomials.

Emission is canonical: fixed key order, bracket keys sorted, zero brackets
omitted, so ``emit(parse(text)) == text`` for canonical files.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .arith import GaussianRational, LaurentPoly, Poly, parse_scalar
from .errors import ParseError
from .liefam import Base, FamilyElement, GradedFamily, new_family
from .morphisms import PairMorphism

MAX_RANK = 64
FAMILY_KEYS = ("rank", "base", "basis", "weights", "h_index", "brackets")
_PAIR_KEY = re.compile(r"^(\d+),(\d+)$")


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except (ValueError, RecursionError) as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def emit_poly(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def emit_laurent(p: LaurentPoly) -> dict:
    if p.is_zero():
        return {"offset": 0, "coeffs": []}
    return {"offset": p.offset, "coeffs": [str(c) for c in p.coeffs]}


def emit_ring(value, base: Base):
    return emit_poly(value) if base is Base.AFFINE else emit_laurent(value)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _scalar(v, where: str) -> GaussianRational:
    if not isinstance(v, str):
        raise ParseError(f"{where}: scalar must be a string, got {type(v).__name__}")
    return parse_scalar(v)


def parse_poly(v, where: str = "polynomial") -> Poly:
    if not isinstance(v, list):
        raise ParseError(f"{where}: polynomial must be an array of scalar strings")
    return Poly([_scalar(c, where) for c in v])


def parse_laurent(v, where: str = "laurent polynomial") -> LaurentPoly:
    if not isinstance(v, dict) or set(v) != {"offset", "coeffs"}:
        raise ParseError(f"{where}: Laurent polynomial must be an object with offset and coeffs")
    if not _is_int(v["offset"]):
        raise ParseError(f"{where}: offset must be an integer")
    if not isinstance(v["coeffs"], list):
        raise ParseError(f"{where}: coeffs must be an array")
    return LaurentPoly([_scalar(c, where) for c in v["coeffs"]], v["offset"])


def parse_ring(v, base: Base, where: str):
    return parse_poly(v, where) if base is Base.AFFINE else parse_laurent(v, where)


def emit_family(f: GradedFamily, embedding: list[FamilyElement] | None = None) -> dict:
    out: dict[str, Any] = {
        "rank": f.rank,
        "base": f.base.value,
        "basis": list(f.basis),
        "weights": list(f.weights),
        "h_index": f.h_index,
        "brackets": {f"{i},{j}": [emit_ring(c, f.base) for c in coords]
                     for (i, j), coords in sorted(f.brackets.items())},
    }
    if embedding is not None:
        out["embedding"] = [[emit_ring(c, e.family.base) for c in e.coords] for e in embedding]
    return out


def parse_family_obj(obj) -> tuple[GradedFamily, list | None]:
    """Parse a family object; returns the family and the raw embedding rows, if present."""
    if not isinstance(obj, dict):
        raise ParseError("family file must be a JSON object")
    missing = [k for k in FAMILY_KEYS if k not in obj]
    if missing:
        raise ParseError(f"family file lacks keys {missing}")
    extra = set(obj) - set(FAMILY_KEYS) - {"embedding"}
    if extra:
        raise ParseError(f"unknown keys {sorted(extra)}")
    rank, base = obj["rank"], obj["base"]
    if not _is_int(rank) or not 1 <= rank <= MAX_RANK:
        raise ParseError(f"rank must be an integer in 1..{MAX_RANK}")
    if base not in ("affine", "punctured"):
        raise ParseError('base must be "affine" or "punctured"')
    base = Base(base)
    basis, weights, h = obj["basis"], obj["weights"], obj["h_index"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("basis must be an array of strings")
    if not isinstance(weights, list) or not all(_is_int(w) for w in weights):
        raise ParseError("weights must be an array of integers")
    if not _is_int(h):
        raise ParseError("h_index must be an integer")
    brackets = obj["brackets"]
    if not isinstance(brackets, dict):
        raise ParseError("brackets must be an object")
    table = {}
    for key, coords in brackets.items():
        m = _PAIR_KEY.match(key)
        if not m:
            raise ParseError(f'bracket key {key!r} is not of the form "i,j"')
        i, j = int(m.group(1)), int(m.group(2))
        if i >= j:
            raise ParseError(f"bracket key {key!r} must have i < j")
        if not isinstance(coords, list):
            raise ParseError(f"bracket {key}: coordinates must be an array")
        table[(i, j)] = [parse_ring(c, base, f"bracket {key}") for c in coords]
    family = new_family(rank, base, weights, table, h, basis)
    embedding = obj.get("embedding")
    if embedding is not None:
        if not isinstance(embedding, list) or len(embedding) != rank:
            raise ParseError("embedding must list one coordinate vector per basis vector")
        rows = []
        for row in embedding:
            if not isinstance(row, list):
                raise ParseError("embedding rows must be arrays")
            rows.append([parse_ring(c, base, "embedding") for c in row])
        embedding = rows
    return family, embedding


def parse_family(text: str) -> GradedFamily:
    return parse_family_obj(loads(text))[0]


def emit_element(v: FamilyElement) -> dict:
    return {"coords": [emit_ring(c, v.family.base) for c in v.coords]}


def parse_element(obj, family: GradedFamily) -> FamilyElement:
    if not isinstance(obj, dict) or set(obj) != {"coords"}:
        raise ParseError('element must be an object {"coords": [...]}')
    coords = obj["coords"]
    if not isinstance(coords, list) or len(coords) != family.rank:
        raise ParseError(f"element needs {family.rank} coordinates")
    return family.element([parse_ring(c, family.base, "element") for c in coords])


MORPHISM_KEYS = {"m", "n", "c", "k", "s", "localized"}


def parse_morphism_obj(obj) -> PairMorphism:
    if not isinstance(obj, dict):
        raise ParseError("morphism must be a JSON object")
    if not {"m", "n", "c", "k", "s"} <= set(obj) <= MORPHISM_KEYS:
        raise ParseError(f"morphism keys must be {sorted(MORPHISM_KEYS)}")
    for key in ("m", "n", "k", "s"):
        if not _is_int(obj[key]):
            raise ParseError(f"morphism field {key} must be an integer")
    localized = obj.get("localized", False)
    if not isinstance(localized, bool):
        raise ParseError("localized must be a boolean")
    c = _scalar(obj["c"], "morphism c")
    return PairMorphism(obj["m"], obj["n"], c, obj["k"], obj["s"], localized)


def parse_morphism_tuple(text: str, localized: bool = False) -> PairMorphism:
    """Parse the compact form ``m,n,c,k,s``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise ParseError(f"expected m,n,c,k,s, got {text!r}")
    try:
        m, n, k, s = int(parts[0]), int(parts[1]), int(parts[3]), int(parts[4])
    except ValueError:
        raise ParseError(f"m, n, k, s must be integers in {text!r}") from None
    return PairMorphism(m, n, parse_scalar(parts[2]), k, s, localized)
