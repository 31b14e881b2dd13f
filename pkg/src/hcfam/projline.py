"""Extensions over the projective line, stored as gluing data.

Chart 1 carries g(m) in the coordinate x, chart 2 carries g(n) in the
coordinate 1/x, and the two are identified over the punctured line by
the localized morphism (c=1, k, s=+1).  Global sections are computed by
matching polynomial sections on both charts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import GaussianRational, LaurentPoly, Poly
from .catalog import make_g
from .errors import DegreeBoundTooSmall, InvalidMorphism
from .liefam import FamilyElement
from .linalg import nullspace
from .morphisms import PairMorphism, apply, compose, inverse, verify_morphism

@dataclass(frozen=True)
class P1Extension:
    m: int
    n: int
    k: int
    normalized_from: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("m", "n", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidMorphism(f"{name} must be an integer")
        if self.m < 0 or self.n < 0:
            raise InvalidMorphism("chart family indices must be natural numbers")

    @property
    def gluing(self) -> PairMorphism:
        return PairMorphism(self.m, self.n, 1, self.k, 1, localized=True)

    def to_json(self) -> dict:
        out = {"m": self.m, "n": self.n, "k": self.k}
        if self.normalized_from is not None:
            c, k, s = self.normalized_from
            out["normalized_from"] = {"c": str(c), "k": k, "s": s}
        return out


def make_p1(m: int, n: int, k: int, c=1, s: int = 1) -> P1Extension:
    """Build the extension glued by (c, k, s), normalized to c = 1, s = +1.

    A sign flip is absorbed by the chart-1 automorphism exchanging X and Y,
    which turns the exponent k into m - n - k.  A scalar c is absorbed by
    rescaling X and Y on chart 1.
    """
    raw = PairMorphism(m, n, c, k, s, localized=True)
    glue = raw
    if s == -1:
        glue = compose(PairMorphism(m, m, 1, 0, -1, localized=True), glue)
    if glue.c != 1:
        glue = compose(PairMorphism(m, m, glue.c.inv(), 0, 1, localized=True), glue)
    assert glue.c == 1 and glue.s == 1
    report = verify_morphism(glue)
    if not report:
        raise InvalidMorphism("; ".join(report.violations))
    origin = None if (raw.c == 1 and s == 1) else (raw.c, k, s)
    return P1Extension(m, n, glue.k, origin)


def p1_isomorphic(e1: P1Extension, e2: P1Extension) -> bool:
    """Isomorphism through chart automorphisms acting trivially on the group."""
    return (e1.m, e1.n, e1.k) == (e2.m, e2.n, e2.k)


def p1_isomorphic_twisted(e1: P1Extension, e2: P1Extension) -> bool:
    """Isomorphism where the group part may also be inversion on both charts.

    Exchanging X and Y on both charts conjugates the gluing exponent k into
    m - n - k, so those two triples become identified.
    """
    if (e1.m, e1.n) != (e2.m, e2.n):
        return False
    return e2.k in (e1.k, e1.m - e1.n - e1.k)


def twisted_isomorphism(e1: P1Extension) -> tuple[PairMorphism, PairMorphism, P1Extension]:
    """Chart automorphisms (alpha on chart 1, beta on chart 2) carrying e1 to its swapped twin."""
    alpha = PairMorphism(e1.m, e1.m, 1, 0, -1, localized=True)
    beta = PairMorphism(e1.n, e1.n, 1, 0, -1, localized=True)
    return alpha, beta, P1Extension(e1.m, e1.n, e1.m - e1.n - e1.k)


def splitting_type(e: P1Extension) -> list[int]:
    """Line-bundle degrees of the weight 0, +2, -2 summands."""
    return [0, -e.k, e.k + e.n - e.m]


def expected_h0(e: P1Extension) -> int:
    return sum(max(d + 1, 0) for d in splitting_type(e))


@dataclass(frozen=True)
class GlobalSections:
    dimension: int
    basis: list[tuple[FamilyElement, FamilyElement]]
    max_degree: int

    def weights(self) -> list[int | None]:
        return [s1.weight() if not s1.is_zero() else s2.weight() for s1, s2 in self.basis]

    def to_json(self) -> dict:
        from .formats import emit_element
        return {"dimension": self.dimension, "max_degree": self.max_degree,
                "basis": [{"chart1": emit_element(a), "chart2": emit_element(b)}
                          for a, b in self.basis]}


def _match(glue: PairMorphism, D: int, substitute_first: bool = False
           ) -> list[tuple[list[Poly], list[Poly]]]:
    """Coordinate vectors (p, q) of degree <= D matched across the overlap.

    Chart 1 to chart 2 (default): glue(p) with x -> 1/x equals q.  With
    ``substitute_first`` the gluing is read in the other chart's coordinate,
    which is how the inverse gluing carries chart-2 data back to chart 1.
    """
    src = glue.source
    width = D + 1
    nsrc = src.rank * width
    eqs: dict[tuple[int, int], dict[int, GaussianRational]] = {}
    for i in range(src.rank):
        for a in range(width):
            mono = LaurentPoly.monomial(1, -a if substitute_first else a)
            image = apply(glue, src.basis_vector(i) * mono)
            for j, coord in enumerate(image.coords):
                coord = coord if substitute_first else coord.substitute_inverse()
                for e, coef in coord.terms():
                    eqs.setdefault((j, e), {})[i * width + a] = coef
    for j in range(glue.target.rank):
        for e in range(width):
            eqs.setdefault((j, e), {})[nsrc + j * width + e] = GaussianRational(-1)
    out = []
    for vec in nullspace(eqs.values(), 2 * nsrc):
        p = [Poly(vec[i * width:(i + 1) * width]) for i in range(src.rank)]
        q = [Poly(vec[nsrc + j * width:nsrc + (j + 1) * width]) for j in range(src.rank)]
        out.append((p, q))
    return out


def default_max_degree(e: P1Extension) -> int:
    return abs(e.k) + e.m + e.n + 2


def _sections_at(e: P1Extension, D: int, from_chart: int):
    if from_chart == 1:
        return _match(e.gluing, D)
    # chart 2 drives the search through the inverse gluing
    return [(q, p) for p, q in _match(inverse(e.gluing), D, substitute_first=True)]


def global_sections(e: P1Extension, max_degree: int | None = None, from_chart: int = 1
                    ) -> GlobalSections:
    if from_chart not in (1, 2):
        raise ValueError("from_chart must be 1 or 2")
    D = default_max_degree(e) if max_degree is None else max_degree
    floor = abs(e.k) + e.m + e.n
    if D < floor:
        raise DegreeBoundTooSmall(f"max_degree {D} is below |k| + m + n = {floor}", D)
    pairs = _sections_at(e, D, from_chart)
    if len(_sections_at(e, D + 1, from_chart)) != len(pairs):
        raise DegreeBoundTooSmall(f"section count changes between degree {D} and {D + 1}", D)
    g1, g2 = make_g(e.m), make_g(e.n)
    basis = [(g1.element(p), g2.element(q)) for p, q in pairs]
    return GlobalSections(len(basis), basis, D)
