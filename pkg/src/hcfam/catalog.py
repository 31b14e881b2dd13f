"""Named families: g(n), and the realizations l(n) and s(2k) inside g(0).

All constructors use the basis order (Y, H, X) with weights (-2, 0, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import Poly, divisible_by_power
from .errors import FamilyMismatch
from .liefam import Base, FamilyElement, GradedFamily, localize, new_family, subfamily

BASIS = ("Y", "H", "X")
WEIGHTS = (-2, 0, 2)
Y_INDEX, H_INDEX, X_INDEX = 0, 1, 2

LABELS = {0: "constant", 1: "contraction", 2: "deformation"}


def label(n: int) -> str:
    return LABELS.get(n, f"g({n})")


@lru_cache(maxsize=None)
def make_g(n: int) -> GradedFamily:
    """The family with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = x^n H."""
    if n < 0:
        raise ValueError("n must be a natural number")
    return new_family(
        3, Base.AFFINE, WEIGHTS,
        {
            (0, 1): [Poly.const(2), 0, 0],             # [Y, H] = 2Y
            (0, 2): [0, Poly.monomial(-1, n), 0],      # [Y, X] = -x^n H
            (1, 2): [0, 0, Poly.const(2)],             # [H, X] = 2X
        },
        H_INDEX, BASIS,
    )


@lru_cache(maxsize=None)
def make_g_localized(n: int) -> GradedFamily:
    return localize(make_g(n))


@dataclass(frozen=True)
class Realization:
    """An abstract family together with a basis-by-basis embedding into g(0)."""

    family: GradedFamily
    ambient: GradedFamily
    embedding: tuple[FamilyElement, ...]

    def embed(self, v: FamilyElement) -> FamilyElement:
        if v.family != self.family:
            raise FamilyMismatch("element is not over the realized family")
        out = self.ambient.zero()
        for c, e in zip(v.coords, self.embedding):
            if c:
                out = out + c * e
        return out

    def induced(self) -> GradedFamily:
        """The family structure the ambient bracket induces on the embedded basis."""
        return subfamily(self.ambient, self.embedding, names=BASIS)


def make_l(n: int) -> Realization:
    """l(n): basis {1(x)X, x^n(x)Y, 1(x)H} of g(0); abstractly g(n)."""
    g0 = make_g(0)
    emb = (Poly.monomial(1, n) * g0.named("Y"), g0.named("H"), g0.named("X"))
    return Realization(make_g(n), g0, emb)


def make_s(k: int) -> Realization:
    """s(2k): basis {1(x)H, x^k(x)X, x^k(x)Y} of g(0); abstractly g(2k)."""
    g0 = make_g(0)
    xk = Poly.monomial(1, k)
    emb = (xk * g0.named("Y"), g0.named("H"), xk * g0.named("X"))
    return Realization(make_g(2 * k), g0, emb)


def _require_g0(F: FamilyElement) -> None:
    if F.family != make_g(0):
        raise FamilyMismatch("membership is defined for elements of g(0)")


def member_l(F: FamilyElement, n: int) -> bool:
    # divisibility reading of the derivative condition; see README
    _require_g0(F)
    return divisible_by_power(F.coords[Y_INDEX], n)


def member_s(F: FamilyElement, k: int) -> bool:
    _require_g0(F)
    return divisible_by_power(F.coords[X_INDEX], k) and divisible_by_power(F.coords[Y_INDEX], k)
