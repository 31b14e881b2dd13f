"""Normal-form classification of rank-3 graded extensions over the affine line.

Given a valid affine family with weights {-2, 0, 2} and designated H, the
only freedom left is the H-coordinate f(x) of [X, Y].  The family extends
the constant sl2 family over the punctured line exactly when f is a
nonzero monomial c*x^n; rescaling Y by 1/c then gives the normal form g(n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import GaussianRational, Poly, as_monomial
from .catalog import BASIS, label, make_g
from .errors import NoWitness, NotCanonical, NotExtension
from .liefam import (Base, FamilyElement, GradedFamily, _ring_det, bracket, change_basis)


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    canonical_change: tuple[tuple[Poly, ...], ...]
    scale_c: GaussianRational
    family: GradedFamily

    @property
    def label(self) -> str:
        return label(self.n)

    def canonical_basis(self) -> tuple[FamilyElement, ...]:
        """The canonical (Y, H, X) as elements of the input family."""
        return tuple(self.family.element(row) for row in self.canonical_change)

    def canonical_family(self) -> GradedFamily:
        return change_basis(self.family, self.canonical_basis(), names=BASIS, h_index=1)


def _weight_slots(f: GradedFamily) -> tuple[int, int, int]:
    if f.rank != 3 or sorted(f.weights) != [-2, 0, 2]:
        raise NotExtension("WrongWeights", f"weight multiset {sorted(f.weights)} is not [-2, 0, 2]",
                           weights=list(f.weights))
    return f.weights.index(-2), f.h_index, f.weights.index(2)


def classify_extension(f: GradedFamily) -> ClassificationResult:
    if f.base is not Base.AFFINE:
        raise NotExtension("NotAffine", "classification needs a family over the affine line")
    y, h, x = _weight_slots(f)
    XY = bracket(f.basis_vector(x), f.basis_vector(y))
    fx = XY.coords[h]
    if fx.is_zero():
        raise NotExtension("DegenerateBracket", "[X, Y] vanishes identically")
    mono = as_monomial(fx)
    if mono is None:
        raise NotExtension("NonMonomial", f"[X, Y] = ({fx}) H is not a monomial multiple of H",
                           bracket=str(fx), terms=sum(1 for _ in fx.terms()))
    c, n = mono
    zero, one = Poly(), Poly.const(1)
    rows = []
    for slot, scale in ((y, c.inv()), (h, 1), (x, 1)):
        row = [zero, zero, zero]
        row[slot] = Poly.const(scale) if scale != 1 else one
        rows.append(tuple(row))
    return ClassificationResult(n, tuple(rows), c, f)


def _check_canonical(basis: tuple[FamilyElement, ...], f: GradedFamily) -> int:
    if len(basis) != 3:
        raise NotCanonical("a canonical basis is a triple (Y, H, X)")
    Y, H, X = basis
    for v in basis:
        if v.family != f:
            raise NotCanonical("basis element lies outside the family")
    if Y.weight() != -2 or H.weight() != 0 or X.weight() != 2:
        raise NotCanonical("basis is not weight-homogeneous of weights (-2, 0, 2)")
    if not f.base.is_unit(_ring_det(f.base, [v.coords for v in basis])):
        raise NotCanonical("triple is not a basis over the base ring")
    if bracket(H, X) != 2 * X or bracket(H, Y) != -2 * Y:
        raise NotCanonical("H does not act on X, Y by 2, -2")
    XY = bracket(X, Y)
    mono = as_monomial(XY.coords[f.h_index])
    if mono is None or XY != f.base.coerce(Poly.monomial(1, 0)).shift(mono[1]) * H:
        raise NotCanonical("[X, Y] is not x^n H")
    return mono[1]


def canonical_uniqueness_witness(b1: tuple[FamilyElement, ...], b2: tuple[FamilyElement, ...],
                                 f: GradedFamily) -> GaussianRational:
    """The scalar lambda with X2 = lambda X1, Y2 = Y1 / lambda, H2 = H1.

    ``lambda`` is the square of the torus element conjugating one basis into
    the other.
    """
    n1 = _check_canonical(b1, f)
    n2 = _check_canonical(b2, f)
    if n1 != n2:
        raise NoWitness(f"canonical bases disagree on n ({n1} vs {n2})")
    Y1, H1, X1 = b1
    Y2, H2, X2 = b2
    if H1 != H2:
        raise NoWitness("H is not unique")
    slot = X1.support()[0]
    ratio = X2.coords[slot]
    lead = X1.coords[slot]
    if not f.base.is_unit(ratio) or not f.base.is_unit(lead):
        raise NoWitness("X sections are not unit multiples of each other")
    lam = f.base.unit_inverse(lead) * ratio
    mono = as_monomial(lam)
    if mono is None or mono[1] != 0:
        raise NoWitness("X sections differ by a non-constant factor")
    lam_c = mono[0]
    if X2 != lam_c * X1 or Y2 != lam_c.inv() * Y1:
        raise NoWitness("X and Y are not related by a torus conjugation")
    return lam_c


@dataclass(frozen=True)
class ClassSummary:
    n: int
    label: str
    c: GaussianRational


def enumerate_classes(N: int) -> list[ClassSummary]:
    out = []
    for n in range(N + 1):
        r = classify_extension(make_g(n))
        out.append(ClassSummary(r.n, r.label, r.scale_c))
    return out
