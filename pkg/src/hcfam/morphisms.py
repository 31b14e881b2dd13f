"""Pair morphisms between the catalog families g(m) -> g(n).

Morphisms are stored by their parameters (c, k, s): for s = +1 they send
H -> H, X -> c x^k X, Y -> c^-1 x^(m-n-k) Y; for s = -1 they send
H -> -H, X -> c x^k Y, Y -> c^-1 x^(m-n-k) X.  The torus part is
k(z) -> k(z)^s.  Localized morphisms act between the families over the
punctured line and allow any integer k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .arith import I, ONE, GaussianRational, LaurentPoly, Poly, as_monomial
from .catalog import H_INDEX, X_INDEX, Y_INDEX, make_g, make_g_localized
from .errors import BaseMismatch, ChainMismatch, FamilyMismatch, InvalidMorphism, NegativeExponent
from .liefam import Base, FamilyElement, GradedFamily, GroupElement, bracket, new_family, so2_act


def _family(n: int, localized: bool) -> GradedFamily:
    return make_g_localized(n) if localized else make_g(n)


@dataclass(frozen=True)
class PairMorphism:
    m: int
    n: int
    c: GaussianRational
    k: int
    s: int
    localized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "c", GaussianRational.coerce(self.c))
        if self.c.is_zero():
            raise InvalidMorphism("c must be nonzero")
        if self.s not in (1, -1):
            raise InvalidMorphism("s must be +1 or -1")
        for name in ("m", "n", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidMorphism(f"{name} must be an integer")
        if self.m < 0 or self.n < 0:
            raise InvalidMorphism("family indices must be natural numbers")
        if not self.localized:
            if self.m < self.n:
                raise InvalidMorphism(f"Hom({self.m},{self.n}) is zero: m < n")
            if not 0 <= self.k <= self.m - self.n:
                raise InvalidMorphism(f"k must lie in 0..{self.m - self.n}")

    @property
    def source(self) -> GradedFamily:
        return _family(self.m, self.localized)

    @property
    def target(self) -> GradedFamily:
        return _family(self.n, self.localized)

    def _scalar(self, c: GaussianRational, e: int):
        if self.localized:
            return LaurentPoly.monomial(c, e)
        if e < 0:
            raise NegativeExponent(f"x^{e} does not exist over the affine line")
        return Poly.monomial(c, e)

    def images(self) -> tuple[FamilyElement, ...]:
        """Images of the source basis (Y, H, X)."""
        t = self.target
        fx = self._scalar(self.c, self.k)
        fy = self._scalar(self.c.inv(), self.m - self.n - self.k)
        Y, H, X = t.named("Y"), t.named("H"), t.named("X")
        if self.s == 1:
            return (fy * Y, H, fx * X)
        return (fy * X, -H, fx * Y)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "c": str(self.c), "k": self.k, "s": self.s,
                "localized": self.localized}


@dataclass(frozen=True)
class ZeroMorphism:
    """The zero map; its torus part is the trivial homomorphism."""

    m: int
    n: int
    localized: bool = False
    s: int = field(default=0, init=False)

    @property
    def source(self) -> GradedFamily:
        return _family(self.m, self.localized)

    @property
    def target(self) -> GradedFamily:
        return _family(self.n, self.localized)

    def images(self) -> tuple[FamilyElement, ...]:
        return (self.target.zero(),) * 3

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "zero": True, "localized": self.localized}


@dataclass(frozen=True)
class LinearMap:
    """A raw base-ring-linear map given by basis images, with torus part z -> z^s."""

    source: GradedFamily
    target: GradedFamily
    image_list: tuple[FamilyElement, ...]
    s: int

    def images(self) -> tuple[FamilyElement, ...]:
        return self.image_list


Morphism = Union[PairMorphism, ZeroMorphism, LinearMap]


def apply(phi: Morphism, v: FamilyElement) -> FamilyElement:
    src = phi.source
    if v.family is not src and v.family != src:
        raise FamilyMismatch("element is not over the morphism's source family")
    out = phi.target.zero()
    for c, img in zip(v.coords, phi.images()):
        if c:
            out = out + c * img
    return out


@dataclass(frozen=True)
class HomSpace:
    m: int
    n: int
    localized: bool
    zero: bool
    k_min: int | None
    k_max: int | None
    signs: tuple[int, ...] = (1, -1)

    def generators(self, cs: Iterable = (1,), k_window: Sequence[int] | None = None) -> list[PairMorphism]:
        """Explicit generators; localized spaces need a finite ``k_window``."""
        if self.zero:
            return []
        if self.localized:
            if k_window is None:
                raise ValueError("localized Hom spaces need an explicit k_window")
            ks = list(k_window)
        else:
            ks = list(range(self.k_min, self.k_max + 1))
        return [PairMorphism(self.m, self.n, c, k, s, self.localized)
                for s in self.signs for k in ks for c in cs]

    def to_json(self) -> dict:
        if self.zero:
            return {"m": self.m, "n": self.n, "localized": self.localized, "zero": True}
        return {"m": self.m, "n": self.n, "localized": self.localized, "zero": False,
                "k_range": [self.k_min, self.k_max] if not self.localized else "Z",
                "c_range": "Q(i)^x", "signs": list(self.signs)}


def hom_space(m: int, n: int, localized: bool = False) -> HomSpace:
    if localized:
        return HomSpace(m, n, True, False, None, None)
    if m < n:
        return HomSpace(m, n, False, True, None, None, ())
    return HomSpace(m, n, False, False, 0, m - n)


@dataclass
class MorphismReport:
    ok: bool
    violations: list[str]

    def __bool__(self) -> bool:
        return self.ok


_TEST_TORUS = (GaussianRational(2), GaussianRational(1, 1))


def verify_morphism(phi: Morphism) -> MorphismReport:
    """Check bracket preservation, twisted equivariance and embedding compatibility on the basis."""
    src, tgt = phi.source, phi.target
    imgs = phi.images()
    problems: list[str] = []
    basis = [src.basis_vector(i) for i in range(src.rank)]
    for i in range(src.rank):
        for j in range(i + 1, src.rank):
            lhs = apply(phi, bracket(basis[i], basis[j]))
            rhs = bracket(imgs[i], imgs[j])
            if lhs != rhs:
                problems.append(f"bracket: image of [{src.basis[i]}, {src.basis[j]}] is {lhs}, "
                                f"bracket of images is {rhs}")
    for z in _TEST_TORUS:
        zs = z ** phi.s if phi.s else ONE
        for i, e in enumerate(basis):
            if apply(phi, so2_act(GroupElement(z), e)) != so2_act(GroupElement(zs), imgs[i]):
                problems.append(f"twisted equivariance fails on {src.basis[i]} at z={z}")
    if apply(phi, src.H) != phi.s * tgt.H:
        problems.append("embedding compatibility: H is not sent to s*H")
    return MorphismReport(not problems, problems)


def compose(phi: PairMorphism | ZeroMorphism, psi: PairMorphism | ZeroMorphism
            ) -> PairMorphism | ZeroMorphism:
    """Diagrammatic composite g(m) -> g(n) -> g(p): ``phi`` is applied first."""
    if phi.localized != psi.localized:
        raise ChainMismatch("cannot compose localized and non-localized morphisms")
    if phi.n != psi.m:
        raise ChainMismatch(f"target g({phi.n}) differs from source g({psi.m})")
    if isinstance(phi, ZeroMorphism) or isinstance(psi, ZeroMorphism):
        return ZeroMorphism(phi.m, psi.n, phi.localized)
    if phi.s == 1:
        c, k = phi.c * psi.c, phi.k + psi.k
    else:
        # phi lands X in the Y-line, where psi scales by c2^-1 x^(n-p-k2)
        c, k = phi.c / psi.c, phi.k + (psi.m - psi.n - psi.k)
    return PairMorphism(phi.m, psi.n, c, k, phi.s * psi.s, phi.localized)


def identity(m: int, localized: bool = False) -> PairMorphism:
    return PairMorphism(m, m, 1, 0, 1, localized)


def inverse(phi: PairMorphism) -> PairMorphism:
    """Inverse of a localized morphism (every localized generator is invertible)."""
    if not phi.localized and phi.m != phi.n:
        raise InvalidMorphism("only localized morphisms or automorphisms are invertible")
    if phi.s == 1:
        return PairMorphism(phi.n, phi.m, phi.c.inv(), -phi.k, 1, phi.localized)
    # Y_m -> c^-1 x^(m-n-k) X_n, so X_n -> c x^(k+n-m) Y_m
    return PairMorphism(phi.n, phi.m, phi.c, phi.k + phi.n - phi.m, -1, phi.localized)


def localize_morphism(phi: PairMorphism) -> PairMorphism:
    return PairMorphism(phi.m, phi.n, phi.c, phi.k, phi.s, True)


def pullback(f: GradedFamily, mu: Poly) -> GradedFamily:
    """Substitute x -> mu(x) in every structure constant."""
    if f.base is not Base.AFFINE:
        raise BaseMismatch("pullback is defined for families over the affine line")
    table = {key: [c.compose(mu) for c in coords] for key, coords in f.brackets.items()}
    return new_family(f.rank, f.base, f.weights, table, f.h_index, f.basis)


def embed_in_constant(n: int) -> PairMorphism:
    """g(n) -> g(0): X -> X, Y -> x^n Y, H -> H."""
    return PairMorphism(n, 0, 1, 0, 1, False)


def linear_map(m: int, n: int, images: Sequence[FamilyElement], s: int,
               localized: bool = False) -> LinearMap:
    src, tgt = _family(m, localized), _family(n, localized)
    imgs = tuple(tgt.element(v.coords) if isinstance(v, FamilyElement) else tgt.element(v)
                 for v in images)
    return LinearMap(src, tgt, imgs, s)


def fit_morphism(lm: LinearMap, m: int, n: int) -> PairMorphism | ZeroMorphism | None:
    """Recognize a raw map between g(m) and g(n) as a parametric morphism, if it is one."""
    localized = lm.source.base is Base.PUNCTURED
    if all(v.is_zero() for v in lm.images()):
        return ZeroMorphism(m, n, localized)
    tgt = lm.target
    img_x = lm.images()[X_INDEX]
    if lm.images()[H_INDEX] == tgt.H:
        s, slot = 1, X_INDEX
    elif lm.images()[H_INDEX] == -tgt.H:
        s, slot = -1, Y_INDEX
    else:
        return None
    if img_x.support() != [slot]:
        return None
    mono = as_monomial(img_x.coords[slot])
    if mono is None:
        return None
    c, k = mono
    try:
        cand = PairMorphism(m, n, c, k, s, localized)
    except InvalidMorphism:
        return None
    if cand.images() != lm.images():
        return None
    return cand
