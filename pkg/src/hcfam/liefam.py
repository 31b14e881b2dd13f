"""SO(2)-graded Lie algebra families over Q(i)[x] or Q(i)[x, 1/x].

A family is a free module with a basis, an integer weight per basis vector
(the torus acts on weight ``w`` by ``z**w``), a bracket table and a
designated weight-0 basis vector ``H`` that carries the embedding of the
torus Lie algebra.  Construction validates every pair axiom eagerly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence, Union

from . import linalg
from .arith import ONE, ZERO, GaussianRational, LaurentPoly, Poly
from .errors import BaseMismatch, DivisionByZero, FamilyMismatch, PuncturedAtZero, ValidationError

RingElement = Union[Poly, LaurentPoly]


class Base(str, Enum):
    AFFINE = "affine"
    PUNCTURED = "punctured"

    def zero(self) -> RingElement:
        return Poly() if self is Base.AFFINE else LaurentPoly()

    def one(self) -> RingElement:
        return Poly.const(1) if self is Base.AFFINE else LaurentPoly.const(1)

    def coerce(self, value) -> RingElement:
        if self is Base.AFFINE:
            if isinstance(value, Poly):
                return value
            if isinstance(value, LaurentPoly):
                p = value.to_poly()
                if p is None:
                    raise BaseMismatch(f"{value} has negative powers of x")
                return p
            return Poly.const(value)
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Poly):
            return LaurentPoly.from_poly(value)
        return LaurentPoly.const(value)

    def is_unit(self, value: RingElement) -> bool:
        if self is Base.AFFINE:
            return value.degree == 0
        return value.is_unit()

    def unit_inverse(self, value: RingElement) -> RingElement:
        if not self.is_unit(value):
            raise DivisionByZero(f"{value} is not a unit of the {self.value} base ring")
        if self is Base.AFFINE:
            return Poly.const(value.coeffs[0].inv())
        return value.inverse()


class GradedFamily:
    """A validated graded family; build it with :func:`new_family`."""

    __slots__ = ("rank", "base", "weights", "basis", "h_index", "_table", "_key")

    def __init__(self, rank: int, base: Base, weights: tuple[int, ...], basis: tuple[str, ...],
                 h_index: int, table: list[list[tuple[RingElement, ...]]]):
        self.rank = rank
        self.base = base
        self.weights = weights
        self.basis = basis
        self.h_index = h_index
        self._table = table
        self._key = (rank, base.value, weights, basis, h_index, self._bracket_key())

    def _bracket_key(self):
        return tuple(
            ((i, j), tuple(self._table[i][j]))
            for i in range(self.rank) for j in range(i + 1, self.rank)
            if any(self._table[i][j])
        )

    @property
    def brackets(self) -> dict[tuple[int, int], tuple[RingElement, ...]]:
        """Nonzero bracket entries ``[e_i, e_j]`` for ``i < j``."""
        return {
            (i, j): self._table[i][j]
            for i in range(self.rank) for j in range(i + 1, self.rank)
            if any(self._table[i][j])
        }

    def structure(self, i: int, j: int) -> tuple[RingElement, ...]:
        return self._table[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedFamily):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return (f"GradedFamily(rank={self.rank}, base={self.base.value}, "
                f"basis={self.basis}, weights={self.weights}, h_index={self.h_index})")

    def zero(self) -> FamilyElement:
        return FamilyElement(self, (self.base.zero(),) * self.rank)

    def basis_vector(self, i: int) -> FamilyElement:
        coords = [self.base.zero()] * self.rank
        coords[i] = self.base.one()
        return FamilyElement(self, tuple(coords))

    def named(self, name: str) -> FamilyElement:
        return self.basis_vector(self.basis.index(name))

    @property
    def H(self) -> FamilyElement:
        return self.basis_vector(self.h_index)

    def element(self, coords: Sequence) -> FamilyElement:
        if len(coords) != self.rank:
            raise FamilyMismatch(f"expected {self.rank} coordinates, got {len(coords)}")
        return FamilyElement(self, tuple(self.base.coerce(c) for c in coords))

    def indices_of_weight(self, w: int) -> list[int]:
        return [i for i, wi in enumerate(self.weights) if wi == w]


class FamilyElement:
    __slots__ = ("family", "coords")

    def __init__(self, family: GradedFamily, coords: tuple[RingElement, ...]):
        self.family = family
        self.coords = coords

    def _check(self, other: FamilyElement) -> None:
        if not isinstance(other, FamilyElement):
            raise TypeError("expected a FamilyElement")
        if other.family is not self.family and other.family != self.family:
            raise FamilyMismatch("elements belong to different families")

    def __add__(self, other: FamilyElement) -> FamilyElement:
        self._check(other)
        return FamilyElement(self.family, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FamilyElement) -> FamilyElement:
        self._check(other)
        return FamilyElement(self.family, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> FamilyElement:
        return FamilyElement(self.family, tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> FamilyElement:
        if isinstance(scalar, FamilyElement):
            return NotImplemented
        f = self.family.base.coerce(scalar)
        return FamilyElement(self.family, tuple(f * a for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FamilyElement):
            return NotImplemented
        return self.family == other.family and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.family, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coords) if c]

    def weight(self) -> int | None:
        """The common weight of the support, or ``None`` if zero or inhomogeneous."""
        ws = {self.family.weights[i] for i in self.support()}
        return ws.pop() if len(ws) == 1 else None

    def bracket(self, other: FamilyElement) -> FamilyElement:
        return bracket(self, other)

    def __repr__(self) -> str:
        parts = [f"({c})*{name}" for c, name in zip(self.coords, self.family.basis) if c]
        return " + ".join(parts) if parts else "0"


def _coords_bracket(family: GradedFamily, u: Sequence[RingElement],
                    v: Sequence[RingElement]) -> tuple[RingElement, ...]:
    r = family.rank
    out = [family.base.zero()] * r
    table = family._table
    for i in range(r):
        ui, vi = u[i], v[i]
        if not ui and not vi:
            continue
        for j in range(i + 1, r):
            coef = ui * v[j] - u[j] * vi
            if not coef:
                continue
            for p, t in enumerate(table[i][j]):
                if t:
                    out[p] = out[p] + coef * t
    return tuple(out)


def bracket(u: FamilyElement, v: FamilyElement) -> FamilyElement:
    u._check(v)
    return FamilyElement(u.family, _coords_bracket(u.family, u.coords, v.coords))


def new_family(rank: int, base: Base | str, weights: Sequence[int],
               bracket: Mapping[tuple[int, int], Sequence], h_index: int,
               basis: Sequence[str] | None = None) -> GradedFamily:
    """Build and validate a family.

    ``bracket`` maps index pairs to coordinate vectors; pairs not listed are
    zero.  Raises :class:`ValidationError` naming the first violated axiom, in
    the order structure, antisymmetry, weight-additivity, h-compatibility,
    jacobi.
    """
    base = Base(base)
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ValidationError("structure", None, f"rank must be a positive integer, got {rank!r}")
    weights = tuple(weights)
    if len(weights) != rank or not all(isinstance(w, int) and not isinstance(w, bool) for w in weights):
        raise ValidationError("structure", None, "weights must be one integer per basis vector")
    if basis is None:
        basis = tuple(f"e{i}" for i in range(rank))
    basis = tuple(basis)
    if len(basis) != rank or len(set(basis)) != rank:
        raise ValidationError("structure", None, "basis names must be distinct, one per basis vector")
    if not isinstance(h_index, int) or isinstance(h_index, bool) or not 0 <= h_index < rank:
        raise ValidationError("structure", None, f"h_index {h_index!r} out of range")
    if weights[h_index] != 0:
        raise ValidationError("structure", (h_index,), "the designated H must have weight 0")

    zero = base.zero()
    table = [[(zero,) * rank for _ in range(rank)] for _ in range(rank)]
    given: dict[tuple[int, int], tuple[RingElement, ...]] = {}
    for key, coords in bracket.items():
        i, j = key
        if not (0 <= i < rank and 0 <= j < rank):
            raise ValidationError("structure", (i, j), f"bracket index {key} out of range")
        if len(coords) != rank:
            raise ValidationError("structure", (i, j), f"bracket {key} needs {rank} coordinates")
        try:
            given[(i, j)] = tuple(base.coerce(c) for c in coords)
        except BaseMismatch as exc:
            raise ValidationError("structure", (i, j), str(exc)) from None

    for (i, j), coords in given.items():
        if i == j:
            for p, c in enumerate(coords):
                if c:
                    raise ValidationError("antisymmetry", (i, i, p), f"[e{i}, e{i}] must vanish")
            continue
        if (j, i) in given and i < j:
            other = given[(j, i)]
            for p, (a, b) in enumerate(zip(coords, other)):
                if a + b:
                    raise ValidationError(
                        "antisymmetry", (i, j, p), f"[e{j}, e{i}] is not -[e{i}, e{j}] at coordinate {p}")
        table[i][j] = coords
        table[j][i] = tuple(-c for c in coords)

    for i in range(rank):
        for j in range(i + 1, rank):
            target = weights[i] + weights[j]
            for p, c in enumerate(table[i][j]):
                if c and weights[p] != target:
                    raise ValidationError(
                        "weight-additivity", (i, j, p),
                        f"[{basis[i]}, {basis[j]}] has weight {target} but touches "
                        f"{basis[p]} of weight {weights[p]}")

    h = h_index
    for i in range(rank):
        expected = [zero] * rank
        if weights[i]:
            expected[i] = base.coerce(weights[i])
        for p, c in enumerate(table[h][i]):
            if c != expected[p]:
                raise ValidationError(
                    "h-compatibility", (h, i, p),
                    f"[{basis[h]}, {basis[i]}] must equal {weights[i]}*{basis[i]}")

    family = GradedFamily(rank, base, weights, basis, h_index, table)
    units = [family.basis_vector(i).coords for i in range(rank)]
    for i, j, k in itertools.combinations(range(rank), 3):
        ij = _coords_bracket(family, _coords_bracket(family, units[i], units[j]), units[k])
        jk = _coords_bracket(family, _coords_bracket(family, units[j], units[k]), units[i])
        ki = _coords_bracket(family, _coords_bracket(family, units[k], units[i]), units[j])
        if any(a + b + c for a, b, c in zip(ij, jk, ki)):
            raise ValidationError("jacobi", (i, j, k), f"Jacobi identity fails on ({i}, {j}, {k})")
    return family


@dataclass(frozen=True)
class GroupElement:
    """``k(z)`` in SO(2); acts on weight ``w`` by ``z**w``."""

    z: GaussianRational

    def __post_init__(self):
        z = GaussianRational.coerce(self.z) if not isinstance(self.z, GaussianRational) else self.z
        if z.is_zero():
            raise ValueError("k(z) needs z != 0")
        object.__setattr__(self, "z", z)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.z * other.z)

    def inverse(self) -> GroupElement:
        return GroupElement(self.z.inv())


def so2_act(g: GroupElement | GaussianRational | int, v: FamilyElement) -> FamilyElement:
    z = g.z if isinstance(g, GroupElement) else GroupElement(g).z
    coords = tuple(c * (z ** w) if c else c for c, w in zip(v.coords, v.family.weights))
    return FamilyElement(v.family, coords)


def localize(f: GradedFamily) -> GradedFamily:
    """Base change to Q(i)[x, 1/x]."""
    if f.base is not Base.AFFINE:
        raise BaseMismatch("family is already over the punctured line")
    table = [[tuple(LaurentPoly.from_poly(c) for c in f._table[i][j]) for j in range(f.rank)]
             for i in range(f.rank)]
    return GradedFamily(f.rank, Base.PUNCTURED, f.weights, f.basis, f.h_index, table)


def localize_element(v: FamilyElement, target: GradedFamily | None = None) -> FamilyElement:
    target = target or localize(v.family)
    return target.element(v.coords)


@dataclass(frozen=True)
class FiberLieAlgebra:
    """Lie algebra over Q(i): ``consts[i][j][p]`` is the ``e_p`` coefficient of ``[e_i, e_j]``."""

    rank: int
    consts: tuple[tuple[tuple[GaussianRational, ...], ...], ...]

    def bracket(self, u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> tuple:
        out = [ZERO] * self.rank
        for i in range(self.rank):
            for j in range(self.rank):
                coef = u[i] * v[j]
                if coef:
                    for p in range(self.rank):
                        c = self.consts[i][j][p]
                        if c:
                            out[p] = out[p] + coef * c
        return tuple(out)

    def ad(self, i: int) -> list[list[GaussianRational]]:
        """Matrix of ``ad(e_i)``; column ``j`` is ``[e_i, e_j]``."""
        return [[self.consts[i][j][p] for j in range(self.rank)] for p in range(self.rank)]


def fiber_at(f: GradedFamily, t) -> FiberLieAlgebra:
    t = GaussianRational.coerce(t)
    if f.base is Base.PUNCTURED and t.is_zero():
        raise PuncturedAtZero("the punctured family has no fiber at 0")
    consts = tuple(
        tuple(tuple(c.eval_at(t) for c in f._table[i][j]) for j in range(f.rank))
        for i in range(f.rank)
    )
    return FiberLieAlgebra(f.rank, consts)


@dataclass(frozen=True)
class FiberInvariants:
    killing_det: GaussianRational
    killing_rank: int
    derived_dim: int
    center_dim: int


def killing_matrix(L: FiberLieAlgebra) -> list[list[GaussianRational]]:
    ads = [L.ad(i) for i in range(L.rank)]
    r = L.rank

    def trace_prod(a, b):
        acc = ZERO
        for p in range(r):
            for q in range(r):
                if a[p][q] and b[q][p]:
                    acc = acc + a[p][q] * b[q][p]
        return acc

    return [[trace_prod(ads[i], ads[j]) for j in range(r)] for i in range(r)]


def fiber_invariants(L: FiberLieAlgebra) -> FiberInvariants:
    K = killing_matrix(L)
    r = L.rank
    brackets = [list(L.consts[i][j]) for i in range(r) for j in range(i + 1, r)]
    derived = linalg.rank(brackets) if brackets else 0
    # v is central iff sum_i v_i [e_i, e_j] = 0 for all j
    joint = [[L.consts[i][j][p] for i in range(r)] for j in range(r) for p in range(r)]
    center = r - linalg.rank(joint)
    return FiberInvariants(linalg.det(K), linalg.rank(K), derived, center)


def _ring_det(base: Base, m: Sequence[Sequence[RingElement]]) -> RingElement:
    n = len(m)
    total = base.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = base.one()
        for row, col in enumerate(perm):
            term = term * m[row][col]
            if not term:
                break
        if term:
            total = total - term if inversions % 2 else total + term
    return total


def _ring_inverse(base: Base, m: Sequence[Sequence[RingElement]]) -> list[list[RingElement]]:
    n = len(m)
    d = _ring_det(base, m)
    if not base.is_unit(d):
        raise ValidationError("structure", None, "base-change matrix is not invertible over the base ring")
    dinv = base.unit_inverse(d)
    inv = [[base.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = _ring_det(base, minor) if minor else base.one()
            if (i + j) % 2:
                cof = -cof
            inv[j][i] = cof * dinv
    return inv


def change_basis(f: GradedFamily, rows: Sequence[FamilyElement | Sequence],
                 names: Sequence[str] | None = None, h_index: int | None = None) -> GradedFamily:
    """Re-present ``f`` in a new basis; row ``i`` gives new basis vector ``i`` in old coordinates.

    Every new vector must be weight-homogeneous and the matrix must be
    invertible over the base ring.  ``h_index`` defaults to the new vector
    equal to the old ``H``.
    """
    vecs = [r if isinstance(r, FamilyElement) else f.element(r) for r in rows]
    if len(vecs) != f.rank:
        raise ValidationError("structure", None, "need one row per basis vector")
    weights = []
    for i, v in enumerate(vecs):
        w = v.weight()
        if w is None:
            raise ValidationError("structure", (i,), f"new basis vector {i} is not weight-homogeneous")
        weights.append(w)
    matrix = [list(v.coords) for v in vecs]
    inv = _ring_inverse(f.base, matrix)
    if h_index is None:
        h = f.H
        h_index = next((i for i, v in enumerate(vecs) if v == h), None)
        if h_index is None:
            raise ValidationError("structure", None, "no new basis vector equals the designated H")
    table: dict[tuple[int, int], list[RingElement]] = {}
    for i in range(f.rank):
        for j in range(i + 1, f.rank):
            w = _coords_bracket(f, vecs[i].coords, vecs[j].coords)
            coeffs = [f.base.zero()] * f.rank
            for p, wp in enumerate(w):
                if wp:
                    for q in range(f.rank):
                        if inv[p][q]:
                            coeffs[q] = coeffs[q] + wp * inv[p][q]
            if any(coeffs):
                table[(i, j)] = coeffs
    return new_family(f.rank, f.base, weights, table, h_index,
                      names if names is not None else tuple(f"b{i}" for i in range(f.rank)))


def subfamily(ambient: GradedFamily, generators: Sequence[FamilyElement],
              names: Sequence[str] | None = None, h_index: int | None = None) -> GradedFamily:
    """The family spanned by coordinate-aligned generators (each a multiple of one basis vector).

    Brackets of the generators are rewritten in the generators by exact
    division; raises :class:`ValidationError` if the span is not closed.
    """
    slots = []
    for g in generators:
        sup = g.support()
        if len(sup) != 1:
            raise ValidationError("structure", None, "generators must each be supported on one coordinate")
        slots.append(sup[0])
    if len(set(slots)) != len(slots) or len(slots) != ambient.rank:
        raise ValidationError("structure", None, "generators must cover each coordinate exactly once")
    where = {p: i for i, p in enumerate(slots)}
    table = {}
    for i in range(ambient.rank):
        for j in range(i + 1, ambient.rank):
            w = bracket(generators[i], generators[j])
            coeffs = [ambient.base.zero()] * ambient.rank
            for p, wp in enumerate(w.coords):
                if not wp:
                    continue
                g = where[p]
                divisor = generators[g].coords[p]
                q, r = _ring_divmod(ambient.base, wp, divisor)
                if r:
                    raise ValidationError("structure", (i, j, g), "span of the generators is not closed")
                coeffs[g] = q
            if any(coeffs):
                table[(i, j)] = coeffs
    weights = [ambient.weights[p] for p in slots]
    if h_index is None:
        h_index = next((i for i, g in enumerate(generators) if g == ambient.H), None)
        if h_index is None:
            raise ValidationError("structure", None, "no generator equals the designated H")
    return new_family(ambient.rank, ambient.base, weights, table, h_index,
                      names if names is not None else tuple(f"b{i}" for i in range(ambient.rank)))


def _ring_divmod(base: Base, a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
    if base is Base.AFFINE:
        return a.divmod(b)
    # over the Laurent ring only division by units is needed here
    if b.is_unit():
        return a * b.inverse(), LaurentPoly()
    pa, pb = a.shift(-a.offset).to_poly(), b.shift(-b.offset).to_poly()
    q, r = pa.divmod(pb)
    return LaurentPoly.from_poly(q).shift(a.offset - b.offset), LaurentPoly.from_poly(r)
