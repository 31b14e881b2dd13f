import itertools
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_gaussians, random_gaussian, random_poly
from hcfam.arith import GaussianRational, LaurentPoly, Poly
from hcfam.catalog import make_g
from hcfam.errors import BaseMismatch, FamilyMismatch, PuncturedAtZero, ValidationError
from hcfam.liefam import (Base, GroupElement, bracket, change_basis, fiber_at, fiber_invariants,
                          killing_matrix, localize, localize_element, new_family, so2_act, subfamily)

W = (-2, 0, 2)


def table(xy, hx=2, hy=2, extra=None):
    """Bracket table in basis (Y, H, X); ``xy`` is the H-coordinate of [X, Y]."""
    t = {(0, 1): [Poly.const(hy), 0, 0], (0, 2): [0, -xy, 0], (1, 2): [0, 0, Poly.const(hx)]}
    if extra:
        t.update(extra)
    return t


def test_accepts_the_contraction_table():
    f = new_family(3, "affine", W, table(Poly.x()), 1, ("Y", "H", "X"))
    assert f == make_g(1)


def test_weight_additivity_violation_is_named():
    bad = {(0, 2): [0, -Poly.x(), -Poly.x()]}  # [X, Y] = xH + xX
    with pytest.raises(ValidationError) as exc:
        new_family(3, "affine", W, table(Poly.x(), extra=bad), 1)
    assert exc.value.axiom == "weight-additivity"
    assert exc.value.triple == (0, 2, 2)


def test_h_compatibility_violation_is_named():
    with pytest.raises(ValidationError) as exc:
        new_family(3, "affine", W, table(Poly.x(), hx=3), 1)
    assert exc.value.axiom == "h-compatibility"


def test_antisymmetry_violation():
    t = table(Poly.x())
    t[(2, 1)] = [0, 0, Poly.const(2)]  # should be -2X
    with pytest.raises(ValidationError) as exc:
        new_family(3, "affine", W, t, 1)
    assert exc.value.axiom == "antisymmetry"


def test_self_bracket_must_vanish():
    t = table(Poly.x())
    t[(1, 1)] = [0, Poly.const(1), 0]
    with pytest.raises(ValidationError) as exc:
        new_family(3, "affine", W, t, 1)
    assert exc.value.axiom == "antisymmetry"


def test_jacobi_violation_with_witness():
    # weights (0, 0, 0, 0) with H central forces nothing; make [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1
    t = {(1, 2): [0, 0, 0, 1], (2, 3): [0, 1, 0, 0], (1, 3): [0, 1, 0, 0]}
    with pytest.raises(ValidationError) as exc:
        new_family(4, "affine", (0, 0, 0, 0), t, 0)
    assert exc.value.axiom == "jacobi"
    assert exc.value.triple == (1, 2, 3)


@pytest.mark.parametrize("kwargs,axiom", [
    (dict(rank=0), "structure"),
    (dict(weights=(-2, 0)), "structure"),
    (dict(h_index=5), "structure"),
    (dict(h_index=0), "structure"),
    (dict(basis=("Y", "Y", "X")), "structure"),
])
def test_structure_errors(kwargs, axiom):
    args = dict(rank=3, base="affine", weights=W, bracket=table(Poly.x()), h_index=1, basis=None)
    args.update(kwargs)
    with pytest.raises(ValidationError) as exc:
        new_family(**args)
    assert exc.value.axiom == axiom


def test_out_of_range_bracket_index():
    with pytest.raises(ValidationError) as exc:
        new_family(3, "affine", W, table(Poly.x(), extra={(0, 7): [0, 0, 0]}), 1)
    assert exc.value.axiom == "structure"


def test_validation_error_json_shape():
    t = {(1, 2): [0, 0, 0, 1], (2, 3): [0, 1, 0, 0], (1, 3): [0, 1, 0, 0]}
    with pytest.raises(ValidationError) as exc:
        new_family(4, "affine", (0, 0, 0, 0), t, 0)
    assert exc.value.to_json()["error"] == "ValidationError"
    assert exc.value.to_json()["triple"] == [1, 2, 3]


def test_brackets_in_contraction_and_deformation():
    g1, g2 = make_g(1), make_g(2)
    assert bracket(g1.named("X"), g1.named("Y")) == Poly.x() * g1.H
    assert bracket(Poly.x() * g2.named("X"), g2.named("Y")) == Poly.monomial(1, 3) * g2.H


def _random_element(f, rng):
    return f.element([random_poly(rng, 2) for _ in range(f.rank)])


def test_bracket_is_alternating_and_satisfies_jacobi(rng):
    for n in range(4):
        f = make_g(n)
        for _ in range(15):
            u, v, w = (_random_element(f, rng) for _ in range(3))
            assert bracket(u, u).is_zero()
            assert bracket(u, v) == -bracket(v, u)
            jac = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)
            assert jac.is_zero()


def test_bracket_across_families_raises():
    with pytest.raises(FamilyMismatch):
        bracket(make_g(1).H, make_g(2).H)


def test_torus_action_examples():
    f = make_g(1)
    assert so2_act(GroupElement(GaussianRational(0, 1)), f.named("X")) == -f.named("X")
    assert so2_act(GroupElement(GaussianRational(7)), f.H) == f.H


@given(nonzero_gaussians, nonzero_gaussians, st.integers(0, 3))
def test_torus_action_is_an_action_by_automorphisms(z1, z2, n):
    f = make_g(n)
    rng = random.Random(hash((z1, z2, n)))
    u, v = _random_element(f, rng), _random_element(f, rng)
    g1, g2 = GroupElement(z1), GroupElement(z2)
    assert so2_act(g1 * g2, u) == so2_act(g1, so2_act(g2, u))
    assert so2_act(g1, bracket(u, v)) == bracket(so2_act(g1, u), so2_act(g1, v))


def test_group_element_must_be_nonzero():
    with pytest.raises(Exception):
        GroupElement(GaussianRational(0))


def test_localize():
    f = localize(make_g(1))
    assert f.base is Base.PUNCTURED
    assert f.brackets[(0, 2)][1] == LaurentPoly.monomial(-1, 1)
    with pytest.raises(BaseMismatch):
        localize(f)
    one = GaussianRational(1)
    assert fiber_at(f, one) == fiber_at(make_g(1), one)
    with pytest.raises(PuncturedAtZero):
        fiber_at(f, 0)


def test_localized_element_round_trip():
    g = make_g(2)
    v = Poly([1, 2]) * g.named("X")
    lv = localize_element(v)
    assert lv.family == localize(g)
    assert lv.coords[2] == LaurentPoly([1, 2])


def test_punctured_family_accepts_negative_powers():
    t = table(LaurentPoly.monomial(1, -3))
    f = new_family(3, "punctured", W, t, 1)
    assert bracket(f.named("e2"), f.named("e0")).coords[1] == LaurentPoly.monomial(1, -3)
    with pytest.raises(ValidationError):
        new_family(3, "affine", W, t, 1)


def test_fiber_specialization():
    L = fiber_at(make_g(3), 2)
    assert L.bracket((0, 0, 1), (1, 0, 0)) == (0, 8, 0)
    assert fiber_at(make_g(2), 0).bracket((0, 0, 1), (1, 0, 0)) == (0, 0, 0)


def _killing_via_matrices(c):
    """Killing form of sl2 presented as H = diag(1,-1), X = c e12, Y = e21 (so [X,Y] = cH)."""
    Y = sympy.Matrix([[0, 0], [1, 0]])
    H = sympy.Matrix([[1, 0], [0, -1]])
    X = sympy.Matrix([[0, c], [0, 0]])
    basis = [Y, H, X]
    return sympy.Matrix(3, 3, lambda i, j: 4 * (basis[i] * basis[j]).trace())


@pytest.mark.parametrize("n,t", [(0, 5), (1, 2), (2, 3), (3, -1), (1, GaussianRational(0, 1)),
                                 (2, GaussianRational(1, 1))])
def test_killing_form_against_matrix_realization(n, t):
    t = GaussianRational.coerce(t)
    c = t ** n
    expected = _killing_via_matrices(sympy.Rational(c.re.numerator, c.re.denominator)
                                      + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator))
    got = killing_matrix(fiber_at(make_g(n), t))
    for i, j in itertools.product(range(3), repeat=2):
        g = got[i][j]
        assert sympy.nsimplify(expected[i, j]) == sympy.Rational(g.re.numerator, g.re.denominator) + \
            sympy.I * sympy.Rational(g.im.numerator, g.im.denominator)
    inv = fiber_invariants(fiber_at(make_g(n), t))
    assert inv.killing_det == -128 * c * c
    assert inv.killing_rank == 3 and inv.derived_dim == 3 and inv.center_dim == 0


def test_degenerate_fiber_invariants():
    inv = fiber_invariants(fiber_at(make_g(1), 0))
    assert (inv.killing_rank, inv.derived_dim, inv.center_dim) == (1, 2, 0)
    assert inv.killing_det == 0


def test_abelian_fiber_center():
    f = new_family(2, "affine", (0, 0), {}, 0)
    inv = fiber_invariants(fiber_at(f, 1))
    assert (inv.killing_rank, inv.derived_dim, inv.center_dim) == (0, 0, 2)


@pytest.mark.parametrize("n", range(0, 6))
def test_generic_versus_special_fibers(n):
    for t in (1, 2, -1, GaussianRational(0, 1), GaussianRational(3, -2)):
        assert fiber_invariants(fiber_at(make_g(n), t)).killing_rank == 3
    assert fiber_invariants(fiber_at(make_g(n), 0)).killing_rank == (3 if n == 0 else 1)


def test_evaluation_is_a_lie_homomorphism(rng):
    for n in range(4):
        f = make_g(n)
        for _ in range(10):
            u, v = _random_element(f, rng), _random_element(f, rng)
            t = random_gaussian(rng)
            L = fiber_at(f, t)
            ev = lambda w: tuple(c.eval_at(t) for c in w.coords)
            assert ev(bracket(u, v)) == L.bracket(ev(u), ev(v))


def test_change_basis_rescaling_gives_monomial_multiple():
    g = make_g(1)
    Y, H, X = g.named("Y"), g.named("H"), g.named("X")
    f = change_basis(g, [3 * Y, H, X], names=("Y", "H", "X"))
    assert f.brackets[(0, 2)][1] == Poly([0, -3])


def test_change_basis_rejects_inhomogeneous_and_singular_rows():
    g = make_g(1)
    Y, H, X = g.named("Y"), g.named("H"), g.named("X")
    with pytest.raises(ValidationError):
        change_basis(g, [Y + X, H, X])
    with pytest.raises(Exception):
        change_basis(g, [Poly.x() * Y, H, X])


def test_subfamily_recovers_g_n_inside_g_0():
    g0 = make_g(0)
    gens = [Poly.monomial(1, 2) * g0.named("Y"), g0.H, g0.named("X")]
    assert subfamily(g0, gens, names=("Y", "H", "X")) == make_g(2)


def test_subfamily_rejects_non_closed_span():
    g0 = make_g(0)
    gens = [Poly.x() * g0.named("Y"), Poly.x() * g0.H, g0.named("X")]
    with pytest.raises(ValidationError):
        subfamily(g0, gens, h_index=1)


def test_element_arithmetic_and_weight():
    g = make_g(0)
    v = g.named("X") + Poly.x() * g.named("X")
    assert v.weight() == 2
    assert (v + g.H).weight() is None
    assert g.zero().weight() is None
    assert (v - v).is_zero()
    with pytest.raises(FamilyMismatch):
        g.element([0, 0])
