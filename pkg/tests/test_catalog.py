import pytest

from conftest import random_poly
from hcfam.arith import Poly
from hcfam.catalog import label, make_g, make_g_localized, make_l, make_s, member_l, member_s
from hcfam.errors import FamilyMismatch
from hcfam.liefam import Base, bracket, fiber_at, fiber_invariants


@pytest.mark.parametrize("n", range(13))
def test_g_n_table(n):
    f = make_g(n)
    assert f.basis == ("Y", "H", "X") and f.weights == (-2, 0, 2) and f.h_index == 1
    Y, H, X = f.named("Y"), f.named("H"), f.named("X")
    assert bracket(H, X) == 2 * X
    assert bracket(H, Y) == -2 * Y
    assert bracket(X, Y) == Poly.monomial(1, n) * H


def test_labels():
    assert [label(n) for n in range(4)] == ["constant", "contraction", "deformation", "g(3)"]


def test_localized_catalog():
    assert make_g_localized(2).base is Base.PUNCTURED


def test_l_embedding():
    r = make_l(2)
    g0 = make_g(0)
    assert r.embedding[0] == Poly.monomial(1, 2) * g0.named("Y")
    Y, H, X = r.embedding
    assert bracket(X, Y) == Poly.monomial(1, 2) * H
    assert make_l(0).embedding == (g0.named("Y"), g0.H, g0.named("X"))


def test_s_embedding():
    r = make_s(1)
    Y, H, X = r.embedding
    assert bracket(X, Y) == Poly.monomial(1, 2) * H
    assert make_s(0).induced() == make_g(0)


@pytest.mark.parametrize("n", range(8))
def test_induced_tables(n):
    assert make_l(n).induced() == make_g(n)
    assert make_s(n).induced() == make_g(2 * n)


def test_realization_embed_is_a_lie_homomorphism(rng):
    for r in (make_l(3), make_s(2)):
        for _ in range(10):
            u = r.family.element([random_poly(rng) for _ in range(3)])
            v = r.family.element([random_poly(rng) for _ in range(3)])
            assert r.embed(bracket(u, v)) == bracket(r.embed(u), r.embed(v))


def test_membership_examples():
    g0 = make_g(0)
    F = g0.named("X") + Poly.monomial(1, 3) * g0.named("Y")
    assert member_l(F, 3)
    assert not member_l(g0.named("Y"), 1)
    for v in make_s(3).embedding:
        assert member_s(v, 3)
    assert not member_s(Poly.x() * g0.named("X"), 2)


def test_membership_outside_g0_raises():
    with pytest.raises(FamilyMismatch):
        member_l(make_g(1).H, 1)


def _random_member(rng, n, kind):
    g0 = make_g(0)
    y = random_poly(rng, 5) * Poly.monomial(1, n)
    h = random_poly(rng, 5)
    x = random_poly(rng, 5) * (Poly.monomial(1, n) if kind == "s" else Poly.const(1))
    return g0.element([y, h, x])


@pytest.mark.parametrize("n", range(5))
def test_membership_sets_are_subalgebras_and_submodules(rng, n):
    for _ in range(20):
        u, v = _random_member(rng, n, "l"), _random_member(rng, n, "l")
        assert member_l(u, n) and member_l(bracket(u, v), n) and member_l(Poly.x() * u, n)
        u, v = _random_member(rng, n, "s"), _random_member(rng, n, "s")
        assert member_s(u, n) and member_s(bracket(u, v), n) and member_s(Poly.x() * u, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_g_n_generic_fibers_are_simple(n):
    for t in (1, -1, 2, 3):
        assert fiber_invariants(fiber_at(make_g(n), t)).killing_rank == 3
