"""Exact computations with algebraic families of Harish-Chandra pairs extending (sl2, SO(2))."""

from .arith import GaussianRational, LaurentPoly, Poly, parse_scalar
from .catalog import make_g, make_g_localized, make_l, make_s, member_l, member_s
from .classify import canonical_uniqueness_witness, classify_extension, enumerate_classes
from .envalg import PBWElement, casimir, center_probe, commutator, pbw_mul
from .liefam import Base, FamilyElement, GradedFamily, bracket, fiber_at, fiber_invariants, new_family, so2_act
from .morphisms import PairMorphism, ZeroMorphism, apply, compose, hom_space, pullback, verify_morphism
from .projline import P1Extension, global_sections, make_p1, p1_isomorphic, splitting_type

__version__ = "0.1.0"
