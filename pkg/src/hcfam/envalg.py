"""The enveloping algebra U(g(n)) over C[x] in PBW normal form.

Elements are sums of ordered monomials Y^a H^b X^c with polynomial
coefficients; x is central.  Products use closed-form commutation rules,
and ``normal_order_word`` provides a naive word-rewriting reference.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from math import comb
from typing import Iterable, Mapping

from .arith import Poly
from .catalog import make_g
from .errors import FamilyMismatch
from .linalg import nullspace

Monomial = tuple[int, int, int]
_ORDER = {"Y": 0, "H": 1, "X": 2}


class PBWElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Poly] | None = None):
        self.n = n
        clean: dict[Monomial, Poly] = {}
        for mono, coef in (terms or {}).items():
            coef = coef if isinstance(coef, Poly) else Poly.const(coef)
            if coef:
                clean[tuple(mono)] = coef
        self.terms = clean

    @property
    def family(self):
        return make_g(self.n)

    @classmethod
    def scalar(cls, n: int, p) -> PBWElement:
        return cls(n, {(0, 0, 0): p if isinstance(p, Poly) else Poly.const(p)})

    def _check(self, other: PBWElement) -> None:
        if not isinstance(other, PBWElement):
            raise TypeError("expected a PBWElement")
        if other.n != self.n:
            raise FamilyMismatch(f"U(g({self.n})) and U(g({other.n})) differ")

    def _lift(self, other) -> PBWElement:
        if isinstance(other, PBWElement):
            self._check(other)
            return other
        return PBWElement.scalar(self.n, other)

    def __add__(self, other) -> PBWElement:
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return PBWElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> PBWElement:
        return PBWElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> PBWElement:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> PBWElement:
        return self._lift(other) - self

    def __mul__(self, other) -> PBWElement:
        if isinstance(other, PBWElement):
            return pbw_mul(self, other)
        p = other if isinstance(other, Poly) else Poly.const(other)
        return PBWElement(self.n, {m: c * p for m, c in self.terms.items()})

    def __rmul__(self, other) -> PBWElement:
        # scalars are central
        return self * other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PBWElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Poly)):
            return self == PBWElement.scalar(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        return max((sum(m) for m in self.terms), default=None)

    def symbol(self) -> dict[Monomial, Poly]:
        """Top PBW-degree part, read in the commutative associated graded algebra."""
        d = self.degree()
        return {m: c for m, c in self.terms.items() if sum(m) == d}

    def augmentation(self) -> Poly:
        return self.terms.get((0, 0, 0), Poly())

    def to_json(self) -> dict:
        from .formats import emit_poly
        return {"n": self.n,
                "terms": [{"Y": a, "H": b, "X": c, "coeff": emit_poly(p)}
                          for (a, b, c), p in sorted(self.terms.items())]}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), p in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            word = "".join(f"{g}^{e}" if e > 1 else g for g, e in (("Y", a), ("H", b), ("X", c)) if e)
            parts.append(f"({p})" + (f"*{word}" if word else ""))
        return " + ".join(parts)

    __repr__ = __str__


def generator(n: int, name: str) -> PBWElement:
    mono = {"Y": (1, 0, 0), "H": (0, 1, 0), "X": (0, 0, 1)}[name]
    return PBWElement(n, {mono: Poly.const(1)})


def _accumulate(out: dict[Monomial, Poly], mono: Monomial, coef: Poly) -> None:
    if not coef:
        return
    cur = out.get(mono)
    s = coef if cur is None else cur + coef
    if s:
        out[mono] = s
    else:
        out.pop(mono, None)


def _times_gen(terms: dict[Monomial, Poly], g: str, t: Poly) -> dict[Monomial, Poly]:
    """Right-multiply a normal-ordered sum by one generator."""
    out: dict[Monomial, Poly] = {}
    for (a, b, c), p in terms.items():
        if g == "X":
            _accumulate(out, (a, b, c + 1), p)
        elif g == "H":
            # X^c H = (H - 2c) X^c
            _accumulate(out, (a, b + 1, c), p)
            _accumulate(out, (a, b, c), p * (-2 * c))
        else:
            # H^b Y = Y (H - 2)^b
            for j in range(b + 1):
                _accumulate(out, (a + 1, j, c), p * (comb(b, j) * (-2) ** (b - j)))
            if c:
                # X^c Y = Y X^c + x^n (c H - c(c-1)) X^(c-1)
                tp = p * t
                _accumulate(out, (a, b + 1, c - 1), tp * c)
                _accumulate(out, (a, b, c - 1), tp * (-c * (c - 1)))
    return out


def pbw_mul(u: PBWElement, v: PBWElement) -> PBWElement:
    u._check(v)
    t = Poly.monomial(1, u.n)
    out: dict[Monomial, Poly] = {}
    for (d, e, f), q in v.terms.items():
        cur = dict(u.terms)
        for g in "Y" * d + "H" * e + "X" * f:
            cur = _times_gen(cur, g, t)
        for m, p in cur.items():
            _accumulate(out, m, p * q)
    return PBWElement(u.n, out)


def commutator(u: PBWElement, v: PBWElement) -> PBWElement:
    return pbw_mul(u, v) - pbw_mul(v, u)


def casimir(n: int) -> PBWElement:
    """(x^n / 8) H^2 + (1/4)(XY + YX), normal-ordered."""
    Y, H, X = generator(n, "Y"), generator(n, "H"), generator(n, "X")
    t = Poly.monomial(1, n)
    return (H * H) * (t * Poly.const(Fraction(1, 8))) + (X * Y + Y * X) * Poly.const(Fraction(1, 4))


def normal_order_word(n: int, words: Mapping[str, Poly] | Iterable[str]) -> PBWElement:
    """Normal-order a combination of words in Y, H, X by adjacent-swap rewriting.

    Deliberately naive: it only knows the three defining commutators.
    """
    t = Poly.monomial(1, n)
    if not isinstance(words, Mapping):
        words = {w: Poly.const(1) for w in words}
    pending: dict[str, Poly] = {}
    for w, p in words.items():
        pending[w] = pending.get(w, Poly()) + (p if isinstance(p, Poly) else Poly.const(p))
    done: dict[Monomial, Poly] = {}
    while pending:
        w, p = pending.popitem()
        if not p:
            continue
        i = next((i for i in range(len(w) - 1) if _ORDER[w[i]] > _ORDER[w[i + 1]]), None)
        if i is None:
            _accumulate(done, (w.count("Y"), w.count("H"), w.count("X")), p)
            continue
        pre, pair, post = w[:i], w[i:i + 2], w[i + 2:]
        swaps = {
            "XY": [("YX", p), ("H", p * t)],
            "XH": [("HX", p), ("X", p * -2)],
            "HY": [("YH", p), ("Y", p * -2)],
        }[pair]
        for mid, coef in swaps:
            key = pre + mid + post
            pending[key] = pending.get(key, Poly()) + coef
    return PBWElement(n, done)


def monomials_up_to(d: int) -> list[Monomial]:
    return sorted((m for m in _cartesian(range(d + 1), repeat=3) if sum(m) <= d),
                  key=lambda m: (sum(m), m))


MAX_PROBE_PBW = 4
MAX_PROBE_COEFF = 8


def center_probe(n: int, pbw_degree: int, coeff_degree: int) -> list[PBWElement]:
    """Basis of central elements with PBW degree and coefficient degree bounded."""
    if not 0 <= pbw_degree <= MAX_PROBE_PBW or not 0 <= coeff_degree <= MAX_PROBE_COEFF:
        raise ValueError(f"probe limited to pbw_degree <= {MAX_PROBE_PBW}, "
                         f"coeff_degree <= {MAX_PROBE_COEFF}")
    monos = monomials_up_to(pbw_degree)
    gens = [generator(n, g) for g in "HXY"]
    width = coeff_degree + 1
    # column index: monomial slot * width + power of x
    eqs: dict[tuple, dict[int, object]] = {}
    for mi, mono in enumerate(monos):
        m_elem = PBWElement(n, {mono: Poly.const(1)})
        for zi, z in enumerate(gens):
            for out_mono, p in commutator(m_elem, z).terms.items():
                for e, coef in p.terms():
                    for a in range(width):
                        eqs.setdefault((zi, out_mono, e + a), {})[mi * width + a] = coef
    basis = nullspace(eqs.values(), len(monos) * width)
    out = []
    for vec in basis:
        terms: dict[Monomial, Poly] = {}
        for mi, mono in enumerate(monos):
            coeffs = vec[mi * width:(mi + 1) * width]
            if any(coeffs):
                terms[mono] = Poly(coeffs)
        out.append(PBWElement(n, terms))
    return out
