"""Exact scalars and the base rings Q(i)[x] and Q(i)[x, 1/x].

``GaussianRational`` stores ``(a + b i) / d`` as three integers with ``d > 0``
and ``gcd(a, b, d) == 1``, so structural equality is value equality.
``Poly`` and ``LaurentPoly`` are immutable dense coefficient tuples.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Union

from .errors import DivisionByZero, ParseError

__all__ = [
    "GaussianRational",
    "Poly",
    "LaurentPoly",
    "as_monomial",
    "divisible_by_power",
    "substitute_inverse",
    "parse_scalar",
    "parse_poly_expr",
    "I",
    "ZERO",
    "ONE",
]

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction = 0):
        if isinstance(re, str):
            g = parse_scalar(re)
            self._a, self._b, self._d = g._a, g._b, g._d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        g = gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> GaussianRational:
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a, b, d = a // g, b // g, d // g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def coerce(cls, value: Number) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Fraction):
            return cls._raw(value.numerator, 0, value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self) -> bool:
        return not (self._a == 0 and self._b == 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __add__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __sub__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> GaussianRational:
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, self._d * o._d)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inv(self) -> GaussianRational:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        a, b, d = self._a, self._b, self._d
        norm = a * a + b * b
        return GaussianRational._raw(a * d, -b * d, norm)

    def __truediv__(self, other: Number) -> GaussianRational:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Number) -> GaussianRational:
        return GaussianRational.coerce(other) * self.inv()

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> GaussianRational:
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __str__(self) -> str:
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        im_txt = f"{abs(im)} i"
        if re == 0:
            return ("-" if im < 0 else "") + im_txt
        return f"{re}{'-' if im < 0 else '+'}{im_txt}"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)

_NUM = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>[+-]?\s*{_NUM})\s*)?"
    rf"(?:(?P<isign>[+-]?)\s*(?P<im>{_NUM})?\s*i)?\s*$"
)


def _frac(txt: str) -> Fraction:
    txt = txt.replace(" ", "")
    try:
        return _frac_digits(txt)
    except ValueError:
        raise ParseError(f"number {txt[:40]!r} is too long") from None


def _frac_digits(txt: str) -> Fraction:
    if "/" in txt:
        p, q = txt.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {txt!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(txt))


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"a/b"``, ``"a/b+c/d i"``, ``"c/d i"`` (signs optional, ``i`` alone allowed)."""
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("re") is None and "i" not in text):
        raise ParseError(f"malformed scalar {text!r}")
    has_imag = text.rstrip().endswith("i")
    if m.group("re") is not None and has_imag and not m.group("isign"):
        # "3 i" was captured as real part 3 followed by a bare i
        if m.group("im") is None:
            return GaussianRational(0, _frac(m.group("re")))
        raise ParseError(f"malformed scalar {text!r}")
    re_part = _frac(m.group("re")) if m.group("re") is not None else Fraction(0)
    im_part = Fraction(0)
    if has_imag:
        im_part = _frac(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)


def _trim(coeffs: Iterable[GaussianRational]) -> tuple[GaussianRational, ...]:
    c = list(coeffs)
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


class Poly:
    """Dense univariate polynomial over Q(i); ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim(GaussianRational.coerce(c) for c in coeffs)

    @classmethod
    def _from_trimmed(cls, coeffs: tuple[GaussianRational, ...]) -> Poly:
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c: Number) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Number, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative exponent in Poly.monomial")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls.monomial(1, 1)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> GaussianRational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def terms(self) -> Iterator[tuple[int, GaussianRational]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield i, c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return Poly.const(other)
        return None

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._from_trimmed(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._from_trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._from_trimmed(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly._from_trimmed(_trim(out))

    __rmul__ = __mul__

    def scale(self, c: Number) -> Poly:
        c = GaussianRational.coerce(c)
        if not c:
            return Poly._from_trimmed(())
        return Poly._from_trimmed(tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by ``x**k`` (``k >= 0``)."""
        if not self.coeffs or k == 0:
            return self
        return Poly._from_trimmed((ZERO,) * k + self.coeffs)

    def derivative(self, order: int = 1) -> Poly:
        p = self
        for _ in range(order):
            p = Poly._from_trimmed(_trim(c * i for i, c in enumerate(p.coeffs) if i > 0))
        return p

    def eval_at(self, t: Number) -> GaussianRational:
        t = GaussianRational.coerce(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    __call__ = eval_at

    def compose(self, mu: Poly) -> Poly:
        """Return ``self(mu(x))``."""
        acc = Poly._from_trimmed(())
        for c in reversed(self.coeffs):
            acc = acc * mu + c
        return acc

    def divmod(self, g: Poly) -> tuple[Poly, Poly]:
        if g.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        lead_inv = g.coeffs[-1].inv()
        quot = [ZERO] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * lead_inv
            quot[i - dg] = q
            for j, gc in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - q * gc
        return Poly(quot), Poly(rem[:dg] if dg > 0 else [])

    def as_monomial(self) -> tuple[GaussianRational, int] | None:
        return as_monomial(self)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.coeffs, 0)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _scalar_coef_text(c: GaussianRational) -> str:
    s = str(c)
    return f"({s})" if c.im != 0 and c.re != 0 else s


def format_poly(p: Poly | LaurentPoly, var: str = "x") -> str:
    terms = list(p.terms())
    if not terms:
        return "0"
    parts = []
    for e, c in reversed(terms):
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            txt = _scalar_coef_text(c)
        elif c == 1:
            txt = mono
        elif c == -1:
            txt = "-" + mono
        else:
            txt = f"{_scalar_coef_text(c)}*{mono}"
        parts.append(txt)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class LaurentPoly:
    """Laurent polynomial ``sum(coeffs[i] * x**(offset + i))`` with both ends nonzero."""

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable[Number] = (), offset: int = 0):
        c = [GaussianRational.coerce(a) for a in coeffs]
        lo = 0
        while lo < len(c) and c[lo].is_zero():
            lo += 1
        c = c[lo:]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)
        self.offset = offset + lo if c else 0

    @classmethod
    def const(cls, c: Number) -> LaurentPoly:
        return cls((c,), 0)

    @classmethod
    def monomial(cls, c: Number, k: int) -> LaurentPoly:
        return cls((c,), k)

    @classmethod
    def from_poly(cls, p: Poly) -> LaurentPoly:
        return cls(p.coeffs, 0)

    @classmethod
    def from_terms(cls, terms: dict[int, GaussianRational]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, ZERO) for e in range(lo, hi + 1)], lo)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def min_exp(self) -> int | None:
        return self.offset if self.coeffs else None

    @property
    def max_exp(self) -> int | None:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, e: int) -> GaussianRational:
        i = e - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def terms(self) -> Iterator[tuple[int, GaussianRational]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.offset == other.offset and self.coeffs == other.coeffs
        if isinstance(other, Poly):
            return self == LaurentPoly.from_poly(other)
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Laurent", self.offset, self.coeffs))

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Poly):
            return LaurentPoly.from_poly(other)
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.offset, o.offset)
        hi = max(self.max_exp, o.max_exp)
        out = [ZERO] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] = c
        for i, c in enumerate(o.coeffs):
            j = o.offset - lo + i
            out[j] = out[j] + c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coeffs], self.offset)

    def __sub__(self, other) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            c = GaussianRational.coerce(other)
            return LaurentPoly([c * a for a in self.coeffs], self.offset)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return LaurentPoly()
        prod = Poly._from_trimmed(self.coeffs) * Poly._from_trimmed(o.coeffs)
        return LaurentPoly(prod.coeffs, self.offset + o.offset)

    __rmul__ = __mul__

    def scale(self, c: Number) -> LaurentPoly:
        return self * GaussianRational.coerce(c)

    def shift(self, k: int) -> LaurentPoly:
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.offset + k)

    def eval_at(self, t: Number) -> GaussianRational:
        t = GaussianRational.coerce(t)
        if not self.coeffs:
            return ZERO
        if t.is_zero() and self.offset < 0:
            raise DivisionByZero("Laurent polynomial with negative powers evaluated at 0")
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc * (t ** self.offset) if self.offset else acc

    __call__ = eval_at

    def substitute_inverse(self) -> LaurentPoly:
        return substitute_inverse(self)

    def as_monomial(self) -> tuple[GaussianRational, int] | None:
        if len(self.coeffs) == 1:
            return self.coeffs[0], self.offset
        return None

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> LaurentPoly:
        if len(self.coeffs) != 1:
            raise DivisionByZero(f"{self} is not a unit of Q(i)[x, 1/x]")
        return LaurentPoly((self.coeffs[0].inv(),), -self.offset)

    def to_poly(self) -> Poly | None:
        """The same element as a ``Poly``, or ``None`` if it has negative powers."""
        if not self.coeffs:
            return Poly()
        if self.offset < 0:
            return None
        return Poly._from_trimmed((ZERO,) * self.offset + self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def as_monomial(f: Poly | LaurentPoly) -> tuple[GaussianRational, int] | None:
    """Return ``(c, k)`` when ``f == c * x**k`` with ``c != 0``, else ``None``."""
    if isinstance(f, LaurentPoly):
        return f.as_monomial()
    found = None
    for i, c in enumerate(f.coeffs):
        if c:
            if found is not None:
                return None
            found = (c, i)
    return found


def divisible_by_power(f: Poly, n: int) -> bool:
    """True iff ``x**n`` divides ``f``; the zero polynomial is divisible by everything."""
    if n < 0:
        raise ValueError("n must be a natural number")
    return all(not c for c in f.coeffs[:n])


def substitute_inverse(f: LaurentPoly | Poly) -> LaurentPoly:
    """The substitution ``x -> 1/x``."""
    if isinstance(f, Poly):
        f = LaurentPoly.from_poly(f)
    if not f.coeffs:
        return f
    return LaurentPoly(tuple(reversed(f.coeffs)), -f.max_exp)


_TERM_RE = re.compile(
    r"^(?P<coef>\([^()]*\)|[0-9/]+(?:\s*i)?|i)?\s*\*?\s*(?:(?P<x>x)(?:\s*\^\s*(?P<exp>\d+))?)?$"
)


def parse_poly_expr(text: str) -> Poly:
    """Parse a human-written polynomial such as ``"x^3"``, ``"2x^2 - 1/2"`` or ``"(1+i)*x"``."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial expression")
    s = text.replace(" ", "")
    terms: list[str] = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0 and cur and not cur.endswith(("^", "*")):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    terms.append(cur)
    result = Poly()
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        m = _TERM_RE.match(term)
        if not term or m is None or (m.group("coef") is None and m.group("x") is None):
            raise ParseError(f"malformed polynomial term {term!r} in {text!r}")
        coef_txt = m.group("coef")
        if coef_txt is None:
            coef = ONE
        else:
            if coef_txt.startswith("("):
                coef_txt = coef_txt[1:-1]
            coef = parse_scalar(coef_txt)
        exp = 0
        if m.group("x"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        result = result + Poly.monomial(coef * sign, exp)
    return result
