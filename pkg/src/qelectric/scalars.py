"""Exact arithmetic in Q(q).

:class:`LaurentPoly` holds finitely supported maps ``exponent -> rational``;
:class:`Scalar` is a reduced fraction of two of them.  Almost every scalar
met in practice is a Laurent polynomial (usually a signed monomial), so
:class:`Scalar` short-circuits whenever the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


class ScalarDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element of Q(q)."""


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coeff(c) -> Coeff:
    if isinstance(c, (int, Fraction)):
        return _norm_coeff(c)
    if isinstance(c, Rational):
        return _norm_coeff(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm_coeff(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


class LaurentPoly:
    """Laurent polynomial in ``q`` with rational coefficients.

    Terms are stored as a tuple of ``(exponent, coefficient)`` pairs sorted by
    exponent with no zero coefficients, so equality and hashing are
    structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = ()):
        acc: dict[int, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            c = _as_coeff(c)
            if c:
                acc[int(e)] = acc.get(int(e), 0) + c
        self._terms = tuple(sorted((e, _norm_coeff(c)) for e, c in acc.items() if c))

    @classmethod
    def _raw(cls, terms: tuple) -> LaurentPoly:
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> LaurentPoly:
        coeff = _as_coeff(coeff)
        return cls._raw(((exp, coeff),) if coeff else ())

    @classmethod
    def constant(cls, c: Coeff) -> LaurentPoly:
        return cls.monomial(0, c)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Coeff], ...]:
        return self._terms

    def as_dict(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        return self._terms[0][0]

    def max_exp(self) -> int:
        return self._terms[-1][0]

    def leading_coeff(self) -> Coeff:
        return self._terms[-1][1]

    def coeff(self, exp: int) -> Coeff:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def at_one(self) -> Coeff:
        """Value at ``q = 1``."""
        return _norm_coeff(sum((c for _, c in self._terms), 0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._raw(tuple(sorted((e, _norm_coeff(c)) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly._raw(())
        if len(other._terms) == 1:
            f, d = other._terms[0]
            return LaurentPoly._raw(tuple((e + f, _norm_coeff(c * d)) for e, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, Coeff] = {}
        for e, c in self._terms:
            for f, d in other._terms:
                acc[e + f] = acc.get(e + f, 0) + c * d
        return LaurentPoly._raw(tuple(sorted((e, _norm_coeff(c)) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use Scalar for negative powers")
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> LaurentPoly:
        return LaurentPoly._raw(tuple(sorted((-e, c) for e, c in self._terms)))

    def scale(self, c: Coeff) -> LaurentPoly:
        c = _as_coeff(c)
        if not c:
            return LaurentPoly._raw(())
        return LaurentPoly._raw(tuple((e, _norm_coeff(x * c)) for e, x in self._terms))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else f"{c}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    # -- polynomial helpers (used by Scalar normalisation) ------------------

    def _divmod_poly(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        # both treated as ordinary polynomials (min exponents >= 0)
        rem = dict(self._terms)
        quo: dict[int, Coeff] = {}
        de, dc = other._terms[-1]
        while rem:
            e = max(rem)
            if e < de:
                break
            c = Fraction(rem[e]) / dc
            quo[e - de] = c
            for f, d in other._terms:
                v = rem.get(f + e - de, 0) - c * d
                if v:
                    rem[f + e - de] = v
                else:
                    rem.pop(f + e - de, None)
        return LaurentPoly(quo), LaurentPoly(rem)

    def _monic(self) -> LaurentPoly:
        return self.scale(Fraction(1) / Fraction(self.leading_coeff()))


def _lift_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return NotImplemented


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    while not b.is_zero():
        a, b = b, a._divmod_poly(b)[1]
    return a._monic() if not a.is_zero() else a


ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly.constant(1)


class Scalar:
    """Element of Q(q) in canonical form ``num / den``.

    Canonical form: ``den`` is a polynomial with nonzero constant term and
    leading coefficient 1, and ``gcd(num, den) = 1`` in Q[q].  Two scalars are
    equal iff their stored representations coincide.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        num = _lift_poly(num) if not isinstance(num, LaurentPoly) else num
        if num is NotImplemented:
            raise TypeError("numerator must be a LaurentPoly or rational")
        if den is None:
            self.num, self.den = num, ONE_POLY
            return
        den = _lift_poly(den) if not isinstance(den, LaurentPoly) else den
        if den.is_zero():
            raise ScalarDivisionError("zero denominator")
        self.num, self.den = _normalise(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly = ONE_POLY) -> Scalar:
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def q_power(cls, k: int, coeff: Coeff = 1) -> Scalar:
        return cls._raw(LaurentPoly.monomial(k, coeff))

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def monomial(self) -> tuple[Coeff, int] | None:
        """``(c, k)`` if the scalar equals ``c * q**k``, else ``None``."""
        if self.den.is_one() and self.num.is_monomial():
            e, c = self.num.terms[0]
            return c, e
        return None

    def at_one(self) -> Fraction:
        d = self.den.at_one()
        if d == 0:
            raise ScalarDivisionError("denominator vanishes at q=1")
        return Fraction(self.num.at_one()) / Fraction(d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _lift_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _lift_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if self.num.is_zero():
            raise ScalarDivisionError("inverse of zero in Q(q)")
        if self.den.is_one() and self.num.is_monomial():
            e, c = self.num.terms[0]
            return Scalar._raw(LaurentPoly.monomial(-e, Fraction(1) / Fraction(c)))
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _lift_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _lift_scalar(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return Scalar(self.num ** n, self.den ** n) if not self.den.is_one() else Scalar._raw(self.num ** n)

    def bar(self) -> Scalar:
        """Substitute ``q -> q^-1``."""
        if self.den.is_one():
            return Scalar._raw(self.num.bar())
        return Scalar(self.num.bar(), self.den.bar())

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = _lift_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {"num": _poly_json(self.num), "den": _poly_json(self.den)}

    @classmethod
    def from_json(cls, data: Mapping) -> Scalar:
        num = LaurentPoly((t["exp"], Fraction(t["c"])) for t in data["num"])
        den = LaurentPoly((t["exp"], Fraction(t["c"])) for t in data["den"])
        return cls(num, den)


def _poly_json(p: LaurentPoly) -> list[dict]:
    out = []
    for e, c in p.terms:
        f = Fraction(c)
        out.append({"exp": e, "c": f"{f.numerator}/{f.denominator}"})
    return out


def _lift_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, LaurentPoly):
        return Scalar._raw(x)
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(LaurentPoly.constant(x))
    return NotImplemented


def _normalise(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    shift = -den.min_exp()
    num, den = num.shift(shift), den.shift(shift)
    if den.is_monomial():
        # den is now a nonzero constant
        return num.scale(Fraction(1) / Fraction(den.leading_coeff())), ONE_POLY
    k = num.min_exp()
    g = _poly_gcd(num.shift(-k), den)
    if g.max_exp() > 0:
        num = num.shift(-k)._divmod_poly(g)[0].shift(k)
        den = den._divmod_poly(g)[0]
    lc = Fraction(den.leading_coeff())
    return num.scale(1 / lc), den.scale(1 / lc)


def as_scalar(x) -> Scalar:
    s = _lift_scalar(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return s


ZERO = Scalar._raw(ZERO_POLY)
ONE = Scalar._raw(ONE_POLY)
q = Scalar.q_power(1)


def q_pow(k: int) -> Scalar:
    return Scalar.q_power(k)


def qint(m: int) -> Scalar:
    """Quantum integer ``[m] = q^(m-1) + q^(m-3) + ... + q^(1-m)``."""
    if m == 0:
        return ZERO
    sign = 1 if m > 0 else -1
    m = abs(m)
    return Scalar._raw(LaurentPoly((m - 1 - 2 * k, sign) for k in range(m)))


def bar(s) -> Scalar:
    return as_scalar(s).bar()
