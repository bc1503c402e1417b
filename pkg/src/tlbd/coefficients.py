"""Exact coefficient rings in one variable ``q``.

Three value types live here:

* :class:`LaurentPolynomial`, integer Laurent polynomials.
* :class:`RationalFunction`, elements of Q(q) kept in a canonical form.
* :class:`TruncatedLaurentSeries`, elements of Z((q)) (or Q((q))) known
  below a precision bound, carrying the q-adic valuation.

Polynomial multiplication and gcds are delegated to FLINT through
``python-flint``; everything on top (normal forms, truncation bookkeeping,
series inversion) is done here.

>>> quantum_integer(3)
LaurentPolynomial('q^2 + 1 + q^-2')
>>> expand_to_series(RationalFunction(1, quantum_integer(2)), 9)
TruncatedLaurentSeries('q - q^3 + q^5 - q^7 + O(q^9)')
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from flint import fmpq, fmpq_poly, fmpz_poly

from .errors import InvalidArgument, UnsupportedRing

LAURENT = "laurent"
RATFUNC = "ratfunc"
SERIES = "series"
RINGS = (LAURENT, RATFUNC, SERIES)

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1

_ZERO_POLY = fmpz_poly([])


def _json_int(v: int):
    v = int(v)
    if _INT64_MIN <= v <= _INT64_MAX:
        return v
    return str(v)


def _json_rational(v) -> object:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return _json_int(v)


def _monomial_text(coef, exp: int) -> str:
    """Render one term; ``coef`` is assumed nonzero."""
    if exp == 0:
        return str(coef)
    var = "q" if exp == 1 else f"q^{exp}"
    if coef == 1:
        return var
    if coef == -1:
        return "-" + var
    if isinstance(coef, Fraction):
        return f"({coef}){var}"
    return f"{coef}{var}"


def _join_terms(pieces: list[str]) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# Laurent polynomials

class LaurentPolynomial:
    """An integer Laurent polynomial ``q^low * p(q)`` with ``p(0) != 0``.

    The zero polynomial is stored with ``low == 0`` and an empty ``p``, so two
    equal values always have identical fields.
    """

    __slots__ = ("_low", "_p", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable, int, None] = None):
        if terms is None:
            self._set(0, _ZERO_POLY)
            return
        if isinstance(terms, int):
            self._set(0, fmpz_poly([terms]) if terms else _ZERO_POLY)
            return
        if isinstance(terms, Mapping):
            items = list(terms.items())
        else:
            items = list(terms)
        items = [(int(e), int(c)) for e, c in items if c]
        if not items:
            self._set(0, _ZERO_POLY)
            return
        low = min(e for e, _ in items)
        dense = [0] * (max(e for e, _ in items) - low + 1)
        for e, c in items:
            dense[e - low] += c
        self._set(low, fmpz_poly(dense))
        self._strip()

    def _set(self, low: int, p: fmpz_poly) -> None:
        self._low = low
        self._p = p
        self._hash = None

    def _strip(self) -> None:
        p = self._p
        if p.is_zero():
            self._low = 0
            return
        if p[0] != 0:
            return
        k = 1
        while p[k] == 0:
            k += 1
        self._p = p.right_shift(k)
        self._low += k

    @classmethod
    def _make(cls, low: int, p: fmpz_poly) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._set(low, p)
        obj._strip()
        return obj

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPolynomial":
        return cls._make(exp, fmpz_poly([coef]) if coef else _ZERO_POLY)

    @classmethod
    def q(cls) -> "LaurentPolynomial":
        return cls.monomial(1)

    # structural access

    @property
    def terms(self) -> dict[int, int]:
        return {self._low + i: int(c) for i, c in enumerate(self._p.coeffs()) if c}

    @property
    def valuation(self) -> Union[int, float]:
        return math.inf if self._p.is_zero() else self._low

    @property
    def degree(self) -> Union[int, float]:
        return -math.inf if self._p.is_zero() else self._low + self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_one(self) -> bool:
        return self._low == 0 and self._p.is_one()

    def constant(self) -> int:
        return int(self._p[-self._low]) if not self._p.is_zero() and self._low <= 0 else 0

    def coefficient(self, exp: int) -> int:
        i = exp - self._low
        return int(self._p[i]) if i >= 0 and not self._p.is_zero() else 0

    def is_monomial(self) -> bool:
        return not self._p.is_zero() and self._p.degree() == 0

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * x**e
        return total

    def bar(self) -> "LaurentPolynomial":
        """The involution ``q -> q^-1``."""
        return LaurentPolynomial({-e: c for e, c in self.terms.items()})

    # arithmetic

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._p.is_zero():
            return other
        if other._p.is_zero():
            return self
        a, b = (self, other) if self._low <= other._low else (other, self)
        shift = b._low - a._low
        p = a._p + (b._p.left_shift(shift) if shift else b._p)
        return LaurentPolynomial._make(a._low, p)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._make(self._low, -self._p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._p.is_zero() or other._p.is_zero():
            return LaurentPolynomial()
        obj = LaurentPolynomial.__new__(LaurentPolynomial)
        obj._set(self._low + other._low, self._p * other._p)
        return obj

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(self._p[0]) != 1:
                raise InvalidArgument("only unit monomials have Laurent inverses")
            return LaurentPolynomial.monomial(-self._low * -k, int(self._p[0]) ** (-k))
        obj = LaurentPolynomial.__new__(LaurentPolynomial)
        if k == 0:
            obj._set(0, fmpz_poly([1]))
            return obj
        obj._set(self._low * k, self._p**k)
        return obj

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        if isinstance(other, LaurentPolynomial):
            return self._low == other._low and self._p == other._p
        if isinstance(other, (RationalFunction, Fraction)):
            return RationalFunction(self) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_zero():
                self._hash = hash(0)
            elif self.is_monomial() and self._low == 0:
                self._hash = hash(int(self._p[0]))
            else:
                self._hash = hash((self._low, tuple(int(c) for c in self._p.coeffs())))
        return self._hash

    def __bool__(self):
        return not self._p.is_zero()

    # rendering

    def __str__(self) -> str:
        terms = self.terms
        if not terms:
            return "0"
        return _join_terms([_monomial_text(terms[e], e) for e in sorted(terms, reverse=True)])

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{self}')"

    def to_json(self) -> dict:
        return {"kind": LAURENT, "terms": [[_json_int(e), _json_int(c)] for e, c in sorted(self.terms.items())]}


Q = LaurentPolynomial.q()
ONE = LaurentPolynomial(1)
DELTA = Q + Q**-1


def quantum_integer(n: int) -> LaurentPolynomial:
    """Balanced quantum integer ``[n] = (q^n - q^-n)/(q - q^-1)``.

    >>> str(quantum_integer(4))
    'q^3 + q + q^-1 + q^-3'
    >>> quantum_integer(-2) == -quantum_integer(2)
    True
    """
    if n == 0:
        return LaurentPolynomial()
    sign = 1 if n > 0 else -1
    m = abs(n)
    return LaurentPolynomial({m - 1 - 2 * k: sign for k in range(m)})


def q_power_sum(n: int) -> LaurentPolynomial:
    """``q^n + q^-n``; the value 2 at ``n == 0``."""
    return LaurentPolynomial.monomial(n) + LaurentPolynomial.monomial(-n)


# Rational functions

def _exact_div(a: fmpz_poly, b: fmpz_poly) -> fmpz_poly:
    quo, rem = divmod(a, b)
    if not rem.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return quo


class RationalFunction:
    """An element of Q(q) in canonical form ``num / den``.

    ``den`` is an honest polynomial with nonzero constant term and positive
    leading coefficient; ``num`` is a Laurent polynomial; the two share no
    common factor in Z[q] (contents included).  Equal values therefore have
    equal fields.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, int):
            num = LaurentPolynomial(num)
        if isinstance(den, int):
            den = LaurentPolynomial(den)
        if not (isinstance(num, LaurentPolynomial) and isinstance(den, LaurentPolynomial)):
            a, b = _as_rf(num), _as_rf(den)
            if a is NotImplemented or b is NotImplemented:
                raise InvalidArgument(f"cannot build a rational function from {num!r}, {den!r}")
            value = a / b
            self.num, self.den, self._hash = value.num, value.den, None
            return
        self.num, self.den = _normalize_pair(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPolynomial:
        if not self.den.is_one():
            raise InvalidArgument(f"{self} is not a Laurent polynomial")
        return self.num

    def evaluate(self, x) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num + other.num, self.den)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction()
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num * other.num, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise InvalidArgument("division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / self**-k
        return RationalFunction(self.num**k, self.den**k)

    def __eq__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den.is_one() else hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if self.den.is_monomial():
            return f"{num}/{self.den}"
        return f"{num}/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"

    def to_json(self) -> dict:
        return {"kind": RATFUNC, "num": self.num.to_json(), "den": self.den.to_json()}


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPolynomial):
        return RationalFunction._raw(x, ONE)
    if isinstance(x, int):
        return RationalFunction._raw(LaurentPolynomial(x), ONE)
    if isinstance(x, Fraction):
        return RationalFunction(LaurentPolynomial(x.numerator), LaurentPolynomial(x.denominator))
    return NotImplemented


def _normalize_pair(num: LaurentPolynomial, den: LaurentPolynomial):
    if den.is_zero():
        raise InvalidArgument("zero denominator")
    if num.is_zero():
        return LaurentPolynomial(), ONE
    shift = num._low - den._low
    n, d = num._p, den._p
    g = n.gcd(d)
    if not g.is_one():
        n = _exact_div(n, g)
        d = _exact_div(d, g)
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return LaurentPolynomial._make(shift, n), LaurentPolynomial._make(0, d)


def polynomial_lcm(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Least common multiple of two denominators (honest polynomials)."""
    g = a._p.gcd(b._p)
    p = a._p * _exact_div(b._p, g)
    if p.leading_coefficient() < 0:
        p = -p
    return LaurentPolynomial._make(0, p)


def exact_quotient(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """``a / b`` when ``b`` divides ``a`` in the Laurent ring."""
    return LaurentPolynomial._make(a._low - b._low, _exact_div(a._p, b._p))


def normalize(r) -> RationalFunction:
    """Return the canonical representative of ``r``.

    Accepts a :class:`RationalFunction` or a ``(numerator, denominator)``
    pair; a zero denominator raises :class:`InvalidArgument`.
    """
    if isinstance(r, tuple):
        return RationalFunction(*r)
    return RationalFunction(r.num, r.den)


def as_ratfunc(x) -> RationalFunction:
    value = _as_rf(x)
    if value is NotImplemented:
        raise InvalidArgument(f"cannot view {x!r} as a rational function")
    return value


# Truncated Laurent series

@dataclass(frozen=True)
class AtLeast:
    """A valuation only known to be at least ``bound``."""

    bound: int

    def certifies(self, target: int) -> bool:
        return self.bound >= target

    def __str__(self) -> str:
        return f">={self.bound}"


def valuation_at_least(v, target: int) -> bool:
    """True when a valuation (int, ``inf`` or :class:`AtLeast`) is ``>= target``."""
    if isinstance(v, AtLeast):
        return v.bound >= target
    return v >= target


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncatedLaurentSeries:
    """``sum coeffs[i] q^(lowest+i) + O(q^precision)``.

    ``precision is None`` marks an exactly known (finite) series; the exact
    zero has ``lowest == 0`` and no coefficients.  A series whose known
    coefficients all vanish but whose precision is finite is the sentinel
    ``O(q^P)``; it has ``lowest == P``.
    """

    __slots__ = ("lowest", "coeffs", "precision", "_hash")

    def __init__(self, lowest: int = 0, coeffs: Iterable = (), precision: Union[int, None] = None):
        coeffs = [c if isinstance(c, Fraction) and c.denominator != 1 else int(c) for c in coeffs]
        if precision is not None:
            keep = max(0, precision - lowest)
            coeffs = coeffs[:keep]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        coeffs = tuple(coeffs[start:end])
        if coeffs:
            lowest += start
        else:
            lowest = 0 if precision is None else precision
        self.lowest = lowest
        self.coeffs = coeffs
        self.precision = precision
        self._hash = None

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial, precision: Union[int, None] = None) -> "TruncatedLaurentSeries":
        terms = p.terms
        if not terms:
            return cls(0, (), precision)
        lo = min(terms)
        return cls(lo, [terms.get(lo + i, 0) for i in range(max(terms) - lo + 1)], precision)

    @classmethod
    def from_rational(cls, value, precision: int) -> "TruncatedLaurentSeries":
        if isinstance(value, TruncatedLaurentSeries):
            return value.truncate(precision)
        if isinstance(value, LaurentPolynomial):
            return cls.from_laurent(value, precision)
        if isinstance(value, (int, Fraction)):
            return cls(0, [value], precision)
        return expand_to_series(as_ratfunc(value), precision)

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.precision is None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self):
        if self.coeffs:
            return self.lowest
        if self.precision is None:
            return math.inf
        return AtLeast(self.precision)

    def _val_for_precision(self):
        # the ``v`` entering min(P1 + v2, P2 + v1); O(q^P) behaves like q^P
        return self.lowest

    def coefficient(self, exp: int):
        i = exp - self.lowest
        if self.precision is not None and exp >= self.precision:
            raise InvalidArgument(f"coefficient of q^{exp} lies beyond precision {self.precision}")
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict[int, object]:
        return {self.lowest + i: c for i, c in enumerate(self.coeffs) if c}

    def truncate(self, precision: int) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(self.lowest, self.coeffs, _min_prec(self.precision, precision))

    def with_precision(self, precision: Union[int, None]) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(self.lowest, self.coeffs, precision)

    def _coerce(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedLaurentSeries(0, [other], None)
        if isinstance(other, LaurentPolynomial):
            return TruncatedLaurentSeries.from_laurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = _min_prec(self.precision, other.precision)
        if not self.coeffs and not other.coeffs:
            return TruncatedLaurentSeries(0, (), prec)
        lo = min(x.lowest for x in (self, other) if x.coeffs)
        hi = max(x.lowest + len(x.coeffs) for x in (self, other) if x.coeffs)
        out = [0] * (hi - lo)
        for x in (self, other):
            off = x.lowest - lo
            for i, c in enumerate(x.coeffs):
                out[off + i] += c
        return TruncatedLaurentSeries(lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries(self.lowest, [-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return TruncatedLaurentSeries()
        v1, v2 = self._val_for_precision(), other._val_for_precision()
        candidates = []
        if self.precision is not None:
            candidates.append(self.precision + v2)
        if other.precision is not None:
            candidates.append(other.precision + v1)
        prec = min(candidates) if candidates else None
        if not self.coeffs or not other.coeffs:
            return TruncatedLaurentSeries(0, (), prec)
        lo = v1 + v2
        length = len(self.coeffs) + len(other.coeffs) - 1
        if prec is not None:
            length = min(length, prec - lo)
        if length <= 0:
            return TruncatedLaurentSeries(0, (), prec)
        out = _convolve(self.coeffs, other.coeffs, length)
        return TruncatedLaurentSeries(lo, out, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TruncatedLaurentSeries(0, [1], None)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.lowest, self.coeffs, self.precision) == (other.lowest, other.coeffs, other.precision)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lowest, self.coeffs, self.precision))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self) -> str:
        pieces = [_monomial_text(c, self.lowest + i) for i, c in enumerate(self.coeffs) if c]
        if self.precision is not None:
            pieces.append(f"O(q^{self.precision})")
        if not pieces:
            return "0"
        return _join_terms(pieces)

    def __repr__(self) -> str:
        return f"TruncatedLaurentSeries('{self}')"

    def to_json(self) -> dict:
        return {
            "kind": SERIES,
            "lowest": _json_int(self.lowest),
            "coeffs": [_json_rational(c) for c in self.coeffs],
            "precision": None if self.precision is None else _json_int(self.precision),
        }


def _fmpq(c) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _convolve(a: tuple, b: tuple, length: int) -> list:
    if all(isinstance(c, int) for c in a) and all(isinstance(c, int) for c in b):
        prod = fmpz_poly(list(a)).mul_low(fmpz_poly(list(b)), length)
        out = [int(c) for c in prod.coeffs()]
        return out + [0] * (length - len(out))
    pa = fmpq_poly([_fmpq(c) for c in a])
    pb = fmpq_poly([_fmpq(c) for c in b])
    prod = pa * pb
    out = []
    for i in range(length):
        c = prod[i]
        out.append(Fraction(int(c.p), int(c.q)))
    return out


def _inverse_series(d: list, length: int) -> list:
    """First ``length`` coefficients of ``1/d`` for ``d[0] != 0``."""
    d0 = d[0]
    exact_int = abs(d0) == 1
    inv = []
    for k in range(length):
        acc = 1 if k == 0 else 0
        for j in range(1, min(k, len(d) - 1) + 1):
            acc -= d[j] * inv[k - j]
        inv.append(acc * d0 if exact_int else Fraction(acc, d0))
    return inv


def expand_to_series(r, precision: int) -> TruncatedLaurentSeries:
    """Expand ``r`` at ``q = 0``, keeping exponents below ``precision``.

    Integer arithmetic is used when the lowest coefficient of the denominator
    is a unit; otherwise the coefficients become fractions.

    >>> expand_to_series(RationalFunction(quantum_integer(2), q_power_sum(2)), 9)
    TruncatedLaurentSeries('q + q^3 - q^5 - q^7 + O(q^9)')
    """
    if isinstance(r, tuple):
        r = normalize(r)
    r = as_ratfunc(r)
    if r.num.is_zero():
        return TruncatedLaurentSeries(0, (), precision)
    low = r.num._low
    length = precision - low
    if length <= 0:
        return TruncatedLaurentSeries(0, (), precision)
    num = [int(c) for c in r.num._p.coeffs()]
    den = [int(c) for c in r.den._p.coeffs()]
    inv = _inverse_series(den, length)
    out = [0] * length
    for i, a in enumerate(num[:length]):
        if a:
            for j in range(length - i):
                out[i + j] += a * inv[j]
    return TruncatedLaurentSeries(low, out, precision)


def valuation_and_norm(s: TruncatedLaurentSeries):
    """Return ``(valuation, 2^-valuation)`` with exact rational norms.

    The exact zero gives ``(inf, 0)``.  When every known coefficient vanishes
    but the precision is finite, the valuation is reported as
    :class:`AtLeast` and the norm as the corresponding upper bound.

    >>> valuation_and_norm(TruncatedLaurentSeries(-2, [1, 0, 5]))
    (-2, Fraction(4, 1))
    """
    v = s.valuation
    if v is math.inf:
        return math.inf, Fraction(0)
    if isinstance(v, AtLeast):
        return v, Fraction(1, 2**v.bound) if v.bound >= 0 else Fraction(2 ** (-v.bound))
    return v, Fraction(1, 2**v) if v >= 0 else Fraction(2 ** (-v))


# ring helpers used by the algebra layer

def coerce(value, ring: str, precision: Union[int, None] = None):
    """Convert an int, Fraction, Laurent polynomial or rational function."""
    if ring == LAURENT:
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return LaurentPolynomial(value)
        if isinstance(value, RationalFunction) and value.is_laurent():
            return value.num
        raise UnsupportedRing(f"{value} is not an integer Laurent polynomial")
    if ring == RATFUNC:
        if isinstance(value, TruncatedLaurentSeries):
            raise UnsupportedRing("series coefficients cannot be converted back to rational functions")
        return as_ratfunc(value)
    if ring == SERIES:
        if isinstance(value, TruncatedLaurentSeries):
            return value if precision is None else value.truncate(precision)
        if isinstance(value, Fraction) and value.denominator != 1:
            raise UnsupportedRing("the integer series ring cannot hold fractions")
        if isinstance(value, RationalFunction):
            if precision is None:
                raise UnsupportedRing("expanding a rational function needs a precision")
            s = expand_to_series(value, precision)
            if any(isinstance(c, Fraction) for c in s.coeffs):
                raise UnsupportedRing(f"{value} has non-integer series coefficients")
            return s
        if isinstance(value, int):
            return TruncatedLaurentSeries(0, [value], precision)
        return TruncatedLaurentSeries.from_laurent(value, precision)
    raise InvalidArgument(f"unknown ring {ring!r}")


def ring_of(value) -> str:
    if isinstance(value, TruncatedLaurentSeries):
        return SERIES
    if isinstance(value, RationalFunction):
        return RATFUNC
    return LAURENT


def from_json(obj: dict):
    """Inverse of the ``to_json`` methods above."""
    kind = obj.get("kind")
    if kind == LAURENT:
        return LaurentPolynomial({int(e): int(c) for e, c in obj["terms"]})
    if kind == RATFUNC:
        return RationalFunction(from_json(obj["num"]), from_json(obj["den"]))
    if kind == SERIES:
        coeffs = [Fraction(c) if isinstance(c, str) and "/" in c else int(c) for c in obj["coeffs"]]
        prec = obj["precision"]
        return TruncatedLaurentSeries(int(obj["lowest"]), coeffs, None if prec is None else int(prec))
    raise InvalidArgument(f"unknown coefficient kind {kind!r}")
