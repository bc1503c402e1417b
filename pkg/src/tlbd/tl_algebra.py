"""Linear combinations of dotted diagrams and the algebra product.

Elements live in a hom space between ``bottom`` and ``top`` points; the
square case is TL(B_n) itself.  ``a * b`` stacks ``a`` on top of ``b``, so
it first applies ``b`` and then ``a``.  Every closed undotted loop is worth
``delta = q + q^-1`` and a closed dotted loop kills the term.

>>> u1 = generator("U", 3, 1)
>>> u2 = generator("U", 3, 2)
>>> u1 * u2 * u1 == u1
True
>>> (u1 * u1).coefficient(u1.support()[0])
LaurentPolynomial('q + q^-1')
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .coefficients import (
    DELTA,
    LAURENT,
    ONE,
    RATFUNC,
    RINGS,
    SERIES,
    LaurentPolynomial,
    RationalFunction,
    TruncatedLaurentSeries,
    as_ratfunc,
    coerce,
    exact_quotient,
    expand_to_series,
    from_json as coeff_from_json,
    polynomial_lcm,
    ring_of,
)
from .diagrams import DottedDiagram, compose, enumerate_basis, generator_diagram, identity_diagram
from .errors import InvalidArgument, ParseError, UnsupportedRing


def scalar_ring(value) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return RATFUNC
    if isinstance(value, (int, Fraction)):
        return LAURENT
    return ring_of(value)


def join_rings(a: str, b: str) -> str:
    """The smallest ring holding both; rational functions and series never mix."""
    if a == b:
        return a
    if LAURENT in (a, b):
        return b if a == LAURENT else a
    raise InvalidArgument(
        "cannot mix rational-function and series coefficients; convert with to_series(precision) first"
    )


def _is_zero(c) -> bool:
    if isinstance(c, TruncatedLaurentSeries):
        return c.is_exact_zero()
    return not c


class TLElement:
    """A finite combination of diagrams of one shape over one ring.

    ``terms`` maps diagrams to nonzero coefficients and iterates in basis
    order.  A series coefficient that is ``O(q^P)`` is kept, since it is not
    known to vanish.
    """

    __slots__ = ("bottom", "top", "ring", "terms", "_hash")

    def __init__(self, shape, terms: Mapping | Iterable = (), ring: str = LAURENT, precision: int | None = None):
        if ring not in RINGS:
            raise InvalidArgument(f"unknown ring {ring!r}")
        self.bottom, self.top = (shape, shape) if isinstance(shape, int) else tuple(shape)
        self.ring = ring
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for d, c in items:
            if d.shape != (self.bottom, self.top):
                raise InvalidArgument(f"diagram of shape {d.shape} in an element of shape {self.shape}")
            c = coerce(c, ring, precision) if ring == SERIES else coerce(c, ring)
            acc[d] = acc[d] + c if d in acc else c
        self.terms = {d: acc[d] for d in sorted(acc) if not _is_zero(acc[d])}
        self._hash = None

    @classmethod
    def _trusted(cls, shape, terms: dict, ring: str) -> "TLElement":
        obj = cls.__new__(cls)
        obj.bottom, obj.top = shape
        obj.ring = ring
        obj.terms = {d: terms[d] for d in sorted(terms) if not _is_zero(terms[d])}
        obj._hash = None
        return obj

    # basic queries

    @property
    def shape(self) -> tuple[int, int]:
        return (self.bottom, self.top)

    @property
    def n(self) -> int:
        if self.bottom != self.top:
            raise InvalidArgument(f"({self.bottom},{self.top}) element is not square")
        return self.bottom

    @property
    def precision(self):
        """Smallest precision among series coefficients (``None`` if exact)."""
        if self.ring != SERIES:
            return None
        precs = [c.precision for c in self.terms.values() if c.precision is not None]
        return min(precs) if precs else None

    def support(self) -> list[DottedDiagram]:
        return list(self.terms)

    def coefficient(self, d: DottedDiagram):
        if d in self.terms:
            return self.terms[d]
        return _zero_of(self.ring)

    def __getitem__(self, d):
        return self.coefficient(d)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # linear structure

    def _check_shape(self, other: "TLElement") -> None:
        if self.shape != other.shape:
            raise InvalidArgument(f"shape mismatch: {self.shape} vs {other.shape}")

    def to_ring(self, ring: str, precision: int | None = None) -> "TLElement":
        """Re-express the coefficients in another ring.

        Rational functions go to series only with an explicit precision.
        """
        if ring == self.ring and precision is None:
            return self
        if ring == SERIES:
            if precision is None and self.ring == RATFUNC:
                raise UnsupportedRing("expanding rational functions needs a precision")
            out = {}
            for d, c in self.terms.items():
                if isinstance(c, RationalFunction):
                    s = expand_to_series(c, precision)
                    if any(isinstance(x, Fraction) for x in s.coeffs):
                        raise UnsupportedRing(f"{c} has non-integer series coefficients")
                    out[d] = s
                else:
                    out[d] = coerce(c, SERIES, precision)
            return TLElement._trusted(self.shape, out, SERIES)
        return TLElement(self.shape, self.terms, ring)

    def to_series(self, precision: int) -> "TLElement":
        return self.to_ring(SERIES, precision)

    def _align(self, other: "TLElement"):
        ring = join_rings(self.ring, other.ring)
        return self.to_ring(ring) if self.ring != ring else self, other.to_ring(ring) if other.ring != ring else other

    def __add__(self, other):
        if not isinstance(other, TLElement):
            if other == 0:
                return self
            return NotImplemented
        self._check_shape(other)
        a, b = self._align(other)
        out = dict(a.terms)
        for d, c in b.terms.items():
            out[d] = out[d] + c if d in out else c
        return TLElement._trusted(self.shape, out, a.ring)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return TLElement._trusted(self.shape, {d: -c for d, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TLElement":
        ring = join_rings(self.ring, scalar_ring(c))
        if ring == RATFUNC:
            c = as_ratfunc(c)
        elif ring == SERIES and not isinstance(c, TruncatedLaurentSeries):
            c = coerce(c, SERIES)
        base = self.to_ring(ring) if ring != self.ring else self
        return TLElement._trusted(self.shape, {d: v * c for d, v in base.terms.items()}, ring)

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, LaurentPolynomial, RationalFunction, TruncatedLaurentSeries)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial, RationalFunction, TruncatedLaurentSeries)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(1 / as_ratfunc(other))

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidArgument("negative powers are not defined")
        result = one(self.n, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.shape != other.shape or self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[d] for d, c in self.terms.items())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self.terms)))
        return self._hash

    def scalar_multiple_of(self, other: "TLElement"):
        """The scalar ``c`` with ``self == c * other``, or ``None``."""
        self._check_shape(other)
        if other.is_zero():
            return _zero_of(self.ring) if self.is_zero() else None
        if self.terms.keys() != other.terms.keys():
            return None
        d0 = next(iter(other.terms))
        if self.ring == SERIES or other.ring == SERIES:
            raise UnsupportedRing("scalar extraction needs exact coefficients")
        c = as_ratfunc(self.terms[d0]) / as_ratfunc(other.terms[d0])
        if all(as_ratfunc(v) == c * as_ratfunc(other.terms[d]) for d, v in self.terms.items()):
            return c.as_laurent() if c.is_laurent() else c
        return None

    # structural maps

    def mirror(self) -> "TLElement":
        """Flip every diagram top to bottom (an anti-automorphism)."""
        return TLElement._trusted((self.top, self.bottom), {d.mirror(): c for d, c in self.terms.items()}, self.ring)

    def tensor_right(self, strands: int = 1) -> "TLElement":
        """Pad with undotted strands on the right."""
        shape = (self.bottom + strands, self.top + strands)
        return TLElement._trusted(shape, {d.tensor_right(strands): c for d, c in self.terms.items()}, self.ring)

    # rendering

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"[{c}] {d.to_text()}" for d, c in self.terms.items())

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        inner = " + ".join(f"({c})*{d.to_text()}" for d, c in self.terms.items()) or "0"
        return f"TLElement<{self.bottom},{self.top},{self.ring}: {inner}>"

    def to_json(self) -> dict:
        out = {"n": self.bottom} if self.bottom == self.top else {"bottom": self.bottom, "top": self.top}
        out["ring"] = self.ring
        out["terms"] = [{"diagram": d.to_json(), "coeff": c.to_json()} for d, c in self.terms.items()]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "TLElement":
        shape = obj["n"] if "n" in obj else (obj["bottom"], obj["top"])
        ring = obj["ring"]
        terms = [(DottedDiagram.from_json(t["diagram"]), coeff_from_json(t["coeff"])) for t in obj["terms"]]
        return cls(shape, terms, ring)


def _zero_of(ring: str):
    if ring == RATFUNC:
        return RationalFunction()
    if ring == SERIES:
        return TruncatedLaurentSeries()
    return LaurentPolynomial()


# the product

_DELTA_POWERS = [ONE]


def _delta_power(k: int) -> LaurentPolynomial:
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1] * DELTA)
    return _DELTA_POWERS[k]


def _common_denominator(values) -> tuple[LaurentPolynomial, list]:
    den = ONE
    for c in values:
        if not c.den.is_one():
            den = polynomial_lcm(den, c.den)
    return den, [c.num * exact_quotient(den, c.den) for c in values]


def multiply(a: TLElement, b: TLElement) -> TLElement:
    """Stack ``a`` on top of ``b`` and expand bilinearly."""
    if a.bottom != b.top:
        raise InvalidArgument(f"cannot compose {a.shape} after {b.shape}")
    ring = join_rings(a.ring, b.ring)
    shape = (b.bottom, a.top)
    if a.is_zero() or b.is_zero():
        return TLElement._trusted(shape, {}, ring)
    if ring == SERIES:
        a, b = a.to_ring(SERIES), b.to_ring(SERIES)
        acc: dict = {}
        for da, ca in a.terms.items():
            for db, cb in b.terms.items():
                out = compose(da, db)
                if out.dotted_loop_seen:
                    continue
                c = ca * cb
                if out.undotted_loops:
                    c = c * _delta_power(out.undotted_loops)
                d = out.result
                acc[d] = acc[d] + c if d in acc else c
        return TLElement._trusted(shape, acc, ring)
    # Laurent numerators over one common denominator, normalized once per
    # result diagram
    if ring == RATFUNC:
        da_list, ca_raw = list(a.terms), [as_ratfunc(c) for c in a.terms.values()]
        db_list, cb_raw = list(b.terms), [as_ratfunc(c) for c in b.terms.values()]
        den_a, ca_list = _common_denominator(ca_raw)
        den_b, cb_list = _common_denominator(cb_raw)
        den = den_a * den_b
    else:
        da_list, ca_list = list(a.terms), list(a.terms.values())
        db_list, cb_list = list(b.terms), list(b.terms.values())
        den = ONE
    acc = {}
    for da, ca in zip(da_list, ca_list):
        for db, cb in zip(db_list, cb_list):
            out = compose(da, db)
            if out.dotted_loop_seen:
                continue
            c = ca * cb
            if out.undotted_loops:
                c = c * _delta_power(out.undotted_loops)
            d = out.result
            acc[d] = acc[d] + c if d in acc else c
    if ring == RATFUNC:
        acc = {d: RationalFunction(c, den) for d, c in acc.items() if not c.is_zero()}
    return TLElement._trusted(shape, acc, ring)


# constructors

def zero(shape, ring: str = LAURENT) -> TLElement:
    shape = (shape, shape) if isinstance(shape, int) else tuple(shape)
    return TLElement._trusted(shape, {}, ring)


def one(n: int, ring: str = LAURENT) -> TLElement:
    return TLElement._trusted((n, n), {identity_diagram(n): coerce(1, ring)}, ring)


def from_diagram(d: DottedDiagram, coeff=1, ring: str | None = None) -> TLElement:
    ring = ring or scalar_ring(coeff)
    return TLElement(d.shape, [(d, coeff)], ring)


def generator(kind: str, n: int, i: int | None = None, ring: str = LAURENT) -> TLElement:
    """``identity``, ``U`` (index ``i``; ``i == 0`` gives U0), ``s0`` or ``U0``."""
    return from_diagram(generator_diagram(kind, n, i), 1, ring)


def basis_elements(n: int, family: str = "B", ring: str = LAURENT) -> list[TLElement]:
    return [from_diagram(d, 1, ring) for d in enumerate_basis(n, family)]


_TOKEN = re.compile(r"\s*(?:(U)(\d+)|(s0)|(1)(?![\d])|(\S+))")


def parse_generator_word(text: str, n: int, ring: str = LAURENT) -> TLElement:
    """Product of generators written like ``"U1 s0 U1"``; ``1`` is the identity.

    >>> parse_generator_word("U1 s0 U1", 2).is_zero()
    True
    """
    result = one(n, ring)
    pos = 0
    text = text.replace("*", " ").replace("·", " ")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(5):
            raise ParseError(f"unknown generator {m.group(5)!r}", start)
        try:
            if m.group(1):
                g = generator("U", n, int(m.group(2)), ring)
            elif m.group(3):
                g = generator("s0", n, None, ring)
            else:
                g = one(n, ring)
        except InvalidArgument as exc:
            raise ParseError(str(exc), start) from None
        result = result * g
        pos = m.end()
    return result


# involution and decompositions

def involution_phi(a: TLElement) -> TLElement:
    """Negate the coefficient of every diagram with an odd number of dots."""
    return TLElement._trusted(
        a.shape, {d: (-c if d.dot_count() % 2 else c) for d, c in a.terms.items()}, a.ring
    )


def is_type_d(a: TLElement) -> bool:
    """Membership in TL(D_n): support on even-dot diagrams only."""
    return all(d.dot_count() % 2 == 0 for d in a.terms)


def split_identity_ideal(a: TLElement):
    """Split ``a = x*1 + y*s0 + r`` with ``r`` in the ideal of the cup-caps.

    >>> x, y, r = split_identity_ideal(generator("s0", 2) * Fraction(1, 2) + one(2) * Fraction(1, 2))
    >>> str(x), str(y), r.is_zero()
    ('1/2', '1/2', True)
    """
    n = a.n
    ident = identity_diagram(n)
    s0 = generator_diagram("s0", n)
    rest = {d: c for d, c in a.terms.items() if d not in (ident, s0)}
    return a.coefficient(ident), a.coefficient(s0), TLElement._trusted(a.shape, rest, a.ring)
