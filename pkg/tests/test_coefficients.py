from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tlbd.coefficients import (
    DELTA,
    LAURENT,
    RATFUNC,
    SERIES,
    AtLeast,
    LaurentPolynomial,
    RationalFunction,
    TruncatedLaurentSeries,
    as_ratfunc,
    coerce,
    expand_to_series,
    from_json,
    q_power_sum,
    quantum_integer,
    valuation_at_least,
)
from tlbd.errors import UnsupportedRing

Q = LaurentPolynomial.q()

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)
nonzero = laurents.filter(lambda p: not p.is_zero())


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPolynomial()


@given(laurents)
def test_laurent_json_roundtrip(a):
    assert from_json(a.to_json()) == a


@given(laurents, st.integers(-3, 3))
def test_evaluate_is_a_homomorphism(a, x):
    if x == 0:
        return
    assert (a * a).evaluate(x) == a.evaluate(x) ** 2
    assert a.bar().evaluate(Fraction(1, x)) == a.evaluate(x)


def test_quantum_integers():
    assert quantum_integer(1) == 1
    assert quantum_integer(2) == DELTA
    for n in range(1, 8):
        # [n+1] = [2][n] - [n-1]
        assert quantum_integer(n + 1) == DELTA * quantum_integer(n) - quantum_integer(n - 1)
        assert quantum_integer(n).evaluate(1) == n
    assert q_power_sum(0) == 2
    assert str(quantum_integer(3)) == "q^2 + 1 + q^-2"


def test_negative_power_and_monomials():
    assert Q**-2 * Q**2 == 1
    assert (Q**3).is_monomial()
    assert LaurentPolynomial({-1: 2}).valuation == -1
    with pytest.raises(Exception):
        (Q + 1) ** -1


@given(nonzero, nonzero, laurents)
def test_rational_function_field(a, b, c):
    x = RationalFunction(c, a)
    y = RationalFunction(a, b)
    assert x * y == RationalFunction(c, b)
    assert (x + y) - y == x
    assert y / y == 1
    assert from_json(x.to_json()) == x


def test_rational_canonical_form():
    r = RationalFunction(quantum_integer(2) * quantum_integer(3), quantum_integer(2) * quantum_integer(4))
    assert r == RationalFunction(quantum_integer(3), quantum_integer(4))
    assert hash(r) == hash(RationalFunction(quantum_integer(3), quantum_integer(4)))
    assert RationalFunction(quantum_integer(4), quantum_integer(2)).is_laurent()
    assert as_ratfunc(Fraction(3, 4)) == RationalFunction(3, 4)
    assert str(RationalFunction(-1, quantum_integer(2))) == "-q/(q^2 + 1)"


def test_series_expansion():
    s = expand_to_series(RationalFunction(1, quantum_integer(2)), 9)
    assert str(s) == "q - q^3 + q^5 - q^7 + O(q^9)"
    assert s.valuation == 1
    back = s * TruncatedLaurentSeries.from_laurent(quantum_integer(2), 9)
    assert back.coefficient(0) == 1
    assert all(back.coefficient(e) == 0 for e in range(1, 8))


@given(nonzero, nonzero)
@settings(max_examples=60)
def test_series_expansion_multiplies(a, b):
    p = 12
    r = RationalFunction(a, b)
    s = expand_to_series(r, p)
    t = s * TruncatedLaurentSeries.from_laurent(b, p)
    lowest = min(a.terms)
    for e in range(lowest, min(s.precision, t.precision or p)):
        assert t.coefficient(e) == a.coefficient(e)


def test_series_sentinel_valuation():
    zero = TruncatedLaurentSeries(0, [], 10)
    assert zero.is_zero()
    assert isinstance(zero.valuation, AtLeast)
    assert valuation_at_least(zero.valuation, 10)
    assert not valuation_at_least(zero.valuation, 11)
    assert valuation_at_least(5, 5)
    assert TruncatedLaurentSeries(0, [0, 0, 3], None).valuation == 2


def test_coerce_between_rings():
    assert coerce(3, LAURENT) == LaurentPolynomial(3)
    assert coerce(RationalFunction(quantum_integer(4), quantum_integer(2)), LAURENT) == Q**2 + Q**-2
    with pytest.raises(UnsupportedRing):
        coerce(RationalFunction(1, quantum_integer(2)), LAURENT)
    with pytest.raises(UnsupportedRing):
        coerce(RationalFunction(1, quantum_integer(2)), SERIES)
    with pytest.raises(UnsupportedRing):
        coerce(Fraction(1, 2), SERIES)
    with pytest.raises(UnsupportedRing):
        coerce(TruncatedLaurentSeries(0, [1], 4), RATFUNC)
    s = coerce(RationalFunction(1, quantum_integer(2)), SERIES, 6)
    assert s.precision == 6
