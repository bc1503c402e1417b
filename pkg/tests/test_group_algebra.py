from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from tlbd import group_algebra as ga
from tlbd import weyl_group as wg
from tlbd.errors import InvalidArgument, NotQuasiIdempotent


def element(n):
    group = wg.group_elements(n)
    return st.lists(st.tuples(st.sampled_from(group), st.integers(-3, 3)), max_size=4).map(
        lambda pairs: sum((ga.GroupAlgebraElement.of(g, c) for g, c in pairs), ga.GroupAlgebraElement(n))
    )


@given(element(2), element(2), element(2))
@settings(max_examples=50)
def test_algebra_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ga.unit(2) == a
    assert ga.GroupAlgebraElement.from_json(a.to_json()) == a


def test_smallest_symmetrizer():
    bp = wg.bipartition((), (1,))
    assert ga.young_symmetrizer(bp).to_text() == "[1] (1; 0)\n[-1] (1; 1)"
    assert ga.idempotent(bp) * ga.idempotent(bp) == ga.idempotent(bp)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quasi_idempotent_scalars(n):
    for bp in wg.bipartitions_of(n):
        q = ga.young_symmetrizer(bp)
        assert q.coefficient(wg.identity(n)) == 1
        assert ga.quasi_idempotent_scalar(q) == Fraction(2**n * factorial(n), wg.specht_dimension(bp))
        assert ga.left_ideal_dimension(q) == wg.specht_dimension(bp)


def test_nonstandard_numbering():
    bp = wg.bipartition((2,), (1,))
    q = ga.young_symmetrizer(bp, (((3, 1),), ((2,),)))
    assert ga.quasi_idempotent_scalar(q) == Fraction(48, 3)
    with pytest.raises(InvalidArgument):
        ga.validate_numbering(bp, (((1, 1),), ((2,),)))
    with pytest.raises(InvalidArgument):
        ga.validate_numbering(bp, (((1,),), ((2,),)))


def test_jucys_murphy_eigenvalues():
    bp = wg.bipartition((1,), (1, 1))
    q = ga.young_symmetrizer(bp)
    for i in range(1, 4):
        j = wg.jucys_murphy(i, 3)
        assert j * q in (q, -q)
        assert q * j in (q, -q)


def test_not_quasi_idempotent():
    x = ga.unit(2) + ga.GroupAlgebraElement.of(wg.simple_reflection(1, 2))
    x = x + ga.GroupAlgebraElement.of(wg.simple_reflection(0, 2))
    with pytest.raises(NotQuasiIdempotent):
        ga.quasi_idempotent_scalar(x)


def test_size_cap():
    with pytest.raises(InvalidArgument):
        ga.young_symmetrizer(wg.bipartition((5,), ()))


def test_embedding_branches():
    e = ga.idempotent(wg.bipartition((1,), ()))
    parts = [ga.idempotent(wg.bipartition(*p)) for p in [((2,), ()), ((1, 1), ()), ((1,), (1,))]]
    assert ga.embed(e, 2) == parts[0] + parts[1] + parts[2]
