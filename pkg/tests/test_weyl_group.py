from math import factorial

import pytest
from hypothesis import given, strategies as st

from tlbd import weyl_group as wg
from tlbd.errors import InvalidArgument


def dotted(n):
    return st.tuples(st.permutations(range(1, n + 1)), st.lists(st.integers(0, 1), min_size=n, max_size=n)).map(
        lambda p: wg.DottedPermutation(tuple(p[0]), tuple(p[1]))
    )


def test_worked_product():
    x = wg.DottedPermutation((2, 3, 1), (0, 1, 1))
    y = wg.DottedPermutation((3, 1, 2), (0, 1, 1))
    assert x * y == wg.DottedPermutation((1, 2, 3), (1, 1, 0))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(dotted(n), dotted(n), dotted(n))))
def test_group_axioms(triple):
    x, y, z = triple
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    sx, sy = wg.to_signed_permutation(x), wg.to_signed_permutation(y)
    # the signed-permutation picture is a faithful homomorphism
    assert wg.to_signed_permutation(x * y).images == (sx * sy).images
    assert wg.DottedPermutation.from_json(x.to_json()) == x


@pytest.mark.parametrize("n", range(1, 6))
def test_orders(n):
    assert wg.group_order(n) == 2**n * factorial(n)
    if n >= 2:
        assert wg.group_order(n, "D") == 2 ** (n - 1) * factorial(n)


def test_coxeter_relations():
    n = 4
    s = [wg.simple_reflection(i, n) for i in range(n)]
    for i in range(n):
        assert (s[i] ** 2).is_identity()
    assert ((s[0] * s[1]) ** 4).is_identity()
    assert not ((s[0] * s[1]) ** 2).is_identity()
    assert ((s[1] * s[2]) ** 3).is_identity()
    assert ((s[0] * s[2]) ** 2).is_identity()
    assert wg.s0_prime(n) == s[0] * s[1] * s[0]


@pytest.mark.parametrize("n", range(1, 5))
def test_longest_element(n):
    w, word = wg.longest_element("B", n)
    assert wg.from_word(word, n) == w
    assert w == wg.DottedPermutation(tuple(range(1, n + 1)), (1,) * n)
    assert len(word) == n * n
    product = wg.identity(n)
    for i in range(1, n + 1):
        product = product * wg.jucys_murphy(i, n)
    assert product == w


def test_longest_element_type_d():
    assert wg.longest_element("D", 4)[0].eps == (1, 1, 1, 1)
    assert wg.longest_element("D", 5)[0].eps == (0, 1, 1, 1, 1)


def test_class_labels():
    x = wg.DottedPermutation((2, 3, 4, 1), (0, 0, 0, 0))
    assert str(wg.conjugacy_bipartition(x)) == "((4),())"
    y = wg.DottedPermutation((2, 1, 3, 4), (0, 0, 1, 1))
    assert wg.conjugacy_bipartition(y) == wg.bipartition((2,), (1, 1))
    assert str(wg.to_signed_permutation(wg.simple_reflection(0, 1)).cycles()[0]) == "(1, -1)"


@pytest.mark.parametrize("n", range(1, 5))
def test_classes_are_labelled_by_bipartitions(n):
    classes = wg.conjugacy_classes(n)
    labels = [{wg.conjugacy_bipartition(x) for x in c} for c in classes]
    assert all(len(l) == 1 for l in labels)
    assert {l.pop() for l in labels} == set(wg.bipartitions_of(n))
    assert sum(len(c) for c in classes) == wg.group_order(n)


def test_dimensions():
    assert wg.specht_dimension(wg.bipartition((1,), (1,))) == 2
    assert wg.specht_dimension(wg.bipartition((2, 1), ())) == 2
    assert wg.specht_dimension(wg.bipartition((1, 1), (1,))) == 3
    bp = wg.bipartition((2,), (1,))
    assert all(b.size == 2 for b in wg.branching_neighbors(bp, "down"))
    assert all(b.size == 4 for b in wg.branching_neighbors(bp, "up"))


def test_validation():
    with pytest.raises(InvalidArgument):
        wg.DottedPermutation((1, 1), (0, 0))
    with pytest.raises(InvalidArgument):
        wg.bipartition((1, 2), ())
    with pytest.raises(InvalidArgument):
        wg.simple_reflection(3, 3)
