import math

import pytest

from tlbd.coefficients import SERIES, AtLeast
from tlbd.convergence import converge, qadic_distance, twist_power, type_a_sanity, valuation_of
from tlbd.errors import InvalidArgument
from tlbd.jones_wenzl import jw_type_d
from tlbd.tl_algebra import one

PRECISION = {2: 32, 3: 52, 4: 76}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exact_valuation_law(n):
    # the distance shrinks by 4(n-1) per power of the twist
    p = PRECISION[n]
    limit = jw_type_d(n, SERIES, p)
    for m in range(1, 7):
        assert valuation_of(twist_power("D", n, m, p) - limit) == 4 * m * (n - 1) + 1


def test_converge_report():
    r = converge(2, 9, 4, 32)
    assert r.status == "achieved" and r.achieved_at == 2
    assert r.valuations() == [5, 9]
    assert r.to_json()["achieved_at"] == 2


def test_converge_not_reached_and_inconclusive():
    assert converge(2, 100, 2, 200).status == "not reached"
    r = converge(2, 100, 50, 12)
    assert r.status == "inconclusive"
    assert isinstance(r.valuations()[-1], AtLeast)


def test_distance_edge_cases():
    x = twist_power("D", 2, 1, 8)
    assert qadic_distance(x, x).valuation == math.inf
    assert qadic_distance(one(2), one(2)).valuation == math.inf
    with pytest.raises(InvalidArgument):
        qadic_distance(one(2), one(3))
    with pytest.raises(InvalidArgument):
        converge(1, 3, 2)


def test_type_a_twist_approaches_projector():
    rows = type_a_sanity(2, 3, 24)
    vals = [d.valuation for _, d, _ in rows]
    assert vals == sorted(vals) and vals[0] >= 1
