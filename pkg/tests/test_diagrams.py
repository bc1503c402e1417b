import itertools
import json
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from tlbd import _kernel_py, kernel
from tlbd.diagrams import (
    DottedDiagram,
    basis_dimension,
    cap_diagram,
    compose,
    cup_diagram,
    enumerate_basis,
    enumerate_hom_basis,
    fold,
    generator_diagram,
    identity_diagram,
    unfold,
)
from tlbd.errors import InvalidArgument
from tlbd.jones_wenzl import jw_type_d

try:
    from tlbd import _kernel as compiled
except ImportError:  # the extension is optional
    compiled = None


@pytest.mark.parametrize("family", "ABD")
@pytest.mark.parametrize("n", range(2, 6))
def test_enumeration_matches_closed_form(n, family):
    basis = enumerate_basis(n, family)
    assert len(basis) == basis_dimension(n, family)
    assert len(set(basis)) == len(basis)


def test_family_membership():
    for d in enumerate_basis(4, "A"):
        assert d.dot_count() == 0
    for d in enumerate_basis(4, "D"):
        assert d.dot_count() % 2 == 0
    assert set(enumerate_basis(3, "D")) <= set(enumerate_basis(3, "B"))


def test_rectangular_hom_spaces():
    assert len(enumerate_hom_basis(3, 1)) == 6
    assert enumerate_hom_basis(2, 1) == ()


def test_invalid_diagrams_rejected():
    with pytest.raises(InvalidArgument, match="cross"):
        DottedDiagram(2, 2, [3, 2, 1, 0], [0, 0, 0, 0])
    with pytest.raises(InvalidArgument, match="involution"):
        DottedDiagram(1, 1, [0, 0], [0, 0])
    # the inner strand of a nest cannot carry a dot
    with pytest.raises(InvalidArgument, match="left wall"):
        DottedDiagram.from_arcs(4, [("b0", "b3"), ("b1", "b2"), ("t0", "t1"), ("t2", "t3")], dots=[("b1", "b2")])


def test_generators_compose_as_expected():
    u1 = generator_diagram("U", 3, 1)
    u2 = generator_diagram("U", 3, 2)
    s0 = generator_diagram("s0", 3)
    one = identity_diagram(3)
    assert compose(s0, s0).result == one
    out = compose(u1, u1)
    assert out.undotted_loops == 1 and not out.dotted_loop_seen
    assert compose(compose(u1, u2).result, u1).result == u1
    u0 = generator_diagram("U0", 3)
    assert compose(compose(s0, u1).result, s0).result == u0
    # U1 U0 U1 closes a dotted loop
    assert compose(compose(u1, u0).result, u1).dotted_loop_seen


def test_cup_cap():
    cap = cap_diagram(3, 1)
    cup = cup_diagram(3, 1)
    assert cap.shape == (3, 1) and cup.shape == (1, 3)
    assert compose(cap, cup).undotted_loops == 1
    assert compose(cup, cap).result == generator_diagram("U", 3, 1)
    assert compose(cap_diagram(2, 1, dotted=True), cup_diagram(2, 1)).dotted_loop_seen


@given(st.integers(1, 4), st.data())
def test_composition_is_associative(n, data):
    basis = enumerate_basis(n, "B")
    a, b, c = (data.draw(st.sampled_from(basis)) for _ in range(3))
    left = compose(compose(a, b).result, c).result
    right = compose(a, compose(b, c).result).result
    assert left == right


@given(st.integers(1, 4), st.data())
def test_mirror_reverses_products(n, data):
    basis = enumerate_basis(n, "B")
    a, b = data.draw(st.sampled_from(basis)), data.draw(st.sampled_from(basis))
    assert compose(a, b).result.mirror() == compose(b.mirror(), a.mirror()).result


@pytest.mark.parametrize("n", [2, 3])
def test_unfold_fold_roundtrip(n):
    for d in enumerate_basis(n, "B"):
        assert fold(unfold(d), n, n) == d


def test_json_roundtrip():
    for d in enumerate_basis(3, "B"):
        assert DottedDiagram.from_json(d.to_json()) == d


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_kernel_parity_on_products():
    basis = enumerate_basis(3, "B")
    for a, b in itertools.product(basis, repeat=2):
        args = (a.partner, a.dots, b.partner, b.dots, 3, 3, 3)
        assert tuple(map(tuple, _kernel_py.compose(*args)[:2])) == tuple(map(tuple, compiled.compose(*args)[:2]))
        assert _kernel_py.compose(*args)[2:] == tuple(compiled.compose(*args)[2:])


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_kernel_parity_on_random_validation():
    rng = random.Random(7)
    for _ in range(2000):
        nb, nt = rng.choice([(2, 2), (3, 1), (2, 4), (3, 3)])
        size = nb + nt
        points = list(range(size))
        rng.shuffle(points)
        partner = [0] * size
        dots = [0] * size
        for a, b in zip(points[::2], points[1::2]):
            partner[a], partner[b] = b, a
            dots[a] = dots[b] = rng.random() < 0.3
        assert _kernel_py.validate(partner, dots, nb, nt) == compiled.validate(partner, dots, nb, nt)


def test_backend_flag():
    assert kernel.BACKEND in ("compiled", "python")


def test_pure_python_fallback_gives_same_projector():
    code = "import json; from tlbd import kernel; from tlbd.jones_wenzl import jw_type_d; print(json.dumps([kernel.BACKEND, jw_type_d(3).to_json()]))"
    env = dict(os.environ, TLBD_PURE_PYTHON="1")
    pure = json.loads(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout)
    assert pure[0] == "python"
    assert pure[1] == json.loads(json.dumps(jw_type_d(3).to_json()))
