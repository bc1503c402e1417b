import doctest
import importlib

import pytest

MODULES = [
    "coefficients",
    "diagrams",
    "tl_algebra",
    "jones_wenzl",
    "braids",
    "convergence",
    "weyl_group",
    "group_algebra",
    "coideal_rep",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(f"tlbd.{name}")
    result = doctest.testmod(module, optionflags=doctest.ELLIPSIS)
    assert result.failed == 0
