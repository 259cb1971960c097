from unittest.mock import patch

import numpy as np
import pytest

from graph_helmholtzian import Error
from graph_helmholtzian._fixtures import k4_complex, reference_complex


@pytest.fixture
def reference():
    return reference_complex()


@pytest.fixture
def k4():
    return k4_complex()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True, scope="session")
def make_helm_exceptions_comparable():
    def new_eq(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return other.args == self.args

    with patch.object(Error, "__eq__", new_eq):
        yield
