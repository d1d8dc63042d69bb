"""Shared instances.  Session scope: every window build re-verifies exact
eigenvector and independence properties, so rebuilding per test would just
re-run the same checks."""

import pytest

from ealie.constructions import TorusMatrixAlgebra, affinize, build_extension_example
from ealie.decomp import core_and_center_window, decompose_window
from ealie.quantum_torus import SignMatrix

Q_MIXED = SignMatrix.from_upper(2, [-1])
Q_TRIVIAL = SignMatrix(0)


@pytest.fixture(scope="session")
def torus_alg():
    return TorusMatrixAlgebra(2, Q_MIXED)


@pytest.fixture(scope="session")
def torus_win(torus_alg):
    return decompose_window(torus_alg, 1)


@pytest.fixture(scope="session")
def torus_win2(torus_alg):
    return decompose_window(torus_alg, 2)


@pytest.fixture(scope="session")
def aff_alg():
    return affinize(TorusMatrixAlgebra(2, Q_MIXED))


@pytest.fixture(scope="session")
def aff_win(aff_alg):
    return decompose_window(aff_alg, 1)


@pytest.fixture(scope="session")
def aff_win2(aff_alg):
    return decompose_window(aff_alg, 2)


@pytest.fixture(scope="session")
def aff_core(aff_win):
    return core_and_center_window(aff_win)


@pytest.fixture(scope="session")
def sp4_alg():
    return TorusMatrixAlgebra(2, Q_TRIVIAL, real_only=True)


@pytest.fixture(scope="session")
def sp4_win(sp4_alg):
    return decompose_window(sp4_alg, 1)


@pytest.fixture(scope="session")
def sqrt_alg():
    return build_extension_example("C", 2, [2, 3])


@pytest.fixture(scope="session")
def sqrt_win(sqrt_alg):
    return decompose_window(sqrt_alg, 1)
