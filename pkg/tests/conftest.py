import numpy as np
import pytest

from infoqm.qstate import DensityMatrix


def random_unitary(rng, n):
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_hermitian(rng, n, scale=1.0):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (a + a.conj().T) / 2


def random_pure(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return DensityMatrix.pure(v)


def random_mixed(rng, n, rank=None):
    rank = rank or n
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    r = g @ g.conj().T
    return DensityMatrix(r / np.trace(r))


def random_info_vector(rng, pure=False):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return v if pure else v * rng.uniform(0, 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
