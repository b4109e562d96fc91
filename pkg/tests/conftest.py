import numpy as np
import pytest

ACCEPTANCE_LINES = []


def random_state(rng, dim=4):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_hermitian(rng, dim=4, scale=1.0):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (z + z.conj().T) / 2


def random_unitary(rng, dim=2):
    # QR of a Ginibre matrix with the phases of R fixed
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def ray_fidelity(psi, phi):
    return abs(np.vdot(psi, phi)) / (np.linalg.norm(psi) * np.linalg.norm(phi))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
