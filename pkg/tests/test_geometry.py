import numpy as np
import pytest

from conftest import random_hermitian, random_state
from curvature_oracle import curvature_fd, path_length_fd
from reference import AMORE1, AMORE2, AMORE3, MEMORY
from qevo.entanglement import PHI_PLUS, PSI_PLUS
from qevo.errors import NotHermitian, StationaryState, ZeroOperator
from qevo.geometry import (
    average_entanglement_speed,
    curvature_stationary,
    energy_uncertainty,
    geodesic_distance,
    geodesic_efficiency,
    geometry_report,
    path_length,
    speed_efficiency,
)
from qevo.linalg import ket

A = ket("00")
CASES = {
    "opt-nonortho": (AMORE1, PHI_PLUS, np.pi / (2 * np.sqrt(2))),
    "subopt-nonortho": (AMORE2, PHI_PLUS, np.pi / 2),
    "opt-ortho": (AMORE3, PSI_PLUS, np.pi / np.sqrt(10)),
    "subopt-ortho": (MEMORY, PSI_PLUS, np.pi),
}


def test_geodesic_distance():
    assert geodesic_distance(A, PSI_PLUS) == pytest.approx(np.pi)
    assert geodesic_distance(A, PHI_PLUS) == pytest.approx(np.pi / 2)
    assert geodesic_distance(A, 1j * A) == pytest.approx(0, abs=1e-7)


def test_energy_uncertainty_of_eigenstate():
    h = np.diag([1.0, 2.0, 3.0, 4.0])
    assert energy_uncertainty(h, ket("10")) == 0
    with pytest.raises(StationaryState):
        curvature_stationary(h, ket("10"))


@pytest.mark.parametrize("name", list(CASES))
def test_curvature_matches_finite_difference(name):
    h, _, _ = CASES[name]
    for sigma0 in (0.0, 0.4, 1.1):
        assert abs(curvature_stationary(h, A) - curvature_fd(h, A, sigma0)) < 1e-8


def test_curvature_random_hamiltonians(rng):
    for _ in range(20):
        h = random_hermitian(rng)
        psi = random_state(rng)
        assert abs(curvature_stationary(h, psi) - curvature_fd(h, psi)) < 1e-7 * max(1, curvature_stationary(h, psi))


@pytest.mark.parametrize("name", list(CASES))
def test_path_length_matches_anandan_aharonov(name):
    h, b, t = CASES[name]
    assert path_length_fd(h, A, t) == pytest.approx(path_length(h, A, t), rel=1e-5)


def test_report_values():
    expected = {
        "opt-nonortho": (1, 1, 0),
        "subopt-nonortho": (2**-0.5, 2**-0.5, 4),
        "opt-ortho": (1, 1, 0),
        "subopt-ortho": (1 / np.sqrt(10), 0.5 * np.sqrt(2.5), 9 / 25),
    }
    for name, (h, b, t) in CASES.items():
        r = geometry_report(h, A, b, t)
        ge, se, k2 = expected[name]
        assert r.eta_GE == pytest.approx(ge, abs=1e-9)
        assert r.eta_SE == pytest.approx(se, abs=1e-9)
        assert r.kappa_sq == pytest.approx(k2, abs=1e-9)
        assert r.s == pytest.approx(r.s0 / r.eta_GE)
        assert r.avg_entanglement_speed == pytest.approx(1 / t)


def test_errors():
    with pytest.raises(NotHermitian):
        energy_uncertainty(np.array([[0, 1], [0, 0]]), [1, 0])
    with pytest.raises(ZeroOperator):
        speed_efficiency(np.zeros((2, 2)), [1, 0])
    with pytest.raises(ValueError):
        geodesic_efficiency(AMORE1, A, 0.0, PHI_PLUS)
    with pytest.raises(ValueError):
        average_entanglement_speed(0, 1, 0)


def test_report_without_two_qubits():
    h = np.diag([1.0, -1.0, 0.0])
    psi = np.array([1, 1, 0]) / np.sqrt(2)
    r = geometry_report(h, psi, np.array([1, -1, 0]) / np.sqrt(2), np.pi / 2)
    assert np.isnan(r.avg_entanglement_speed)
    assert r.eta_GE == pytest.approx(1)
