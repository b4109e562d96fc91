"""Geometric quantifiers of stationary quantum evolutions.

Distances are Fubini-Study distances measured with the Anandan-Aharonov
convention ds = 2 ΔE dt / ħ, so orthogonal states sit at distance π.
"""
from dataclasses import asdict, dataclass

import numpy as np

from .entanglement import concurrence
from .errors import NotHermitian, StationaryState, ZeroOperator
from .linalg import is_hermitian, spectral_norm


@dataclass(frozen=True)
class GeometryReport:
    delta_E: float
    s0: float
    s: float
    travel_time: float
    eta_GE: float
    eta_SE: float
    kappa_sq: float
    speed: float
    avg_entanglement_speed: float

    def to_dict(self):
        return asdict(self)


def _check_hermitian(h):
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise NotHermitian("Hamiltonian is not Hermitian")
    return h


def expectation(op, psi):
    psi = np.asarray(psi, dtype=complex)
    return np.vdot(psi, op @ psi) / np.vdot(psi, psi).real


def energy_uncertainty(h, psi):
    """sqrt(<H²> - <H>²) in the (possibly unnormalized) state ``psi``."""
    h = _check_hermitian(h)
    mean = expectation(h, psi).real
    second = expectation(h @ h, psi).real
    return float(np.sqrt(max(0.0, second - mean**2)))


def geodesic_distance(a, b):
    """2 arccos |<A|B>| between the rays of ``a`` and ``b``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    overlap = abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b))
    return float(2 * np.arccos(np.clip(overlap, 0.0, 1.0)))


def evolution_speed(h, psi, hbar=1.0):
    return 2 * energy_uncertainty(h, psi) / hbar


def path_length(h, psi, travel_time, hbar=1.0):
    """Length of the orbit of ``psi`` under a stationary ``h``."""
    return evolution_speed(h, psi, hbar) * travel_time


def geodesic_efficiency(h, a, travel_time, b, hbar=1.0):
    if travel_time <= 0:
        raise ValueError("travel_time must be positive")
    return geodesic_distance(a, b) / path_length(h, a, travel_time, hbar)


def speed_efficiency(h, psi):
    """ΔE / ‖H‖_SP."""
    h = _check_hermitian(h)
    norm = spectral_norm(h)
    if norm == 0:
        raise ZeroOperator("speed efficiency is undefined for H = 0")
    return energy_uncertainty(h, psi) / norm


def curvature_stationary(h, psi):
    """Curvature coefficient <Δh⁴> - <Δh²>² of a stationary evolution.

    With Δh = (H - <H>)/ΔE this is <(H - <H>)⁴>/ΔE⁴ - 1. It is the same at
    every point of the orbit, so it can be evaluated in the initial state.
    """
    h = _check_hermitian(h)
    dE = energy_uncertainty(h, psi)
    if dE <= 1e-12:
        raise StationaryState("ΔE = 0: psi is stationary and the curvature is undefined")
    mean = expectation(h, psi).real
    d = h - mean * np.eye(h.shape[0])
    d2 = d @ d
    fourth = expectation(d2 @ d2, psi).real
    kappa_sq = fourth / dE**4 - 1.0
    if kappa_sq < -1e-10:
        raise ArithmeticError(f"negative curvature coefficient {kappa_sq}")
    return max(kappa_sq, 0.0)


def average_entanglement_speed(c_initial, c_final, travel_time):
    """|ΔC| / Δt; equals 1/Δt when a separable state becomes maximally entangled."""
    if travel_time <= 0:
        raise ValueError("travel_time must be positive")
    return float(abs(c_final - c_initial) / travel_time)


def geometry_report(h, a, b, travel_time, hbar=1.0, c_initial=None, c_final=None):
    """Collect every geometric quantifier of the evolution a → b under ``h``."""
    h = _check_hermitian(h)
    dE = energy_uncertainty(h, a)
    two_qubit = np.size(a) == 4
    if c_initial is None:
        c_initial = concurrence(a) if two_qubit else float("nan")
    if c_final is None:
        c_final = concurrence(b) if two_qubit else float("nan")
    try:
        kappa_sq = curvature_stationary(h, a)
    except StationaryState:
        kappa_sq = float("nan")
    return GeometryReport(
        delta_E=dE,
        s0=geodesic_distance(a, b),
        s=2 * dE * travel_time / hbar,
        travel_time=float(travel_time),
        eta_GE=geodesic_efficiency(h, a, travel_time, b, hbar),
        eta_SE=speed_efficiency(h, a),
        kappa_sq=kappa_sq,
        speed=2 * dE / hbar,
        avg_entanglement_speed=average_entanglement_speed(c_initial, c_final, travel_time),
    )
