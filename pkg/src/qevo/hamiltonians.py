"""Stationary Hamiltonians that steer |A> into |B>.

Three constructions are provided:

* ``build_optimal``: the time-optimal Hamiltonian with maximal energy
  uncertainty, acting in span{|A>, |B>}.
* ``build_suboptimal``: a one-parameter family in the same span whose
  eigen-amplitudes satisfy |α₂| = δ|α₁|; δ = 1 gives back the optimal case.
* ``build_four_level_orthogonal``: a hand-built four-level Hamiltonian that
  connects orthogonal states suboptimally by leaving their span.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import Infeasible, OrthogonalEndpoints, SameRay
from .geometry import energy_uncertainty
from .linalg import as_state, ket, normalized, projector

SAME_RAY_TOL = 1e-12
ORTHOGONAL_TOL = 1e-12


@dataclass(frozen=True)
class EvolutionSetup:
    hamiltonian: np.ndarray
    A: np.ndarray
    B: np.ndarray
    travel_time: float
    label: str
    delta_E: float
    params: dict = field(default_factory=dict)


def _endpoints(a, b):
    a = as_state(a, normalize=True)
    b = as_state(b, normalize=True)
    if a.shape != b.shape:
        raise ValueError("initial and final states must have equal dimension")
    overlap = np.vdot(a, b)
    if abs(overlap) >= 1 - SAME_RAY_TOL:
        raise SameRay("|A> and |B> describe the same physical state")
    return a, b, overlap


def optimal_hamiltonian(a, b, delta_E):
    """Matrix of the time-optimal Hamiltonian with energy uncertainty ``delta_E``."""
    a, b, overlap = _endpoints(a, b)
    r = abs(overlap)
    if r < ORTHOGONAL_TOL:
        # |<A|B>| → 0 limit of the general expression
        return 1j * delta_E * (np.outer(b, a.conj()) - np.outer(a, b.conj()))
    ba = np.outer(b, a.conj()) / overlap
    ab = np.outer(a, b.conj()) / np.conj(overlap)
    return 1j * delta_E * r / np.sqrt(1 - r**2) * (ba - ab)


def optimal_time(a, b, delta_E, hbar=1.0):
    """ħ arccos|<A|B>| / ΔE."""
    if delta_E <= 0:
        raise ValueError("delta_E must be positive")
    a, b, overlap = _endpoints(a, b)
    return float(hbar * np.arccos(np.clip(abs(overlap), 0.0, 1.0)) / delta_E)


def build_optimal(a, b, delta_E, hbar=1.0):
    h = optimal_hamiltonian(a, b, delta_E)
    a, b, _ = _endpoints(a, b)
    return EvolutionSetup(
        hamiltonian=h,
        A=a,
        B=b,
        travel_time=optimal_time(a, b, delta_E, hbar),
        label="optimal",
        delta_E=energy_uncertainty(h, a),
        params={"delta_E": float(delta_E)},
    )


def solve_suboptimal_phase(theta_ab, delta, branch="principal"):
    """Relative eigenphase φ_α - φ_β compatible with a geodesic separation θ_AB.

    Solves cos²(θ/2) = 1 - 4δ²/(1+δ²)² sin²(Δφ/2). The principal branch lies in
    (0, π]; ``branch="upper"`` returns the mirror solution 2π - Δφ.
    """
    if not 0 < theta_ab < np.pi:
        raise Infeasible(f"theta_AB must lie in (0, π), got {theta_ab}")
    if delta <= 0:
        raise Infeasible("delta must be positive")
    arg = np.sin(theta_ab / 2) * (1 + delta**2) / (2 * delta)
    if arg > 1 + 1e-12:
        raise Infeasible(
            f"delta = {delta} cannot realize theta_AB = {theta_ab}: "
            f"requires 2δ/(1+δ²) ≥ sin(θ_AB/2) = {np.sin(theta_ab / 2):.6g}"
        )
    dphi = 2 * np.arcsin(min(arg, 1.0))
    if branch == "principal":
        return float(dphi)
    if branch == "upper":
        return float(2 * np.pi - dphi)
    raise ValueError(f"unknown branch {branch!r}")


def suboptimal_travel_time(energy, delta_phi, hbar=1.0):
    """ħ Δφ / (2E): the relative eigenphase advances at rate (E₂ - E₁)/ħ = 2E/ħ."""
    return float(hbar * delta_phi / (2 * energy))


def overlap_from_parameters(delta, delta_phi):
    """|<A|B>|² of normalized endpoints with eigen-amplitude ratio δ and phase gap Δφ."""
    return float((1 + 2 * delta**2 * np.cos(delta_phi) + delta**4) / (1 + delta**2) ** 2)


def suboptimal_hamiltonian(a, b, energy, delta, delta_phi):
    """Suboptimal Hamiltonian with spectrum ±E, for a (δ, Δφ) pair that fits |<A|B>|."""
    a, b, overlap = _endpoints(a, b)
    if abs(overlap) < ORTHOGONAL_TOL:
        raise OrthogonalEndpoints()
    pa, pb = projector(a), projector(b)
    ba = np.outer(b, a.conj()) / overlap
    ab = np.outer(a, b.conj()) / np.conj(overlap)
    ratio = (1 - delta**2) / (1 + delta**2)
    sin_sq = 1 - abs(overlap) ** 2
    return energy * ratio / sin_sq * (pa + pb - (ab + ba)) + 1j * energy / np.tan(delta_phi / 2) * (ba - ab)


def build_suboptimal(a, b, energy, delta, hbar=1.0, branch="principal"):
    """Time-suboptimal evolution from ``a`` to ``b`` with eigenvalues ±``energy``.

    ``delta`` sets the eigen-amplitude ratio |α₂|/|α₁|; the phase gap is then
    fixed by the endpoint overlap.
    """
    if energy <= 0:
        raise ValueError("energy must be positive")
    a, b, overlap = _endpoints(a, b)
    if abs(overlap) < ORTHOGONAL_TOL:
        raise OrthogonalEndpoints()
    theta = 2 * np.arccos(np.clip(abs(overlap), 0.0, 1.0))
    dphi = solve_suboptimal_phase(theta, delta, branch)
    h = suboptimal_hamiltonian(a, b, energy, delta, dphi)
    return EvolutionSetup(
        hamiltonian=h,
        A=a,
        B=b,
        travel_time=suboptimal_travel_time(energy, dphi, hbar),
        label="suboptimal",
        delta_E=energy_uncertainty(h, a),
        params={"energy": float(energy), "delta": float(delta), "delta_phi": dphi, "theta_AB": float(theta)},
    )


# Real orthogonal matrix whose rows give |A>, |B>, |C>, |D> in the eigenbasis.
_HADAMARD_ROWS = 0.5 * np.array(
    [[1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1]], dtype=float
)


def _gram_schmidt_completion(vectors, dim):
    basis = [np.asarray(v, dtype=complex) for v in vectors]
    extra = []
    for j in range(dim):
        w = np.zeros(dim, dtype=complex)
        w[j] = 1.0
        for q in basis + extra:
            w -= np.vdot(q, w) * q
        norm = np.linalg.norm(w)
        if norm > 1e-8:
            extra.append(w / norm)
        if len(basis) + len(extra) == dim:
            break
    return extra


def four_level_eigenbasis(a, b, complement=None):
    """Eigenvectors |E₁>..|E₄> (columns) with |A> = ½Σ|E_i>, |B> = ½(|E₁>-|E₂>-|E₃>+|E₄>).

    ``complement`` is an orthonormal pair spanning the orthogonal complement of
    {|A>, |B>}; by default it is obtained by Gram-Schmidt on the computational basis.
    """
    a = as_state(a, normalize=True)
    b = as_state(b, normalize=True)
    if a.size != 4:
        raise ValueError("the four-level construction needs a four-dimensional space")
    if abs(np.vdot(a, b)) > 1e-10:
        raise ValueError("the four-level construction requires orthogonal endpoints")
    if complement is None:
        c, d = _gram_schmidt_completion([a, b], 4)
    else:
        c, d = (normalized(v) for v in complement)
    frame = np.column_stack([a, b, c, d])
    if np.max(np.abs(frame.conj().T @ frame - np.eye(4))) > 1e-10:
        raise ValueError("{A, B} ∪ complement is not an orthonormal basis")
    # |E_k> = Σ_j K_jk |f_j> with K orthogonal and real
    return frame @ _HADAMARD_ROWS


def build_four_level(a, b, energy=1.0, hbar=1.0, complement=None):
    """Suboptimal four-level Hamiltonian with spectrum (-2E, -E, E, 2E)."""
    vecs = four_level_eigenbasis(a, b, complement)
    levels = energy * np.array([-2.0, -1.0, 1.0, 2.0])
    h = (vecs * levels) @ vecs.conj().T
    a = as_state(a, normalize=True)
    b = as_state(b, normalize=True)
    return EvolutionSetup(
        hamiltonian=h,
        A=a,
        B=b,
        travel_time=float(np.pi * hbar / energy),
        label="four-level",
        delta_E=energy_uncertainty(h, a),
        params={"energy": float(energy), "levels": levels.tolist()},
    )


def build_four_level_orthogonal(energy=1.0, hbar=1.0):
    """The fixed instance |00> → (|01> + |10>)/√2.

    The complement {|11>, (|01> - |10>)/√2} reproduces the published
    eigenvector matrix.
    """
    s = 1 / np.sqrt(2)
    a = ket("00")
    b = s * (ket("01") + ket("10"))
    complement = (ket("11"), s * (ket("01") - ket("10")))
    return build_four_level(a, b, energy, hbar, complement)
