"""Entanglement of pure two-qubit states."""
from dataclasses import dataclass

import numpy as np

from .errors import WrongDimension
from .linalg import SIGMA_Y, reduced_density_matrix

SCHMIDT_CUTOFF = 1e-8

_SYSY = np.kron(SIGMA_Y, SIGMA_Y)

_S = 1 / np.sqrt(2)
PHI_PLUS = np.array([_S, 0, 0, _S], dtype=complex)
PHI_MINUS = np.array([_S, 0, 0, -_S], dtype=complex)
PSI_PLUS = np.array([0, _S, _S, 0], dtype=complex)
PSI_MINUS = np.array([0, _S, -_S, 0], dtype=complex)

# columns are |Φ1> = |Φ+>, |Φ2> = -i|Φ->, |Φ3> = |Ψ->, |Φ4> = -i|Ψ+>
MAGIC_BASIS = np.column_stack([PHI_PLUS, -1j * PHI_MINUS, PSI_MINUS, -1j * PSI_PLUS])


def _two_qubit(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise WrongDimension(f"expected a two-qubit state of dimension 4, got {psi.size}")
    return psi


@dataclass(frozen=True)
class SchmidtDecomposition:
    coefficients: np.ndarray  # descending, sqrt(lambda_k)
    basis_a: np.ndarray  # columns |v_k^(A)>
    basis_b: np.ndarray  # columns |v_k^(B)>

    @property
    def schmidt_number(self):
        return int(np.sum(self.coefficients > SCHMIDT_CUTOFF))

    def reconstruct(self):
        return sum(
            c * np.kron(self.basis_a[:, k], self.basis_b[:, k])
            for k, c in enumerate(self.coefficients)
        )


@dataclass(frozen=True)
class EntanglementResult:
    concurrence: float
    geometric_measure: float
    schmidt_coefficients: tuple
    schmidt_number: int


def concurrence(psi):
    """|<ψ| σ_y⊗σ_y |ψ*>|, with ψ* conjugated in the computational basis."""
    psi = _two_qubit(psi)
    return float(abs(np.vdot(psi, _SYSY @ psi.conj())))


def concurrence_closed_form(psi):
    """2|αδ - βγ| for ψ = α|00> + β|01> + γ|10> + δ|11>."""
    a, b, c, d = _two_qubit(psi)
    return float(2 * abs(a * d - b * c))


def schmidt_decomposition(psi):
    psi = _two_qubit(psi)
    u, s, vh = np.linalg.svd(psi.reshape(2, 2))
    return SchmidtDecomposition(coefficients=s, basis_a=u, basis_b=vh.T)


def concurrence_from_schmidt(psi):
    lam = schmidt_decomposition(psi).coefficients[0]
    return float(2 * lam * np.sqrt(max(0.0, 1 - lam**2)))


def geometric_measure(psi):
    """1 - Λ_max², the bipartite closed form of the geometric measure."""
    lam = schmidt_decomposition(psi).coefficients[0]
    return float(min(0.5, max(0.0, 1 - lam**2)))


def magic_basis_coords(psi):
    """Coefficients μ_k = <Φ_k|ψ> in the magic basis."""
    return MAGIC_BASIS.conj().T @ _two_qubit(psi)


def concurrence_magic(psi):
    mu = magic_basis_coords(psi)
    return float(abs(np.sum(mu**2)))


def linear_entropy(psi):
    """1 - Tr ρ_A²."""
    rho_a = reduced_density_matrix(_two_qubit(psi), keep="A")
    return float(1 - np.real(np.trace(rho_a @ rho_a)))


def analyze_state(psi):
    sd = schmidt_decomposition(psi)
    return EntanglementResult(
        concurrence=concurrence(psi),
        geometric_measure=geometric_measure(psi),
        schmidt_coefficients=tuple(float(c) for c in sd.coefficients),
        schmidt_number=sd.schmidt_number,
    )
