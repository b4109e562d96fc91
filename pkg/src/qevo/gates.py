"""Entanglement quantifiers of two-qubit unitaries.

Yukalov entanglement production, Zanardi entangling power (Weyl-chamber
closed form and a Monte Carlo estimate over Haar product states), Weyl
coordinate extraction, and the operator Schmidt number.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .entanglement import MAGIC_BASIS
from .errors import NotUnitary, TracelessPropagator, WrongDimension
from .linalg import SIGMA_X, SIGMA_Y, SIGMA_Z, hilbert_schmidt_norm, is_unitary, partial_trace

TRACE_TOL = 1e-9
UNITARY_TOL = 1e-9
MC_BLOCK = 8192
MC_MIN_SAMPLES = 1000

IDENTITY = np.eye(4, dtype=complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
SQRT_SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
        [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)
# CNOT with the control on the second qubit, applied after the ordinary CNOT
_CNOT_21 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
DCNOT = _CNOT_21 @ CNOT

_XX = np.kron(SIGMA_X, SIGMA_X)
_YY = np.kron(SIGMA_Y, SIGMA_Y)
_ZZ = np.kron(SIGMA_Z, SIGMA_Z)


class CVector(NamedTuple):
    c1: float
    c2: float
    c3: float


def _check_unitary(u):
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise WrongDimension(f"expected a 4x4 two-qubit operator, got shape {u.shape}")
    if not is_unitary(u, UNITARY_TOL):
        raise NotUnitary("operator is not unitary")
    return u


def canonical_gate(c):
    """exp(-i(c1 XX + c2 YY + c3 ZZ)), diagonalized exactly in the magic basis."""
    c1, c2, c3 = c
    lam = np.array([c1 - c2 + c3, -c1 + c2 + c3, -c1 - c2 - c3, c1 + c2 - c3])
    return (MAGIC_BASIS * np.exp(-1j * lam)) @ MAGIC_BASIS.conj().T


def canonical_hamiltonian(c):
    c1, c2, c3 = c
    return c1 * _XX + c2 * _YY + c3 * _ZZ


def yukalov_production(u, dims=(2, 2)):
    """ln(‖U‖ / ‖U_A ⊗ U_B / Tr U‖) with Hilbert-Schmidt norms and unnormalized traces.

    U_A = Tr_B U and U_B = Tr_A U. Raises TracelessPropagator when |Tr U| ≤ 1e-9.
    """
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, UNITARY_TOL):
        raise NotUnitary("operator is not unitary")
    tr = np.trace(u)
    if abs(tr) <= TRACE_TOL:
        raise TracelessPropagator(f"|Tr U| = {abs(tr):.3g}: the product surrogate is undefined")
    u_a = partial_trace(u, "B", dims)
    u_b = partial_trace(u, "A", dims)
    surrogate = np.kron(u_a, u_b) / tr
    return float(np.log(hilbert_schmidt_norm(u) / hilbert_schmidt_norm(surrogate)))


def zanardi_power_canonical(c):
    """Entangling power of any gate with Weyl coordinates ``c``."""
    k1, k2, k3 = np.cos(4 * np.asarray(c, dtype=float))
    return float((3 - (k1 * k2 + k2 * k3 + k3 * k1)) / 18)


def fold_weyl(c):
    """Reduce ``c`` into π/4 ≥ c1 ≥ c2 ≥ c3 ≥ 0.

    Uses the shifts c_i → c_i ± π/2, sign flips and permutations. Single sign
    flips identify a gate with its mirror image, so c3 is reported as |c3|.
    """
    c = np.asarray(c, dtype=float)
    # shift only what lies outside [-π/4, π/4] so in-range values stay bit-exact
    outside = np.abs(c) > np.pi / 4
    c = np.where(outside, c - np.pi / 2 * np.round(c / (np.pi / 2)), c)
    c = np.abs(c)
    # mod can land a hair below π/4 from the wrong side; snap near the edge
    c = np.where(np.abs(c - np.pi / 4) < 1e-12, np.pi / 4, c)
    return CVector(*(float(x) for x in sorted(c, reverse=True)))


def weyl_cvector_raw(u):
    """Unfolded Weyl coordinates read off the magic-basis spectrum of U.

    With U_B = M†UM normalized to unit determinant, the eigenvalues of
    U_Bᵀ U_B are e^{-2iλ_k}. The λ_k are sorted descending (ties keep their
    input order), shifted by π so that Σλ_k = 0, then combined pairwise.
    """
    u = _check_unitary(u)
    u = u / np.linalg.det(u) ** 0.25
    ub = MAGIC_BASIS.conj().T @ u @ MAGIC_BASIS
    m = ub.T @ ub
    lam = -np.angle(np.linalg.eigvals(m)) / 2
    lam = np.sort(lam, kind="stable")[::-1]
    # Σλ is a multiple of π after det normalization
    k = int(np.rint(np.sum(lam) / np.pi))
    for i in range(abs(k)):
        if k > 0:
            lam[i] -= np.pi
        else:
            lam[-1 - i] += np.pi
    lam = np.sort(lam)[::-1]
    l1, l2, l3, _ = lam
    return CVector(float((l1 + l3) / 2), float((l2 + l3) / 2), float((l1 + l2) / 2))


def weyl_cvector(u, fold=True):
    raw = weyl_cvector_raw(u)
    return fold_weyl(raw) if fold else raw


def zanardi_power(u):
    """Entangling power of ``u`` via Weyl coordinate extraction."""
    return zanardi_power_canonical(weyl_cvector_raw(u))


def _haar_qubits(rng, n):
    z = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def _block_entropies(u, n, seed_seq):
    rng = np.random.default_rng(seed_seq)
    a = _haar_qubits(rng, n)
    b = _haar_qubits(rng, n)
    psi = (a[:, :, None] * b[:, None, :]).reshape(n, 4)
    out = (psi @ u.T).reshape(n, 2, 2)
    rho_a = out @ np.conj(np.transpose(out, (0, 2, 1)))
    purity = np.sum(np.abs(rho_a) ** 2, axis=(1, 2))
    return 1.0 - purity


def entangling_power_mc(u, n_samples=100_000, seed=0, n_workers=1):
    """Monte Carlo entangling power and its standard error.

    Samples are drawn in fixed-size blocks, each with its own stream spawned
    from ``seed``, so the estimate does not depend on ``n_workers``.
    """
    u = _check_unitary(u)
    if n_samples < MC_MIN_SAMPLES:
        raise ValueError(f"n_samples must be at least {MC_MIN_SAMPLES}")
    sizes = [MC_BLOCK] * (n_samples // MC_BLOCK)
    if n_samples % MC_BLOCK:
        sizes.append(n_samples % MC_BLOCK)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = list(zip(sizes, streams))
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(lambda job: _block_entropies(u, *job), jobs))
    else:
        parts = [_block_entropies(u, n, s) for n, s in jobs]
    vals = np.concatenate(parts)
    return float(vals.mean()), float(vals.std(ddof=1) / np.sqrt(vals.size))


def realign(u, dims=(2, 2)):
    """R[(i,j),(k,l)] = U[(i,k),(j,l)]."""
    d_a, d_b = dims
    t = np.asarray(u, dtype=complex).reshape(d_a, d_b, d_a, d_b)
    return t.transpose(0, 2, 1, 3).reshape(d_a * d_a, d_b * d_b)


def operator_schmidt_number(u, tol=1e-8):
    s = np.linalg.svd(realign(u), compute_uv=False)
    return int(np.sum(s > tol * s[0]))


@dataclass(frozen=True)
class PropagatorAnalysis:
    yukalov: Optional[float]
    zanardi: float
    c_vector: Optional[CVector]
    c_vector_raw: Optional[CVector]
    operator_schmidt_number: int
    mc_estimate: Optional[float] = None
    mc_std_error: Optional[float] = None

    def to_dict(self):
        return {
            "yukalov": self.yukalov,
            "zanardi": self.zanardi,
            "c_vector": list(self.c_vector) if self.c_vector is not None else None,
            "c_vector_raw": list(self.c_vector_raw) if self.c_vector_raw is not None else None,
            "operator_schmidt_number": self.operator_schmidt_number,
            "mc_estimate": self.mc_estimate,
            "mc_std_error": self.mc_std_error,
        }


def analyze_propagator(u, n_samples=None, seed=0):
    """Full entangling analysis of ``u``; yukalov is None when Tr U vanishes."""
    u = _check_unitary(u)
    try:
        yuk = yukalov_production(u)
    except TracelessPropagator:
        yuk = None
    raw = weyl_cvector_raw(u)
    mc = (None, None)
    if n_samples:
        mc = entangling_power_mc(u, n_samples, seed)
    return PropagatorAnalysis(
        yukalov=yuk,
        zanardi=zanardi_power_canonical(raw),
        c_vector=fold_weyl(raw),
        c_vector_raw=raw,
        operator_schmidt_number=operator_schmidt_number(u),
        mc_estimate=mc[0],
        mc_std_error=mc[1],
    )
