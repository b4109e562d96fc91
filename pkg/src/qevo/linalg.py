"""Dense complex linear algebra for small Hilbert spaces.

States are 1-D complex ndarrays, operators are square 2-D complex ndarrays.
Composite indices follow the row-major Kronecker convention
``i = i_a * dim_b + i_b``.
"""
import numpy as np

from .errors import DimensionMismatch, NotHermitian

TOL = 1e-10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def as_state(amplitudes, normalize=False):
    """Coerce ``amplitudes`` to a complex vector, optionally normalizing it."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if psi.size == 0:
        raise DimensionMismatch("state vector must have positive dimension")
    if not np.all(np.isfinite(psi)):
        raise ValueError("state amplitudes must be finite")
    if normalize:
        psi = normalized(psi)
    return psi


def normalized(psi):
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / norm


def as_operator(matrix):
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionMismatch(f"operator must be a nonempty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("operator entries must be finite")
    return m


def ket(label):
    """Computational basis state from a bit string, e.g. ``ket("01")``."""
    psi = np.zeros(2 ** len(label), dtype=complex)
    psi[int(label, 2)] = 1.0
    return psi


def projector(psi):
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def is_hermitian(m, tol=TOL):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    return np.max(np.abs(m - m.conj().T), initial=0.0) <= tol * scale


def is_unitary(m, tol=TOL):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])), initial=0.0) <= tol


def is_traceless(m, tol=TOL):
    return abs(np.trace(m)) <= tol


def tensor_product(a, b):
    """Kronecker product of two states or two operators."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def _fix_phase(v):
    # first component of (numerically) largest magnitude made real positive
    mags = np.abs(v)
    k = int(np.flatnonzero(mags >= mags.max() - 1e-12)[0])
    return v * (np.conj(v[k]) / mags[k])


def _canonical_subspace_basis(vecs):
    """Deterministic orthonormal basis for the span of the columns of ``vecs``.

    The computational basis vectors are projected onto the subspace in input
    order and orthonormalized by modified Gram-Schmidt.
    """
    dim, rank = vecs.shape
    proj = vecs @ vecs.conj().T
    basis = []
    for j in range(dim):
        w = proj[:, j].copy()
        for b in basis:
            w -= np.vdot(b, w) * b
        norm = np.linalg.norm(w)
        if norm > 1e-8:
            basis.append(w / norm)
            if len(basis) == rank:
                break
    return np.column_stack(basis)


def hermitian_eigensystem(h, tol=TOL):
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of ``h``.

    Eigenvectors carry a deterministic phase: the first component of largest
    magnitude is real and positive. Degenerate eigenspaces are given the
    basis obtained by Gram-Schmidt on the projected computational basis.
    """
    h = as_operator(h)
    if not is_hermitian(h, tol):
        raise NotHermitian("operator is not Hermitian")
    h = 0.5 * (h + h.conj().T)
    evals, evecs = np.linalg.eigh(h)
    scale = max(1.0, float(np.max(np.abs(evals))))
    out = evecs.copy()
    start = 0
    n = len(evals)
    while start < n:
        stop = start + 1
        while stop < n and evals[stop] - evals[start] <= 1e-9 * scale:
            stop += 1
        if stop - start > 1:
            out[:, start:stop] = _canonical_subspace_basis(evecs[:, start:stop])
        start = stop
    for k in range(n):
        out[:, k] = _fix_phase(out[:, k])
    return evals, out


def propagator(h, t, hbar=1.0):
    """U(t) = exp(-i H t / hbar), built from the spectral decomposition of H."""
    evals, vecs = hermitian_eigensystem(h)
    if t == 0:
        return np.eye(len(evals), dtype=complex)
    phases = np.exp(-1j * evals * (t / hbar))
    return (vecs * phases) @ vecs.conj().T


def partial_trace(m, subsystem, dims=(2, 2)):
    """Trace out ``subsystem`` ('A' or 'B') of an operator on H_A ⊗ H_B."""
    m = np.asarray(m, dtype=complex)
    d_a, d_b = dims
    if m.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatch(f"operator of shape {m.shape} does not match dims {dims}")
    t = m.reshape(d_a, d_b, d_a, d_b)
    if subsystem == "B":
        return np.einsum("ikjk->ij", t)
    if subsystem == "A":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def reduced_density_matrix(psi, keep="A", dims=(2, 2)):
    traced = "B" if keep == "A" else "A"
    return partial_trace(projector(psi), traced, dims)


def hilbert_schmidt_norm(m):
    """sqrt(Tr M†M), with the unnormalized trace."""
    return float(np.linalg.norm(np.asarray(m, dtype=complex), "fro"))


def spectral_norm(m):
    """Largest singular value."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))
