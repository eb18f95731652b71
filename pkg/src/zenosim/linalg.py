"""Dense complex linear algebra used by every other module.

All operators are plain ``numpy.ndarray`` objects with dtype ``complex128``;
state vectors are 1-D arrays. Matrices stay dense throughout: the largest
register handled at desk scale is 2^6 target times 2^5 ancilla dimensions,
i.e. 2048.

Tolerances are centralized here. Unless an operation states otherwise,
Hermiticity and unitarity are checked to 1e-10 and equality assertions in
callers should use 1e-9.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-10
EQUALITY_TOL = 1e-9

SPECTRAL_NORM_RTOL = 1e-10
SPECTRAL_NORM_MAX_ITER = 10_000


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex128 array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce input to a 1-D complex128 array."""
    w = np.asarray(v, dtype=complex)
    if w.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {w.shape}")
    return w


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def apply(a, v) -> np.ndarray:
    """Matrix-vector product a @ v."""
    a = as_matrix(a)
    v = as_vector(v)
    if a.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ vector of length {v.shape[0]}")
    return a @ v


def is_hermitian(a, tol: float = HERMITICITY_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return float(np.max(np.abs(a - a.conj().T), initial=0.0)) <= tol


def is_unitary(a, tol: float = UNITARITY_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    eye = np.eye(a.shape[0])
    return float(np.max(np.abs(a.conj().T @ a - eye), initial=0.0)) <= tol


def hermitian_eigen(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition h = U diag(w) U^dagger of a Hermitian matrix.

    Returns eigenvalues in ascending order and the unitary of column
    eigenvectors. Input must be Hermitian to within 1e-10.
    """
    h = as_matrix(h)
    if not is_hermitian(h):
        raise ValueError("matrix is not Hermitian within tolerance 1e-10")
    try:
        w, u = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise ConvergenceError(f"eigendecomposition did not converge: {exc}") from exc
    return w, u


def matexp_hermitian(h, theta: float) -> np.ndarray:
    """Unitary exp(-i * theta * h) for Hermitian h, via eigendecomposition."""
    w, u = hermitian_eigen(h)
    phases = np.exp(-1j * float(theta) * w)
    return (u * phases) @ u.conj().T


def spectral_norm(
    a,
    rtol: float = SPECTRAL_NORM_RTOL,
    max_iter: int = SPECTRAL_NORM_MAX_ITER,
) -> float:
    """Largest singular value, via power iteration on a^dagger a.

    The start vector is the normalized all-ones vector so repeated runs are
    reproducible; if the Rayleigh quotient stagnates at zero (the start
    vector fell into the null space) the iteration restarts from
    computational basis vectors. Raises ConvergenceError when the iteration
    cap is exceeded, reporting the last iterate and its residual.
    """
    a = as_matrix(a)
    if a.size == 0:
        return 0.0
    if not np.any(a):
        return 0.0
    m = a.conj().T @ a
    dim = m.shape[0]
    starts = [np.ones(dim) / np.sqrt(dim)]
    starts.extend(np.eye(dim)[i] for i in range(dim))

    for start in starts:
        v = start.astype(complex)
        prev = 0.0
        rayleigh = 0.0
        stagnated = False
        for _ in range(max_iter):
            w = m @ v
            rayleigh = float(np.real(np.vdot(v, w)))
            norm_w = float(np.linalg.norm(w))
            if norm_w == 0.0 or rayleigh <= 0.0:
                stagnated = True
                break
            v = w / norm_w
            if abs(rayleigh - prev) <= rtol * max(rayleigh, np.finfo(float).tiny):
                return float(np.sqrt(rayleigh))
            prev = rayleigh
        if stagnated:
            continue
        residual = float(np.linalg.norm(m @ v - rayleigh * v))
        raise ConvergenceError(
            f"power iteration did not converge in {max_iter} iterations: "
            f"last estimate {np.sqrt(max(rayleigh, 0.0)):.16g}, residual {residual:.3e}"
        )
    # Every start vector was annihilated; only possible for the zero matrix,
    # which is handled above, but keep a safe answer.
    return 0.0


def trace_norm(a) -> float:
    """Sum of singular values of a square matrix.

    Uses a direct singular value decomposition: forming a^dagger a and
    taking square roots of its eigenvalues turns the O(eps * norm^2)
    rounding of zero modes into O(sqrt(eps) * norm) errors, which is too
    coarse for rank-deficient inputs such as Choi matrices of unitary
    channels.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("trace norm requires a square matrix")
    try:
        singular_values = np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise ConvergenceError(f"singular value decomposition did not converge: {exc}") from exc
    return float(np.sum(singular_values))
