"""Dense symmetric / antisymmetric / normal eigenstructure helpers.

All routines work on real square matrices and promise deterministic output
ordering: real spectra come back sorted descending, complex spectra sorted
descending by real part with ties broken by descending imaginary part.
Tolerances are absolute-relative hybrids: a tolerance ``tol`` means
``tol * max(1, ||M||_F)`` so that decisions are scale-free for large
matrices but do not collapse for tiny ones.

Complex arithmetic never enters the computation.  Antisymmetric and normal
spectra are obtained from real symmetric eigenproblems only, which keeps
results reproducible across BLAS builds to tight tolerance.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    InvalidDimension,
    InvalidMatrix,
    NotAntisymmetric,
    NotNormal,
    NotSymmetric,
)

DEFAULT_TOL = 1e-8


def as_square(M, name: str = "matrix") -> np.ndarray:
    """Validate and return a float64 square 2-d array copy of `M`."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidMatrix(f"{name} must be square, got shape {A.shape}")
    if A.shape[0] < 1:
        raise InvalidDimension(f"{name} must be at least 1 x 1")
    if not np.all(np.isfinite(A)):
        raise InvalidMatrix(f"{name} contains non-finite entries")
    return A


def frobenius_scale(M: np.ndarray) -> float:
    """Hybrid tolerance scale max(1, ||M||_F)."""
    return max(1.0, float(np.linalg.norm(M)))


def is_symmetric(M, tol: float = DEFAULT_TOL) -> bool:
    A = as_square(M)
    return float(np.linalg.norm(A - A.T)) <= tol * frobenius_scale(A)


def is_antisymmetric(M, tol: float = DEFAULT_TOL) -> bool:
    A = as_square(M)
    return float(np.linalg.norm(A + A.T)) <= tol * frobenius_scale(A)


def is_normal(M, tol: float = DEFAULT_TOL) -> bool:
    """True iff M commutes with its transpose.

    The commutator is quadratic in M, so the scale here is
    max(1, ||M||_F^2) rather than the plain Frobenius scale.
    """
    A = as_square(M)
    comm = A @ A.T - A.T @ A
    scale = max(1.0, float(np.linalg.norm(A)) ** 2)
    return float(np.linalg.norm(comm)) <= tol * scale


def is_psd(S, tol: float = DEFAULT_TOL) -> bool:
    """True iff the symmetric matrix S has no eigenvalue below -tol*scale."""
    A = as_square(S)
    if not is_symmetric(A, tol):
        raise NotSymmetric("positive semidefiniteness is only defined here for symmetric input")
    A = 0.5 * (A + A.T)
    w = np.linalg.eigvalsh(A)
    return float(w[0]) >= -tol * frobenius_scale(A)


def sym_eigenvalues(S, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted descending."""
    A = as_square(S)
    if not is_symmetric(A, tol):
        raise NotSymmetric("sym_eigenvalues requires a symmetric matrix")
    A = 0.5 * (A + A.T)
    return np.sort(np.linalg.eigvalsh(A))[::-1]


def householder_basis(n: int) -> np.ndarray:
    """Deterministic orthonormal basis of the hyperplane orthogonal to all-ones.

    Returns the n x (n-1) matrix formed by columns 2..n of the Householder
    reflection H = I - 2 w w^T / (w^T w) with w = e_1 - (1/sqrt(n)) 1.
    H maps e_1 to the normalized all-ones vector, so the remaining columns
    are an orthonormal basis of its orthogonal complement.  The basis is a
    fixed function of n: no eigensolver, no sign ambiguity.
    """
    if n < 2:
        raise InvalidDimension("need n >= 2 for a nontrivial centered subspace")
    w = -np.full(n, 1.0 / np.sqrt(n))
    w[0] += 1.0
    H = np.eye(n) - (2.0 / (w @ w)) * np.outer(w, w)
    return H[:, 1:]


def center_restrict(D) -> np.ndarray:
    """Restriction of -D to the subspace orthogonal to the all-ones vector.

    Computes R = -Q^T D Q where Q = householder_basis(n).  R is (n-1) x (n-1)
    and represents the compression of -D to the mean-zero subspace in a fixed
    orthonormal coordinate frame.  If D is symmetric, R is symmetric up to
    roundoff; callers that feed R to a symmetric eigensolver symmetrize it
    explicitly first.
    """
    A = as_square(D, "distance matrix")
    Q = householder_basis(A.shape[0])
    return -(Q.T @ A @ Q)


def antisym_spectrum(K, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Imaginary parts of the spectrum of an antisymmetric matrix, descending.

    An antisymmetric K has eigenvalues coming in pairs +/- i*theta with
    theta >= 0, plus a zero for odd dimension.  The thetas are recovered as
    singular values of K through the symmetric eigenproblem for K^T K; the
    two copies of each singular value are paired consecutively and averaged
    so the output is exactly symmetric around zero and sums to exactly 0.
    """
    A = as_square(K)
    if not is_antisymmetric(A, tol):
        raise NotAntisymmetric("antisym_spectrum requires an antisymmetric matrix")
    A = 0.5 * (A - A.T)
    n = A.shape[0]
    sq = np.linalg.eigvalsh(A.T @ A)
    s = np.sqrt(np.maximum(sq, 0.0))[::-1]
    m = n // 2
    theta = 0.5 * (s[0 : 2 * m : 2] + s[1 : 2 * m : 2])
    out = np.concatenate([theta, np.zeros(n % 2), -theta[::-1]])
    return out


def normal_complex_spectrum(M, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Complex spectrum of a real normal matrix via two real eigenproblems.

    Writes M = S + K with S symmetric and K antisymmetric.  For normal M
    these commute, so each eigenspace of S is invariant under K; the
    restriction of K to an eigenspace is again antisymmetric and supplies the
    imaginary parts sitting on top of that eigenvalue's real part.

    Eigenvalues of S closer than tol * max(1, ||S||_F) are grouped into one
    eigenspace (their mean is used as the group's real part).  Raises
    NotNormal when M fails the commutator test at the same tolerance.
    Output is sorted by descending real part, ties by descending imaginary
    part; conjugate pairs are exact by construction.
    """
    A = as_square(M)
    if not is_normal(A, tol):
        raise NotNormal("matrix does not commute with its transpose")
    S = 0.5 * (A + A.T)
    K = 0.5 * (A - A.T)
    w, V = np.linalg.eigh(S)
    w, V = w[::-1], V[:, ::-1]
    gap = tol * frobenius_scale(S)

    out = np.empty(A.shape[0], dtype=complex)
    pos = 0
    start = 0
    while start < len(w):
        stop = start + 1
        while stop < len(w) and w[stop - 1] - w[stop] <= gap:
            stop += 1
        real = float(np.mean(w[start:stop]))
        Vg = V[:, start:stop]
        B = Vg.T @ K @ Vg
        B = 0.5 * (B - B.T)
        if B.shape[0] == 1:
            imags = np.zeros(1)
        else:
            imags = antisym_spectrum(B, tol)
        for a in imags:
            out[pos] = complex(real, a)
            pos += 1
        start = stop

    order = np.lexsort((-out.imag, -out.real))
    return out[order]


def vn_trace_range(A, B, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Sharp range of tr(A Pi B Pi^T) over orthogonal conjugations of B.

    For symmetric A, B with spectra lambda (descending) and mu, the trace of
    A Q B Q^T over orthogonal Q ranges over exactly
    [sum_j lambda_j mu_{n+1-j}, sum_j lambda_j mu_j]: opposite-sorted pairing
    at the bottom, same-sorted at the top.  Returns (lo, hi).
    """
    lam = sym_eigenvalues(A, tol)
    mu = sym_eigenvalues(B, tol)
    if lam.shape != mu.shape:
        raise InvalidDimension("vn_trace_range requires matrices of equal size")
    hi = float(lam @ mu)
    lo = float(lam @ mu[::-1])
    return lo, hi
