"""Eigenvalue lower bounds on shortest-tour length.

The common scheme: compress the negated distance matrix onto the
mean-zero subspace (see linalg.center_restrict), read off its spectrum,
and pair the eigenvalues against the spectrum a tour cycle would have.
Three variants, by what the compressed matrix supports:

  phi_symmetric  symmetric distances; pairs tour-cycle coefficients
                 1 - cos(2 pi k / n) (ascending) with the eigenvalues of
                 the compression (descending).
  phi_normal     asymmetric distances whose compression is normal; pairs
                 the complex tour-cycle values 1 - omega^j against the
                 complex spectrum, minimized exactly over all bijections
                 by a linear assignment solve.
  phi_general    any distances; bounds the symmetric and antisymmetric
                 parts separately and adds the two pairings.

All three are valid lower bounds on the length of every closed tour, and
they agree when the matrix is symmetric.  Affine behaviour is exact:
shifting all off-diagonal distances by beta adds beta * n to each bound,
scaling by alpha >= 0 multiplies it by alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InvalidDimension, NonzeroDiagonal, NotNormal, NotSymmetric
from .linalg import (
    DEFAULT_TOL,
    antisym_spectrum,
    as_square,
    center_restrict,
    frobenius_scale,
    is_normal,
    is_psd,
    is_symmetric,
    normal_complex_spectrum,
)

_DIAG_TOL = 1e-12


def check_distance_matrix(D, tol: float = DEFAULT_TOL, symmetric: bool = False) -> np.ndarray:
    """Validate a distance matrix: square, finite, n >= 3, zero diagonal.

    The diagonal must vanish to within 1e-12 * max(1, ||D||_F); it is never
    silently zeroed.  With symmetric=True also insists on D = D^T.
    """
    A = as_square(D, "distance matrix")
    if A.shape[0] < 3:
        raise InvalidDimension("tours need at least 3 cities")
    if np.abs(np.diagonal(A)).max() > _DIAG_TOL * frobenius_scale(A):
        raise NonzeroDiagonal("distance matrix must have a zero diagonal")
    if symmetric and not is_symmetric(A, tol):
        raise NotSymmetric("this bound requires a symmetric distance matrix")
    return A


def tsp_coefficients(n: int) -> np.ndarray:
    """The n - 1 values 1 - cos(2 pi k / n), k = 1..n-1, sorted ascending.

    These are the nontrivial eigenvalues of I - (C + C^T)/2 for the cyclic
    shift C: the spectrum every tour's adjacency structure contributes.
    """
    if n < 3:
        raise InvalidDimension("tours need at least 3 cities")
    k = np.arange(1, n)
    return np.sort(1.0 - np.cos(2.0 * np.pi * k / n))


def restricted_spectrum(D, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Descending eigenvalues of the symmetrized compression of -D."""
    A = check_distance_matrix(D, tol)
    R = center_restrict(A)
    R = 0.5 * (R + R.T)
    return np.sort(np.linalg.eigvalsh(R))[::-1]


def phi_symmetric(D, tol: float = DEFAULT_TOL) -> float:
    """Spectral lower bound on shortest-tour length for symmetric distances.

    Pairs tsp_coefficients(n) ascending with the compressed spectrum
    descending; by the rearrangement inequality this is the cheapest pairing,
    and it lower-bounds the length of every Hamiltonian cycle through D.
    """
    A = check_distance_matrix(D, tol, symmetric=True)
    mu = restricted_spectrum(A, tol)
    return float(tsp_coefficients(A.shape[0]) @ mu)


def phi_normal(D, tol: float = DEFAULT_TOL) -> float:
    """Assignment-sharpened bound for distances with a normal compression.

    Requires center_restrict(D) to commute with its transpose (circulant
    distance matrices are the model case; symmetric ones qualify trivially).
    Minimizes sum_j Re((1 - omega^j) w_{sigma(j)}) over all bijections sigma
    between the tour-cycle frequencies j = 1..n-1 and the complex compressed
    spectrum w, via an exact linear assignment solve (Jonker-Volgenant).
    """
    A = check_distance_matrix(D, tol)
    R = center_restrict(A)
    if not is_normal(R, tol):
        raise NotNormal("compression of -D is not normal; use phi_general instead")
    w = normal_complex_spectrum(R, tol)
    n = A.shape[0]
    ang = 2.0 * np.pi * np.arange(1, n) / n
    # Re((1 - e^{i ang}) (s + i t)) = (1 - cos ang) s + sin(ang) t
    cost = np.outer(1.0 - np.cos(ang), w.real) + np.outer(np.sin(ang), w.imag)
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].sum())


def phi_general(D, tol: float = DEFAULT_TOL) -> float:
    """Split bound valid for every distance matrix with zero diagonal.

    Bounds the symmetric part of the compression with the cosine pairing and
    the antisymmetric part with the sine pairing, each by rearrangement, and
    adds them.  Coarser than phi_normal when both apply, but needs no
    structure at all.
    """
    A = check_distance_matrix(D, tol)
    n = A.shape[0]
    R = center_restrict(A)
    S = 0.5 * (R + R.T)
    K = 0.5 * (R - R.T)
    mu_s = np.sort(np.linalg.eigvalsh(S))[::-1]
    mu_a = antisym_spectrum(K, tol)
    ang = 2.0 * np.pi * np.arange(1, n) / n
    a = np.sort(1.0 - np.cos(ang))
    b = np.sort(np.sin(ang))
    return float(a @ mu_s + b @ mu_a)


def n2_bound(D, tol: float = DEFAULT_TOL) -> float:
    """Half the sum, over cities, of the two cheapest incident distances.

    Every tour enters and leaves each city once, so this is a lower bound on
    symmetric tour length.  It is the classical degree-two counting bound and
    serves as the non-spectral baseline.
    """
    A = check_distance_matrix(D, tol, symmetric=True)
    n = A.shape[0]
    off = A[~np.eye(n, dtype=bool)].reshape(n, n - 1)
    two = np.sort(off, axis=1)[:, :2]
    return float(0.5 * two.sum())


def mean_distance(D, tol: float = DEFAULT_TOL) -> float:
    """Mean off-diagonal entry."""
    A = check_distance_matrix(D, tol)
    n = A.shape[0]
    return float(A.sum() / (n * (n - 1)))


def schoenberg_edm_check(D, tol: float = DEFAULT_TOL) -> bool:
    """True iff -P D P is positive semidefinite, P = I - J/n the centering projector.

    This is the classical embeddability criterion applied directly to D
    (not to elementwise squares), which is the form the spectral bound
    interacts with: it holds exactly when the compressed spectrum is
    non-negative, and it does hold for every matrix of pairwise Euclidean
    point distances.
    """
    A = check_distance_matrix(D, tol, symmetric=True)
    n = A.shape[0]
    P = np.eye(n) - np.ones((n, n)) / n
    M = -(P @ A @ P)
    return is_psd(0.5 * (M + M.T), tol)


def euclidean_floor(D, tol: float = DEFAULT_TOL) -> float:
    """Closed-form floor n (1 - cos(2 pi / n)) * mean_distance(D).

    A lower bound on phi_symmetric(D) whenever the compressed spectrum is
    non-negative (schoenberg_edm_check passes), which covers every matrix of
    Euclidean point-to-point distances.  The value is computed regardless;
    its bound interpretation needs that hypothesis.
    """
    A = check_distance_matrix(D, tol, symmetric=True)
    n = A.shape[0]
    return float(n * (1.0 - np.cos(2.0 * np.pi / n)) * mean_distance(A, tol))


@dataclass
class BoundReport:
    """Everything the bound machinery can say about one distance matrix.

    Fields that require structure the matrix lacks are None: phi_symmetric,
    n2 and euclidean_floor need symmetry, phi_normal needs a normal
    compression, euclidean_floor additionally needs the embeddability check
    to pass.  `mu` is the descending spectrum of the symmetrized compression
    and `psd` says whether it is non-negative (at tolerance).  `phi` is the
    sharpest applicable bound: phi_symmetric when symmetric, else phi_normal
    when defined, else phi_general.
    """

    n: int
    symmetric: bool
    normal: bool
    psd: bool
    phi: float
    phi_symmetric: float | None
    phi_normal: float | None
    phi_general: float
    n2: float | None
    euclidean_floor: float | None
    mean_distance: float
    mu: list[float]


def bound_report(D, tol: float = DEFAULT_TOL) -> BoundReport:
    """Run every applicable bound on D and collect the results."""
    A = check_distance_matrix(D, tol)
    n = A.shape[0]
    sym = is_symmetric(A, tol)
    R = center_restrict(A)
    normal = is_normal(R, tol)
    mu = restricted_spectrum(A, tol)
    psd = bool(mu[-1] >= -tol * frobenius_scale(0.5 * (R + R.T)))

    p_general = phi_general(A, tol)
    p_sym = phi_symmetric(A, tol) if sym else None
    p_normal = phi_normal(A, tol) if normal else None
    n2 = n2_bound(A, tol) if sym else None
    floor = None
    if sym and schoenberg_edm_check(A, tol):
        floor = euclidean_floor(A, tol)

    if sym:
        phi = p_sym
    elif normal:
        phi = p_normal
    else:
        phi = p_general

    return BoundReport(
        n=n,
        symmetric=sym,
        normal=normal,
        psd=psd,
        phi=float(phi),
        phi_symmetric=p_sym,
        phi_normal=p_normal,
        phi_general=p_general,
        n2=n2,
        euclidean_floor=floor,
        mean_distance=mean_distance(A, tol),
        mu=[float(x) for x in mu],
    )
