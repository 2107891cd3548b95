# src/entdyn/linalg.py
"""Dense complex matrix arithmetic for small operators (dim <= 12).

Matrices are square numpy arrays of complex128. The eigensolver is a
cyclic Jacobi iteration written for Hermitian input; the matrix
exponential is synthesized from the eigendecomposition, with an
independent scaling-and-squaring series implementation kept around as a
cross-check oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HERM_TOL = 1e-12
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def complex_matrix(entries) -> np.ndarray:
    """Validate and return a square complex matrix (no silent truncation)."""
    a = np.asarray(entries, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def frobenius(a: np.ndarray) -> float:
    """Frobenius norm sqrt(sum |a_ij|^2)."""
    return float(math.sqrt(np.sum(np.abs(np.asarray(a)) ** 2).real))


def is_hermitian(a: np.ndarray, tol: float = HERM_TOL) -> bool:
    """True when ||a - a^dagger||_F <= tol * max(1, ||a||_F)."""
    a = np.asarray(a)
    return frobenius(a - a.conj().T) <= tol * max(1.0, frobenius(a))


def hermitianize(a: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (a + a^dagger)/2."""
    return (a + a.conj().T) / 2


def mat_mul(a, b) -> np.ndarray:
    """Matrix product of two equally sized square matrices."""
    a = complex_matrix(a)
    b = complex_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return complex_matrix(a).conj().T.copy()


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues (ascending, real) and unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(a, tol: float = JACOBI_TOL,
                  max_sweeps: int = JACOBI_MAX_SWEEPS) -> EigenSystem:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Eigenvalues come out ascending (ties keep first-occurrence column
    order); eigenvector columns form a unitary matrix. Convergence is
    declared when the off-diagonal Frobenius mass drops below
    tol * max(1, ||a||_F).

    Raises ValueError for non-Hermitian input (beyond 1e-12) and
    RuntimeError if the sweep cap is exhausted.
    """
    a = complex_matrix(a)
    if not is_hermitian(a):
        raise ValueError("hermitian_eig: input is not Hermitian within 1e-12")
    # defensive symmetrization absorbs round-off from upstream products
    A = hermitianize(a)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = max(1.0, frobenius(A))

    for _ in range(max_sweeps):
        off = frobenius(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) == 0.0:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                # unitary 2x2: pull out the phase of apq, then rotate the
                # real symmetric block [[app, |apq|], [|apq|, aqq]]
                mag = abs(apq)
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                t = 1.0 / (tau + math.copysign(math.hypot(1.0, tau), tau))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                u_pp, u_pq = c, s
                u_qp, u_qq = -s * phase.conjugate(), c * phase.conjugate()
                # A <- U^dagger A U, columns first, then rows
                colp = A[:, p] * u_pp + A[:, q] * u_qp
                colq = A[:, p] * u_pq + A[:, q] * u_qq
                A[:, p] = colp
                A[:, q] = colq
                rowp = np.conj(u_pp) * A[p, :] + np.conj(u_qp) * A[q, :]
                rowq = np.conj(u_pq) * A[p, :] + np.conj(u_qq) * A[q, :]
                A[p, :] = rowp
                A[q, :] = rowq
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                # accumulate V <- V U
                vp = V[:, p] * u_pp + V[:, q] * u_qp
                vq = V[:, p] * u_pq + V[:, q] * u_qq
                V[:, p] = vp
                V[:, q] = vq
    else:
        raise RuntimeError(
            f"hermitian_eig: no convergence within {max_sweeps} sweeps")

    w = np.diag(A).real.copy()
    order = np.argsort(w, kind="stable")
    return EigenSystem(eigenvalues=w[order], eigenvectors=V[:, order])


def expm_i_hermitian(h, theta: float) -> np.ndarray:
    """exp(-i * theta * h) for Hermitian h via eigendecomposition."""
    es = hermitian_eig(h)
    w, V = es.eigenvalues, es.eigenvectors
    return (V * np.exp(-1j * theta * w)) @ V.conj().T


def expm_series_oracle(h, theta: float) -> np.ndarray:
    """exp(-i * theta * h) by scaling-and-squaring of the Taylor series.

    The argument is halved until its Frobenius norm is <= 1/2; 25 series
    terms then leave a truncation remainder below 0.5^26/26! ~ 4e-35,
    far under 1e-12 even after the squarings undo the scaling. Works for
    any square matrix; serves as an independent oracle for
    expm_i_hermitian.
    """
    m = -1j * theta * complex_matrix(h)
    nrm = frobenius(m)
    squarings = 0 if nrm <= 0.5 else int(math.ceil(math.log2(nrm / 0.5)))
    m = m / (2.0 ** squarings)
    n = m.shape[0]
    total = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 26):
        term = term @ m / k
        total = total + term
    for _ in range(squarings):
        total = total @ total
    return total


def trace_norm_hermitian(a) -> float:
    """Trace norm ||a||_1 of a Hermitian matrix: sum of |eigenvalues|."""
    es = hermitian_eig(a)
    return float(np.sum(np.abs(es.eigenvalues)))
