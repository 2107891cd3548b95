# src/entdyn/states.py
"""Density-matrix structure operations over labeled subsystem factors.

A DensityMatrix is a square complex matrix together with the ordered
list of subsystem dimensions whose product equals the matrix dimension.
The composite basis index is row-major over the factors: for dims
(d0, d1, ...), flat index = ((i0*d1 + i1)*d2 + i2)... Partial trace and
partial transpose are written with explicit index arithmetic so the
convention stays auditable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod

import numpy as np

from .linalg import (complex_matrix, frobenius, hermitian_eig, is_hermitian,
                     trace_norm_hermitian)

TRACE_TOL = 1e-10
PSD_TOL = 1e-9
NEG_CLAMP = 1e-12


@dataclass(frozen=True)
class DensityMatrix:
    """Quantum state: Hermitian, unit-trace matrix with subsystem dims."""

    mat: np.ndarray
    dims: tuple = field(default=None)

    def __post_init__(self):
        m = complex_matrix(self.mat)
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)
        dims = tuple(int(d) for d in self.dims) if self.dims else (m.shape[0],)
        object.__setattr__(self, "dims", dims)
        if prod(dims) != m.shape[0]:
            raise ValueError(
                f"dims {dims} do not factor dimension {m.shape[0]}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr} is not 1 within {TRACE_TOL}")
        if not is_hermitian(m, TRACE_TOL):
            raise ValueError("matrix is not Hermitian within 1e-10")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def validate(self) -> None:
        """Full validity check including positivity (needs an eigensolve)."""
        w = hermitian_eig(self.mat).eigenvalues
        if w[0] < -PSD_TOL:
            raise ValueError(f"minimum eigenvalue {w[0]:.3e} below -{PSD_TOL}")


def _flat(dims, multi) -> int:
    """Row-major flat index of a multi-index."""
    f = 0
    for d, m in zip(dims, multi):
        f = f * d + m
    return f


def tensor_product(a, b):
    """Kronecker product; composite row index = i_a * dim_b + i_b.

    DensityMatrix inputs produce a DensityMatrix whose dims list is the
    concatenation; plain matrices produce a plain matrix.
    """
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.mat, b.mat), a.dims + b.dims)
    am = a.mat if isinstance(a, DensityMatrix) else complex_matrix(a)
    bm = b.mat if isinstance(b, DensityMatrix) else complex_matrix(b)
    return np.kron(am, bm)


def partial_trace(rho: DensityMatrix, subsystem: int) -> DensityMatrix:
    """Trace out one subsystem, keeping the rest in their original order."""
    dims = rho.dims
    if not 0 <= subsystem < len(dims):
        raise ValueError(f"subsystem {subsystem} invalid for dims {dims}")
    keep = [k for k in range(len(dims)) if k != subsystem]
    dims_keep = tuple(dims[k] for k in keep)
    d_sub = dims[subsystem]
    kept = list(itertools.product(*[range(d) for d in dims_keep]))
    out = np.zeros((len(kept), len(kept)), dtype=complex)
    for i, mi in enumerate(kept):
        for j, mj in enumerate(kept):
            acc = 0.0 + 0.0j
            for s in range(d_sub):
                fi = _flat(dims, mi[:subsystem] + (s,) + mi[subsystem:])
                fj = _flat(dims, mj[:subsystem] + (s,) + mj[subsystem:])
                acc += rho.mat[fi, fj]
            out[i, j] = acc
    reduced = DensityMatrix(out, dims_keep)
    reduced.validate()
    return reduced


def partial_transpose(rho: DensityMatrix, subsystem: int) -> np.ndarray:
    """Transpose one subsystem's indices; the result is Hermitian but
    in general not positive (its negative eigenvalues witness
    entanglement)."""
    dims = rho.dims
    if not 0 <= subsystem < len(dims):
        raise ValueError(f"subsystem {subsystem} invalid for dims {dims}")
    multis = list(itertools.product(*[range(d) for d in dims]))
    out = np.zeros_like(rho.mat)
    for i, mi in enumerate(multis):
        for j, mj in enumerate(multis):
            ri = list(mi)
            cj = list(mj)
            ri[subsystem], cj[subsystem] = mj[subsystem], mi[subsystem]
            out[_flat(dims, ri), _flat(dims, cj)] = rho.mat[i, j]
    return out


def clamp_negativity(value: float) -> float:
    """Round eigenvalue dust below 1e-12 down to an exact zero."""
    return 0.0 if value < NEG_CLAMP else float(value)


def negativity(rho: DensityMatrix, subsystem: int) -> float:
    """Trace-norm negativity across the cut at `subsystem`.

    N = ||rho^T_sub||_1 - 1, i.e. twice the absolute sum of the negative
    partial-transpose eigenvalues, clamped to an exact 0 below 1e-12.
    On the two-parameter qubit-qutrit family this equals
    max{0, 2(alpha+gamma) - 1} and reaches 1 on the maximally entangled
    member.
    """
    pt = partial_transpose(rho, subsystem)
    return clamp_negativity(trace_norm_hermitian(pt) - 1.0)
