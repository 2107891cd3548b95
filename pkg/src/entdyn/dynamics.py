# src/entdyn/dynamics.py
"""Composite-state time evolution and reduction to the qubit-qutrit pair.

The composite state is rho(0) = rho_AB (x) rho_C with dims (2, 3, 2) and
the full generator is the pair interaction lifted with an identity on
the auxiliary factor, so U_full(t) = U_pair(t) (x) I_2. The auxiliary
qubit is a spectator: tracing it out returns the pair evolved on its
own, identically for every auxiliary amplitude.

A Propagator caches the one eigendecomposition of the 6x6 interaction
matrix per spec and synthesizes U(t_k) from the cached eigenpairs; the
negativity time series is evaluated with a grid-vectorized kernel
(batched conjugation, partial transpose and eigenvalues over the time
axis) that tests pin against the op-by-op route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import EigenSystem, expm_i_hermitian, hermitian_eig
from .model import (DMCoupling, PureQubit, TwoParamState, build_aux_qubit,
                    build_hamiltonian_bc, build_two_param_state, embed_full)
from .states import NEG_CLAMP, DensityMatrix, partial_trace, tensor_product

AUX_DEFAULT = PureQubit(1.0, 0.0)


@dataclass(frozen=True)
class EvolutionSpec:
    """One evolution setup: state, coupling, time grid, aux preparation."""

    state: TwoParamState
    coupling: DMCoupling
    t_max: float = 15.0
    t_steps: int = 600
    aux: PureQubit = AUX_DEFAULT

    def __post_init__(self):
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.t_steps < 2:
            raise ValueError(f"t_steps must be >= 2, got {self.t_steps}")

    @property
    def times(self) -> np.ndarray:
        """Uniform inclusive grid t_k = k * t_max / (t_steps - 1)."""
        return np.linspace(0.0, self.t_max, self.t_steps)


@dataclass(frozen=True)
class NegativityTrace:
    """Negativity sampled on a time grid."""

    times: np.ndarray
    values: np.ndarray


def evolve_full(rho0: DensityMatrix, h_full, t: float) -> DensityMatrix:
    """U(t) rho0 U(t)^dagger with U(t) = exp(-i t h_full)."""
    u = expm_i_hermitian(h_full, t)
    return DensityMatrix(u @ rho0.mat @ u.conj().T, rho0.dims)


def pair_unitaries(eig: EigenSystem, times: np.ndarray) -> np.ndarray:
    """Stack of U(t_k) = V exp(-i t_k w) V^dagger from cached eigenpairs."""
    w, v = eig.eigenvalues, eig.eigenvectors
    phases = np.exp(-1j * np.outer(np.asarray(times, float), w))
    return (v[None, :, :] * phases[:, None, :]) @ v.conj().T


def negativity_kernel(rho_pair: np.ndarray, eig: EigenSystem,
                      times: np.ndarray) -> np.ndarray:
    """Pair negativity over a time grid, vectorized over the grid axis.

    Evolves the 6x6 pair state with the cached interaction eigenpairs,
    partial-transposes the qubit index and sums the absolute partial-
    transpose eigenvalues, clamped exactly as the scalar negativity op.
    """
    u = pair_unitaries(eig, times)
    rt = u @ rho_pair[None, :, :] @ u.conj().transpose(0, 2, 1)
    pt = rt.reshape(-1, 2, 3, 2, 3).transpose(0, 3, 2, 1, 4).reshape(-1, 6, 6)
    tn = np.abs(np.linalg.eigvalsh(pt)).sum(axis=1)
    vals = tn - 1.0
    vals[vals < NEG_CLAMP] = 0.0
    return vals


class Propagator:
    """Cached evolution engine for one EvolutionSpec."""

    def __init__(self, spec: EvolutionSpec):
        self.spec = spec
        self.rho_pair0 = build_two_param_state(spec.state.alpha,
                                               spec.state.gamma)
        aux = build_aux_qubit(spec.aux.c0, spec.aux.c1)
        self.rho_full0 = tensor_product(self.rho_pair0, aux)
        self.h_pair = build_hamiltonian_bc(spec.coupling)
        self.h_full = embed_full(self.h_pair)
        self.eig = hermitian_eig(self.h_pair)

    def pair_unitary(self, t: float) -> np.ndarray:
        return pair_unitaries(self.eig, np.array([t]))[0]

    def full_state(self, t: float) -> DensityMatrix:
        u = np.kron(self.pair_unitary(t), np.eye(2, dtype=complex))
        return DensityMatrix(u @ self.rho_full0.mat @ u.conj().T, (2, 3, 2))

    def reduced(self, t: float) -> DensityMatrix:
        return partial_trace(self.full_state(t), 2)

    def negativity_values(self, times: np.ndarray) -> np.ndarray:
        return negativity_kernel(self.rho_pair0.mat, self.eig, times)


@lru_cache(maxsize=128)
def propagator(spec: EvolutionSpec) -> Propagator:
    return Propagator(spec)


def reduced_ab(spec: EvolutionSpec, t: float) -> DensityMatrix:
    """Reduced pair state at time t: evolve the composite, trace out the
    auxiliary qubit. Identical for every auxiliary amplitude."""
    return propagator(spec).reduced(t)


def negativity_trace(spec: EvolutionSpec) -> NegativityTrace:
    """Negativity of the reduced pair state over the spec's time grid."""
    prop = propagator(spec)
    times = spec.times
    values = prop.negativity_values(times)
    times.flags.writeable = False
    values.flags.writeable = False
    return NegativityTrace(times=times, values=values)
