# src/entdyn/model.py
"""Physical model: the two-parameter qubit-qutrit family, the auxiliary
qubit, the qutrit/qubit generator sets, the x-axis DM interaction
matrix, and the (gamma, alpha) parameter-triangle geometry.

The qubit-qutrit pair uses the basis index a*3 + b (qubit level a
first, so |02> sits at index 2). The two-parameter family is

    rho_AB = alpha (|02><02| + |12><12|)
           + beta (|phi+><phi+| + |phi-><phi-| + |psi+><psi+|)
           + gamma |psi-><psi->,        beta = (1 - 2 alpha - gamma)/3,

a mixture of orthogonal projectors, so its eigenvalues are just the
weights and validity reduces to alpha, gamma, beta >= 0. Along the
constant-sum lines alpha + gamma = s the negativity at t = 0 is the
closed form max{0, 2s - 1}.

Two qutrit operator conventions are provided for the interaction
matrix: "gm23" (the Gell-Mann pair lambda_2, lambda_3) and "spin1"
(the spin-1 operators S_y, S_z). The calibration run in the acceptance
suite selects spin1 as the default; it is the convention that
reproduces the recorded entanglement-death window on the BC edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import complex_matrix
from .states import DensityMatrix

GM23 = "gm23"
SPIN1 = "spin1"
CONVENTIONS = (GM23, SPIN1)
DEFAULT_CONVENTION = SPIN1

PARAM_TOL = 1e-12
NORM_TOL = 1e-12

# region vertices in (alpha, gamma): B=(0,0), A=(1/2,0), C=(0,1/2), D=(0,1)
SEPARABLE_INTERIOR = "SEPARABLE_INTERIOR"
NONSEPARABLE_INTERIOR = "NONSEPARABLE_INTERIOR"
BOUNDARY_BC = "BOUNDARY_BC"
BOUNDARY_BA = "BOUNDARY_BA"
BOUNDARY_AC = "BOUNDARY_AC"
BOUNDARY_CD = "BOUNDARY_CD"
BOUNDARY_AD = "BOUNDARY_AD"
INVALID = "INVALID"


@dataclass(frozen=True)
class TwoParamState:
    """(alpha, gamma) point of the family; beta follows from the trace."""

    alpha: float
    gamma: float

    def __post_init__(self):
        a, g = self.alpha, self.gamma
        if a < -PARAM_TOL or g < -PARAM_TOL or 2 * a + g > 1 + PARAM_TOL:
            raise ValueError(
                f"(alpha, gamma) = ({a}, {g}) outside the validity triangle")

    @property
    def beta(self) -> float:
        return (1.0 - 2.0 * self.alpha - self.gamma) / 3.0


@dataclass(frozen=True)
class PureQubit:
    """Real-amplitude pure qubit c0|0> + c1|1>."""

    c0: float
    c1: float

    def __post_init__(self):
        n = self.c0 ** 2 + self.c1 ** 2
        if abs(n - 1.0) > NORM_TOL:
            raise ValueError(f"amplitudes not normalized: c0^2+c1^2 = {n}")


@dataclass(frozen=True)
class DMCoupling:
    """Interaction strength d_x plus the qutrit operator convention."""

    d_x: float
    convention: str = DEFAULT_CONVENTION

    def __post_init__(self):
        if not math.isfinite(self.d_x):
            raise ValueError(f"d_x must be finite, got {self.d_x}")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}, "
                             f"expected one of {CONVENTIONS}")


@dataclass(frozen=True)
class GeneratorSet:
    """Qutrit and qubit generators entering the interaction matrix."""

    qutrit_y: np.ndarray
    qutrit_z: np.ndarray
    pauli_y: np.ndarray
    pauli_z: np.ndarray


_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_LAMBDA_2 = np.array([[0.0, -1.0j, 0.0],
                      [1.0j, 0.0, 0.0],
                      [0.0, 0.0, 0.0]])
_LAMBDA_3 = np.diag([1.0, -1.0, 0.0]).astype(complex)

_S_Y = np.array([[0.0, -1.0j, 0.0],
                 [1.0j, 0.0, -1.0j],
                 [0.0, 1.0j, 0.0]]) / math.sqrt(2.0)
_S_Z = np.diag([1.0, 0.0, -1.0]).astype(complex)


def generators(convention: str = DEFAULT_CONVENTION) -> GeneratorSet:
    """Generator set for the chosen qutrit convention (ħ = 1)."""
    if convention == GM23:
        qy, qz = _LAMBDA_2, _LAMBDA_3
    elif convention == SPIN1:
        qy, qz = _S_Y, _S_Z
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return GeneratorSet(qutrit_y=qy.copy(), qutrit_z=qz.copy(),
                        pauli_y=_PAULI_Y.copy(), pauli_z=_PAULI_Z.copy())


def bell_like_kets():
    """|phi+>, |phi->, |psi+>, |psi-> on the qubit-qutrit pair.

    The kets live on qutrit levels {0,1} only (pair index a*3 + b):
    |phi±> = (|00> ± |11>)/sqrt(2), |psi±> = (|01> ± |10>)/sqrt(2).
    """
    s = 1.0 / math.sqrt(2.0)
    phi_p = np.zeros(6, dtype=complex)
    phi_m = np.zeros(6, dtype=complex)
    psi_p = np.zeros(6, dtype=complex)
    psi_m = np.zeros(6, dtype=complex)
    phi_p[[0, 4]] = s, s
    phi_m[[0, 4]] = s, -s
    psi_p[[1, 3]] = s, s
    psi_m[[1, 3]] = s, -s
    return phi_p, phi_m, psi_p, psi_m


def build_two_param_state(alpha: float, gamma: float) -> DensityMatrix:
    """Assemble rho_AB(alpha, gamma) as a dims-(2,3) density matrix."""
    st = TwoParamState(alpha, gamma)
    phi_p, phi_m, psi_p, psi_m = bell_like_kets()
    rho = np.zeros((6, 6), dtype=complex)
    rho[2, 2] = st.alpha   # |02><02|
    rho[5, 5] = st.alpha   # |12><12|
    for ket in (phi_p, phi_m, psi_p):
        rho += st.beta * np.outer(ket, ket.conj())
    rho += st.gamma * np.outer(psi_m, psi_m.conj())
    return DensityMatrix(rho, (2, 3))


def build_aux_qubit(c0: float, c1: float) -> DensityMatrix:
    """Projector onto the auxiliary pure state c0|0> + c1|1>."""
    q = PureQubit(c0, c1)
    ket = np.array([q.c0, q.c1], dtype=complex)
    return DensityMatrix(np.outer(ket, ket.conj()), (2,))


def build_hamiltonian_bc(coupling: DMCoupling) -> np.ndarray:
    """6x6 x-axis DM interaction d_x * (Y (x) sigma_z - Z (x) sigma_y)."""
    g = generators(coupling.convention)
    return coupling.d_x * (np.kron(g.qutrit_y, g.pauli_z)
                           - np.kron(g.qutrit_z, g.pauli_y))


def embed_full(h_pair) -> np.ndarray:
    """Lift a 6x6 pair operator to the 12-dim composite (dims (2,3,2)).

    The interaction drives the qubit-qutrit pair; the auxiliary qubit is
    appended as the last tensor factor and stays untouched, which is why
    its amplitudes never reach the reduced pair dynamics.
    """
    h = complex_matrix(h_pair)
    if h.shape != (6, 6):
        raise ValueError(f"expected a 6x6 pair operator, got {h.shape}")
    return np.kron(h, np.eye(2, dtype=complex))


def closed_form_negativity(alpha: float, gamma: float) -> float:
    """max{0, 2(alpha+gamma) - 1}: the t = 0 negativity of the family."""
    TwoParamState(alpha, gamma)
    return max(0.0, 2.0 * (alpha + gamma) - 1.0)


def classify_region(alpha: float, gamma: float, tol: float = 1e-9) -> str:
    """Locate (alpha, gamma) in the parameter triangle.

    Boundary labels win over interior ones and are tested in the order
    BC, BA, AC, CD, AD; the AC line itself belongs to the separable set.
    """
    a, g = alpha, gamma
    if a < -tol or g < -tol or 2 * a + g > 1 + tol:
        return INVALID
    if abs(a) <= tol and g <= 0.5 + tol:
        return BOUNDARY_BC
    if abs(g) <= tol and a <= 0.5 + tol:
        return BOUNDARY_BA
    if abs(a + g - 0.5) <= tol:
        return BOUNDARY_AC
    if abs(a) <= tol:
        return BOUNDARY_CD
    if abs(2 * a + g - 1.0) <= tol and a + g > 0.5 + tol:
        return BOUNDARY_AD
    return SEPARABLE_INTERIOR if a + g < 0.5 else NONSEPARABLE_INTERIOR
