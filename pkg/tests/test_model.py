# tests/test_model.py
"""Model constructions: the two-parameter family, aux qubit, generator
conventions, interaction matrix and the parameter-triangle geometry.

Spectra are checked against numpy's eigensolver (the package carries
its own), and the family matrix against a reconstruction assembled
here from the kets.
"""

import math

import numpy as np
import pytest

from entdyn.model import (BOUNDARY_AC, BOUNDARY_AD, BOUNDARY_BA, BOUNDARY_BC,
                          BOUNDARY_CD, DEFAULT_CONVENTION, INVALID,
                          NONSEPARABLE_INTERIOR, SEPARABLE_INTERIOR,
                          DMCoupling, PureQubit, TwoParamState,
                          bell_like_kets, build_aux_qubit,
                          build_hamiltonian_bc, build_two_param_state,
                          classify_region, closed_form_negativity, embed_full,
                          generators)

RNG = np.random.default_rng(917)


def _triangle_sample(n):
    pts = []
    while len(pts) < n:
        a = RNG.uniform(0.0, 0.5)
        g = RNG.uniform(0.0, 1.0)
        if 2 * a + g <= 1.0:
            pts.append((a, g))
    return pts


def test_bell_like_kets_structure():
    phi_p, phi_m, psi_p, psi_m = bell_like_kets()
    kets = (phi_p, phi_m, psi_p, psi_m)
    gram = np.array([[np.vdot(x, y) for y in kets] for x in kets])
    np.testing.assert_allclose(gram, np.eye(4), atol=1e-14)
    s = 1.0 / math.sqrt(2.0)
    for ket, support, signs in ((phi_p, (0, 4), (s, s)),
                                (phi_m, (0, 4), (s, -s)),
                                (psi_p, (1, 3), (s, s)),
                                (psi_m, (1, 3), (s, -s))):
        np.testing.assert_allclose(ket[list(support)], signs, atol=0)
        others = [k for k in range(6) if k not in support]
        np.testing.assert_allclose(ket[others], 0.0, atol=0)


def test_two_param_state_matches_ket_assembly():
    phi_p, phi_m, psi_p, psi_m = bell_like_kets()
    for alpha, gamma in ((0.2, 0.1), (0.0, 0.75), (0.05, 0.6)):
        beta = (1.0 - 2.0 * alpha - gamma) / 3.0
        ref = np.zeros((6, 6), dtype=complex)
        ref[2, 2] = alpha
        ref[5, 5] = alpha
        for ket in (phi_p, phi_m, psi_p):
            ref += beta * np.outer(ket, ket.conj())
        ref += gamma * np.outer(psi_m, psi_m.conj())
        got = build_two_param_state(alpha, gamma)
        np.testing.assert_allclose(got.mat, ref, atol=1e-14)
        assert got.dims == (2, 3)


def test_two_param_state_spectrum():
    for alpha, gamma in ((0.2, 0.1), (0.0, 0.75), (0.05, 0.6), (0.0, 0.0)):
        beta = (1.0 - 2.0 * alpha - gamma) / 3.0
        expected = np.sort([alpha, alpha, beta, beta, beta, gamma])
        w = np.linalg.eigvalsh(build_two_param_state(alpha, gamma).mat)
        np.testing.assert_allclose(w, expected, atol=1e-12)


def test_two_param_state_edge_cases():
    pure = build_two_param_state(0.0, 1.0)
    psi_m = bell_like_kets()[3]
    np.testing.assert_allclose(pure.mat, np.outer(psi_m, psi_m.conj()),
                               atol=1e-14)
    level2 = build_two_param_state(0.5, 0.0)
    np.testing.assert_allclose(level2.mat,
                               np.diag([0, 0, 0.5, 0, 0, 0.5]), atol=1e-14)


def test_two_param_state_validity_sample():
    for alpha, gamma in _triangle_sample(100):
        rho = build_two_param_state(alpha, gamma)
        rho.validate()
        assert np.trace(rho.mat).real == pytest.approx(1.0, abs=1e-12)


def test_two_param_state_rejects_outside_triangle():
    for alpha, gamma in ((-0.1, 0.2), (0.2, -0.1), (0.6, 0.2), (0.3, 0.5)):
        with pytest.raises(ValueError):
            build_two_param_state(alpha, gamma)
    assert TwoParamState(0.2, 0.1).beta == pytest.approx(0.5 / 3.0, abs=1e-15)


def test_aux_qubit_projectors():
    np.testing.assert_allclose(build_aux_qubit(1.0, 0.0).mat,
                               np.diag([1.0, 0.0]), atol=0)
    s = 1.0 / math.sqrt(2.0)
    np.testing.assert_allclose(build_aux_qubit(s, s).mat,
                               np.full((2, 2), 0.5), atol=1e-14)
    with pytest.raises(ValueError):
        build_aux_qubit(0.6, 0.9)
    with pytest.raises(ValueError):
        PureQubit(1.0, 1.0)


def test_generator_sets():
    gm = generators("gm23")
    np.testing.assert_array_equal(gm.qutrit_z, np.diag([1.0, -1.0, 0.0]))
    assert gm.qutrit_y[0, 1] == -1j and gm.qutrit_y[1, 0] == 1j
    sp = generators("spin1")
    np.testing.assert_array_equal(sp.qutrit_z, np.diag([1.0, 0.0, -1.0]))
    np.testing.assert_allclose(np.linalg.eigvalsh(sp.qutrit_y),
                               [-1.0, 0.0, 1.0], atol=1e-14)
    for conv in ("gm23", "spin1"):
        g = generators(conv)
        for m in (g.qutrit_y, g.qutrit_z, g.pauli_y, g.pauli_z):
            assert np.trace(m) == pytest.approx(0.0, abs=1e-14)
            np.testing.assert_allclose(m, m.conj().T, atol=0)
    with pytest.raises(ValueError):
        generators("pauli")
    with pytest.raises(ValueError):
        DMCoupling(0.2, "pauli")
    with pytest.raises(ValueError):
        DMCoupling(float("nan"))


def test_hamiltonian_structure():
    for conv in ("gm23", "spin1"):
        g = generators(conv)
        h = build_hamiltonian_bc(DMCoupling(0.2, conv))
        ref = 0.2 * (np.kron(g.qutrit_y, g.pauli_z)
                     - np.kron(g.qutrit_z, g.pauli_y))
        np.testing.assert_allclose(h, ref, atol=0)
        np.testing.assert_allclose(h, h.conj().T, atol=0)
        assert np.trace(h) == pytest.approx(0.0, abs=1e-14)
    assert not np.any(build_hamiltonian_bc(DMCoupling(0.0, "gm23")))


def test_hamiltonian_linearity_and_spectrum():
    for conv in ("gm23", "spin1"):
        h1 = build_hamiltonian_bc(DMCoupling(0.2, conv))
        h2 = build_hamiltonian_bc(DMCoupling(0.4, conv))
        np.testing.assert_array_equal(h2, 2.0 * h1)
        w = np.linalg.eigvalsh(h1)
        np.testing.assert_allclose(w, -w[::-1], atol=1e-13)
        np.testing.assert_allclose(np.linalg.eigvalsh(h2), 2.0 * w,
                                   atol=1e-13)


def test_embed_full_structure():
    h = build_hamiltonian_bc(DMCoupling(0.3, DEFAULT_CONVENTION))
    full = embed_full(h)
    np.testing.assert_array_equal(full, np.kron(h, np.eye(2)))
    assert np.trace(full) == pytest.approx(2.0 * np.trace(h).real, abs=1e-13)
    assert not np.any(embed_full(np.zeros((6, 6))))
    # aux-local operators commute with the embedded interaction
    m = RNG.normal(size=(2, 2)) + 1j * RNG.normal(size=(2, 2))
    aux_op = np.kron(np.eye(6), m)
    np.testing.assert_allclose(full @ aux_op, aux_op @ full, atol=1e-13)
    with pytest.raises(ValueError):
        embed_full(np.eye(4))


def test_closed_form_negativity():
    assert closed_form_negativity(0.0, 1.0) == pytest.approx(1.0)
    assert closed_form_negativity(0.0, 0.75) == pytest.approx(0.5)
    assert closed_form_negativity(0.25, 0.25) == 0.0
    assert closed_form_negativity(0.1, 0.2) == 0.0
    with pytest.raises(ValueError):
        closed_form_negativity(0.6, 0.2)


def test_classify_region_examples():
    assert classify_region(0.1, 0.2) == SEPARABLE_INTERIOR
    assert classify_region(0.2, 0.5) == NONSEPARABLE_INTERIOR
    assert classify_region(0.0, 0.3) == BOUNDARY_BC
    assert classify_region(0.3, 0.0) == BOUNDARY_BA
    assert classify_region(0.25, 0.25) == BOUNDARY_AC
    assert classify_region(0.0, 0.75) == BOUNDARY_CD
    assert classify_region(0.3, 0.4) == BOUNDARY_AD
    assert classify_region(-0.2, 0.0) == INVALID
    assert classify_region(0.2, 0.7) == INVALID
    # vertices take the first matching edge label (BC before BA/AC/CD)
    assert classify_region(0.0, 0.0) == BOUNDARY_BC
    assert classify_region(0.0, 0.5) == BOUNDARY_BC


def test_classify_region_agrees_with_negativity_sign():
    labels = (SEPARABLE_INTERIOR, NONSEPARABLE_INTERIOR)
    for alpha, gamma in _triangle_sample(60):
        label = classify_region(alpha, gamma)
        if label not in labels:
            continue
        entangled = closed_form_negativity(alpha, gamma) > 0.0
        assert entangled == (label == NONSEPARABLE_INTERIOR)
