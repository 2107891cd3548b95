# src/entdyn/__init__.py
"""Entanglement dynamics of a qubit-qutrit pair whose qutrit couples to
an auxiliary qubit through the x component of the Dzyaloshinskii-Moriya
interaction: state family construction, unitary evolution, negativity
fields over parameter/time grids, and sudden-death zone detection."""

from .analysis import (ESDZone, FieldSummary, NegativityField, RegionField,
                       SweepSpec, boundary_params, collapse_check,
                       detect_esd_zones, field_summary, region_dead_spans,
                       sweep_path, sweep_region)
from .dynamics import (EvolutionSpec, NegativityTrace, Propagator,
                       evolve_full, negativity_trace, propagator, reduced_ab)
from .linalg import (EigenSystem, adjoint, expm_i_hermitian,
                     expm_series_oracle, hermitian_eig, mat_mul,
                     trace_norm_hermitian)
from .model import (CONVENTIONS, DEFAULT_CONVENTION, GM23, SPIN1, DMCoupling,
                    GeneratorSet, PureQubit, TwoParamState, bell_like_kets,
                    build_aux_qubit, build_hamiltonian_bc,
                    build_two_param_state, classify_region,
                    closed_form_negativity, embed_full, generators)
from .states import (DensityMatrix, negativity, partial_trace,
                     partial_transpose, tensor_product)

__version__ = "0.1.0"
