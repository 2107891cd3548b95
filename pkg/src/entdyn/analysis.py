# src/entdyn/analysis.py
"""Parameter sweeps, negativity fields, ESD-zone detection, summaries.

Path sweeps walk one boundary of the parameter triangle and evolve each
state over a shared time grid, producing a (param x time) negativity
field. Region sweeps grid a whole triangle region at a single value of
the product d_x * t (the dynamics depend on d_x and t only through that
product) and also record the min/max profile over the constant-sum
lines alpha + gamma = s.

An ESD zone is the bounding box of a maximal 4-connected component of
below-threshold cells in a path field, kept only when some member cell
has entangled cells both earlier and later in its own parameter row
(death with life before and after, not rows that were never entangled).
For region fields, where there is no time axis, the reported zones are
contiguous runs of fully dead constant-sum lines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .dynamics import negativity_kernel, pair_unitaries
from .linalg import hermitian_eig
from .model import (DEFAULT_CONVENTION, DMCoupling, build_hamiltonian_bc,
                    build_two_param_state)
from .states import NEG_CLAMP

PATHS = ("BC", "BA", "AC", "CD", "AD")
REGIONS = ("ABC", "ACD")
PARAM_NAMES = {"BC": "gamma", "BA": "alpha", "AC": "alpha",
               "CD": "gamma", "AD": "alpha"}
DEFAULT_PATH_STEPS = 50
DEFAULT_REGION_STEPS = 60
DEFAULT_EPS = 1e-7


@dataclass(frozen=True)
class SweepSpec:
    """Either a boundary-path sweep or a fixed-d_x*t region sweep."""

    path: str | None = None
    region: str | None = None
    coupling: DMCoupling = DMCoupling(1.0, DEFAULT_CONVENTION)
    param_steps: int | None = None
    t_max: float = 15.0
    t_steps: int = 600
    dxt_value: float | None = None

    def __post_init__(self):
        if (self.path is None) == (self.region is None):
            raise ValueError("set exactly one of path/region")
        if self.path is not None and self.path not in PATHS:
            raise ValueError(f"unknown path {self.path!r}")
        if self.region is not None:
            if self.region not in REGIONS:
                raise ValueError(f"unknown region {self.region!r}")
            if self.dxt_value is None:
                raise ValueError("region sweeps need dxt_value")
            if self.dxt_value < 0:
                raise ValueError("dxt_value must be >= 0")
            if self.dxt_value > 0 and self.coupling.d_x == 0:
                raise ValueError("dxt_value > 0 needs a nonzero d_x")
        if self.path is not None:
            if self.t_max <= 0 or self.t_steps < 2:
                raise ValueError("path sweeps need t_max > 0, t_steps >= 2")
        if self.steps < 2:
            raise ValueError("param_steps must be >= 2")

    @property
    def steps(self) -> int:
        if self.param_steps is not None:
            return self.param_steps
        return DEFAULT_PATH_STEPS if self.path else DEFAULT_REGION_STEPS


@dataclass(frozen=True)
class NegativityField:
    """Path-sweep output: values[i, k] at boundary point i, time t_k."""

    path: str
    param_name: str
    param_axis: np.ndarray
    times: np.ndarray
    values: np.ndarray
    coupling: DMCoupling


@dataclass(frozen=True)
class RegionField:
    """Region-sweep output at fixed d_x*t.

    values is a (len(alphas) x len(gammas)) grid with NaN outside the
    region; sum_axis/sum_min/sum_max hold the min/max profile over the
    constant-sum lines alpha + gamma = s (the gamma step is an exact
    integer multiple of the alpha step, so lines are binned exactly).
    """

    region: str
    alphas: np.ndarray
    gammas: np.ndarray
    values: np.ndarray
    dxt: float
    coupling: DMCoupling
    sum_axis: np.ndarray
    sum_min: np.ndarray
    sum_max: np.ndarray


@dataclass(frozen=True)
class ESDZone:
    """Bounding box of one detected entanglement-death zone."""

    param_lo: float
    param_hi: float
    t_lo: float
    t_hi: float


@dataclass(frozen=True)
class FieldSummary:
    """Headline numbers of one path field."""

    max_value: float
    argmax_param: float
    argmax_t: float
    zone_count: int


def boundary_params(path: str, k: int, steps: int) -> tuple[float, float]:
    """(alpha, gamma) of point k on a boundary path.

    BC: alpha=0, gamma 0..1/2; BA: gamma=0, alpha 0..1/2; AC: alpha
    0..1/2 with gamma = 1/2 - alpha; CD: alpha=0, gamma 1/2..1; AD:
    alpha 0..1/2 with gamma = 1 - 2 alpha (k=0 is vertex D).
    """
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}")
    h = 0.5 / (steps - 1)
    x = k * h
    if path == "BC":
        return 0.0, x
    if path == "BA":
        return x, 0.0
    if path == "AC":
        return x, 0.5 - x
    if path == "CD":
        return 0.0, 0.5 + x
    return x, 1.0 - 2.0 * x


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def sweep_path(spec: SweepSpec) -> NegativityField:
    """Negativity field over one boundary path and the spec's time grid."""
    if spec.path is None:
        raise ValueError("sweep_path needs a path sweep spec")
    steps = spec.steps
    eig = hermitian_eig(build_hamiltonian_bc(spec.coupling))
    times = np.linspace(0.0, spec.t_max, spec.t_steps)
    param_axis = np.empty(steps)
    values = np.empty((steps, spec.t_steps))
    moving_is_gamma = PARAM_NAMES[spec.path] == "gamma"
    for i in range(steps):
        alpha, gamma = boundary_params(spec.path, i, steps)
        param_axis[i] = gamma if moving_is_gamma else alpha
        rho = build_two_param_state(alpha, gamma)
        values[i] = negativity_kernel(rho.mat, eig, times)
    return NegativityField(path=spec.path, param_name=PARAM_NAMES[spec.path],
                           param_axis=_freeze(param_axis),
                           times=_freeze(times), values=_freeze(values),
                           coupling=spec.coupling)


def _region_axes(region: str, steps: int):
    alphas = np.linspace(0.0, 0.5, steps)
    gamma_hi = 0.5 if region == "ABC" else 1.0
    gammas = np.linspace(0.0, gamma_hi, steps)
    return alphas, gammas


def _region_mask(region: str, alphas: np.ndarray,
                 gammas: np.ndarray) -> np.ndarray:
    s = alphas[:, None] + gammas[None, :]
    if region == "ABC":
        return s <= 0.5 + 1e-12
    # ACD: above AC by at least half a grid cell (the AC line itself is
    # separable), below AD
    margin = 0.5 * (alphas[1] - alphas[0])
    return (s > 0.5 + margin) & (2.0 * alphas[:, None] + gammas[None, :]
                                 <= 1.0 + 1e-12)


def sweep_region(spec: SweepSpec) -> RegionField:
    """Negativity over a 2D (alpha, gamma) grid at fixed d_x * t."""
    if spec.region is None:
        raise ValueError("sweep_region needs a region sweep spec")
    steps = spec.steps
    alphas, gammas = _region_axes(spec.region, steps)
    mask = _region_mask(spec.region, alphas, gammas)
    t_eval = 0.0 if spec.dxt_value == 0 else spec.dxt_value / spec.coupling.d_x
    eig = hermitian_eig(build_hamiltonian_bc(spec.coupling))

    cells = [(i, j) for i in range(steps) for j in range(steps) if mask[i, j]]
    states = np.stack([build_two_param_state(alphas[i], gammas[j]).mat
                       for i, j in cells])
    u = pair_unitaries(eig, np.array([t_eval]))[0]
    rt = u @ states @ u.conj().T
    pt = rt.reshape(-1, 2, 3, 2, 3).transpose(0, 3, 2, 1, 4).reshape(-1, 6, 6)
    tn = np.abs(np.linalg.eigvalsh(pt)).sum(axis=1)
    vals = tn - 1.0
    vals[vals < NEG_CLAMP] = 0.0

    values = np.full((steps, steps), np.nan)
    for (i, j), v in zip(cells, vals):
        values[i, j] = v

    # constant-sum lines: gamma step is exactly 2x (ACD) or 1x (ABC) the
    # alpha step, so s = alpha_i + gamma_j bins exactly by i + m*j
    m = 1 if spec.region == "ABC" else 2
    h = alphas[1] - alphas[0]
    lo: dict[int, float] = {}
    hi: dict[int, float] = {}
    for (i, j), v in zip(cells, vals):
        k = i + m * j
        lo[k] = min(lo.get(k, np.inf), v)
        hi[k] = max(hi.get(k, -np.inf), v)
    ks = sorted(lo)
    sum_axis = np.array([k * h for k in ks])
    sum_min = np.array([lo[k] for k in ks])
    sum_max = np.array([hi[k] for k in ks])
    return RegionField(region=spec.region, alphas=_freeze(alphas),
                       gammas=_freeze(gammas), values=_freeze(values),
                       dxt=spec.dxt_value, coupling=spec.coupling,
                       sum_axis=_freeze(sum_axis), sum_min=_freeze(sum_min),
                       sum_max=_freeze(sum_max))


def detect_esd_zones(field: NegativityField,
                     eps: float = DEFAULT_EPS) -> list[ESDZone]:
    """Bounding boxes of qualifying dead components in a path field.

    Cells below eps are dead. Components are maximal 4-connected sets of
    dead cells; a component qualifies when at least one member cell sees
    a value >= eps strictly earlier AND strictly later in its own
    parameter row. Zones come back sorted by (t_lo, param_lo).
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    values = field.values
    if values.size == 0:
        raise ValueError("empty field")
    rows, cols = values.shape
    alive = values >= eps
    first_life = np.full(rows, cols)
    last_life = np.full(rows, -1)
    for i in range(rows):
        idx = np.flatnonzero(alive[i])
        if idx.size:
            first_life[i] = idx[0]
            last_life[i] = idx[-1]

    seen = np.zeros((rows, cols), dtype=bool)
    zones = []
    for i0 in range(rows):
        for k0 in range(cols):
            if alive[i0, k0] or seen[i0, k0]:
                continue
            # flood fill one 4-connected dead component
            queue = deque([(i0, k0)])
            seen[i0, k0] = True
            lo_i = hi_i = i0
            lo_k = hi_k = k0
            qualifies = False
            while queue:
                i, k = queue.popleft()
                lo_i, hi_i = min(lo_i, i), max(hi_i, i)
                lo_k, hi_k = min(lo_k, k), max(hi_k, k)
                if first_life[i] < k < last_life[i]:
                    qualifies = True
                for ni, nk in ((i - 1, k), (i + 1, k), (i, k - 1), (i, k + 1)):
                    if (0 <= ni < rows and 0 <= nk < cols
                            and not alive[ni, nk] and not seen[ni, nk]):
                        seen[ni, nk] = True
                        queue.append((ni, nk))
            if qualifies:
                zones.append(ESDZone(param_lo=float(field.param_axis[lo_i]),
                                     param_hi=float(field.param_axis[hi_i]),
                                     t_lo=float(field.times[lo_k]),
                                     t_hi=float(field.times[hi_k])))
    zones.sort(key=lambda z: (z.t_lo, z.param_lo))
    return zones


def region_dead_spans(field: RegionField,
                      eps: float = DEFAULT_EPS) -> list[ESDZone]:
    """Contiguous runs of fully dead constant-sum lines of a region field.

    A line is dead when its maximum over the region is below eps; the
    returned zones span alpha + gamma on the param axis and carry the
    field's fixed d_x*t as both time bounds.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    dead = field.sum_max < eps
    zones = []
    start = None
    for idx in range(len(dead) + 1):
        if idx < len(dead) and dead[idx]:
            if start is None:
                start = idx
        elif start is not None:
            zones.append(ESDZone(param_lo=float(field.sum_axis[start]),
                                 param_hi=float(field.sum_axis[idx - 1]),
                                 t_lo=field.dxt, t_hi=field.dxt))
            start = None
    return zones


def field_summary(field: NegativityField,
                  eps: float = DEFAULT_EPS) -> FieldSummary:
    """Global max (first occurrence, row-major) and the zone count."""
    values = field.values
    if values.size == 0:
        raise ValueError("empty field")
    flat = int(np.argmax(values))
    i, k = divmod(flat, values.shape[1])
    return FieldSummary(max_value=float(values[i, k]),
                        argmax_param=float(field.param_axis[i]),
                        argmax_t=float(field.times[k]),
                        zone_count=len(detect_esd_zones(field, eps)))


def collapse_check(region: str, dxt_value: float, tol: float = 1e-9,
                   param_steps: int | None = None,
                   coupling: DMCoupling = DMCoupling(1.0, DEFAULT_CONVENTION)
                   ) -> tuple[bool, float]:
    """Does the region field depend on (alpha, gamma) only through
    alpha + gamma? Returns (within tol?, max deviation over lines)."""
    field = sweep_region(SweepSpec(region=region, coupling=coupling,
                                   param_steps=param_steps,
                                   dxt_value=dxt_value))
    deviation = float(np.max(field.sum_max - field.sum_min))
    return deviation <= tol, deviation
