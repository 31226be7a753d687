"""Brute-force checks in a truncated number basis.

Two routes that share nothing with the Laguerre formulas:

* :func:`displacement_matrix` exponentiates the truncated generator
  ``alpha a^+ - alpha^* a`` (scipy's scaling-and-squaring Padé ``expm``).
* :func:`integrate_tdse` integrates the cyclotron-sector driven oscillator

      i hbar dpsi/dt = [hbar omega (a^+ a + 1/2) + lam(t) a + conj(lam(t)) a^+] psi,
      lam(t) = -i hbar k (c / 2B) conj(E(t)),

  with fixed-step classical RK4 in the lab frame, then divides out the free
  phases ``exp(-i omega (n + 1/2) t)``.

Only the cyclotron oscillator is simulated.  The guiding-center degrees of
freedom (the magnetic translation) commute with the level index and are left
out, so level populations are exact while the full 2-d wavefunction is not
represented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .errors import ParameterError, StepSizeError, TruncationError
from .fields import FieldSpec
from .fourier import QuadratureSettings, compute_u
from .physics import DerivedScales, PhysicalParams
from .transitions import alpha_from_u, transition_matrix

__all__ = [
    "TruncatedLadder",
    "EvolvedState",
    "OracleReport",
    "displacement_matrix",
    "guard_band",
    "interior_unitarity_defect",
    "default_step",
    "integrate_tdse",
    "compare_with_analytic",
]

STEPS_PER_PERIOD = 40
NORM_TOLERANCE = 1e-8
TAIL_THRESHOLD = 1e-8
EDGE_DIAGNOSTIC_THRESHOLD = 1e-10


@dataclass(frozen=True)
class TruncatedLadder:
    """Ladder operators on the first ``dimension`` number states."""

    dimension: int

    def __post_init__(self):
        if int(self.dimension) != self.dimension or self.dimension < 2:
            raise ParameterError("ladder dimension must be an integer >= 2")

    @property
    def lowering(self):
        return np.diag(np.sqrt(np.arange(1.0, self.dimension)), 1)

    @property
    def raising(self):
        return self.lowering.T.copy()

    @property
    def number(self):
        return np.diag(np.arange(float(self.dimension)))

    def commutator_defect(self):
        """``[a, a^+] - 1``: zero except ``-dimension`` in the last diagonal slot."""
        a = self.lowering
        return a @ a.T - a.T @ a - np.eye(self.dimension)


def _edge_band(dimension):
    return max(1, dimension // 8)


def displacement_matrix(alpha: complex, dimension: int, check: bool = True) -> np.ndarray:
    """``exp(alpha a^+ - alpha^* a)`` on the truncated basis.

    With ``check``, the vacuum column's weight in the top eighth of the basis
    must stay below 1e-10, otherwise the basis is too small for ``|alpha|``.
    """
    ladder = TruncatedLadder(dimension)
    a = ladder.lowering
    alpha = complex(alpha)
    generator = alpha * a.T - alpha.conjugate() * a
    D = expm(generator)
    if check:
        edge = float(np.sum(np.abs(D[dimension - _edge_band(dimension) :, 0]) ** 2))
        if edge > EDGE_DIAGNOSTIC_THRESHOLD:
            raise TruncationError(
                f"dimension {dimension} too small for |alpha|={abs(alpha):.3g}: edge weight {edge:.2e}",
                achieved_tail=edge,
            )
    return D


def guard_band(alpha: complex, dimension: int) -> int:
    return min(math.ceil(4 * abs(alpha) * math.sqrt(dimension)), dimension // 4)


def interior_unitarity_defect(D: np.ndarray, alpha: complex) -> float:
    """Max deviation from orthonormality of the columns below the guard band."""
    keep = D.shape[0] - guard_band(alpha, D.shape[0])
    cols = D[:, :keep]
    return float(np.max(np.abs(cols.conj().T @ cols - np.eye(keep))))


@dataclass(frozen=True)
class EvolvedState:
    """Interaction-picture amplitudes after the drive, with run diagnostics."""

    amplitudes: np.ndarray
    norm_history: np.ndarray = field(repr=False)
    time: float
    step: float
    steps: int
    tail_mass: float

    @property
    def probabilities(self):
        return np.abs(self.amplitudes) ** 2

    @property
    def norm_drift(self):
        return float(np.max(np.abs(self.norm_history - 1.0)))


def default_step(spec: FieldSpec, scales: DerivedScales, dimension: int) -> float:
    """A step that resolves the drive and keeps lab-frame RK4 accurate at this dimension."""
    period = 2 * math.pi / abs(scales.omega)
    resolve = min(period, spec.timescale) / STEPS_PER_PERIOD
    return min(resolve, 0.08 / (abs(scales.omega) * dimension))


def _segment_times(t0, t1, breakpoints, step):
    """Step grid per smooth segment plus field sample times for RK4 stages.

    Stage times at segment ends sit a relative 1e-8 step inside the segment,
    so a field with a jump there is sampled on the correct side.
    """
    knots = [t0, *[b for b in breakpoints if t0 < b < t1], t1]
    for lo, hi in zip(knots[:-1], knots[1:]):
        n = max(1, math.ceil((hi - lo) / step - 1e-9))
        h = (hi - lo) / n
        stage = lo + 0.5 * h * np.arange(2 * n + 1)
        stage[0] = lo + 1e-8 * h
        stage[-1] = hi - 1e-8 * h
        yield lo, h, n, stage


def integrate_tdse(
    spec: FieldSpec,
    params: PhysicalParams,
    scales: DerivedScales,
    dimension: int,
    initial_level: int,
    step: float | None = None,
    t_initial: float = 0.0,
    t_final: float | None = None,
    energy_offset: float = 0.0,
    norm_tolerance: float = NORM_TOLERANCE,
    tail_threshold: float = TAIL_THRESHOLD,
) -> EvolvedState:
    """Evolve number state ``initial_level`` through the field with RK4.

    ``energy_offset`` is a constant added to the Hamiltonian; it only
    changes a global phase.

    Raises
    ------
    StepSizeError
        Step coarser than 1/40 of the shortest period, or norm drift above
        ``norm_tolerance``.
    TruncationError
        Final population in the top sixteenth of the basis above ``tail_threshold``.
    """
    if not 0 <= initial_level < dimension:
        raise ParameterError(f"initial level {initial_level} outside basis of dimension {dimension}")
    t1 = spec.t_end if t_final is None else float(t_final)
    if step is None:
        step = default_step(spec, scales, dimension)
    period = 2 * math.pi / abs(scales.omega)
    limit = min(period, spec.timescale) / STEPS_PER_PERIOD
    if step > limit * (1 + 1e-12):
        raise StepSizeError(
            f"step {step:.3g} gives fewer than {STEPS_PER_PERIOD} steps per shortest period ({limit:.3g} max)"
        )

    hbar = params.hbar
    levels = np.arange(dimension)
    level_energy = hbar * scales.omega * (levels + 0.5) + energy_offset
    diag = -1j * level_energy / hbar
    sq = np.sqrt(np.arange(1.0, dimension))
    coupling = -1j * hbar * scales.k * params.c / (2.0 * params.B)

    def rhs(psi, e):
        lam = coupling * np.conj(e)
        out = diag * psi
        out[:-1] += (-1j / hbar) * lam * sq * psi[1:]
        out[1:] += (-1j / hbar) * np.conj(lam) * sq * psi[:-1]
        return out

    psi = np.zeros(dimension, dtype=complex)
    psi[initial_level] = 1.0
    norms = [1.0]
    total_steps = 0
    for lo, h, n, stage in _segment_times(t_initial, t1, spec.breakpoints(), step):
        fields = spec.complex_values(stage)
        for i in range(n):
            e0, e1, e2 = fields[2 * i], fields[2 * i + 1], fields[2 * i + 2]
            k1 = rhs(psi, e0)
            k2 = rhs(psi + 0.5 * h * k1, e1)
            k3 = rhs(psi + 0.5 * h * k2, e1)
            k4 = rhs(psi + h * k3, e2)
            psi = psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            norm = float(np.vdot(psi, psi).real)
            norms.append(norm)
            if not abs(norm - 1.0) <= norm_tolerance:
                raise StepSizeError(
                    f"norm drift {abs(norm - 1.0):.2e} exceeds {norm_tolerance:.0e} at t = {lo + (i + 1) * h:.6g}; "
                    "reduce the step",
                    norm_drift=abs(norm - 1.0),
                )
        total_steps += n

    psi = psi * np.exp(1j * scales.omega * (levels + 0.5) * (t1 - t_initial))
    norm_history = np.array(norms)
    band = max(1, dimension // 16)
    tail = float(np.sum(np.abs(psi[-band:]) ** 2))
    if tail > tail_threshold:
        raise TruncationError(
            f"population {tail:.2e} in the top {band} levels; increase the dimension", achieved_tail=tail
        )
    return EvolvedState(psi, norm_history, t1, step, total_steps, tail)


@dataclass(frozen=True)
class OracleReport:
    field_hash: str
    n_initial: int
    N: int
    step: float
    max_abs_prob_error: float
    norm_drift: float
    tail_mass: float
    x: float = float("nan")
    error: str | None = None

    @property
    def passed(self):
        return self.error is None

    def to_dict(self):
        def num(v):
            return float(v) if v is not None and math.isfinite(v) else None

        return {
            "field_hash": self.field_hash,
            "n_initial": self.n_initial,
            "N": self.N,
            "step": num(self.step),
            "max_abs_prob_error": num(self.max_abs_prob_error),
            "norm_drift": num(self.norm_drift),
            "tail_mass": num(self.tail_mass),
            "x": num(self.x),
            "error": self.error,
        }


def compare_with_analytic(
    spec: FieldSpec,
    params: PhysicalParams,
    scales: DerivedScales,
    n_initial: int,
    dimension: int,
    step: float | None = None,
    quadrature: QuadratureSettings = QuadratureSettings(),
) -> tuple[OracleReport, np.ndarray, np.ndarray]:
    """RK4 level populations against ``|<m|D(-conj(u) k)|n>|^2`` from the quadrature route.

    Returns the report and both probability vectors over ``m < dimension``.
    """
    drive = compute_u(spec, scales, params, step_control=quadrature)
    alpha = alpha_from_u(drive.u, scales.k)
    analytic = transition_matrix(n_initial, alpha, m_max=dimension - 1, auto_raise=False, tail_tolerance=1.0)
    state = integrate_tdse(spec, params, scales, dimension, n_initial, step, t_initial=quadrature.t_initial)
    numeric = state.probabilities
    error = float(np.max(np.abs(numeric - analytic.probabilities)))
    report = OracleReport(
        field_hash=spec.digest(),
        n_initial=n_initial,
        N=dimension,
        step=state.step,
        max_abs_prob_error=error,
        norm_drift=state.norm_drift,
        tail_mass=state.tail_mass,
        x=drive.x,
    )
    return report, numeric, analytic.probabilities
