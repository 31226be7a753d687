"""The drive parameter ``u``: a windowed Fourier integral of the field.

    u(t) = -(c / 2B) int_{t0}^{t} exp(-i omega s) conj(E(s)) ds,   E = E1 + i E2

evaluated with composite 8-node Gauss-Legendre panels split at every field
breakpoint.  Panels are no wider than ``min(2 pi/omega, fastest field
scale) / panels_per_period``.  The integral is done twice, at panel width
``h`` and ``h/2``; the finer value is returned and the difference is the
error estimate (with a round-off floor).  Sampled fields contribute their
sample times as breakpoints, so each linear segment is integrated on its
own and no data are resampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .fields import FieldSpec
from .geometry import PlanarPath
from .physics import DerivedScales, PhysicalParams, intensity_from_u
from .quadrature import panel_edges, panel_integrals, refine

__all__ = ["QuadratureSettings", "ResolutionReport", "DriveParameter", "compute_u", "u_spectrum_sweep"]

MIN_PANELS_PER_PERIOD = 20
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSettings:
    panels_per_period: float = 20.0
    nodes: int = 8
    t_initial: float = 0.0

    def __post_init__(self):
        if not self.panels_per_period > 0:
            raise ParameterError("panels_per_period must be positive")
        if int(self.nodes) != self.nodes or self.nodes < 1:
            raise ParameterError("nodes must be a positive integer")


@dataclass(frozen=True)
class ResolutionReport:
    panels: int
    max_panel_width: float
    panels_per_period: float
    error_estimate: float
    warnings: tuple = ()

    def to_dict(self):
        return {
            "panels": self.panels,
            "max_panel_width": self.max_panel_width,
            "panels_per_period": self.panels_per_period,
            "error_estimate": self.error_estimate,
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class DriveParameter:
    u: complex
    x: float
    u_path: PlanarPath
    resolution_report: ResolutionReport = field(compare=False)


def _fourier_integral(spec, omega, t0, t1, settings):
    """``int_{t0}^{t1} exp(-i omega s) conj(E(s)) ds`` plus running values."""
    warnings = []
    if settings.panels_per_period < MIN_PANELS_PER_PERIOD:
        warnings.append(
            f"panels_per_period={settings.panels_per_period:g} is below the recommended {MIN_PANELS_PER_PERIOD}"
        )
    lo, hi = max(t0, spec.t_start), min(t1, spec.t_end)
    period = 2 * math.pi / abs(omega) if omega else math.inf
    scale = min(period, spec.timescale)
    width = scale / settings.panels_per_period
    if lo >= hi or not spec.components:
        times = np.array([t0, t1]) if t1 > t0 else np.array([t0])
        report = ResolutionReport(0, 0.0, float(settings.panels_per_period), 0.0, tuple(warnings))
        return 0j, times, np.zeros(times.size, dtype=complex), report

    def integrand(s):
        return np.exp(-1j * omega * s) * np.conj(spec.complex_values(s))

    edges = panel_edges(lo, hi, spec.breakpoints(), width)
    coarse, _ = panel_integrals(integrand, edges, settings.nodes)
    fine_edges = refine(edges)
    fine, magnitude = panel_integrals(integrand, fine_edges, settings.nodes)
    value = complex(np.sum(fine))
    floor = 64 * _EPS * float(np.sum(magnitude))
    error = float(max(abs(value - complex(np.sum(coarse))), floor))

    running = np.concatenate([[0j], np.cumsum(fine)])
    times = fine_edges
    if t0 < lo:
        times = np.concatenate([[t0], times])
        running = np.concatenate([[0j], running])
    if t1 > hi:
        times = np.concatenate([times, [t1]])
        running = np.concatenate([running, [running[-1]]])
    running[-1] = value
    report = ResolutionReport(
        panels=fine_edges.size - 1,
        max_panel_width=float(np.max(np.diff(fine_edges))),
        panels_per_period=float(settings.panels_per_period),
        error_estimate=error,
        warnings=tuple(warnings),
    )
    return value, times, running, report


def compute_u(
    spec: FieldSpec,
    scales: DerivedScales,
    params: PhysicalParams,
    t_final: float | None = None,
    step_control: QuadratureSettings = QuadratureSettings(),
) -> DriveParameter:
    """Drive parameter ``u(t_final)`` with its trace and quadrature diagnostics.

    ``t_final`` defaults to the end of the field window; the integral starts
    at ``step_control.t_initial``.
    """
    t0 = step_control.t_initial
    t1 = spec.t_end if t_final is None else float(t_final)
    if t1 < t0:
        raise ParameterError(f"t_final={t1} precedes the initial time {t0}")
    integral, times, running, report = _fourier_integral(spec, scales.omega, t0, t1, step_control)
    prefactor = -params.c / (2.0 * params.B)
    u = prefactor * integral
    path = PlanarPath.from_complex(times, prefactor * running, report.warnings)
    report = ResolutionReport(
        report.panels,
        report.max_panel_width,
        report.panels_per_period,
        abs(prefactor) * report.error_estimate,
        report.warnings,
    )
    return DriveParameter(u=u, x=intensity_from_u(u, scales), u_path=path, resolution_report=report)


def u_spectrum_sweep(
    spec: FieldSpec,
    scales: DerivedScales,
    params: PhysicalParams,
    t_final: float | None,
    omega_range,
    step_control: QuadratureSettings = QuadratureSettings(),
):
    """``[(omega, |u|)]`` with the cyclotron frequency replaced by each sweep value.

    Output order follows the input order.
    """
    t0 = step_control.t_initial
    t1 = spec.t_end if t_final is None else float(t_final)
    prefactor = abs(params.c / (2.0 * params.B))
    out = []
    for omega in omega_range:
        integral, *_ = _fourier_integral(spec, float(omega), t0, t1, step_control)
        out.append((float(omega), prefactor * abs(integral)))
    return out
