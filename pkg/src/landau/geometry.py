"""Classical drift path, signed areas and the geometric phases.

The magnetic translation part of the evolution is represented only by its
classical data: the drift ``R(t) = (c/B) int_0^t (E2, -E1) ds`` and the phase
``beta = -(qB/hbar c) S_R``.  The companion phase of the level-mixing factor
is ``gamma = -(qB/hbar c) 4 S_u`` where ``S_u`` is the area of the ``u``-plane
path closed by the chord back to its start.  Neither phase changes any
level probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FieldValidationError
from .fields import FieldSpec
from .physics import PhysicalParams
from .quadrature import panel_edges, panel_integrals

__all__ = ["PlanarPath", "GeometricPhases", "drift_path", "closed_area", "phases"]

POINTS_PER_PERIOD = 20


@dataclass(frozen=True)
class PlanarPath:
    """Time-stamped samples ``(t, p1, p2)`` of a path in a plane."""

    t: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        arrays = [np.array(a, dtype=float).reshape(-1) for a in (self.t, self.p1, self.p2)]
        if not arrays[0].size or not (arrays[0].shape == arrays[1].shape == arrays[2].shape):
            raise FieldValidationError("path needs at least one point and equal-length columns")
        if not all(np.all(np.isfinite(a)) for a in arrays):
            raise FieldValidationError("path coordinates must be finite")
        if np.any(np.diff(arrays[0]) <= 0):
            raise FieldValidationError("path times must be strictly increasing")
        for name, a in zip(("t", "p1", "p2"), arrays):
            a.flags.writeable = False
            object.__setattr__(self, name, a)
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @classmethod
    def from_complex(cls, t, z, warnings=()):
        z = np.asarray(z, dtype=complex)
        return cls(t, z.real, z.imag, warnings)

    def __len__(self):
        return self.t.size

    @property
    def end(self):
        return complex(self.p1[-1], self.p2[-1])

    def to_csv(self, path, header=("t", "p1", "p2")):
        np.savetxt(
            path,
            np.column_stack([self.t, self.p1, self.p2]),
            delimiter=",",
            header=",".join(header),
            comments="",
            fmt="%.17g",
        )


@dataclass(frozen=True)
class GeometricPhases:
    beta: float
    gamma: float
    area_R: float
    area_u: float


def closed_area(path: PlanarPath) -> float:
    """Signed shoelace area of the path closed by the chord back to its start.

    Positive for counterclockwise traversal.  A single point has area 0.
    """
    if len(path) < 2:
        return 0.0
    x = path.p1 - path.p1[0]
    y = path.p2 - path.p2[0]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def drift_path(spec: FieldSpec, params: PhysicalParams, grid, nodes: int = 8) -> PlanarPath:
    """Guiding-center drift ``R(t)`` sampled on ``grid`` (starting at ``R = 0``).

    The integral over each grid interval is computed to quadrature accuracy
    whatever the grid spacing; a coarse grid only degrades the
    piecewise-linear picture of the path, which is flagged in ``warnings``.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1 or np.any(np.diff(grid) <= 0):
        raise FieldValidationError("grid must be a strictly increasing 1-d array")
    warnings = []
    scale = spec.timescale
    if grid.size > 1 and math.isfinite(scale):
        step = float(np.max(np.diff(grid)))
        if step > scale / POINTS_PER_PERIOD:
            warnings.append(
                f"grid step {step:.3g} exceeds 1/{POINTS_PER_PERIOD} of the fastest field scale {scale:.3g}"
            )
    if grid.size == 1:
        return PlanarPath(grid, [0.0], [0.0], warnings)
    edges = panel_edges(grid[0], grid[-1], np.concatenate([spec.breakpoints(), grid]), scale / POINTS_PER_PERIOD)
    pieces, _ = panel_integrals(spec.complex_values, edges, nodes)
    running = np.concatenate([[0.0], np.cumsum(pieces)])
    at_grid = running[np.searchsorted(edges, grid)]
    factor = params.c / params.B
    return PlanarPath(grid, factor * at_grid.imag, -factor * at_grid.real, warnings)


def phases(path_R: PlanarPath, path_u: PlanarPath, params: PhysicalParams) -> GeometricPhases:
    area_R = closed_area(path_R)
    area_u = closed_area(path_u)
    coupling = params.flux_coupling
    return GeometricPhases(
        beta=-coupling * area_R,
        gamma=-coupling * 4.0 * area_u,
        area_R=area_R,
        area_u=area_u,
    )
