"""Physical parameters and the derived cyclotron scales.

Gaussian units throughout: the particle of charge ``q`` and mass ``m`` sits
in a field ``B`` along z, so the cyclotron frequency is ``omega = q B / (m c)``.
The ladder coupling ``k`` converts the drive parameter ``u`` (a length) into
the dimensionless intensity ``x = |u k|**2``.  By default
``k = sqrt(2 m |omega| / hbar)``, the inverse of the magnetic length times
``sqrt(2)``; it can be pinned to another convention with ``k_override``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = ["PhysicalParams", "DerivedScales", "derive_scales", "intensity_from_u"]


def _finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ParameterError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class PhysicalParams:
    """Charge, mass, magnetic field and fundamental constants (natural units by default)."""

    q: float = 1.0
    m: float = 1.0
    B: float = 1.0
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("q", "m", "B", "c", "hbar"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if self.m <= 0:
            raise ParameterError(f"mass must be positive, got {self.m}")
        if self.B == 0:
            raise ParameterError("magnetic field B must be nonzero")
        if self.c <= 0:
            raise ParameterError(f"c must be positive, got {self.c}")
        if self.hbar <= 0:
            raise ParameterError(f"hbar must be positive, got {self.hbar}")

    @property
    def flux_coupling(self) -> float:
        """``q B / (hbar c)``, the prefactor of both geometric phases."""
        return self.q * self.B / (self.hbar * self.c)


@dataclass(frozen=True)
class DerivedScales:
    omega: float
    k: float
    magnetic_length: float


def derive_scales(params: PhysicalParams, k_override: float | None = None) -> DerivedScales:
    """Cyclotron frequency, ladder coupling and magnetic length.

    Parameters
    ----------
    params : PhysicalParams
    k_override : float, optional
        Pin the ladder coupling to a different normalisation. Only the
        mapping from field amplitude to ``x`` changes.

    Returns
    -------
    DerivedScales
    """
    if not isinstance(params, PhysicalParams):
        raise ParameterError("derive_scales expects a PhysicalParams instance")
    omega = params.q * params.B / (params.m * params.c)
    if omega == 0:
        raise ParameterError("cyclotron frequency vanishes (q = 0)")
    if k_override is None:
        k = math.sqrt(2.0 * params.m * abs(omega) / params.hbar)
    else:
        k = _finite("k", k_override)
    if not k > 0:
        raise ParameterError(f"ladder coupling k must be positive, got {k}")
    magnetic_length = math.sqrt(params.hbar * params.c / abs(params.q * params.B))
    return DerivedScales(omega=omega, k=k, magnetic_length=magnetic_length)


def intensity_from_u(u: complex, scales: DerivedScales) -> float:
    """Dimensionless intensity ``x = |u|**2 k**2``."""
    u = complex(u)
    if not (math.isfinite(u.real) and math.isfinite(u.imag)):
        raise ParameterError(f"drive parameter must be finite, got {u}")
    return (u.real * u.real + u.imag * u.imag) * scales.k * scales.k
