"""Level survival, total transition probability and the full transition row.

For intensity ``x = |u k|**2`` the amplitude to stay in level ``n`` is
``exp(i gamma) exp(-x/2) L_n(x)``, so

    survival(n, x)   = exp(-x) L_n(x)**2
    transition(n, x) = 1 - survival(n, x).

Off-diagonal amplitudes are matrix elements of the displacement operator
``D(alpha) = exp(alpha a^+ - alpha^* a)`` with ``alpha = -conj(u) k``:

    <m|D|n> = sqrt(n!/m!) alpha^(m-n) exp(-|alpha|^2/2) L_n^(m-n)(|alpha|^2),   m >= n
    <m|D|n> = sqrt(m!/n!) (-alpha^*)^(n-m) exp(-|alpha|^2/2) L_m^(n-m)(|alpha|^2), m < n

The real factor ``sqrt(n!/m!) |alpha|^(m-n) exp(-|alpha|^2/2) L`` is evaluated
by the normalized Laguerre recurrence, which never forms a factorial or
``exp(+x/2)``.  Probabilities are always computed from phase-free
quantities, so ``gamma`` and ``arg(alpha)`` cannot leak into them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, TruncationError
from .laguerre import fejer_asymptotic, laguerre_scaled, laguerre_sequence, normalized_assoc_laguerre

__all__ = [
    "SurvivalResult",
    "TransitionTable",
    "survival",
    "survival_fejer",
    "displacement_element",
    "displacement_row",
    "alpha_from_u",
    "default_m_max",
    "transition_matrix",
    "sweep_over_levels",
    "sweep_over_intensity",
]

M_MAX_CAP = 200_000


@dataclass(frozen=True)
class SurvivalResult:
    n: int
    x: float
    amplitude: float
    survival_probability: float
    transition_probability: float
    gamma: float = 0.0

    @property
    def amplitude_modulus(self):
        return abs(self.amplitude)

    @property
    def complex_amplitude(self):
        """``<n|J|n>`` including the geometric phase."""
        return cmath.exp(1j * self.gamma) * self.amplitude


@dataclass(frozen=True)
class TransitionTable:
    n_source: int
    alpha: complex
    probabilities: np.ndarray
    tail_mass: float
    up_mass: float
    down_mass: float
    tail_tolerance: float = field(default=1e-10, compare=False)

    @property
    def m_max(self):
        return self.probabilities.size - 1

    @property
    def diagonal(self):
        return float(self.probabilities[self.n_source])

    @property
    def row_sum(self):
        return float(np.sum(self.probabilities))

    def as_dict(self):
        return {m: float(p) for m, p in enumerate(self.probabilities)}

    def to_dict(self):
        return {
            "n_source": self.n_source,
            "alpha_re": self.alpha.real,
            "alpha_im": self.alpha.imag,
            "m_max": self.m_max,
            "probabilities": [float(p) for p in self.probabilities],
            "diagonal": self.diagonal,
            "up_mass": self.up_mass,
            "down_mass": self.down_mass,
            "tail_mass": self.tail_mass,
            "row_sum": self.row_sum,
        }


def _level(n, name="n"):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


def alpha_from_u(u: complex, k: float) -> complex:
    """Displacement amplitude ``-conj(u) k`` of the level-mixing factor."""
    return -complex(u).conjugate() * k


def survival(n: int, x: float, gamma: float = 0.0) -> SurvivalResult:
    """Probability of remaining in level ``n`` at intensity ``x``."""
    n = _level(n)
    amp = float(laguerre_scaled(n, x))
    surv = amp * amp
    return SurvivalResult(n, float(x), amp, surv, 1.0 - surv, float(gamma))


def survival_fejer(n, x):
    """Large-``n`` survival probability ``cos^2(2 sqrt((n+1)x) - pi/4) / (pi sqrt(x (n+1)))``.

    The ``exp(x/2)`` of the asymptotic Laguerre form cancels against the
    ``exp(-x/2)`` of the amplitude.
    """
    amp = np.exp(-0.5 * np.asarray(x, dtype=float)) * fejer_asymptotic(n, x)
    out = amp * amp
    return float(out) if np.ndim(out) == 0 else out


def displacement_element(m: int, n: int, alpha: complex) -> complex:
    """``<m| exp(alpha a^+ - alpha^* a) |n>``."""
    m, n = _level(m, "m"), _level(n, "n")
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    if x == 0:
        return 1.0 + 0j if m == n else 0j
    theta = cmath.phase(alpha)
    if m >= n:
        mag = normalized_assoc_laguerre(n, m - n, x)
        return mag * cmath.exp(1j * (m - n) * theta)
    mag = normalized_assoc_laguerre(m, n - m, x)
    return mag * (-1) ** (n - m) * cmath.exp(-1j * (n - m) * theta)


def displacement_row(n: int, alpha: complex, m_max: int, with_phase: bool = True) -> np.ndarray:
    """``<m|D(alpha)|n>`` for ``m = 0..m_max`` (real moduli with sign if ``with_phase`` is False)."""
    n, m_max = _level(n), _level(m_max, "m_max")
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    m = np.arange(m_max + 1)
    if x == 0:
        return (m == n).astype(complex if with_phase else float)
    row = np.zeros(m_max + 1)
    upper = m[m >= n]
    if upper.size:
        row[upper] = normalized_assoc_laguerre(n, upper - n, x)
    lower = m[m < n]
    if lower.size:
        # degree m, upper index n - m: run all upper indices together and
        # pick entry m once the recurrence reaches degree m
        seq = normalized_assoc_laguerre(lower[-1], n - lower, x, keep_all=True)
        row[lower] = seq[lower, lower] * (-1.0) ** (n - lower)
    if not with_phase:
        return row
    theta = cmath.phase(alpha)
    return row * np.exp(1j * (m - n) * theta)


def default_m_max(n: int, x: float) -> int:
    """Support heuristic ``n + x + 10 sqrt(x + n + 1) + 20``."""
    return int(math.ceil(n + x + 10.0 * math.sqrt(x + n + 1.0) + 20.0))


def transition_matrix(
    n_source: int,
    alpha: complex,
    m_max: int | None = None,
    tail_tolerance: float = 1e-10,
    auto_raise: bool = True,
    m_max_cap: int = M_MAX_CAP,
) -> TransitionTable:
    """Transition probabilities ``P(n_source -> m)`` for ``m = 0..m_max``.

    If the mass beyond ``m_max`` exceeds ``tail_tolerance`` the range is
    enlarged (when ``auto_raise``) until it fits or ``m_max_cap`` is hit.

    Raises
    ------
    TruncationError
        The tail could not be brought below ``tail_tolerance``.
    """
    n = _level(n_source, "n_source")
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    if m_max is None:
        m_max = min(default_m_max(n, x), max(m_max_cap, n))
    m_max = max(_level(m_max, "m_max"), n)
    while True:
        probs = displacement_row(n, alpha, m_max, with_phase=False) ** 2
        total = float(np.sum(probs))
        tail = max(0.0, 1.0 - total)
        if tail <= tail_tolerance:
            break
        if not auto_raise or m_max >= m_max_cap:
            raise TruncationError(
                f"tail mass {tail:.3e} above tolerance {tail_tolerance:.1e} at m_max={m_max}",
                achieved_tail=tail,
            )
        m_max = min(m_max_cap, 2 * m_max + 10)
    return TransitionTable(
        n_source=n,
        alpha=alpha,
        probabilities=probs,
        tail_mass=tail,
        up_mass=float(np.sum(probs[n + 1 :])),
        down_mass=float(np.sum(probs[:n])),
        tail_tolerance=tail_tolerance,
    )


def sweep_over_levels(x: float, n_range):
    """``[(n, transition_probability)]`` at fixed intensity, one recurrence pass."""
    levels = [_level(n) for n in n_range]
    if not levels:
        raise DomainError("n_range is empty")
    seq = laguerre_sequence(max(levels), float(x))
    return [(n, 1.0 - float(seq[n]) ** 2) for n in levels]


def sweep_over_intensity(n: int, x_range):
    """``[(x, transition_probability)]`` at fixed level."""
    n = _level(n)
    xs = np.asarray(list(x_range), dtype=float)
    if xs.size == 0:
        raise DomainError("x_range is empty")
    amp = np.atleast_1d(laguerre_scaled(n, xs))
    return [(float(x), 1.0 - float(a) ** 2) for x, a in zip(xs, amp)]
