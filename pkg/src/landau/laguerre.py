"""Laguerre polynomials by forward recurrence, and the Fejér asymptotic form.

Three evaluators share one loop:

* plain:      ``L_n^(k)(x)``, seeds ``L_0 = 1``
* scaled:     ``exp(-x/2) L_n^(k)(x)``, same recurrence with seeds times ``exp(-x/2)``
* normalized: ``sqrt(n!/(n+k)!) x^(k/2) exp(-x/2) L_n^(k)(x)``, which is the
  modulus of a displacement-operator matrix element and never exceeds 1.

The normalized variant tracks a separate log scale, so arguments whose
``exp(-x/2)`` seed would underflow still come out right.  For ``k = 0`` the
normalized and scaled recurrences perform identical floating-point operations.

Forward recurrence is stable for ``x`` below the turning point ``~4n``, which
covers the fixed-``x``, large-``n`` regime used here.  The explicit alternating
sum is not used: it cancels catastrophically for large ``n``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, LaguerreOverflowError

__all__ = [
    "laguerre",
    "laguerre_scaled",
    "laguerre_sequence",
    "assoc_laguerre",
    "assoc_laguerre_scaled",
    "normalized_assoc_laguerre",
    "fejer_asymptotic",
]

_RESCALE_ABOVE = 1e200
_LOG_UNDERFLOW = -600.0


def _check_degree(n, name="n"):
    if isinstance(n, (bool, np.bool_)) or int(n) != n or n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise DomainError("Laguerre argument x must be non-negative (it is |u k|^2)")
    return float(arr) if arr.ndim == 0 else arr


def _plain(n, k, x, seed, keep_all=False):
    # (j+1) L_{j+1} = (2j + k + 1 - x) L_j - (j + k) L_{j-1}
    prev = 0.0 * seed
    cur = seed
    out = [cur] if keep_all else None
    for j in range(n):
        prev, cur = cur, ((2 * j + k + 1 - x) * cur - (j + k) * prev) / (j + 1)
        if keep_all:
            out.append(cur)
    return np.array(out) if keep_all else cur


def _normalized(n, k, x, keep_all=False):
    k_arr = np.asarray(k, dtype=float)
    x_arr = np.asarray(x, dtype=float)
    scalar = k_arr.ndim == 0 and x_arr.ndim == 0
    k_arr, x_arr = np.broadcast_arrays(k_arr, x_arr)
    with np.errstate(divide="ignore", invalid="ignore"):
        k_log_x = np.where(k_arr == 0, 0.0, k_arr * np.log(x_arr))
    log_seed = 0.5 * k_log_x - 0.5 * x_arr - 0.5 * np.vectorize(math.lgamma)(k_arr + 1.0)
    # x = 0 with k > 0 gives log_seed = -inf: the value is exactly zero
    log_scale = np.where((log_seed < _LOG_UNDERFLOW) & np.isfinite(log_seed), log_seed, 0.0)
    rescaling = bool(np.any(log_scale != 0.0))
    if scalar and not keep_all:
        return _normalized_scalar(n, float(k_arr), float(x_arr), float(log_seed))
    cur = np.exp(log_seed - log_scale)
    prev = 0.0 * cur
    out = [cur * np.exp(log_scale)] if keep_all else None
    for j in range(n):
        num = (2 * j + k_arr + 1 - x_arr) * cur - np.sqrt(j * (j + k_arr)) * prev
        prev, cur = cur, num / np.sqrt((j + 1) * (j + k_arr + 1))
        if rescaling:
            big = np.abs(cur) > _RESCALE_ABOVE
            if np.any(big):
                factor = np.where(big, _RESCALE_ABOVE, 1.0)
                cur = cur / factor
                prev = prev / factor
                log_scale = log_scale + np.log(factor)
        if keep_all:
            out.append(cur * np.exp(log_scale))
    if keep_all:
        return np.array(out)
    return cur * np.exp(log_scale) if rescaling else cur


def _normalized_scalar(n, k, x, log_seed):
    log_scale = log_seed if -math.inf < log_seed < _LOG_UNDERFLOW else 0.0
    cur = math.exp(log_seed - log_scale)
    prev = 0.0
    sqrt = math.sqrt
    for j in range(n):
        prev, cur = cur, ((2 * j + k + 1 - x) * cur - sqrt(j * (j + k)) * prev) / sqrt((j + 1) * (j + k + 1))
        if log_scale and abs(cur) > _RESCALE_ABOVE:
            cur /= _RESCALE_ABOVE
            prev /= _RESCALE_ABOVE
            log_scale += math.log(_RESCALE_ABOVE)
    return cur * math.exp(log_scale) if log_scale else cur


def laguerre(n, x):
    """``L_n(x)`` by the three-term recurrence.

    Raises
    ------
    LaguerreOverflowError
        When the value is not representable; :func:`laguerre_scaled` stays
        finite in that regime.
    """
    n = _check_degree(n)
    x = _check_x(x)
    with np.errstate(over="ignore", invalid="ignore"):
        value = _plain(n, 0, x, 1.0 + 0.0 * x)
    if not np.all(np.isfinite(value)):
        raise LaguerreOverflowError(
            f"L_{n}(x) overflows double precision; use laguerre_scaled for exp(-x/2) L_n(x)"
        )
    return value


def laguerre_scaled(n, x):
    """``exp(-x/2) L_n(x)``, bounded by 1 in modulus for ``x >= 0``."""
    n = _check_degree(n)
    return _normalized(n, 0, _check_x(x))


def laguerre_sequence(n_max, x):
    """``exp(-x/2) L_j(x)`` for ``j = 0..n_max``; leading axis is ``j``."""
    n_max = _check_degree(n_max, "n_max")
    return _normalized(n_max, 0, _check_x(x), keep_all=True)


def assoc_laguerre(n, k, x):
    """Associated Laguerre polynomial ``L_n^(k)(x)`` for integer ``k >= 0``."""
    n = _check_degree(n)
    k = _check_degree(k, "k")
    x = _check_x(x)
    with np.errstate(over="ignore", invalid="ignore"):
        value = _plain(n, k, x, 1.0 + 0.0 * x)
    if not np.all(np.isfinite(value)):
        raise LaguerreOverflowError(
            f"L_{n}^({k})(x) overflows double precision; use assoc_laguerre_scaled"
        )
    return value


def assoc_laguerre_scaled(n, k, x):
    """``exp(-x/2) L_n^(k)(x)``."""
    n = _check_degree(n)
    k = _check_degree(k, "k")
    x = _check_x(x)
    with np.errstate(over="ignore", invalid="ignore"):
        return _plain(n, k, x, np.exp(-0.5 * np.asarray(x)) if np.ndim(x) else math.exp(-0.5 * x))


def normalized_assoc_laguerre(n, k, x, keep_all=False):
    """``sqrt(n!/(n+k)!) x^(k/2) exp(-x/2) L_n^(k)(x)``.

    ``k`` and ``x`` broadcast against each other, so a whole row of
    displacement matrix elements of fixed degree comes out of one pass.
    With ``keep_all`` the values for every degree ``0..n`` are returned,
    stacked along a new leading axis.
    """
    n = _check_degree(n)
    k_arr = np.asarray(k)
    if np.any(k_arr < 0) or np.any(k_arr != np.round(k_arr)):
        raise DomainError("upper index k must be a non-negative integer")
    return _normalized(n, k, _check_x(x), keep_all=keep_all)


def fejer_asymptotic(n, x):
    """Leading fixed-``x``, large-``n`` approximation of ``L_n(x)``.

    ``exp(x/2) / (sqrt(pi) x**(1/4) (n+1)**(1/4)) * cos(2 sqrt((n+1) x) - pi/4)``,
    with error ``O((n+1)**(-3/4))`` relative to the ``exp(x/2)`` envelope.
    """
    n = np.asarray(n)
    if np.any(n < 0):
        raise DomainError("n must be non-negative")
    x = _check_x(x)
    if np.any(np.asarray(x) == 0):
        raise DomainError("Fejér formula needs x > 0 (x**(1/4) in the denominator)")
    m = n + 1.0
    return (
        np.exp(0.5 * x)
        / (np.sqrt(np.pi) * x**0.25 * m**0.25)
        * np.cos(2.0 * np.sqrt(m * x) - 0.25 * np.pi)
    )
