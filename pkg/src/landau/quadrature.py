"""Composite Gauss-Legendre panels that respect field breakpoints."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import EvaluationError


@lru_cache(maxsize=None)
def gauss_legendre(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def panel_edges(a, b, breakpoints, max_width):
    """Panel boundaries on ``[a, b]``: split at every breakpoint, then
    subdivide each piece uniformly so no panel exceeds ``max_width``."""
    inner = [p for p in np.unique(np.asarray(breakpoints, dtype=float)) if a < p < b]
    knots = np.array([a, *inner, b])
    pieces = []
    for lo, hi in zip(knots[:-1], knots[1:]):
        count = max(1, math.ceil((hi - lo) / max_width)) if math.isfinite(max_width) else 1
        pieces.append(np.linspace(lo, hi, count + 1)[:-1])
    pieces.append([b])
    return np.concatenate(pieces)


def refine(edges):
    """Halve every panel."""
    mids = 0.5 * (edges[:-1] + edges[1:])
    out = np.empty(2 * len(edges) - 1)
    out[0::2] = edges
    out[1::2] = mids
    return out


def panel_integrals(func, edges, nodes=8):
    """Integral of ``func`` (vectorised, complex allowed) over each panel.

    Nodes are strictly interior, so a function with jumps at panel edges
    is integrated as if each panel saw only its own one-sided limits.
    """
    x, w = gauss_legendre(nodes)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    t = mid[:, None] + half[:, None] * x[None, :]
    values = func(t)
    if not np.all(np.isfinite(values)):
        bad = t[~np.isfinite(values)][0]
        raise EvaluationError(f"integrand is not finite at t = {bad}")
    return half * (values @ w), half * (np.abs(values) @ w)
