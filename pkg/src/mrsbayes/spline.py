"""Cubic B-spline trend basis.

Basis functions are built with the standard knot-insertion recursion on an
augmented knot vector: four coincident knots strictly below the first knot
and four strictly above the last.  Convention 0/0 = 0 handles the repeated
knots.  Observation times are 0..T-1; basis functions that vanish at every
observation time (the outermost two, by construction) are dropped and the
retained-column mask is returned alongside the matrix.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigError


def default_knots(T: int, spacing: float = 180.0, count: int | None = None) -> np.ndarray:
    """Equally spaced knots covering the observation window with one unit of
    margin on each side; count = max(2, round(T / spacing)) unless given."""
    k = count if count is not None else max(2, round(T / spacing))
    if k < 2:
        raise ConfigError("need at least 2 knots")
    return np.linspace(-1.0, float(T), k)


def bspline_basis(x: np.ndarray, knots: np.ndarray, order: int = 4) -> np.ndarray:
    """Evaluate all order-``order`` B-splines on the augmented knot vector.

    Parameters
    ----------
    x : np.ndarray
        Evaluation points.
    knots : np.ndarray
        Strictly increasing interior knots (eta_1 < ... < eta_k).
    order : int
        Spline order (4 = cubic).

    Returns
    -------
    np.ndarray of shape (len(x), k + order) with entry (t, i) = B_{i,order}(x_t).
    """
    knots = np.asarray(knots, dtype=float)
    if knots.ndim != 1 or knots.size < 2 or np.any(np.diff(knots) <= 0):
        raise ConfigError("knots must be strictly increasing with at least 2 entries")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    k = knots.size
    tau = np.concatenate([
        np.full(order, knots[0] - 1.0),
        knots,
        np.full(order, knots[-1] + 1.0),
    ])
    n_tau = tau.size

    # order-1 splines: indicators of [tau_i, tau_{i+1}), zero when knots repeat
    B = np.zeros((x.size, n_tau - 1))
    for i in range(n_tau - 1):
        if tau[i] < tau[i + 1]:
            B[:, i] = (x >= tau[i]) & (x < tau[i + 1])

    for m in range(2, order + 1):
        Bnext = np.zeros((x.size, n_tau - m))
        for i in range(n_tau - m):
            left = 0.0
            if tau[i + m - 1] > tau[i]:
                left = (x - tau[i]) / (tau[i + m - 1] - tau[i]) * B[:, i]
            right = 0.0
            if tau[i + m] > tau[i + 1]:
                right = (tau[i + m] - x) / (tau[i + m] - tau[i + 1]) * B[:, i + 1]
            Bnext[:, i] = left + right
        B = Bnext
    return B


def spline_design(T: int, knot_spacing: float = 180.0,
                  knot_count: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Cubic B-spline design matrix at observation times 0..T-1.

    Returns
    -------
    C : np.ndarray of shape (T, n_retained)
        Basis columns that are nonzero at one or more observation times.
    mask : np.ndarray of bool, shape (k + 4,)
        True for retained columns of the full basis.
    """
    knots = default_knots(T, knot_spacing, knot_count)
    t = np.arange(T, dtype=float)
    full = bspline_basis(t, knots, order=4)
    mask = np.any(full != 0.0, axis=0)
    return full[:, mask], mask
