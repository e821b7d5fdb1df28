"""Trend design matrices: weekly dummies plus a long-term basis.

The combined matrix Z has the 7 weekday indicator columns first, followed by
the long-term block (wavelet scaling vectors or retained cubic B-splines).
For the wavelet basis, Z lives on the padded domain and ``obs_rows`` maps
observation time t to its row; the weekly columns are reflected with exactly
the same extension as the data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import spline, wavelet
from .errors import ConfigError

WEEKDAY_NAMES = ("mon", "tue", "wed", "thu", "fri", "sat", "sun")


@dataclass(frozen=True)
class DesignMatrix:
    """Trend regressor matrix with padding bookkeeping.

    Attributes
    ----------
    Z : np.ndarray
        Dense matrix; rows are (possibly padded) times, columns are the 7
        weekday dummies followed by the long-term basis.
    obs_rows : np.ndarray
        Row index of observation time t (identity for unpadded bases).
    kind : str
        "wavelet", "spline" or "weekly".
    column_names : tuple of str
    """

    Z: np.ndarray
    obs_rows: np.ndarray
    kind: str
    column_names: tuple[str, ...]
    n_weekly: int = 7

    @property
    def n_longterm(self) -> int:
        return self.Z.shape[1] - self.n_weekly

    @property
    def n_obs(self) -> int:
        return self.obs_rows.size

    @property
    def Z_obs(self) -> np.ndarray:
        """Rows of Z at observation times."""
        return self.Z[self.obs_rows]

    def trend(self, gamma: np.ndarray) -> np.ndarray:
        """Trend values at observation times for coefficients ``gamma``."""
        return self.Z_obs @ np.asarray(gamma, dtype=float)


def weekly_design(T: int, start_weekday: int = 0) -> np.ndarray:
    """T-by-7 matrix of weekday indicators; column j is weekday j (0=Monday),
    cycling with period 7 from ``start_weekday``."""
    M = np.zeros((T, 7))
    M[np.arange(T), (start_weekday + np.arange(T)) % 7] = 1.0
    return M


def combine_design(kind: str, T: int, start_weekday: int = 0, *,
                   wavelet_order: int = 8, wavelet_levels: int = 8,
                   knot_spacing: float = 180.0,
                   knot_count: int | None = None) -> DesignMatrix:
    """Build the full trend design matrix Z for one of the basis kinds.

    kind="spline":  Z = [weekly | retained B-splines], T rows.
    kind="wavelet": Z = [padded weekly | scaling vectors], L rows, with
                    obs_rows mapping t to front + t.
    kind="weekly":  degenerate Z = weekly dummies only.
    """
    weekly = weekly_design(T, start_weekday)
    names = list(WEEKDAY_NAMES)
    if kind == "spline":
        C, mask = spline.spline_design(T, knot_spacing, knot_count)
        Z = np.hstack([weekly, C])
        obs = np.arange(T)
        names += [f"spl_{i:02d}" for i in np.flatnonzero(mask)]
    elif kind == "wavelet":
        filters = wavelet.daubechies_filters(wavelet_order)
        plan = wavelet.padding_plan(T, wavelet_order, wavelet_levels)
        W = wavelet.wavelet_design(plan, filters)
        padded_weekly = np.column_stack(
            [wavelet.symmetric_pad(weekly[:, j], plan) for j in range(7)]
        )
        Z = np.hstack([padded_weekly, W])
        obs = plan.front + np.arange(T)
        names += [f"wav_{i:02d}" for i in range(plan.q)]
    elif kind == "weekly":
        Z = weekly
        obs = np.arange(T)
    else:
        raise ConfigError(f"unknown trend basis kind {kind!r}")
    assert Z.shape[0] >= T
    return DesignMatrix(Z=Z, obs_rows=obs, kind=kind, column_names=tuple(names))


def write_design(dm: DesignMatrix, path) -> None:
    """Dump Z as delimited text with a header row; pad rows carry obs_t=-1."""
    obs_t = np.full(dm.Z.shape[0], -1, dtype=int)
    obs_t[dm.obs_rows] = np.arange(dm.n_obs)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("row,obs_t," + ",".join(dm.column_names) + "\n")
        for r in range(dm.Z.shape[0]):
            vals = ",".join(format(v, ".17g") for v in dm.Z[r])
            fh.write(f"{r},{obs_t[r]},{vals}\n")
