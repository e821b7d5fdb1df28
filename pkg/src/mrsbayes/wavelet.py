"""Wavelet-regression trend basis.

Builds the long-term trend design matrix from a Daubechies filter bank: the
data is reflected at both ends so that the level-J scaling functions whose
support overlaps the observation window tile the padded domain exactly, and
the design matrix holds those scaling vectors as columns.  Because the
columns are orthonormal, the filter-bank output coincides with the
least-squares coefficients of the corresponding regression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

# Orthonormal low-pass coefficients for Daubechies filters of order p
# (2p taps), normalized so that sum(h) = sqrt(2) and the stride-2
# autocorrelations vanish.  Values frozen from the published tables;
# validated on load by FilterPair.
_DAUBECHIES_H = {
    1: (
        0.7071067811865475244,
        0.7071067811865475244,
    ),
    2: (
        0.48296291314453414337,
        0.83651630373780790558,
        0.22414386804201338103,
        -0.12940952255126038117,
    ),
    3: (
        0.332670552950082616,
        0.80689150931109257649,
        0.4598775021184915701,
        -0.1350110200102545887,
        -0.085441273882026661693,
        0.035226291885709536603,
    ),
    4: (
        0.23037781330889650086,
        0.71484657055291564709,
        0.63088076792985890788,
        -0.027983769416859854211,
        -0.18703481171909308408,
        0.030841381835560763627,
        0.032883011666885199735,
        -0.010597401785069032105,
    ),
    5: (
        0.16010239797419291448,
        0.60382926979718967054,
        0.72430852843777292773,
        0.13842814590132073151,
        -0.24229488706638203186,
        -0.032244869584638374648,
        0.077571493840045713523,
        -0.0062414902127982742742,
        -0.012580751999081999469,
        0.003335725285473771278,
    ),
    6: (
        0.11154074335010946362,
        0.49462389039845308568,
        0.75113390802109535068,
        0.31525035170919762909,
        -0.22626469396543982008,
        -0.12976686756726193556,
        0.097501605587323049102,
        0.027522865530305728626,
        -0.031582039317486029565,
        0.00055384220116149613925,
        0.0047772575109455106396,
        -0.0010773010853084795649,
    ),
    7: (
        0.07785205408500917902,
        0.39653931948191730654,
        0.72913209084623511992,
        0.46978228740519312247,
        -0.14390600392856497541,
        -0.22403618499387498264,
        0.071309219266830264751,
        0.080612609151083071913,
        -0.03802993693501441358,
        -0.016574541630666880654,
        0.012550998556099840613,
        0.00042957797292136652113,
        -0.0018016407040474909153,
        0.00035371379997452024845,
    ),
    8: (
        0.054415842243104009955,
        0.31287159091429997066,
        0.67563073629728980681,
        0.58535468365420671277,
        -0.015829105256349305667,
        -0.28401554296154692652,
        0.00047248457391328277036,
        0.12874742662047845886,
        -0.01736930100180754617,
        -0.044088253930794751507,
        0.013981027917398281649,
        0.0087460940474057767164,
        -0.0048703529934515743104,
        -0.0003917403733769470463,
        0.00067544940645056936637,
        -0.00011747678412476953373,
    ),
    9: (
        0.038077947363878346589,
        0.24383467461259035373,
        0.6048231236901111119,
        0.65728807805130053808,
        0.13319738582500757619,
        -0.29327378327917490881,
        -0.096840783222976460514,
        0.14854074933810638014,
        0.030725681479333379212,
        -0.067632829061329973676,
        0.00025094711483145195759,
        0.022361662123679097205,
        -0.0047232047577513972779,
        -0.0042815036824634298345,
        0.0018476468830562264766,
        0.00023038576352319596721,
        -0.00025196318894271013697,
        0.000039347320316271599481,
    ),
    10: (
        0.026670057900555553587,
        0.18817680007769148902,
        0.52720118893172558648,
        0.68845903945360356574,
        0.28117234366057746075,
        -0.24984642432731537942,
        -0.1959462743773770435,
        0.12736934033579326008,
        0.09305736460357235116,
        -0.071394147166397087145,
        -0.029457536821875812858,
        0.03321267405934100174,
        0.0036065535669561696554,
        -0.010733175483330575044,
        0.0013953517470529011658,
        0.0019924052951850561172,
        -0.00068585669495971162656,
        -0.00011646685512928545095,
        0.000093588670320069591334,
        -0.000013264202894521244812,
    ),
}


@dataclass(frozen=True)
class FilterPair:
    """Low-pass/high-pass filter coefficients for one Daubechies order.

    Attributes
    ----------
    h : np.ndarray
        Low-pass (scaling) coefficients, length 2p, with sum(h) = sqrt(2)
        and orthonormal stride-2 shifts.
    g : np.ndarray
        High-pass (wavelet) coefficients, g[j] = (-1)^j h[N-1-j].
    """

    h: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        h = self.h
        n = h.size
        if abs(h.sum() - math.sqrt(2.0)) > 1e-12:
            raise AssertionError("low-pass coefficients must sum to sqrt(2)")
        for m in range(n // 2):
            dot = float(h[: n - 2 * m] @ h[2 * m:])
            if abs(dot - (1.0 if m == 0 else 0.0)) > 1e-12:
                raise AssertionError("stride-2 shifts must be orthonormal")

    @property
    def order(self) -> int:
        return self.h.size // 2


def daubechies_filters(p: int) -> FilterPair:
    """Return the order-``p`` Daubechies filter pair (``p`` in 1..10)."""
    if p not in _DAUBECHIES_H:
        raise ConfigError(f"unsupported wavelet order {p}; available: 1..10")
    h = np.asarray(_DAUBECHIES_H[p], dtype=float)
    n = h.size
    g = np.array([(-1) ** j * h[n - 1 - j] for j in range(n)])
    return FilterPair(h=h, g=g)


@dataclass(frozen=True)
class PaddingPlan:
    """Bookkeeping for the symmetric extension of a length-T series.

    ``front`` rows precede the data and ``back`` rows follow it so that the
    padded length ``L`` is tiled exactly by the ``q`` level-J scaling
    vectors.  ``level_sizes[j]`` is the signal length after j filter passes;
    ``level_sizes[J] == q``.
    """

    T: int
    p: int
    J: int
    front: int
    q: int
    L: int
    back: int
    level_sizes: tuple[int, ...] = field(repr=False)


def padding_plan(T: int, p: int, J: int) -> PaddingPlan:
    """Compute pad lengths and per-level sizes for ``T`` observations.

    front = 2(p-1)(2^J - 1), q = ceil((T + front) / 2^J),
    L = front + 2^J q, back = L - T - front.
    """
    if T < 1 or J < 1:
        raise ConfigError("need T >= 1 and J >= 1")
    front = 2 * (p - 1) * (2**J - 1)
    q = -(-(T + front) // 2**J)  # ceil division
    L = front + 2**J * q
    back = L - T - front
    sizes = [L]
    for _ in range(J):
        # rows of the decimated filter matrix whose support fits entirely
        sizes.append((sizes[-1] - 2 * p) // 2 + 1)
    assert sizes[-1] == q, "level recursion must terminate at q"
    return PaddingPlan(T=T, p=p, J=J, front=front, q=q, L=L, back=back,
                       level_sizes=tuple(sizes))


def symmetric_pad(x: np.ndarray, plan: PaddingPlan) -> np.ndarray:
    """Extend ``x`` by reflection (edge point not repeated) to length L.

    The reflection tiles back and forth when a pad is longer than the data.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (plan.T,):
        raise ValueError(f"series length {x.shape} does not match plan T={plan.T}")
    if plan.front == 0 and plan.back == 0:
        return x.copy()
    if x.size == 1:
        return np.full(plan.L, x[0])
    return np.pad(x, (plan.front, plan.back), mode="reflect")


def lowpass_analyze(x: np.ndarray, h: np.ndarray) -> np.ndarray:
    """One filter pass: correlate with ``h`` and keep every second output."""
    return np.correlate(x, h, mode="valid")[::2]


def lowpass_synthesize(a: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Adjoint of :func:`lowpass_analyze`: upsample by 2, then convolve."""
    up = np.zeros(2 * (a.size - 1) + 1)
    up[::2] = a
    return np.convolve(up, h, mode="full")


def pyramid_coefficients(x_padded: np.ndarray, filters: FilterPair, J: int) -> np.ndarray:
    """Level-J scaling coefficients of a padded series (J filter passes)."""
    a = np.asarray(x_padded, dtype=float)
    for _ in range(J):
        a = lowpass_analyze(a, filters.h)
    return a


def wavelet_design(plan: PaddingPlan, filters: FilterPair) -> np.ndarray:
    """Build the L-by-q design matrix whose columns are the level-J scaling
    vectors on the padded domain.

    Columns are orthonormal, and the pyramid output equals the least-squares
    coefficients of the regression of the padded series on this matrix.
    """
    if filters.order != plan.p:
        raise AssertionError("filter order does not match padding plan")
    W = np.zeros((plan.L, plan.q))
    for k in range(plan.q):
        col = np.zeros(plan.q)
        col[k] = 1.0
        for _ in range(plan.J):
            col = lowpass_synthesize(col, filters.h)
        assert col.size == plan.L
        W[:, k] = col
    return W
