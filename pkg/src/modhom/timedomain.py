"""Time-domain route: joint temporal intensity and its integral.

The coincidence amplitude is a superposition of four copies of the base
temporal amplitude A (the 2-D transform of the TPSA), shifted by the
interferometer delays.  Writing tp = tau + tau0,

    Psi(ts, ti) = A(ts+tp, ti) - A(ts, ti+tp)
                  + e^{-i phi} [A(ts+tp, ti+2 tau0) - A(ts+2 tau0, ti+tp)]

The carrier phase attaches to the two amplitudes shifted by the extra
round trip 2 tau0; this assignment is what makes the integrated rate
reproduce the closed form, and is pinned down by the three-route
equivalence tests.  |Psi|^2 is the JTI; integrating it over both times and
dividing by the four-amplitude baseline 4 pi s+ s- gives the normalized
rate again.

Integration runs on a rotated grid over (p, m) = (ts+ti, ts-ti): the
amplitude factorizes along these axes, so the per-axis resolution
requirements decouple even for extreme sigma ratios (dts dti = dp dm / 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import InvalidInputError, WindowError
from .model import AxisKind, Grid1D, InterferometerConfig, SourceModel


@dataclass(frozen=True)
class TemporalAmplitude:
    """Closed-form base amplitude A(ts, ti) for the Gaussian TPSA.

    A = s+ s- exp(-s+^2 (ts+ti)^2 / 4) exp(-s-^2 (ts-ti)^2 / 4),
    the unitary-normalized 2-D transform of the TPSA (so Parseval gives
    integral |A|^2 = integral |f|^2 = pi s+ s-).
    """

    sigma_plus: float
    sigma_minus: float

    def __call__(self, t_s, t_i):
        ts = np.asarray(t_s, dtype=float)
        ti = np.asarray(t_i, dtype=float)
        p = ts + ti
        m = ts - ti
        out = (self.sigma_plus * self.sigma_minus
               * np.exp(-(self.sigma_plus**2) * p * p / 4.0
                        - (self.sigma_minus**2) * m * m / 4.0))
        return out if out.ndim else float(out)

    @property
    def peak(self) -> float:
        return self.sigma_plus * self.sigma_minus


def temporal_amplitude(model: SourceModel) -> TemporalAmplitude:
    return TemporalAmplitude(model.sigma_plus, model.sigma_minus)


def temporal_amplitude_numeric(model: SourceModel, span_sigmas: float = 8.0,
                               samples: int = 512):
    """Base amplitude by discrete 2-D transform of the sampled TPSA.

    Returns (t_axis, A_num) with A_num[j, k] at (t_axis[j], t_axis[k]).
    Used to validate the closed form; resolution follows from the sampled
    frequency window (t step = 2 pi / (N h)).
    """
    sigma = max(model.sigma_plus, model.sigma_minus)
    h = 2.0 * span_sigmas * sigma / samples
    w = (np.arange(samples) - samples // 2) * h
    f = model.tpsa.amplitude(w[:, None] + w[None, :], w[:, None] - w[None, :])
    # A(t_m) = (h^2 / 2pi) e^{-i w0 t_m} fft terms on t_m = 2 pi m / (N h)
    t = 2.0 * math.pi * np.fft.fftshift(np.fft.fftfreq(samples, d=h))
    spec = np.fft.fftshift(np.fft.fft2(f))
    phase = np.exp(-1j * w[0] * t)
    a_num = (h * h / (2.0 * math.pi)) * phase[:, None] * phase[None, :] * spec
    return t, a_num


def _shifts(config: InterferometerConfig, tau: Optional[float] = None):
    tau = config.tau if tau is None else tau
    tp = tau + config.tau0
    two = 2.0 * config.tau0
    return tp, two


def jti(model: SourceModel, config: InterferometerConfig, t_s, t_i):
    """Joint temporal intensity |Psi(ts, ti)|^2 (direct-modulus path)."""
    ts = np.asarray(t_s, dtype=float)
    ti = np.asarray(t_i, dtype=float)
    if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(ti))):
        raise InvalidInputError("times must be finite")
    a = temporal_amplitude(model)
    tp, two = _shifts(config)
    psi = (a(ts + tp, ti) - a(ts, ti + tp)
           + np.exp(-1j * config.phi) * (a(ts + tp, ti + two) - a(ts + two, ti + tp)))
    out = np.abs(psi) ** 2
    return out if out.ndim else float(out)


def jti_term_groups(model: SourceModel, config: InterferometerConfig,
                    t_s, t_i) -> Dict[str, np.ndarray]:
    """The 16 expansion terms of |Psi|^2, bundled into their four roles.

    diagonal:  |A1|^2 + |A2|^2 + |A3|^2 + |A4|^2          -> baseline
    sum_pairs: A1 A3* + A2 A4* + c.c.                     -> phase-dependent offset
    middle:    -(A1 A4* + A2 A3* + c.c.)                  -> middle feature
    side:      -(A1 A2* + A3 A4* + c.c.)                  -> the two side dips

    The groups sum to the direct-modulus JTI exactly.
    """
    ts = np.asarray(t_s, dtype=float)
    ti = np.asarray(t_i, dtype=float)
    a = temporal_amplitude(model)
    tp, two = _shifts(config)
    a1 = a(ts + tp, ti)
    a2 = a(ts, ti + tp)
    a3 = a(ts + tp, ti + two)
    a4 = a(ts + two, ti + tp)
    cphi = math.cos(config.phi)
    return {
        "diagonal": a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4,
        "sum_pairs": 2.0 * cphi * (a1 * a3 + a2 * a4),
        "middle": -2.0 * cphi * (a1 * a4 + a2 * a3),
        "side": -2.0 * (a1 * a2 + a3 * a4),
    }


def jti_baseline(model: SourceModel) -> float:
    """Integral of the four diagonal terms: 4 pi s+ s-."""
    return 4.0 * math.pi * model.sigma_plus * model.sigma_minus


def default_time_grids(model: SourceModel, config: InterferometerConfig,
                       tau: float, pad_sigmas: float = 8.0,
                       points_per_sigma: float = 4.0) -> Tuple[Grid1D, Grid1D]:
    """Rotated (sum-time, difference-time) grids covering all four centers."""
    tp = tau + config.tau0
    two = 2.0 * config.tau0
    s_p = math.sqrt(2.0) / model.sigma_plus
    s_m = math.sqrt(2.0) / model.sigma_minus

    p_centers = (-tp, -tp - two)
    p_lo = min(p_centers) - pad_sigmas * s_p
    p_hi = max(p_centers) + pad_sigmas * s_p
    step_p = s_p / points_per_sigma
    n_p = int(math.ceil((p_hi - p_lo) / step_p)) + 1

    m_half = max(abs(tp), abs(tau - config.tau0)) + pad_sigmas * s_m
    step_m = s_m / points_per_sigma
    n_m = 2 * int(math.ceil(m_half / step_m)) + 1

    return (Grid1D(p_lo, step_p, n_p, AxisKind.CONJUGATE_TIME),
            Grid1D(-step_m * (n_m // 2), step_m, n_m, AxisKind.CONJUGATE_TIME))


def rate_from_jti(model: SourceModel, config: InterferometerConfig, tau: float,
                  time_grids: Optional[Tuple[Grid1D, Grid1D]] = None,
                  boundary_tolerance: float = 1e-8,
                  chunk_rows: int = 2048) -> float:
    """Normalized rate by 2-D trapezoid integration of the JTI.

    ``time_grids`` are rotated (ts+ti, ts-ti) axes; they default to a
    window padded eight Gaussian widths past every amplitude center.  A
    WindowError is raised when the integrand's boundary carries more than
    ``boundary_tolerance`` of the total mass.
    """
    if time_grids is None:
        time_grids = default_time_grids(model, config, tau)
    p_grid, m_grid = time_grids
    cfg = config.with_tau(tau)

    m = m_grid.points()
    p = p_grid.points()
    inner = np.empty(p_grid.count)
    edge = 0.0
    for lo in range(0, p_grid.count, chunk_rows):
        hi = min(lo + chunk_rows, p_grid.count)
        pp = p[lo:hi, None]
        mm = m[None, :]
        block = jti(model, cfg, (pp + mm) / 2.0, (pp - mm) / 2.0)
        inner[lo:hi] = np.trapezoid(block, dx=m_grid.step, axis=1)
        edge += float(np.sum(block[:, 0]) + np.sum(block[:, -1]))
        if lo == 0:
            edge += float(np.sum(block[0]))
        if hi == p_grid.count:
            edge += float(np.sum(block[-1]))
    total = float(np.trapezoid(inner, dx=p_grid.step))
    edge_mass = edge * p_grid.step * m_grid.step
    if total > 0.0 and edge_mass > boundary_tolerance * total:
        raise WindowError(
            f"integration window truncates the JTI (boundary mass "
            f"{edge_mass / total:.2e} of total, tolerance {boundary_tolerance:g})")
    # dts dti = dp dm / 2
    return 0.5 * total / jti_baseline(model)
