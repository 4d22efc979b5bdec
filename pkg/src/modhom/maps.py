"""Spectrally resolved 2-D interference maps and their projections.

Maps are stored row-major on tensor-product grids with axis metadata, so
a map written to CSV and read back reconstructs bit-exactly.  The
conjugate-time transform uses the symmetric 1/sqrt(2*pi) convention and
returns its time axis explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ContractViolationError, InvalidInputError
from .kernels import (
    cpd_cw,
    cpd_modified,
    cpd_noon,
    cpd_standard_hom,
)
from .model import (
    AxisKind,
    Grid1D,
    Grid2D,
    InterferometerConfig,
    PumpRegime,
    SourceModel,
    sum_diff_from_signal_idler,
)


class MapKind(Enum):
    JSI = "jsi"
    MODIFIED_HOM = "modified_hom"
    STANDARD_HOM = "standard_hom"
    NOON = "noon"
    FREQ_DELAY = "freq_delay"
    CONJUGATE_TIME = "conjugate_time"


@dataclass(frozen=True)
class SpectralMap:
    """2-D non-negative array over a Grid2D, values[ix, iy]."""

    grid: Grid2D
    values: np.ndarray
    kind: MapKind

    def __post_init__(self):
        if self.values.shape != self.grid.shape:
            raise InvalidInputError(
                f"values shape {self.values.shape} does not match grid {self.grid.shape}")
        if np.min(self.values) < 0.0:
            raise InvalidInputError("map values must be non-negative")


@dataclass(frozen=True)
class Spectrum1D:
    """1-D spectrum over a labelled axis, optionally with its JSI envelope."""

    grid: Grid1D
    values: np.ndarray
    envelope: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.values.shape != (self.grid.count,):
            raise InvalidInputError("spectrum length must match its grid")
        if self.envelope is not None and self.envelope.shape != self.values.shape:
            raise InvalidInputError("envelope length must match the spectrum")


def _signal_idler_mesh(grid: Grid2D):
    kinds = (grid.x.kind, grid.y.kind)
    if kinds != (AxisKind.SIGNAL, AxisKind.IDLER):
        raise ContractViolationError(
            f"expected a (signal, idler) detuning grid, got {kinds}")
    return grid.meshgrid()


def jsi_map(model: SourceModel, grid: Grid2D) -> SpectralMap:
    """Joint spectral intensity |f|^2 over the grid.

    Accepts either (signal, idler) or (sum, difference) detuning axes.
    """
    kinds = (grid.x.kind, grid.y.kind)
    gx, gy = grid.meshgrid()
    if kinds == (AxisKind.SIGNAL, AxisKind.IDLER):
        op, om = sum_diff_from_signal_idler(gx, gy)
    elif kinds == (AxisKind.SUM, AxisKind.DIFFERENCE):
        op, om = gx, gy
    else:
        raise ContractViolationError(f"unsupported axis kinds for a JSI map: {kinds}")
    return SpectralMap(grid, model.tpsa.intensity(op, om), MapKind.JSI)


def spectral_map(model: SourceModel, config: InterferometerConfig,
                 grid: Grid2D, kind: MapKind) -> SpectralMap:
    """Evaluate the selected CPD kernel pointwise over a (signal, idler) grid.

    For the modified interferometer at tau = 0 the map is a checkerboard:
    modulation period 2*pi/tau0 along both the sum and the difference
    direction, with the sum-direction pattern offset by phi.
    """
    gs, gi = _signal_idler_mesh(grid)
    if kind is MapKind.MODIFIED_HOM:
        op, om = sum_diff_from_signal_idler(gs, gi)
        values = cpd_modified(model, config, op, om)
    elif kind is MapKind.STANDARD_HOM:
        values = cpd_standard_hom(model, config.tau, gs, gi)
    elif kind is MapKind.NOON:
        # config.phi is read as the carrier phase omega_p * tau of the scan
        values = cpd_noon(model, config.tau, config.phi, gs, gi)
    else:
        raise InvalidInputError(f"spectral_map cannot build kind {kind!r}")
    return SpectralMap(grid, values, kind)


def freq_delay_map(model: SourceModel, tau_grid: Grid1D, omega_grid: Grid1D,
                   tau0: float, phi: float) -> SpectralMap:
    """CW frequency-delay interferogram r_c(tau, omega) over a (tau, omega) grid."""
    if model.pump is not PumpRegime.CW:
        raise ContractViolationError("freq_delay_map requires a CW model")
    if tau_grid.kind is not AxisKind.DELAY or omega_grid.kind is not AxisKind.CW_DETUNING:
        raise ContractViolationError(
            "freq_delay_map needs a delay x-axis and a CW-detuning y-axis")
    omega = omega_grid.points()
    rows = [cpd_cw(model, InterferometerConfig(tau0, phi, t), omega)
            for t in tau_grid.points()]
    return SpectralMap(Grid2D(tau_grid, omega_grid), np.vstack(rows), MapKind.FREQ_DELAY)


def conjugate_time_map(smap: SpectralMap) -> SpectralMap:
    """Transform a frequency-delay map along omega into conjugate time T.

    For each delay row computes |(h/sqrt(2*pi)) sum_k r(w_k) e^{+i w_k T}|
    on the full DFT time grid (spacing 2*pi / (count * step)), so discrete
    Parseval holds to round-off.
    """
    if smap.kind is not MapKind.FREQ_DELAY:
        raise ContractViolationError("conjugate_time_map expects a frequency-delay map")
    omega = smap.grid.y
    n = omega.count
    h = omega.step
    t_axis = 2.0 * math.pi * np.fft.fftshift(np.fft.fftfreq(n, d=h))
    # Sum_k r_k e^{+i w_k T} = e^{+i w0 T} * N * ifft(r) on the DFT time grid.
    spectra = np.fft.ifft(smap.values, axis=1) * n
    spectra = np.fft.fftshift(spectra, axes=1)
    phase = np.exp(1j * omega.start * t_axis)
    magnitudes = np.abs(spectra * phase[None, :]) * (h / math.sqrt(2.0 * math.pi))
    t_grid = Grid1D(float(t_axis[0]), 2.0 * math.pi / (n * h), n, AxisKind.CONJUGATE_TIME)
    return SpectralMap(Grid2D(smap.grid.x, t_grid), magnitudes, MapKind.CONJUGATE_TIME)


def project(smap: SpectralMap, onto: AxisKind) -> Spectrum1D:
    """Trapezoid-integrate the map over the axis complementary to ``onto``."""
    kinds = (smap.grid.x.kind, smap.grid.y.kind)
    if onto is kinds[0]:
        values = np.trapezoid(smap.values, dx=smap.grid.y.step, axis=1)
        return Spectrum1D(smap.grid.x, values)
    if onto is kinds[1]:
        values = np.trapezoid(smap.values, dx=smap.grid.x.step, axis=0)
        return Spectrum1D(smap.grid.y, values)
    raise InvalidInputError(
        f"map has axes {tuple(k.name for k in kinds)}; cannot project onto {onto.name}")
