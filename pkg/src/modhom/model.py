"""Source models, interferometer configuration and sampling grids.

Unit conventions used throughout the package:

* all spectral quantities (detunings ``omega``, linewidths ``sigma``) are
  ANGULAR frequencies in rad/ps;
* all temporal quantities (delays ``tau``, ``tau0``, conjugate times) are
  in ps.

With this choice products like ``sigma * tau`` are dimensionless as written,
and the Gaussian identities ``g_pm(t) = exp(-sigma_pm**2 t**2 / 2)`` hold
without stray 2*pi factors.

Detunings are measured from half the pump carrier: ``omega_s/i`` are the
signal/idler offsets, ``omega_plus = omega_s + omega_i`` and
``omega_minus = omega_s - omega_i`` are the sum/difference coordinates.
The optical carrier never enters numerically; the only place it survives is
the interferometer phase ``phi = omega_p * tau0`` (and the analogous
carrier phase of a N00N-type scan), which is stored directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InvalidInputError

TWO_PI = 2.0 * math.pi


def _require_finite(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} must be finite, got {value!r}")
    return arr if arr.ndim else float(arr)


class PumpRegime(Enum):
    CW = "cw"
    PULSED = "pulsed"


class AxisKind(Enum):
    """Semantic label for a sampling axis."""

    SIGNAL = "omega_s"        # signal detuning, rad/ps
    IDLER = "omega_i"         # idler detuning, rad/ps
    SUM = "omega_plus"        # omega_s + omega_i, rad/ps
    DIFFERENCE = "omega_minus"  # omega_s - omega_i, rad/ps
    CW_DETUNING = "omega"     # single CW detuning, rad/ps
    DELAY = "tau"             # scan delay, ps
    CONJUGATE_TIME = "T"      # Fourier conjugate of a detuning axis, ps


@dataclass(frozen=True)
class GaussianTpsa:
    """Gaussian-product two-photon spectral amplitude.

    amplitude(Op, Om) = exp(-Op^2 / 4 sigma_plus^2) * exp(-Om^2 / 4 sigma_minus^2)

    ``sigma_plus`` is the pump-sum linewidth, ``sigma_minus`` the difference
    linewidth, both in rad/ps.  The amplitude is peak-normalized
    (value 1 at the origin) and even in the difference coordinate, which is
    the exchange symmetry f(omega_s, omega_i) = f(omega_i, omega_s).
    """

    sigma_plus: float
    sigma_minus: float

    def __post_init__(self):
        for name in ("sigma_plus", "sigma_minus"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise InvalidInputError(f"{name} must be finite and > 0, got {value!r}")

    def amplitude(self, omega_plus, omega_minus):
        op = np.asarray(omega_plus, dtype=float)
        om = np.asarray(omega_minus, dtype=float)
        out = np.exp(-(op * op) / (4.0 * self.sigma_plus**2)
                     - (om * om) / (4.0 * self.sigma_minus**2))
        return out if out.ndim else float(out)

    def intensity(self, omega_plus, omega_minus):
        """Joint spectral intensity |f|^2 in sum/difference coordinates."""
        op = np.asarray(omega_plus, dtype=float)
        om = np.asarray(omega_minus, dtype=float)
        out = np.exp(-(op * op) / (2.0 * self.sigma_plus**2)
                     - (om * om) / (2.0 * self.sigma_minus**2))
        return out if out.ndim else float(out)


def tpsa_eval(tpsa: GaussianTpsa, omega_plus, omega_minus):
    """Evaluate the TPSA amplitude with input validation.

    Returns a value in (0, 1]; raises InvalidInputError on non-finite input.
    """
    op = _require_finite("omega_plus", omega_plus)
    om = _require_finite("omega_minus", omega_minus)
    return tpsa.amplitude(op, om)


@dataclass(frozen=True)
class SourceModel:
    """A biphoton source: a TPSA plus the pump regime.

    For a CW pump the sum detuning is pinned to zero (perfect frequency
    anti-correlation); the TPSA's sigma_plus is then irrelevant and never
    enters any CW formula.
    """

    tpsa: GaussianTpsa
    pump: PumpRegime = PumpRegime.PULSED

    @classmethod
    def pulsed(cls, sigma_plus: float, sigma_minus: float) -> "SourceModel":
        return cls(GaussianTpsa(sigma_plus, sigma_minus), PumpRegime.PULSED)

    @classmethod
    def cw(cls, sigma_minus: float) -> "SourceModel":
        # sigma_plus placeholder: unused by every CW code path.
        return cls(GaussianTpsa(sigma_minus, sigma_minus), PumpRegime.CW)

    @property
    def sigma_plus(self) -> float:
        return self.tpsa.sigma_plus

    @property
    def sigma_minus(self) -> float:
        return self.tpsa.sigma_minus

    @property
    def correlation(self) -> str:
        """Frequency-correlation tag of the source."""
        if self.pump is PumpRegime.CW:
            return "anti-correlated"
        if self.sigma_plus < self.sigma_minus:
            return "anti-correlated"
        if self.sigma_plus > self.sigma_minus:
            return "correlated"
        return "uncorrelated"

    def cw_intensity(self, omega):
        """CW marginal JSI F(omega) = |f(0, 2*omega)|^2."""
        om = np.asarray(omega, dtype=float)
        out = np.exp(-2.0 * om * om / self.sigma_minus**2)
        return out if out.ndim else float(out)


def coherence_time(model: SourceModel) -> float:
    """Biphoton coherence-time scale 1/sigma_minus, in ps.

    Widths of every dip or peak in the temporal interferogram scale with
    this number; tau0 should exceed it for the single-photon
    non-interference condition to hold.
    """
    return 1.0 / model.sigma_minus


@dataclass(frozen=True)
class InterferometerConfig:
    """Delays and phase of the modified HOM setup.

    tau0  -- Mach-Zehnder imbalance (path difference / c), ps, >= 0
    phi   -- carrier phase omega_p * tau0, radians (raw value kept)
    tau   -- scan delay of the recombining beamsplitter, ps
    """

    tau0: float
    phi: float = 0.0
    tau: float = 0.0

    def __post_init__(self):
        for name in ("tau0", "phi", "tau"):
            _require_finite(name, getattr(self, name))
        if self.tau0 < 0.0:
            raise InvalidInputError(f"tau0 must be >= 0, got {self.tau0!r}")

    @property
    def phi_reduced(self) -> float:
        """phi folded into [0, 2*pi), for comparisons; raw phi is kept."""
        return self.phi % TWO_PI

    def with_tau(self, tau: float) -> "InterferometerConfig":
        return InterferometerConfig(self.tau0, self.phi, tau)


@dataclass(frozen=True)
class Grid1D:
    """Uniform sampling axis: points start + step * k, k = 0..count-1."""

    start: float
    step: float
    count: int
    kind: AxisKind = AxisKind.DELAY

    def __post_init__(self):
        _require_finite("start", self.start)
        _require_finite("step", self.step)
        if self.step <= 0.0:
            raise InvalidInputError(f"step must be > 0, got {self.step!r}")
        if self.count < 2:
            raise InvalidInputError(f"count must be >= 2, got {self.count!r}")

    @classmethod
    def linspace(cls, lo: float, hi: float, count: int, kind: AxisKind = AxisKind.DELAY) -> "Grid1D":
        if count < 2:
            raise InvalidInputError(f"count must be >= 2, got {count!r}")
        if not hi > lo:
            raise InvalidInputError(f"need hi > lo, got [{lo!r}, {hi!r}]")
        return cls(float(lo), (float(hi) - float(lo)) / (count - 1), int(count), kind)

    @classmethod
    def symmetric(cls, half_span: float, count: int, kind: AxisKind = AxisKind.DELAY) -> "Grid1D":
        """Axis symmetric about zero; odd count puts a node exactly at 0."""
        return cls.linspace(-half_span, half_span, count, kind)

    @property
    def stop(self) -> float:
        return self.start + self.step * (self.count - 1)

    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count, dtype=float)

    def index_of(self, value: float) -> int:
        """Index of the grid node nearest to ``value``."""
        i = int(round((value - self.start) / self.step))
        return min(max(i, 0), self.count - 1)


@dataclass(frozen=True)
class Grid2D:
    """Tensor-product grid; values arrays are indexed [ix, iy]."""

    x: Grid1D
    y: Grid1D

    def meshgrid(self):
        return np.meshgrid(self.x.points(), self.y.points(), indexing="ij")

    @property
    def shape(self):
        return (self.x.count, self.y.count)


def sum_diff_from_signal_idler(omega_s, omega_i):
    """(omega_s, omega_i) -> (omega_plus, omega_minus)."""
    os_ = np.asarray(omega_s, dtype=float)
    oi = np.asarray(omega_i, dtype=float)
    return os_ + oi, os_ - oi


def signal_idler_from_sum_diff(omega_plus, omega_minus):
    """(omega_plus, omega_minus) -> (omega_s, omega_i); inverse of the above."""
    op = np.asarray(omega_plus, dtype=float)
    om = np.asarray(omega_minus, dtype=float)
    return (op + om) / 2.0, (op - om) / 2.0
