"""Temporal coincidence-rate curves.

Closed-form Gaussian rates, the frequency-domain quadrature route that
integrates the CPD kernel numerically, and the normalized Fourier helpers
g_pm.  The quadrature route is deliberately independent of the closed
forms: it evaluates the 2-D kernel pointwise on a tensor grid and
trapezoid-integrates, normalizing by the analytic baseline
4 * integral(|f|^2) = 8 pi sigma_plus sigma_minus.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np

from .errors import (
    ContractViolationError,
    CoherenceTimeWarning,
    InvalidInputError,
    ResolutionError,
)
from .kernels import cpd_cw, cpd_modified
from .model import (
    AxisKind,
    Grid1D,
    InterferometerConfig,
    PumpRegime,
    SourceModel,
    coherence_time,
)


def g_fourier(sigma: float, tau):
    """Normalized real Fourier transform of a Gaussian spectral envelope.

    For the envelope F(w) = exp(-w^2 / 2 sigma^2) this is
    exp(-sigma^2 tau^2 / 2); value 1 at tau = 0 by construction.
    """
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise InvalidInputError(f"sigma must be finite and > 0, got {sigma!r}")
    t = np.asarray(tau, dtype=float)
    out = np.exp(-0.5 * sigma**2 * t * t)
    return out if out.ndim else float(out)


def g_fourier_numeric(sigma: float, tau, span_sigmas: float = 10.0, samples: int = 4097):
    """Same quantity by direct numerical transform of the envelope.

    Trapezoid integration of F(w) cos(w tau) over +-span_sigmas*sigma,
    normalized by the tau = 0 integral.  Kept as an independent check of
    the closed form (and as the hook for non-Gaussian envelopes).
    """
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise InvalidInputError(f"sigma must be finite and > 0, got {sigma!r}")
    w = np.linspace(-span_sigmas * sigma, span_sigmas * sigma, samples)
    envelope = np.exp(-0.5 * (w / sigma) ** 2)
    t = np.atleast_1d(np.asarray(tau, dtype=float))
    num = np.trapezoid(envelope[None, :] * np.cos(np.outer(t, w)), w, axis=1)
    out = num / np.trapezoid(envelope, w)
    return out if np.ndim(tau) else float(out[0])


def _warn_if_inside_coherence_time(model: SourceModel, tau0: float):
    tcoh = coherence_time(model)
    if tau0 <= tcoh:
        warnings.warn(
            f"tau0 = {tau0:g} ps does not exceed the biphoton coherence time "
            f"{tcoh:g} ps; single photons interfere with themselves and the "
            "modified-interferometer interpretation degrades",
            CoherenceTimeWarning,
            stacklevel=3,
        )


def visibility_parameters(model: SourceModel, tau0: float, phi: float):
    """Middle-feature parameters (a, b) of the pulsed closed form.

    a = cos(phi) g_plus(tau0) g_minus(tau0) sets the baseline 1 + a,
    b = cos(phi) g_plus(tau0) the middle-feature visibility.
    """
    gp = g_fourier(model.sigma_plus, tau0)
    gm = g_fourier(model.sigma_minus, tau0)
    b = math.cos(phi) * gp
    return b * gm, b


def rate_modified_pulsed(model: SourceModel, tau0: float, phi: float, tau):
    """Normalized pulsed-pump coincidence rate, closed Gaussian form.

    1 + a - b g_-(tau) - g_-(tau+tau0)/2 - g_-(tau-tau0)/2
    """
    if model.pump is not PumpRegime.PULSED:
        raise ContractViolationError("rate_modified_pulsed requires a pulsed model")
    _warn_if_inside_coherence_time(model, tau0)
    a, b = visibility_parameters(model, tau0, phi)
    t = np.asarray(tau, dtype=float)
    sm = model.sigma_minus
    out = np.asarray(1.0 + a
                     - b * g_fourier(sm, t)
                     - 0.5 * g_fourier(sm, t + tau0)
                     - 0.5 * g_fourier(sm, t - tau0))
    return out if out.ndim else float(out)


def rate_modified_cw(model: SourceModel, tau0: float, phi: float, tau):
    """Normalized CW-pump coincidence rate.

    1 - cos(phi) g(2 tau) - g(2(tau+tau0))/2 - g(2(tau-tau0))/2
    with g the normalized transform of the CW marginal JSI; for the
    Gaussian source g(2t) = g_-(t).
    """
    if model.pump is not PumpRegime.CW:
        raise ContractViolationError("rate_modified_cw requires a CW model")
    _warn_if_inside_coherence_time(model, tau0)
    t = np.asarray(tau, dtype=float)
    g = _cw_marginal_g
    out = np.asarray(1.0
                     - math.cos(phi) * g(model, 2.0 * t)
                     - 0.5 * g(model, 2.0 * (t + tau0))
                     - 0.5 * g(model, 2.0 * (t - tau0)))
    return out if out.ndim else float(out)


def _cw_marginal_g(model: SourceModel, t):
    # Transform of F(w) = exp(-2 w^2 / sigma_minus^2): exp(-sigma_minus^2 t^2 / 8).
    t = np.asarray(t, dtype=float)
    return np.exp(-(model.sigma_minus**2) * t * t / 8.0)


@dataclass(frozen=True)
class QuadratureSpec:
    """Uniform tensor grid for integrating the 2-D CPD kernel.

    Spans are half-widths in units of the respective sigma; steps are
    absolute (rad/ps).  ``chunk_rows`` bounds the memory of the chunked
    kernel evaluation.
    """

    span_sigmas_plus: float = 6.0
    span_sigmas_minus: float = 6.0
    step_plus: Optional[float] = None
    step_minus: Optional[float] = None
    chunk_rows: int = 1024

    def axes(self, model: SourceModel, config: InterferometerConfig, tau: float):
        osc = 4.0 * (abs(tau) + config.tau0)
        nyquist = 1.0 / osc if osc > 0.0 else math.inf

        def axis(sigma, span_sigmas, step):
            if step is None:
                step = min(sigma / 4.0, nyquist)
            half = span_sigmas * sigma
            count = 2 * int(math.ceil(half / step)) + 1
            # keep the node layout symmetric about zero
            return Grid1D(-step * (count // 2), step, count, AxisKind.SUM)

        ax_p = axis(model.sigma_plus, self.span_sigmas_plus, self.step_plus)
        ax_m = axis(model.sigma_minus, self.span_sigmas_minus, self.step_minus)
        return ax_p, replace(ax_m, kind=AxisKind.DIFFERENCE)


def _validate_quadrature_axes(model, config, tau, ax_p, ax_m):
    worst = max(abs(tau), config.tau0)
    gate = 1.0 / (4.0 * worst) if worst > 0.0 else math.inf
    for name, ax, sigma in (("sum", ax_p, model.sigma_plus),
                            ("difference", ax_m, model.sigma_minus)):
        if ax.step > gate:
            raise ResolutionError(
                f"{name}-axis step {ax.step:g} rad/ps cannot resolve the "
                f"kernel oscillation; need step <= {gate:g}")
        if -ax.start < 5.0 * sigma - 1e-12 or ax.stop < 5.0 * sigma - 1e-12:
            raise ResolutionError(
                f"{name}-axis span [{ax.start:g}, {ax.stop:g}] must cover "
                f"+-5 sigma = +-{5.0 * sigma:g} rad/ps")


def gaussian_cpd_baseline(model: SourceModel) -> float:
    """Analytic normalization 4 * integral(|f|^2 dOp dOm) = 8 pi s+ s-."""
    return 8.0 * math.pi * model.sigma_plus * model.sigma_minus


def rate_modified_quadrature(model: SourceModel, config: InterferometerConfig,
                             tau: float, quad: Optional[QuadratureSpec] = None) -> float:
    """Normalized rate by 2-D trapezoid quadrature of the CPD kernel.

    Chunked over sum-axis rows so the full grid is never materialized.
    Raises ResolutionError if the grid violates the Nyquist guard or does
    not cover +-5 sigma on either axis.
    """
    if model.pump is not PumpRegime.PULSED:
        raise ContractViolationError("rate_modified_quadrature requires a pulsed model")
    if quad is None:
        quad = QuadratureSpec()
    ax_p, ax_m = quad.axes(model, config, tau)
    _validate_quadrature_axes(model, config, tau, ax_p, ax_m)

    cfg = config.with_tau(tau)
    om = ax_m.points()
    op = ax_p.points()
    inner = np.empty(ax_p.count)
    for lo in range(0, ax_p.count, quad.chunk_rows):
        hi = min(lo + quad.chunk_rows, ax_p.count)
        block = cpd_modified(model, cfg, op[lo:hi, None], om[None, :])
        inner[lo:hi] = np.trapezoid(block, dx=ax_m.step, axis=1)
    total = np.trapezoid(inner, dx=ax_p.step)
    return float(total / gaussian_cpd_baseline(model))


def rate_cw_quadrature(model: SourceModel, config: InterferometerConfig,
                       tau: float, span_sigmas: float = 6.0,
                       step: Optional[float] = None) -> float:
    """CW rate by 1-D trapezoid quadrature of the CW kernel over omega.

    Normalized by the analytic baseline 4 * integral(F) of the CW marginal.
    """
    if model.pump is not PumpRegime.CW:
        raise ContractViolationError("rate_cw_quadrature requires a CW model")
    # F(w) = exp(-2 w^2 / s-^2): std s-/2; oscillations go like cos(2 w t).
    sigma_w = model.sigma_minus / 2.0
    osc = 8.0 * (abs(tau) + config.tau0)
    if step is None:
        step = min(sigma_w / 4.0, 1.0 / osc if osc > 0.0 else math.inf)
    half = span_sigmas * sigma_w
    count = 2 * int(math.ceil(half / step)) + 1
    w = step * (np.arange(count) - count // 2)
    values = cpd_cw(model, config.with_tau(tau), w)
    baseline = 4.0 * math.sqrt(2.0 * math.pi) * sigma_w  # 4 * integral exp(-w^2/2s^2)
    return float(np.trapezoid(values, dx=step) / baseline)


class RateMethod(Enum):
    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class Interferogram:
    """Normalized coincidence rate sampled over a delay axis."""

    delays: Grid1D
    values: np.ndarray
    baseline: float
    model: SourceModel
    config: InterferometerConfig

    def __post_init__(self):
        if self.values.shape != (self.delays.count,):
            raise InvalidInputError("values length must match the delay grid")
        if np.min(self.values) < -1e-9:
            raise InvalidInputError("coincidence rates must be non-negative")


def scan(model: SourceModel, config: InterferometerConfig, delays: Grid1D,
         method: RateMethod = RateMethod.CLOSED_FORM,
         quad: Optional[QuadratureSpec] = None) -> Interferogram:
    """Evaluate the normalized rate over a delay grid."""
    taus = delays.points()
    if model.pump is PumpRegime.CW:
        if method is RateMethod.CLOSED_FORM:
            values = rate_modified_cw(model, config.tau0, config.phi, taus)
        else:
            values = np.array([rate_cw_quadrature(model, config, t) for t in taus])
            _warn_if_inside_coherence_time(model, config.tau0)
        baseline = 1.0
    else:
        if method is RateMethod.CLOSED_FORM:
            values = rate_modified_pulsed(model, config.tau0, config.phi, taus)
        else:
            values = np.array([rate_modified_quadrature(model, config, t, quad)
                               for t in taus])
            _warn_if_inside_coherence_time(model, config.tau0)
        a, _ = visibility_parameters(model, config.tau0, config.phi)
        baseline = 1.0 + a
    return Interferogram(delays, np.asarray(values, dtype=float), baseline, model, config)
