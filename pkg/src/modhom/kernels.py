"""Coincidence probability density (CPD) kernels.

Every kernel is an unnormalized, non-negative density over photon
detunings.  Two independent evaluation routes are provided for the
modified interferometer:

* ``cpd_modified_raw`` does the complex two-amplitude arithmetic directly
  (one amplitude per indistinguishable detection pathway, squared modulus
  at the end);
* ``cpd_modified`` evaluates the expanded trigonometric form.

The two must agree to round-off; the raw route serves as the oracle for
the expanded one.  The optical carrier is factored out analytically (it is
a global phase and cancels in the modulus), so only the detunings and the
carrier phase ``phi = omega_p * tau0`` (``phi_noon = omega_p * tau`` for
the N00N case) enter numerically.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolationError, InvalidInputError
from .model import (
    InterferometerConfig,
    PumpRegime,
    SourceModel,
    sum_diff_from_signal_idler,
)


def _as_finite_array(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} must be finite")
    return arr


def cpd_modified_raw(model: SourceModel, config: InterferometerConfig, omega_s, omega_i):
    """Modified-HOM CPD by direct complex amplitude arithmetic.

    Squared modulus of

        f * (1 + e^{-i(phi + 2 Oi tau0)}) e^{-i Os (tau0+tau)}
      - f * (1 + e^{-i(phi + 2 Os tau0)}) e^{-i Oi (tau0+tau)}

    i.e. the two detection pathways with absolute frequencies
    omega = omega_p/2 + detuning and the common carrier phase removed.
    Vanishes identically at omega_s == omega_i for a symmetric TPSA.
    """
    os_ = _as_finite_array("omega_s", omega_s)
    oi = _as_finite_array("omega_i", omega_i)
    tau0, phi, tau = config.tau0, config.phi, config.tau
    tprime = tau0 + tau

    path_a = (1.0 + np.exp(-1j * (phi + 2.0 * oi * tau0))) * np.exp(-1j * os_ * tprime)
    path_b = (1.0 + np.exp(-1j * (phi + 2.0 * os_ * tau0))) * np.exp(-1j * oi * tprime)

    op, om = sum_diff_from_signal_idler(os_, oi)
    amp = model.tpsa.amplitude(op, om)
    out = np.abs(amp * (path_a - path_b)) ** 2
    return out if out.ndim else float(out)


def _modified_bracket(phi, tau0, tau, omega_plus, omega_minus):
    cos_sum = np.cos(phi + omega_plus * tau0)
    b = (1.0
         + cos_sum * np.cos(omega_minus * tau0)
         - cos_sum * np.cos(omega_minus * tau)
         - 0.5 * np.cos(omega_minus * (tau + tau0))
         - 0.5 * np.cos(omega_minus * (tau - tau0)))
    # The bracket is a squared modulus divided by 4|f|^2, hence >= 0;
    # clip the ~1e-16 negatives produced by cancellation at exact zeros.
    return np.maximum(b, 0.0)


def cpd_modified(model: SourceModel, config: InterferometerConfig, omega_plus, omega_minus):
    """Modified-HOM CPD, expanded trigonometric form in sum/difference detunings.

    4|f|^2 [1 + cos(phi + Op tau0) cos(Om tau0) - cos(phi + Op tau0) cos(Om tau)
            - cos(Om (tau+tau0))/2 - cos(Om (tau-tau0))/2]
    """
    op = _as_finite_array("omega_plus", omega_plus)
    om = _as_finite_array("omega_minus", omega_minus)
    jsi = model.tpsa.intensity(op, om)
    out = 4.0 * jsi * _modified_bracket(config.phi, config.tau0, config.tau, op, om)
    return out if out.ndim else float(out)


def cpd_modified_zero_delay(model: SourceModel, config: InterferometerConfig,
                            omega_plus, omega_minus):
    """Factorized tau = 0 form: 4|f|^2 (1 - cos(phi + Op tau0)) (1 - cos(Om tau0)).

    Separable in the sum and difference detunings by construction; requires
    config.tau == 0.
    """
    if config.tau != 0.0:
        raise ContractViolationError(
            f"zero-delay kernel requires tau == 0, got tau={config.tau!r}")
    op = _as_finite_array("omega_plus", omega_plus)
    om = _as_finite_array("omega_minus", omega_minus)
    jsi = model.tpsa.intensity(op, om)
    out = (4.0 * jsi
           * (1.0 - np.cos(config.phi + op * config.tau0))
           * (1.0 - np.cos(om * config.tau0)))
    return out if out.ndim else float(out)


def cpd_cw(model: SourceModel, config: InterferometerConfig, omega):
    """CW-pump CPD over the single detuning omega (sum detuning pinned to 0).

    4|f(omega)|^2 [1 + cos(phi) cos(2 w tau0) - cos(phi) cos(2 w tau)
                   - cos(2 w (tau+tau0))/2 - cos(2 w (tau-tau0))/2]
    """
    if model.pump is not PumpRegime.CW:
        raise ContractViolationError("cpd_cw requires a CW-pumped source model")
    w = _as_finite_array("omega", omega)
    out = 4.0 * model.cw_intensity(w) * _modified_bracket(
        config.phi, config.tau0, config.tau, 0.0, 2.0 * w)
    return out if out.ndim else float(out)


def cpd_standard_hom(model: SourceModel, tau, omega_s, omega_i):
    """Standard HOM kernel |f|^2 [1 - cos((omega_s - omega_i) tau)].

    Depends on the difference detuning only (beyond the JSI envelope) and is
    carrier-phase independent: the carrier cancels in the frequency
    difference.
    """
    os_ = _as_finite_array("omega_s", omega_s)
    oi = _as_finite_array("omega_i", omega_i)
    tau = float(_as_finite_array("tau", tau))
    op, om = sum_diff_from_signal_idler(os_, oi)
    out = model.tpsa.intensity(op, om) * (1.0 - np.cos(om * tau))
    return out if out.ndim else float(out)


def cpd_noon(model: SourceModel, tau, phi_noon, omega_s, omega_i):
    """N00N-type kernel |f|^2 [1 + cos(phi_noon + (omega_s + omega_i) tau)].

    Modulates along the sum detuning only and carries the carrier phase
    phi_noon = omega_p * tau.
    """
    os_ = _as_finite_array("omega_s", omega_s)
    oi = _as_finite_array("omega_i", omega_i)
    tau = float(_as_finite_array("tau", tau))
    phi_noon = float(_as_finite_array("phi_noon", phi_noon))
    op, om = sum_diff_from_signal_idler(os_, oi)
    out = model.tpsa.intensity(op, om) * (1.0 + np.cos(phi_noon + op * tau))
    return out if out.ndim else float(out)
