"""Named scenario presets.

Each preset is an ordinary scenario dictionary (the same schema the CLI
accepts from a config file), so `modhom run <name>` and a hand-written
config go through the identical code path.  The numbered presets
regenerate the library's standard demonstration datasets: a
phase-controlled temporal interferogram, the spectrally resolved
comparison maps, the CW frequency-delay map with its conjugate-time
transform, and the comb/dimensionality grid.
"""

from __future__ import annotations

import copy
import math
from typing import Dict

# canonical demonstration parameters: sigma = 5 rad/ps, tau0 = 3 ps
_SIGMA = 5.0
_TAU0 = 3.0
_MAP_GRID = {"lo": -15.0, "hi": 15.0, "count": 256}

# conjugate-map omega axis: 629 nodes with count*step = 10*pi puts the
# conjugate-time nodes exactly on T = k/5 ps, so T = 0 and T = +-2 tau0
# fall on grid nodes
_FIG3_OMEGA = {"step": 10.0 * math.pi / 629.0, "count": 629}


def _spectral_map(kind: str, phi: float, tau: float) -> dict:
    return {
        "kind": "spectral-map",
        "model": {"pump": "pulsed", "sigma_plus": _SIGMA, "sigma_minus": _SIGMA},
        "interferometer": {"tau0": _TAU0, "phi": phi, "tau": tau},
        "map": {"kind": kind, **_MAP_GRID},
    }


PRESETS: Dict[str, dict] = {
    "fig1b": {
        "kind": "interferogram",
        "model": {"pump": "cw", "sigma_minus": _SIGMA},
        "interferometer": {"tau0": _TAU0, "phi": 0.0},
        "phis": {"phi0": 0.0, "phi_pi2": math.pi / 2.0, "phi_pi": math.pi},
        "delays": {"lo": -5.0, "hi": 5.0, "count": 1001},
        "method": "closed-form",
    },
    "fig2a": _spectral_map("standard_hom", 0.0, _TAU0),
    "fig2b": _spectral_map("noon", 0.0, _TAU0),
    "fig2c": _spectral_map("noon", math.pi, _TAU0),
    "fig2d": _spectral_map("modified_hom", 0.0, 0.0),
    "fig2e": _spectral_map("modified_hom", math.pi, 0.0),
    "fig2f": _spectral_map("modified_hom", 0.0, 1.0),
    "fig3": {
        "kind": "conjugate-map",
        "model": {"pump": "cw", "sigma_minus": _SIGMA},
        "interferometer": {"tau0": _TAU0, "phi": math.pi / 2.0},
        "delays": {"lo": -5.0, "hi": 5.0, "count": 401},
        "omegas": _FIG3_OMEGA,
    },
    "fig4-grid": {
        "kind": "comb-grid",
        "rows": [
            {"label": "anti_correlated", "sigma_plus": 0.1, "sigma_minus": 5.0},
            {"label": "correlated", "sigma_plus": 5.0, "sigma_minus": 0.1},
            {"label": "general", "sigma_plus": 1.0, "sigma_minus": 5.0},
        ],
        "tau0s": [1.0, 1.5, 2.0, 2.5, 3.0],
        "phi": 0.0,
        "threshold": 0.1,
        "window_sigmas": 3.0,
    },
    "validate": {
        "kind": "validate",
        "sigma_minus": _SIGMA,
        "tau0": 1.0,
        "ratios": [0.02, 0.2, 1.0, 5.0, 50.0],
        "phis": [0.0, math.pi / 2.0, math.pi, 3.0 * math.pi / 2.0],
        "taus": "side-dips",    # tau in {-tau0, 0, +tau0}
        "tolerance": 2e-5,
    },
}

DESCRIPTIONS: Dict[str, str] = {
    "fig1b": "CW temporal interferogram, phi in {0, pi/2, pi}: dip / flat / peak "
             "plus the two 50% side dips at tau = +-tau0",
    "fig2a": "spectrally resolved map, standard HOM kernel at tau = tau0 "
             "(difference-axis modulation only)",
    "fig2b": "spectrally resolved map, N00N kernel at tau = tau0, phi = 0 "
             "(sum-axis modulation only)",
    "fig2c": "spectrally resolved map, N00N kernel at tau = tau0, phi = pi",
    "fig2d": "modified interferometer map at tau = 0, phi = 0: checkerboard "
             "modulation along both sum and difference axes",
    "fig2e": "modified interferometer map at tau = 0, phi = pi: sum-axis "
             "zero lines shifted by pi/tau0",
    "fig2f": "modified interferometer map at tau = 1 ps, phi = 0",
    "fig3": "CW frequency-delay map at phi = pi/2 with conjugate-time "
            "transform, delay projection and the tau = 0 spectrum column",
    "fig4-grid": "3 sources x 5 values of tau0: marginal comb spectra with "
                 "tooth counts (frequency-bin dimensionality)",
    "validate": "three-route equivalence matrix: closed form vs quadrature "
                "vs time-domain integration, pass/fail per configuration",
}


def list_presets() -> Dict[str, str]:
    """Preset names with one-line descriptions, in stable order."""
    return {name: DESCRIPTIONS[name] for name in PRESETS}


def get_preset(name: str) -> dict:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}")
    return copy.deepcopy(PRESETS[name])
