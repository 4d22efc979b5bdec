"""Command-line scenario runner.

`modhom run <preset>` executes a named preset; `modhom run --config f.yaml`
runs a hand-written scenario (YAML or JSON, same schema as the presets).
Flag overrides (--tau0, --phi, --sigma-plus, ...) patch the scenario before
it runs.  Outputs are CSV (default) or JSON, written with 17-significant-
digit floats so identical scenarios produce byte-identical files.

Exit codes: 0 success, 1 computation/validation failure, 2 configuration
error, 3 numerical-resolution error.  Failures emit a JSON error record on
stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np
import yaml

from . import io as mio
from .comb import comb_report, count_teeth
from .errors import InvalidInputError, ModhomError, ResolutionError
from .interferogram import (
    RateMethod,
    rate_modified_pulsed,
    rate_modified_quadrature,
    scan,
)
from .maps import (
    MapKind,
    conjugate_time_map,
    freq_delay_map,
    jsi_map,
    project,
    spectral_map,
)
from .model import (
    AxisKind,
    Grid1D,
    Grid2D,
    InterferometerConfig,
    PumpRegime,
    SourceModel,
)
from .presets import get_preset, list_presets
from .timedomain import rate_from_jti


class ConfigError(Exception):
    """Scenario or flag validation failure (exit code 2)."""


def _model_from(sc: dict) -> SourceModel:
    spec = sc.get("model")
    if not isinstance(spec, dict):
        raise ConfigError("scenario needs a 'model' section")
    pump = spec.get("pump", "pulsed")
    try:
        if pump == "cw":
            return SourceModel.cw(float(spec["sigma_minus"]))
        if pump == "pulsed":
            return SourceModel.pulsed(float(spec["sigma_plus"]),
                                      float(spec["sigma_minus"]))
    except KeyError as exc:
        raise ConfigError(f"model section is missing {exc}") from None
    raise ConfigError(f"unknown pump regime {pump!r}")


def _config_from(sc: dict) -> InterferometerConfig:
    spec = sc.get("interferometer")
    if not isinstance(spec, dict) or "tau0" not in spec:
        raise ConfigError("scenario needs an 'interferometer' section with tau0")
    return InterferometerConfig(float(spec["tau0"]), float(spec.get("phi", 0.0)),
                                float(spec.get("tau", 0.0)))


def _grid_from(spec: dict, kind: AxisKind, what: str) -> Grid1D:
    try:
        if "lo" in spec:
            return Grid1D.linspace(float(spec["lo"]), float(spec["hi"]),
                                   int(spec["count"]), kind)
        step, count = float(spec["step"]), int(spec["count"])
        return Grid1D(-step * (count // 2), step, count, kind)
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad {what} grid spec {spec!r}: {exc}") from None


def _write_table(base: Path, fmt: str, axis_name, axis_values, columns,
                 grid=None, metadata=None):
    path = base.with_suffix(f".{fmt}")
    if fmt == "csv":
        mio.write_table_csv(path, axis_name, axis_values, columns, metadata, grid)
    else:
        mio.write_table_json(path, axis_name, axis_values, columns, metadata, grid)
    return path


def _write_map(base: Path, fmt: str, smap, metadata=None):
    path = base.with_suffix(f".{fmt}")
    if fmt == "csv":
        mio.write_map_csv(path, smap, metadata)
    else:
        mio.write_map_json(path, smap, metadata)
    return path


def _run_interferogram(name, sc, out_dir: Path, fmt: str):
    model = _model_from(sc)
    config = _config_from(sc)
    delays = _grid_from(sc.get("delays", {"lo": -5.0, "hi": 5.0, "count": 1001}),
                        AxisKind.DELAY, "delay")
    method = (RateMethod.QUADRATURE if sc.get("method") == "quadrature"
              else RateMethod.CLOSED_FORM)
    phis = sc.get("phis") or {"rate": config.phi}
    columns = {}
    for label, phi in phis.items():
        cfg = InterferometerConfig(config.tau0, float(phi), config.tau)
        columns[label] = scan(model, cfg, delays, method).values
    taus = delays.points()
    path = _write_table(out_dir / name, fmt, "tau", taus, columns, delays,
                        {"tau0": mio.fmt(config.tau0)})
    first = next(iter(columns))
    lo, hi = np.argmin(columns[first]), np.argmax(columns[first])
    print(f"{name}: wrote {path}; {first} min={columns[first][lo]:.6g} at "
          f"tau={taus[lo]:g}, max={columns[first][hi]:.6g} at tau={taus[hi]:g}")
    return [path]


_MAP_KINDS = {"modified_hom": MapKind.MODIFIED_HOM, "standard_hom": MapKind.STANDARD_HOM,
              "noon": MapKind.NOON, "jsi": MapKind.JSI}


def _run_spectral_map(name, sc, out_dir: Path, fmt: str):
    model = _model_from(sc)
    config = _config_from(sc)
    spec = sc.get("map", {})
    kind = _MAP_KINDS.get(spec.get("kind", "modified_hom"))
    if kind is None:
        raise ConfigError(f"unknown map kind {spec.get('kind')!r}")
    axis = _grid_from(spec, AxisKind.SIGNAL, "map")
    grid = Grid2D(axis, Grid1D(axis.start, axis.step, axis.count, AxisKind.IDLER))
    if kind is MapKind.JSI:
        smap = jsi_map(model, grid)
    else:
        smap = spectral_map(model, config, grid, kind)
    meta = {"tau0": mio.fmt(config.tau0), "phi": mio.fmt(config.phi),
            "tau": mio.fmt(config.tau)}
    path = _write_map(out_dir / name, fmt, smap, meta)
    ix, iy = np.unravel_index(np.argmax(smap.values), smap.values.shape)
    print(f"{name}: wrote {path}; min={smap.values.min():.6g} "
          f"max={smap.values.max():.6g} at (omega_s={axis.points()[ix]:g}, "
          f"omega_i={axis.points()[iy]:g})")
    return [path]


def _run_freq_delay(name, sc, out_dir: Path, fmt: str, with_conjugate: bool):
    model = _model_from(sc)
    config = _config_from(sc)
    delays = _grid_from(sc.get("delays", {"lo": -5.0, "hi": 5.0, "count": 401}),
                        AxisKind.DELAY, "delay")
    omegas = _grid_from(sc.get("omegas", {"step": 0.05, "count": 629}),
                        AxisKind.CW_DETUNING, "omega")
    fdm = freq_delay_map(model, delays, omegas, config.tau0, config.phi)
    meta = {"tau0": mio.fmt(config.tau0), "phi": mio.fmt(config.phi)}
    files = [_write_map(out_dir / f"{name}_freq_delay", fmt, fdm, meta)]
    summary = f"{name}: wrote freq-delay map {files[0]}"
    if with_conjugate:
        ctm = conjugate_time_map(fdm)
        files.append(_write_map(out_dir / f"{name}_conjugate", fmt, ctm, meta))
        projection = project(fdm, AxisKind.DELAY)
        files.append(_write_table(out_dir / f"{name}_delay_projection", fmt,
                                  "tau", delays.points(),
                                  {"integrated_rate": projection.values},
                                  delays, meta))
        i0 = delays.index_of(0.0)
        files.append(_write_table(out_dir / f"{name}_spectrum_tau0", fmt,
                                  "omega", omegas.points(),
                                  {"cpd": fdm.values[i0]}, omegas, meta))
        column = ctm.values[i0]
        t_axis = ctm.grid.y.points()
        peaks = [i for i in range(1, len(column) - 1)
                 if column[i] > column[i - 1] and column[i] > column[i + 1]
                 and column[i] > 1e-3 * column.max()]
        locs = ", ".join(f"{t_axis[i]:g}" for i in peaks)
        summary += f"; conjugate tau=0 column peaks at T = {locs} ps"
    print(summary)
    return files


def _run_comb_report(name, sc, out_dir: Path, fmt: str):
    model = _model_from(sc)
    config = _config_from(sc)
    axis = AxisKind(sc["axis"]) if "axis" in sc else None
    grid = (_grid_from(sc["grid"], axis, "spectrum") if "grid" in sc and axis
            else None)
    report = comb_report(model, config, axis, grid,
                         float(sc.get("threshold", 0.1)),
                         float(sc.get("window_sigmas", 3.0)))
    doc = {
        "axis": report.axis.value,
        "dimensionality": report.dimensionality,
        "spacing": report.spacing,
        "visibility": report.visibility,
        "teeth": [{"center": t.center, "height": t.height, "fwhm": t.fwhm}
                  for t in report.teeth],
    }
    path = (out_dir / f"{name}_report.json")
    path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    print(f"{name}: dimensionality={report.dimensionality} "
          f"spacing={report.spacing:.4g} rad/ps visibility={report.visibility:.4f}; "
          f"wrote {path}")
    return [path]


def _run_comb_grid(name, sc, out_dir: Path, fmt: str):
    from .comb import marginal_spectrum, dominant_axis

    files = []
    summary = {}
    threshold = float(sc.get("threshold", 0.1))
    window = float(sc.get("window_sigmas", 3.0))
    phi = float(sc.get("phi", 0.0))
    for row in sc["rows"]:
        model = SourceModel.pulsed(float(row["sigma_plus"]), float(row["sigma_minus"]))
        axis = dominant_axis(model)
        counts = []
        for tau0 in sc["tau0s"]:
            config = InterferometerConfig(float(tau0), phi, 0.0)
            spectrum = marginal_spectrum(model, config, axis, span_sigmas=window)
            report = count_teeth(spectrum, threshold,
                                 2.0 * math.pi / config.tau0)
            counts.append(report.dimensionality)
            base = out_dir / f"{name}_{row['label']}_tau0_{tau0:g}"
            files.append(_write_table(
                base, fmt, axis.value, spectrum.grid.points(),
                {"cpd_marginal": spectrum.values, "jsi_marginal": spectrum.envelope},
                spectrum.grid,
                {"tau0": mio.fmt(tau0), "dimensionality": str(report.dimensionality),
                 "spacing": mio.fmt(report.spacing)}))
        summary[row["label"]] = counts
    path = out_dir / f"{name}_summary.json"
    path.write_text(json.dumps(
        {"tau0s": sc["tau0s"], "counts": summary}, indent=1, sort_keys=True) + "\n")
    files.append(path)
    print(f"{name}: tooth counts " + "; ".join(
        f"{k}={v}" for k, v in summary.items()) + f"; wrote {path}")
    return files


def _run_design(name, sc, out_dir: Path, fmt: str):
    from .comb import design_tau0

    model = _model_from(sc)
    target = int(sc["target_dimension"])
    tau0 = design_tau0(model, target,
                       float(sc.get("window_sigmas", 3.0)),
                       float(sc.get("threshold", 0.1)),
                       float(sc.get("phi", 0.0)))
    path = out_dir / f"{name}_design.json"
    path.write_text(json.dumps({"target_dimension": target, "tau0": tau0},
                               indent=1, sort_keys=True) + "\n")
    print(f"{name}: tau0={tau0:.4f} ps reaches dimensionality {target}; wrote {path}")
    return [path]


def _run_validate(name, sc, out_dir: Path, fmt: str):
    sigma_minus = float(sc.get("sigma_minus", 5.0))
    tau0 = float(sc.get("tau0", 1.0))
    tolerance = float(sc.get("tolerance", 2e-5))
    taus = sc.get("taus", "side-dips")
    if taus == "side-dips":
        taus = [-tau0, 0.0, tau0]
    rows = []
    failures = 0
    for ratio in sc.get("ratios", [0.02, 0.2, 1.0, 5.0, 50.0]):
        model = SourceModel.pulsed(float(ratio) * sigma_minus, sigma_minus)
        for phi in sc.get("phis", [0.0, math.pi / 2.0, math.pi, 1.5 * math.pi]):
            config = InterferometerConfig(tau0, float(phi))
            worst = 0.0
            for tau in taus:
                closed = rate_modified_pulsed(model, tau0, float(phi), float(tau))
                quad = rate_modified_quadrature(model, config, float(tau))
                jti_rate = rate_from_jti(model, config, float(tau))
                worst = max(worst, abs(closed - quad), abs(closed - jti_rate),
                            abs(quad - jti_rate))
                rows.append((ratio, phi, tau, closed, quad, jti_rate))
            ok = worst <= tolerance
            failures += 0 if ok else 1
            print(f"{name}: ratio={ratio:g} phi={phi:.4f} "
                  f"max|diff|={worst:.3e} {'PASS' if ok else 'FAIL'}")
    data = np.array(rows)
    path = _write_table(out_dir / f"{name}_report", fmt, "ratio", data[:, 0],
                        {"phi": data[:, 1], "tau": data[:, 2],
                         "closed_form": data[:, 3], "quadrature": data[:, 4],
                         "time_domain": data[:, 5]},
                        None, {"tolerance": mio.fmt(tolerance)})
    print(f"{name}: {'all configurations PASS' if failures == 0 else f'{failures} configuration(s) FAIL'}; wrote {path}")
    if failures:
        raise ModhomError(f"{failures} validation configuration(s) exceeded {tolerance:g}")
    return [path]


_RUNNERS = {
    "interferogram": _run_interferogram,
    "spectral-map": _run_spectral_map,
    "freq-delay-map": lambda n, s, o, f: _run_freq_delay(n, s, o, f, False),
    "conjugate-map": lambda n, s, o, f: _run_freq_delay(n, s, o, f, True),
    "comb-report": _run_comb_report,
    "comb-grid": _run_comb_grid,
    "design": _run_design,
    "validate": _run_validate,
}


def run_scenario(name: str, scenario: dict, out_dir: Path, fmt: str):
    kind = scenario.get("kind")
    runner = _RUNNERS.get(kind)
    if runner is None:
        raise ConfigError(f"unknown scenario kind {kind!r}; "
                          f"expected one of {sorted(_RUNNERS)}")
    out_dir.mkdir(parents=True, exist_ok=True)
    return runner(name, scenario, out_dir, fmt)


def _apply_overrides(scenario: dict, args) -> dict:
    is_validate = scenario.get("kind") == "validate"
    if args.tau0 is not None:
        if is_validate:
            scenario["tau0"] = args.tau0
        else:
            scenario.setdefault("interferometer", {})["tau0"] = args.tau0
    if args.phi is not None:
        scenario.setdefault("interferometer", {})["phi"] = args.phi
    if args.tau is not None:
        scenario.setdefault("interferometer", {})["tau"] = args.tau
    if args.sigma_plus is not None:
        scenario.setdefault("model", {})["sigma_plus"] = args.sigma_plus
    if args.sigma_minus is not None:
        if is_validate:
            scenario["sigma_minus"] = args.sigma_minus
        else:
            scenario.setdefault("model", {})["sigma_minus"] = args.sigma_minus
    if args.grid is not None:
        try:
            lo, hi, count = args.grid.split(":")
            spec = {"lo": float(lo), "hi": float(hi), "count": int(count)}
        except ValueError:
            raise ConfigError(f"--grid expects lo:hi:count, got {args.grid!r}") from None
        kind = scenario.get("kind")
        if kind == "interferogram":
            scenario["delays"] = spec
        elif kind == "spectral-map":
            scenario.setdefault("map", {}).update(spec)
        elif kind in ("freq-delay-map", "conjugate-map"):
            scenario["omegas"] = spec
        elif kind == "comb-report":
            scenario["grid"] = spec
        else:
            raise ConfigError(f"--grid does not apply to scenario kind {kind!r}")
    return scenario


def _load_config(path: str) -> dict:
    try:
        text = Path(path).read_text()
        if path.endswith(".json"):
            doc = json.loads(text)
        else:
            doc = yaml.safe_load(text)
    except (OSError, yaml.YAMLError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot load config {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"config {path} must hold a mapping, got {type(doc).__name__}")
    return doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modhom",
        description="Two-photon interference scenarios for the modified "
                    "Hong-Ou-Mandel interferometer (CSV/JSON output, no plotting).")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a preset or a config-file scenario")
    run.add_argument("preset", nargs="?", help="preset name (see list-presets)")
    run.add_argument("--config", help="YAML or JSON scenario file")
    run.add_argument("--out", default=".", help="output directory (default: cwd)")
    run.add_argument("--format", choices=("csv", "json"), default="csv")
    run.add_argument("--tau0", type=float, help="override interferometer tau0 [ps]")
    run.add_argument("--phi", type=float, help="override carrier phase [rad]")
    run.add_argument("--tau", type=float, help="override scan delay [ps]")
    run.add_argument("--sigma-plus", type=float, help="override pump-sum linewidth [rad/ps]")
    run.add_argument("--sigma-minus", type=float, help="override difference linewidth [rad/ps]")
    run.add_argument("--grid", help="override the principal grid as lo:hi:count "
                                    "(use --grid=-15:15:256 for negative bounds)")

    sub.add_parser("list-presets", help="list available presets")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-presets":
            for name, description in list_presets().items():
                print(f"{name:12s} {description}")
            return 0
        if (args.preset is None) == (args.config is None):
            raise ConfigError("give exactly one of: a preset name, or --config FILE")
        if args.preset is not None:
            try:
                scenario = get_preset(args.preset)
            except KeyError as exc:
                raise ConfigError(str(exc)) from None
            name = args.preset
        else:
            scenario = _load_config(args.config)
            name = scenario.get("name", Path(args.config).stem)
        scenario = _apply_overrides(scenario, args)
        run_scenario(name, scenario, Path(args.out), args.format)
        return 0
    except (ConfigError, InvalidInputError, KeyError, TypeError) as exc:
        _emit_error("config-error", exc)
        return 2
    except ResolutionError as exc:
        _emit_error("resolution-error", exc)
        return 3
    except (ModhomError, OSError) as exc:
        _emit_error(type(exc).__name__, exc)
        return 1


def _emit_error(kind: str, exc: Exception):
    record = {"error": {"type": kind, "message": str(exc)}}
    print(json.dumps(record), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
