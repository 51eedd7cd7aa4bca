"""Command-line frontend for the walk simulator.

Subcommands
-----------
evolve          amplitudes and position distribution after a number of steps
entropy-table   coin-walker entanglement entropy per step
sweep           entropy over a (theta, phi) grid at a fixed step
trace-distance  adjacent-step trace-distance series plus a power-law fit
variance        position variance series for the phase-defect walk, the
                plain Hadamard walk and the classical baseline
tomography      Monte Carlo of the simulated measurement pipeline over seeds
verify          cross-engine and invariant checks; nonzero exit on failure

Angles accept plain radians or literals such as ``pi/2`` and ``3pi/4``.
Outputs are CSV (default) or JSON with fixed column order; identical
configurations produce byte-identical payloads.  The only non-deterministic
content is the ``# generated:`` timestamp comment at the top of CSV output,
which ``--no-header`` removes.  Flags override values from an optional
``--config`` file of ``key=value`` lines.

Exit codes: 0 success, 1 runtime failure, 2 invalid configuration.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import analysis, expsim, observables, plotting, verification
from .core import balanced_initial_state, evolve, iqw_coin_map


class ConfigError(ValueError):
    """Invalid run configuration; the message names the offending field."""


_ANGLE_RE = re.compile(
    r"^\s*(-)?\s*(\d+(?:\.\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$",
    re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Parse an angle in radians; accepts e.g. '1.57', 'pi/4', '3pi/4', '-pi'."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _ANGLE_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse angle {text!r}")
    sign = -1.0 if m.group(1) else 1.0
    coef = float(m.group(2)) if m.group(2) else 1.0
    den = float(m.group(3)) if m.group(3) else 1.0
    return sign * coef * math.pi / den


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"cannot parse boolean {text!r}")


@dataclass
class RunConfig:
    """One fully-resolved run; defaults match the common operating point."""

    command: str
    theta: float = math.pi / 2
    phi: float = math.pi / 4
    steps: int = 11
    theta_points: int = 101
    phi_points: int = 101
    n0: float = 1e6
    loss_db: float = 0.0
    seed: int = 7
    num_seeds: int = 20
    fit_min: int = 10
    fit_max: int | None = None
    fit_parity: str = "all"
    instances: int = 200
    output: str | None = None
    format: str = "csv"
    plot: bool = False
    no_header: bool = False

    def validate(self) -> None:
        min_steps = {"evolve": 0, "trace-distance": 2}.get(self.command, 1)
        if self.steps < min_steps:
            raise ConfigError(
                f"steps: must be >= {min_steps} for {self.command}, got {self.steps}"
            )
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format: must be csv or json, got {self.format!r}")
        if self.fit_parity not in ("all", "odd", "even"):
            raise ConfigError(
                f"fit_parity: must be all, odd or even, got {self.fit_parity!r}"
            )
        if self.command == "sweep":
            if self.theta_points < 1:
                raise ConfigError(f"theta_points: must be >= 1, got {self.theta_points}")
            if self.phi_points < 1:
                raise ConfigError(f"phi_points: must be >= 1, got {self.phi_points}")
        if self.command == "tomography":
            if self.n0 <= 0:
                raise ConfigError(f"n0: must be > 0, got {self.n0}")
            if self.num_seeds < 1:
                raise ConfigError(f"num_seeds: must be >= 1, got {self.num_seeds}")
        if self.loss_db < 0:
            raise ConfigError(f"loss_db: must be >= 0, got {self.loss_db}")
        if self.command == "trace-distance":
            fit_max = self.steps if self.fit_max is None else self.fit_max
            if self.fit_min < 1:
                raise ConfigError(f"fit_min: must be >= 1, got {self.fit_min}")
            if fit_max < self.fit_min:
                raise ConfigError(
                    f"fit_max: must be >= fit_min ({self.fit_min}), got {fit_max}"
                )
        if self.command == "verify" and self.instances < 1:
            raise ConfigError(f"instances: must be >= 1, got {self.instances}")
        if self.plot and not self.output:
            raise ConfigError("plot: requires --output to derive the SVG path")


_FIELD_PARSERS = {
    "theta": parse_angle,
    "phi": parse_angle,
    "steps": int,
    "theta_points": int,
    "phi_points": int,
    "n0": float,
    "loss_db": float,
    "seed": int,
    "num_seeds": int,
    "fit_min": int,
    "fit_max": int,
    "fit_parity": str,
    "instances": int,
    "output": str,
    "format": str,
    "plot": _parse_bool,
    "no_header": _parse_bool,
}


def load_config_file(path: str) -> dict[str, str]:
    """Flat key=value file; '#' comments and blank lines are ignored."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"config file line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def build_config(command: str, args: dict, config_path: str | None) -> RunConfig:
    """Merge CLI values over config-file values over built-in defaults."""
    file_values = load_config_file(config_path) if config_path else {}
    known = {f.name for f in fields(RunConfig)}
    for key in file_values:
        if key not in known or key == "command":
            raise ConfigError(f"config file: unknown key {key!r}")
    resolved = {}
    for name, parser in _FIELD_PARSERS.items():
        if args.get(name) is not None:
            resolved[name] = args[name]
        elif name in file_values:
            try:
                resolved[name] = parser(file_values[name])
            except ValueError as exc:
                raise ConfigError(f"{name}: {exc}") from exc
    cfg = RunConfig(command=command, **resolved)
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# output helpers

Row = tuple
Payload = tuple[list[str], list[Row]]


def _csv_payload(columns: list[str], rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_plain(v) for v in row])
    return buf.getvalue()


def _plain(value):
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    return value


def _json_payload(command: str, columns: list[str], rows: list[Row], extra: dict) -> str:
    doc = {
        "command": command,
        "columns": columns,
        "rows": [[_plain(v) for v in row] for row in rows],
    }
    doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(cfg: RunConfig, columns: list[str], rows: list[Row], extra: dict | None = None) -> None:
    extra = extra or {}
    if cfg.format == "json":
        text = _json_payload(cfg.command, columns, rows, extra)
    else:
        text = _csv_payload(columns, rows)
        if not cfg.no_header:
            stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
            text = f"# generated: {stamp}\n" + text
    if cfg.output:
        Path(cfg.output).write_text(text)
        if cfg.format == "csv" and extra:
            sidecar = _sidecar_path(cfg.output)
            sidecar.write_text(json.dumps(extra, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
        if cfg.format == "csv" and extra:
            sys.stderr.write(json.dumps(extra, indent=2, sort_keys=True) + "\n")


def _sidecar_path(output: str) -> Path:
    p = Path(output)
    return p.with_name(p.stem + "_fit.json")


def _plot_path(output: str) -> Path:
    return Path(output).with_suffix(".svg")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_evolve(cfg: RunConfig) -> int:
    state = evolve(balanced_initial_state(cfg.theta), iqw_coin_map(cfg.phi), cfg.steps)
    dist = observables.position_distribution(state)
    rows = []
    for x, p in zip(dist.positions, dist.probs):
        a = state.amplitude(int(x), 0)
        b = state.amplitude(int(x), 1)
        rows.append((int(x), float(p), a.real, a.imag, b.real, b.imag))
    _emit(cfg, ["x", "prob", "re_a", "im_a", "re_b", "im_b"], rows)
    if cfg.plot:
        plotting.save_distribution(_plot_path(cfg.output), dist, label=f"t={cfg.steps}")
    return 0


def _cmd_entropy_table(cfg: RunConfig) -> int:
    series = analysis.entropy_curve(cfg.steps, cfg.theta, cfg.phi)
    rows = [(int(t), float(e)) for t, e in zip(series.t_values, series.y_values)]
    _emit(cfg, ["t", "entropy"], rows)
    if cfg.plot:
        plotting.save_series(_plot_path(cfg.output), [series], "entropy")
    return 0


def _cmd_sweep(cfg: RunConfig) -> int:
    thetas = analysis.default_sweep_grid(cfg.theta_points)
    phis = analysis.default_sweep_grid(cfg.phi_points)
    grid = analysis.entropy_sweep(cfg.steps, thetas, phis)
    rows = [
        (float(theta), float(phi), float(grid.entropy[i, j]))
        for i, theta in enumerate(grid.theta_values)
        for j, phi in enumerate(grid.phi_values)
    ]
    _emit(cfg, ["theta", "phi", "entropy"], rows)
    if cfg.plot:
        plotting.save_heatmap(_plot_path(cfg.output), grid)
    return 0


def _cmd_trace_distance(cfg: RunConfig) -> int:
    series = analysis.trace_distance_series(cfg.steps, cfg.theta, cfg.phi)
    fit_max = cfg.steps if cfg.fit_max is None else cfg.fit_max
    fitted = analysis.filter_parity(series, cfg.fit_parity)
    fit = analysis.fit_power_law(fitted, cfg.fit_min, fit_max)
    rows = [(int(t), float(d)) for t, d in zip(series.t_values, series.y_values)]
    extra = {
        "fit": {
            "exponent": fit.exponent,
            "amplitude": fit.amplitude,
            "r_squared": fit.r_squared,
            "fit_range": list(fit.fit_range),
            "parity": cfg.fit_parity,
        }
    }
    _emit(cfg, ["t", "D"], rows, extra)
    if cfg.plot:
        plotting.save_series(
            _plot_path(cfg.output), [series], "trace distance", loglog=True, fit=fit
        )
    return 0


def _cmd_variance(cfg: RunConfig) -> int:
    walks = [
        ("iqw", analysis.variance_series(cfg.steps, cfg.theta, cfg.phi)),
        ("hqw", analysis.variance_series(cfg.steps, cfg.theta, 0.0)),
        ("crw", analysis.crw_variance_series(cfg.steps)),
    ]
    rows = [
        (int(t), float(v), name)
        for name, series in walks
        for t, v in zip(series.t_values, series.y_values)
    ]
    _emit(cfg, ["t", "variance", "walk_type"], rows)
    if cfg.plot:
        labelled = [
            analysis.Series(s.t_values, s.y_values, name) for name, s in walks
        ]
        plotting.save_series(_plot_path(cfg.output), labelled, "variance", loglog=True)
    return 0


def _cmd_tomography(cfg: RunConfig) -> int:
    rows = []
    state = balanced_initial_state(cfg.theta)
    coins = iqw_coin_map(cfg.phi)
    from .core import step as _step

    for t in range(1, cfg.steps + 1):
        state = _step(state, coins)
        exact = observables.reduced_coin_density(state)
        entropies, fidelities = [], []
        for k in range(cfg.num_seeds):
            counts = expsim.simulate_counts(state, cfg.n0, cfg.loss_db, cfg.seed + k)
            try:
                rho = expsim.reconstruct_density(counts)
            except expsim.EmptyCounts:
                continue
            entropies.append(observables.von_neumann_entropy(rho))
            fidelities.append(observables.fidelity(rho, exact))
        if entropies:
            rows.append(
                (
                    t,
                    float(np.mean(entropies)),
                    float(np.std(entropies)),
                    float(np.mean(fidelities)),
                )
            )
        else:
            rows.append((t, float("nan"), float("nan"), float("nan")))
    _emit(cfg, ["t", "entropy_mean", "entropy_std", "fidelity_mean"], rows)
    if cfg.plot:
        series = analysis.Series(
            np.array([r[0] for r in rows]),
            np.array([r[1] for r in rows]),
            "reconstructed entropy",
        )
        plotting.save_series(_plot_path(cfg.output), [series], "entropy")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    checks = verification.run_all(instances=cfg.instances, seed=cfg.seed)
    failed = 0
    for name, passed, detail in checks:
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        failed += 0 if passed else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


_COMMANDS = {
    "evolve": _cmd_evolve,
    "entropy-table": _cmd_entropy_table,
    "sweep": _cmd_sweep,
    "trace-distance": _cmd_trace_distance,
    "variance": _cmd_variance,
    "tomography": _cmd_tomography,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig) -> int:
    """Execute one validated configuration; returns the process exit code."""
    return _COMMANDS[cfg.command](cfg)


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    import argparse

    parser = argparse.ArgumentParser(
        prog="iqwalk",
        description="1-D coined quantum walk simulator with position-dependent coins",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, angles=True, steps=True):
        p.add_argument("--config", help="key=value config file; flags take precedence")
        if angles:
            p.add_argument("--theta", type=parse_angle, help="initial coin phase (radians or e.g. pi/2)")
            p.add_argument("--phi", type=parse_angle, help="origin coin phase (radians or e.g. pi/4)")
        if steps:
            p.add_argument("--steps", type=int, help="number of walk steps")
        p.add_argument("--seed", type=int, help="base RNG seed")
        p.add_argument("--output", help="output file path (default: stdout)")
        p.add_argument("--format", choices=["csv", "json"], help="payload format")
        p.add_argument("--plot", action="store_true", default=None, help="also write an SVG plot next to --output")
        p.add_argument("--no-header", dest="no_header", action="store_true", default=None, help="omit the timestamp comment line from CSV output")

    add_common(sub.add_parser("evolve", help="amplitudes and distribution after --steps"))
    add_common(sub.add_parser("entropy-table", help="entropy per step up to --steps"))

    p_sweep = sub.add_parser("sweep", help="entropy over a (theta, phi) grid at step --steps")
    add_common(p_sweep, angles=False)
    p_sweep.add_argument("--theta-points", dest="theta_points", type=int, help="grid size over [0, 2pi)")
    p_sweep.add_argument("--phi-points", dest="phi_points", type=int, help="grid size over [0, 2pi)")

    p_td = sub.add_parser("trace-distance", help="adjacent-step trace distance with power-law fit")
    add_common(p_td)
    p_td.add_argument("--fit-min", dest="fit_min", type=int, help="lower end of the fit range (default 10)")
    p_td.add_argument("--fit-max", dest="fit_max", type=int, help="upper end of the fit range (default --steps)")
    p_td.add_argument("--fit-parity", dest="fit_parity", choices=["all", "odd", "even"], help="restrict the fit to odd or even steps")

    add_common(sub.add_parser("variance", help="variance series for iqw, hqw and crw"))

    p_tomo = sub.add_parser("tomography", help="Monte Carlo of the measurement pipeline")
    add_common(p_tomo)
    p_tomo.add_argument("--n0", type=float, help="mean photons per basis setting at t=0")
    p_tomo.add_argument("--loss-db", dest="loss_db", type=float, help="loss per step in dB")
    p_tomo.add_argument("--num-seeds", dest="num_seeds", type=int, help="number of Monte Carlo seeds per step")

    p_verify = sub.add_parser("verify", help="run the verification checks")
    p_verify.add_argument("--config", help="key=value config file; flags take precedence")
    p_verify.add_argument("--instances", type=int, help="random instances for the cross-engine check")
    p_verify.add_argument("--seed", type=int, help="base RNG seed")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = vars(parser.parse_args(argv))
    command = args.pop("command")
    config_path = args.pop("config", None)
    try:
        cfg = build_config(command, args, config_path)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cfg)
    except Exception as exc:  # noqa: BLE001 - map any runtime failure to exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
