"""Command-line front end.

Subcommands: potential, barrier, landau, wavefunction, transmission, current,
sweep, fig2. All flags are SI except ``--phi`` and ``--energy`` (eV).
Output is CSV (header row, 9 significant digits, LF endings) or JSON
(``{"metadata": ..., "rows": [...]}``).

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from fieldemission import __version__
from fieldemission.emission import (
    EmissionStatus,
    fn_current_with_field_reduction,
    sweep,
)
from fieldemission.fields import (
    CriticalFieldError,
    FieldConfiguration,
    cyclotron_frequency,
    drift_velocity,
    ev_to_joule,
    guiding_center_offset,
    joule_to_ev,
    lorentz_reduced_field,
)
from fieldemission.potential import (
    PotentialKind,
    PotentialSpec,
    evaluate_potential,
    turning_points,
)
from fieldemission.quantum import (
    LandauState,
    dimensionless_energy_check,
    landau_energy,
    landau_spacing,
    magnetic_length,
    transverse_wavefunction,
    xi_of_x,
)
from fieldemission.tunneling import (
    numerov_transmission,
    padded_barrier_samples,
    wkb_transmission,
)

COMMANDS = ("potential", "barrier", "landau", "wavefunction", "transmission", "current", "sweep", "fig2")
TABLE_COMMANDS = {"potential", "wavefunction", "sweep", "fig2"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "csv"
    output_path: str | None = None
    timestamp: bool = True


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(text):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")


# flag -> (dest, type, default, help); defaults of None are filled per command
_FLAGS = {
    "--efield": ("efield", float, None, "electric field E0 [V/m]"),
    "--bfield": ("bfield", float, None, "magnetic induction B0 [T]"),
    "--alpha": ("alpha", float, 0.0, "angle between E and B [rad]"),
    "--phi": ("phi", float, 4.5, "work function [eV]"),
    "--energy": ("energy", float, 0.0, "electron energy on the potential scale [eV]"),
    "--n": ("n", int, 0, "Landau index"),
    "--pz": ("pz", float, 0.0, "canonical momentum along z [kg m/s]"),
    "--xmin": ("xmin", float, None, "smallest x [m]"),
    "--xmax": ("xmax", float, None, "largest x [m]"),
    "--samples": ("samples", int, None, "number of x samples"),
    "--egrid": ("egrid", _floats, None, "comma list of fields [V/m]"),
    "--bgrid": ("bgrid", _floats, None, "comma list of inductions [T]"),
    "--kind": ("kind", str, None, "potential kind: bare_triangular, schottky, magnetic_parallel"),
    "--method": ("method", str, "wkb", "transmission method: wkb, numerov or both"),
}

_COMMAND_FLAGS = {
    "potential": ["--efield", "--bfield", "--alpha", "--kind", "--xmin", "--xmax", "--samples"],
    "barrier": ["--efield", "--bfield", "--alpha", "--kind", "--energy", "--xmax"],
    "landau": ["--efield", "--bfield", "--alpha", "--n", "--pz"],
    "wavefunction": ["--efield", "--bfield", "--alpha", "--n", "--pz", "--xmin", "--xmax", "--samples"],
    "transmission": ["--efield", "--bfield", "--alpha", "--kind", "--energy", "--method"],
    "current": ["--efield", "--bfield", "--phi"],
    "sweep": ["--egrid", "--bgrid", "--phi"],
    "fig2": ["--efield", "--bfield", "--xmin", "--xmax", "--samples"],
}

_COMMAND_DEFAULTS = {
    "potential": {"efield": 1e8, "bfield": 0.0, "xmax": 6e-8, "samples": 1000},
    "barrier": {"efield": 1e8, "bfield": 0.0, "xmax": 1e-1},
    "landau": {"efield": 0.0},
    "wavefunction": {"efield": 0.0, "samples": 401},
    "transmission": {"efield": 3e9, "bfield": 0.0},
    "current": {"bfield": 0.0},
    "sweep": {"bgrid": [0.0]},
    "fig2": {"efield": 1e8, "bfield": 1.0, "xmax": 1.2e-3, "samples": 2000},
}

_COMMAND_HELP = {
    "potential": "sample V(x) of one barrier family",
    "barrier": "peak, turning points, zero crossings and emission window",
    "landau": "Landau-level energy and drift quantities",
    "wavefunction": "transverse Hermite-Gauss wavefunction on an x grid",
    "transmission": "barrier-penetration coefficient (WKB and/or Numerov)",
    "current": "Fowler-Nordheim current density at one (E, B) point",
    "sweep": "current density over an E x B grid",
    "fig2": "Schottky profile with and without the magnetic wall (E = 100 MV/m, B = 1 T)",
}

_REQUIRED = {
    "landau": ["bfield"],
    "wavefunction": ["bfield"],
    "current": ["efield"],
    "sweep": ["egrid"],
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fieldemission", description="Field emission in constant electric and magnetic fields.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, help=_COMMAND_HELP[name])
        for flag in _COMMAND_FLAGS[name]:
            dest, typ, _, help_text = _FLAGS[flag]
            p.add_argument(flag, dest=dest, type=typ, default=None, help=help_text)
        p.add_argument("--config", help="JSON file of parameters (keys as flag names without dashes)")
        p.add_argument("--format", dest="format", choices=("csv", "json"), default=None)
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument("--no-timestamp", dest="timestamp", action="store_false")
    return parser


def resolve_config(argv) -> RunConfig:
    """Parse argv (plus an optional JSON config file) into a validated RunConfig."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a command is required: " + ", ".join(COMMANDS))
    command = args.command
    allowed = {_FLAGS[f][0] for f in _COMMAND_FLAGS[command]}

    params = {dest: _FLAGS[f][2] for f in _COMMAND_FLAGS[command] for dest in [_FLAGS[f][0]]}
    params.update(_COMMAND_DEFAULTS.get(command, {}))
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                from_file = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}")
        if not isinstance(from_file, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = sorted(set(from_file) - allowed)
        if unknown:
            raise UsageError(f"unknown config keys for {command}: {', '.join(unknown)}")
        params.update(from_file)
    for key in allowed:
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    missing = [k for k in _REQUIRED.get(command, []) if params.get(k) is None]
    if missing:
        raise UsageError(f"{command} requires --{missing[0]}")

    fmt = args.format or ("csv" if command in TABLE_COMMANDS else "json")
    cfg = RunConfig(command, params, fmt, args.output, args.timestamp)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig):
    p = cfg.parameters
    if "efield" in p or "bfield" in p:
        _field_config(p)
    if p.get("kind") is not None:
        try:
            PotentialKind(p["kind"])
        except ValueError:
            raise UsageError(f"unknown potential kind {p['kind']!r}")
    if p.get("method") not in (None, "wkb", "numerov", "both"):
        raise UsageError(f"unknown method {p['method']!r}")
    if p.get("samples") is not None and p["samples"] < 2:
        raise ValueError("--samples must be at least 2")
    if p.get("n") is not None and p["n"] < 0:
        raise ValueError("--n must be non-negative")
    if p.get("phi") is not None and not p["phi"] > 0:
        raise ValueError("--phi must be positive")


def _field_config(p) -> FieldConfiguration:
    return FieldConfiguration(float(p.get("efield") or 0.0), float(p.get("bfield") or 0.0), float(p.get("alpha") or 0.0))


def _spec(p) -> PotentialSpec:
    cfg = _field_config(p)
    kind = p.get("kind") or ("magnetic_parallel" if cfg.b_induction > 0 else "schottky")
    return PotentialSpec(PotentialKind(kind), cfg)


def _x_grid(p, x_lo_default, x_hi_default):
    x_hi = p.get("xmax") if p.get("xmax") is not None else x_hi_default
    n = p["samples"]
    x_lo = p.get("xmin") if p.get("xmin") is not None else x_lo_default(x_hi, n)
    if not x_hi > x_lo:
        raise ValueError("--xmax must exceed --xmin")
    return np.linspace(x_lo, x_hi, n)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_potential(p):
    spec = _spec(p)
    xs = _x_grid(p, lambda hi, n: hi / n, p["xmax"])
    vs = evaluate_potential(spec, xs)
    return [{"x_m": x, "V_J": v, "V_eV": joule_to_ev(v)} for x, v in zip(xs, vs)]


def _cmd_fig2(p):
    cfg = _field_config(p)
    xs = _x_grid(p, lambda hi, n: hi / n, p["xmax"])
    plain = evaluate_potential(PotentialSpec(PotentialKind.SCHOTTKY, cfg), xs)
    magnetic = evaluate_potential(PotentialSpec(PotentialKind.MAGNETIC_PARALLEL, cfg), xs)
    return [
        {"x_m": x, "V_B0_eV": joule_to_ev(a), "V_B_eV": joule_to_ev(b)}
        for x, a, b in zip(xs, plain, magnetic)
    ]


def _cmd_barrier(p):
    spec = _spec(p)
    energy = ev_to_joule(p["energy"])
    a = turning_points(spec, energy, x_max=p["xmax"])
    rows = []
    if a.peak_position is not None:
        rows.append({"feature": "peak", "x_m": a.peak_position, "V_eV": joule_to_ev(a.peak_value)})
    rows += [{"feature": "turning_point", "x_m": x, "V_eV": p["energy"]} for x in a.turning_points]
    rows += [{"feature": "zero_crossing", "x_m": x, "V_eV": 0.0} for x in a.zero_crossings]
    if a.emission_window is not None:
        rows.append({"feature": "window_start", "x_m": a.emission_window[0], "V_eV": None})
        rows.append({"feature": "window_end", "x_m": a.emission_window[1], "V_eV": None})
    return rows


def _cmd_landau(p):
    cfg = _field_config(p)
    state = LandauState(p["n"], p["pz"], cfg)
    energy = landau_energy(state)
    return [{
        "n": state.n,
        "pz_kg_m_s": state.p_z,
        "energy_J": energy,
        "energy_eV": joule_to_ev(energy),
        "spacing_eV": joule_to_ev(landau_spacing(cfg)),
        "cyclotron_frequency_rad_s": cyclotron_frequency(cfg),
        "drift_velocity_m_s": drift_velocity(cfg),
        "guiding_center_m": guiding_center_offset(cfg, state.p_z),
        "magnetic_length_m": magnetic_length(cfg),
        "quantization_residual": dimensionless_energy_check(state),
    }]


def _cmd_wavefunction(p):
    cfg = _field_config(p)
    state = LandauState(p["n"], p["pz"], cfg)
    x0 = guiding_center_offset(cfg, state.p_z)
    half = (math.sqrt(2 * state.n + 1) + 6.0) * magnetic_length(cfg)
    x_hi = p["xmax"] if p.get("xmax") is not None else x0 + half
    x_lo = p["xmin"] if p.get("xmin") is not None else x0 - half
    if not x_hi > x_lo:
        raise ValueError("--xmax must exceed --xmin")
    xs = np.linspace(x_lo, x_hi, p["samples"])
    psi = transverse_wavefunction(state, xs, 0.0)
    xi = xi_of_x(state, xs)
    return [
        {"x_m": x, "xi": s, "psi_re": w.real, "psi_im": w.imag, "density_per_m": abs(w) ** 2}
        for x, s, w in zip(xs, xi, psi)
    ]


def _cmd_transmission(p):
    spec = _spec(p)
    energy = ev_to_joule(p["energy"])
    rows = []
    if p["method"] in ("wkb", "both"):
        r = wkb_transmission(spec, energy)
        x1, x2 = r.turning_points or (None, None)
        rows.append({"method": "wkb", "exponent": r.exponent, "D": r.coefficient, "ln_D": r.log_coefficient,
                     "barrier_free": int(r.barrier_free), "x1_m": x1, "x2_m": x2})
    if p["method"] in ("numerov", "both"):
        xs, vs = padded_barrier_samples(spec, energy)
        r = numerov_transmission(xs, vs, energy)
        rows.append({"method": "numerov", "exponent": r.exponent, "D": r.coefficient, "ln_D": r.log_coefficient,
                     "barrier_free": 0, "x1_m": None, "x2_m": None})
    return rows


def _emission_row(pt):
    return {
        "E_applied_V_m": pt.e_applied,
        "B_T": pt.b_applied,
        "phi_eV": joule_to_ev(pt.work_function),
        "E_effective_V_m": pt.e_effective,
        "j_A_m2": pt.current_density,
        "ln_j": pt.log_current_density,
        "status": pt.status.value,
    }


def _cmd_current(p):
    phi = ev_to_joule(p["phi"])
    pt = fn_current_with_field_reduction(p["efield"], p["bfield"], phi)
    if pt.status is EmissionStatus.BEYOND_CRITICAL_FIELD:
        # re-raise with the field module's message (names B_crit)
        lorentz_reduced_field(FieldConfiguration(p["efield"], p["bfield"]))
    if pt.status is EmissionStatus.BARRIER_COLLAPSE:
        raise ValueError(f"barrier collapse: Schottky lowering exceeds phi at E* = {pt.e_effective:.6g} V/m")
    return [_emission_row(pt)]


def _cmd_sweep(p):
    table = sweep(p["egrid"], p["bgrid"], ev_to_joule(p["phi"]), timestamp=False)
    return [_emission_row(pt) for pt in table.rows]


_HANDLERS = {
    "potential": _cmd_potential,
    "barrier": _cmd_barrier,
    "landau": _cmd_landau,
    "wavefunction": _cmd_wavefunction,
    "transmission": _cmd_transmission,
    "current": _cmd_current,
    "sweep": _cmd_sweep,
    "fig2": _cmd_fig2,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.8e}"
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return float(f"{value:.8e}") if math.isfinite(value) else None
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    return value


def render_table(rows, fmt: str, metadata: dict | None = None) -> str:
    if not rows:
        raise ValueError("no rows to write")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in header])
        return buf.getvalue()
    if fmt == "json":
        doc = {"metadata": _json_value(metadata or {}), "rows": [_json_value(r) for r in rows]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_table(rows, fmt: str, path: str | None = None, metadata: dict | None = None):
    """Write rows as CSV or JSON to ``path`` (stdout when None)."""
    text = render_table(rows, fmt, metadata)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def run(cfg: RunConfig) -> None:
    rows = _HANDLERS[cfg.command](cfg.parameters)
    metadata = {"tool": "fieldemission", "tool_version": __version__, "command": cfg.command,
                "inputs": cfg.parameters}
    if cfg.timestamp:
        metadata["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    emit_table(rows, cfg.output_format, cfg.output_path, metadata)


def parse_and_dispatch(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if any(a in ("-h", "--help", "--version") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        except UsageError:
            pass
    try:
        cfg = resolve_config(argv)
    except UsageError as exc:
        print(f"fieldemission: usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, CriticalFieldError) as exc:
        print(f"fieldemission: error: {exc}", file=sys.stderr)
        return 1
    try:
        run(cfg)
    except OSError as exc:
        print(f"fieldemission: error: cannot write output: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"fieldemission: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
