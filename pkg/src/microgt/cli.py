"""Command-line front end: validate configs, run module analyses, emit CSVs.

Exit codes: 0 success, 1 validation failure, 2 solver or I/O failure.
All floats are written with a fixed %.9g format so reruns of the same
config are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, replace
from pathlib import Path

from . import bearing as br
from . import combustor as cb
from . import cycle as cyc
from . import gas, turbo
from .config import ConfigError, DEFAULT_CONFIG, ScenarioConfig, validate

SUBCOMMANDS = ("cycle", "combustor", "turbine", "bearing", "all")


@dataclass
class ReportBundle:
    timestamp: float
    config_hash: str
    tables: dict  # filename -> list of rows (each row: list of values)
    summary: list  # lines
    warnings: list


def _fmt(value) -> str:
    if isinstance(value, float):
        return "%.9g" % value
    return str(value)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _parse_sweep(spec: str):
    """--sweep key=start:stop:n -> (key, [values])."""
    key, _, rng = spec.partition("=")
    parts = rng.split(":")
    if not key or len(parts) != 3:
        raise ValueError(f"sweep must look like key=start:stop:n, got {spec!r}")
    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise ValueError("sweep point count must be >= 1")
    if count == 1:
        return key.strip(), [start]
    step = (stop - start) / (count - 1)
    return key.strip(), [start + i * step for i in range(count)]


def run_cycle(config: ScenarioConfig, bundle: ReportBundle, sweep=None):
    design = config.cycle_design
    props = config.property_model
    perf, stations = cyc.run_cycle(design, props)
    bundle.tables["stations.csv"] = (
        ["station", "T_K", "p_Pa", "mdot_kg_s"],
        [[s.label, s.state.temperature, s.state.pressure, s.mass_flow]
         for s in stations],
    )
    bundle.tables["performance.csv"] = (
        ["net_power_W", "compressor_power_W", "turbine_power_W", "TIT_K",
         "thermal_efficiency", "sfc_kg_per_J"],
        [[perf.net_power, perf.compressor_power, perf.turbine_power,
          perf.turbine_inlet_temperature, perf.thermal_efficiency,
          perf.specific_fuel_consumption]],
    )
    target = config.raw["cycle"]["target_net_power_w"]
    phi = gas.fuel_air_mass_ratio(1.0)
    phi = (design.fuel_mass_flow / design.air_mass_flow) / phi
    bundle.summary += [
        f"cycle: net power {perf.net_power:.3f} W (design target {target:.1f} W)",
        f"cycle: compressor {perf.compressor_power:.3f} W, turbine {perf.turbine_power:.3f} W",
        f"cycle: turbine inlet temperature {perf.turbine_inlet_temperature:.1f} K",
        f"cycle: thermal efficiency {perf.thermal_efficiency:.4f}",
        f"cycle: design equivalence ratio {phi:.4f}",
    ]
    if sweep:
        key, values = sweep
        rows = []
        for value in values:
            p, _ = cyc.run_cycle(_design_with(design, key, value), props)
            rows.append([value, p.net_power, p.turbine_inlet_temperature,
                         p.thermal_efficiency])
        bundle.tables["cycle_sweep.csv"] = (
            [key, "net_power_W", "TIT_K", "thermal_efficiency"], rows)
    return perf


_CYCLE_KEYS = {
    "air_mass_flow_kg_s": "air_mass_flow",
    "pressure_ratio": "pressure_ratio",
    "fuel_mass_flow_kg_s": "fuel_mass_flow",
    "eta_compressor": "eta_compressor",
    "eta_turbine": "eta_turbine",
    "eta_combustor": "eta_combustor",
    "sigma_combustor": "sigma_combustor",
    "eta_mechanical": "eta_mechanical",
}


def _design_with(design, key, value):
    if key not in _CYCLE_KEYS:
        raise ValueError(f"unknown cycle sweep key '{key}'; options: {sorted(_CYCLE_KEYS)}")
    return replace(design, **{_CYCLE_KEYS[key]: value})


def run_combustor(config: ScenarioConfig, bundle: ReportBundle, sweep=None):
    geometry = config.combustor_geometry
    base = config.combustor_operating_point
    chemistry = config.chemistry
    points = [(geometry, base)]
    if sweep:
        key, values = sweep
        points = []
        for value in values:
            g, op = geometry, base
            if key == "air_mass_flow_kg_s":
                op = replace(base, air_mass_flow=value)
            elif key == "equivalence_ratio":
                op = replace(base, equivalence_ratio=value)
            elif key == "chamber_height_m":
                g = replace(geometry, chamber_height=value)
            else:
                raise ValueError(
                    f"unknown combustor sweep key '{key}'; options: "
                    f"air_mass_flow_kg_s, equivalence_ratio, chamber_height_m")
            points.append((g, op))
    rows = []
    for g, op in points:
        result = cb.stability(g, op, chemistry)
        rows.append([
            op.equivalence_ratio, op.air_mass_flow * 1e3, g.chamber_height * 1e3,
            result.residence_time, result.chemical_time, result.damkohler,
            1 if result.stable else 0, result.exit_temperature,
            result.wall_temperature,
        ])
    bundle.tables["combustor.csv"] = (
        ["phi", "mdot_g_s", "chamber_height_mm", "residence_time_s",
         "chemical_time_s", "damkohler", "stable", "exit_T_K", "wall_T_K"],
        rows,
    )
    last = cb.stability(geometry, base, chemistry)
    bundle.summary += [
        f"combustor: Da {last.damkohler:.3f} -> "
        f"{'stable' if last.stable else 'blow-out'}",
        f"combustor: exit temperature {last.exit_temperature:.1f} K, "
        f"wall {last.wall_temperature:.1f} K",
    ]
    return last


def run_turbine(config: ScenarioConfig, bundle: ReportBundle, sweep=None):
    geom = config.rotor_geometry
    stator = config.stator_geometry
    t = config.raw["turbine"]
    state = gas.GasState(gas.AIR, t["drive_temperature_k"], t["drive_pressure_pa"])
    mdot = t["mass_flow_kg_s"]
    area_in = turbo.rotor_inlet_area(geom)
    area_out = turbo.rotor_exit_area(geom)
    fraction = t["etch_nonuniformity_fraction"]

    if sweep:
        key, values = sweep
        if key != "rpm":
            raise ValueError("turbine sweep supports only the 'rpm' key")
        rpms = values
    else:
        n = t["rpm_points"]
        step = (t["rpm_max"] - t["rpm_min"]) / (n - 1)
        rpms = [t["rpm_min"] + i * step for i in range(n)]

    rows = []
    for rpm in rpms:
        tri_in = turbo.velocity_triangle(geom.tip_radius, rpm, mdot, state,
                                         area_in, stator.exit_flow_angle)
        tri_out = turbo.velocity_triangle(geom.hub_radius, rpm, mdot, state,
                                          area_out, 0.0)
        inc = turbo.incidence(tri_in, geom.inlet_blade_angle)
        work = turbo.euler_specific_work(tri_in, tri_out)
        load, _ = turbo.imbalance_load(geom, fraction, rpm)
        rows.append([rpm, tri_in.blade_speed, inc, work, mdot * work, load])
    bundle.tables["operating_line.csv"] = (
        ["rpm", "U_tip", "incidence_deg", "specific_work_J_kg", "power_W",
         "imbalance_load_N"],
        rows,
    )
    rpm_zero = turbo.design_rpm_for_zero_incidence(
        geom.tip_radius, mdot, state, area_in, stator.exit_flow_angle,
        geom.inlet_blade_angle)
    bundle.summary += [
        f"turbine: tip speed at {t['rpm']:.0f} rpm = "
        f"{turbo.blade_speed(geom.tip_radius, t['rpm']):.3f} m/s",
        f"turbine: zero-incidence speed {rpm_zero:.0f} rpm",
        f"turbine: rotor mass {geom.rotor_mass * 1e6:.1f} mg",
    ]
    return rpm_zero


def run_bearing(config: ScenarioConfig, bundle: ReportBundle, sweep=None):
    b = config.raw["bearing"]
    film = config.film_state
    top = config.bearing_face("top")
    bottom = config.bearing_face("bottom")
    n_r, n_theta = b["grid_radial_nodes"], b["grid_angular_nodes"]

    field = br.solve_reynolds(top, film, n_r, n_theta)
    rows = []
    for i in range(field.radii.size):
        for j in range(field.angles.shape[1]):
            rows.append([field.radii[i], field.angles[i, j],
                         field.pressures[i, j]])
    bundle.tables["field.csv"] = (["r_m", "theta_rad", "p_Pa"], rows)

    if sweep:
        key, values = sweep
        if key == "nominal_clearance_m":
            films = [replace(film, nominal_clearance=v) for v in values]
        elif key == "rpm":
            films = [replace(film, rpm=v) for v in values]
        else:
            raise ValueError(
                "bearing sweep supports 'nominal_clearance_m' or 'rpm'")
    else:
        films = [film]
    load_rows = []
    for f in films:
        load = br.solve_load(top, f, n_r, n_theta)
        stiff = br.axial_stiffness(top, f, n_r, n_theta)
        load_rows.append([f.nominal_clearance, f.rpm, load, stiff])
    bundle.tables["loadmap.csv"] = (
        ["clearance_m", "rpm", "load_N", "stiffness_N_per_m"], load_rows)

    bundle.summary.append(
        f"bearing: top load {load_rows[0][2]:.4e} N at "
        f"{film.nominal_clearance * 1e6:.1f} um clearance")
    try:
        equilibrium = br.axial_equilibrium(
            top, bottom, b["total_axial_gap_m"], config.external_axial_load,
            b["rpm"], b["ambient_pressure_pa"], b["viscosity_pa_s"])
    except br.NoEquilibriumError as exc:
        bundle.summary.append(f"bearing: axial equilibrium clearances not found ({exc})")
        return None
    bundle.summary.append(
        f"bearing: axial equilibrium clearances top {equilibrium.top_clearance * 1e6:.2f} um / "
        f"bottom {equilibrium.bottom_clearance * 1e6:.2f} um "
        f"(converged={equilibrium.converged})")
    return equilibrium


def run(subcommand: str, config: ScenarioConfig, out_dir: Path, sweep=None) -> int:
    """Execute one subcommand; writes files only after every solve succeeded."""
    bundle = ReportBundle(timestamp=time.time(), config_hash=config.config_hash,
                          tables={}, summary=[], warnings=[])
    try:
        if subcommand in ("cycle", "all"):
            run_cycle(config, bundle, sweep if subcommand == "cycle" else None)
        if subcommand in ("combustor", "all"):
            run_combustor(config, bundle, sweep if subcommand == "combustor" else None)
        if subcommand in ("turbine", "all"):
            run_turbine(config, bundle, sweep if subcommand == "turbine" else None)
        if subcommand in ("bearing", "all"):
            run_bearing(config, bundle, sweep if subcommand == "bearing" else None)
    except (br.SolverError, br.NoEquilibriumError, cb.ConvergenceError,
            cyc.ConvergenceError, gas.RichMixtureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if subcommand == "all":
        design = config.cycle_design
        phi = (design.fuel_mass_flow / design.air_mass_flow) / gas.fuel_air_mass_ratio(1.0)
        bundle.summary.append(
            f"cross-check: cycle flows give combustor phi = {phi:.4f}")

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        try:
            for name, (header, rows) in sorted(bundle.tables.items()):
                path = out_dir / name
                path.write_text(_csv(header, rows))
                written.append(path)
            summary = out_dir / "summary.txt"
            lines = [f"config_hash: {bundle.config_hash}"] + bundle.summary
            summary.write_text("\n".join(lines) + "\n")
            written.append(summary)
        except OSError:
            for path in written:
                path.unlink(missing_ok=True)
            raise
    except OSError as exc:
        print(f"error: cannot write outputs: {exc}", file=sys.stderr)
        return 2

    for line in bundle.summary:
        print(line)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="microgt",
        description="Reduced-order micro gas turbine analysis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="check a scenario config")
    p_val.add_argument("config", type=Path)

    p_run = sub.add_parser("run", help="run an analysis module")
    p_run.add_argument("subcommand", choices=SUBCOMMANDS)
    p_run.add_argument("--config", type=Path, default=None,
                       help="scenario config path (defaults to the shipped defaults)")
    p_run.add_argument("--out", type=Path, required=True)
    p_run.add_argument("--sweep", type=str, default=None,
                       metavar="key=start:stop:n")

    p_def = sub.add_parser("defaults", help="print the default config")

    args = parser.parse_args(argv)

    if args.command == "defaults":
        print(DEFAULT_CONFIG, end="")
        return 0

    if args.command == "validate":
        try:
            text = args.config.read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        try:
            validate(text)
        except ConfigError as exc:
            for err in exc.errors:
                print(f"invalid: {err}", file=sys.stderr)
            return 1
        print("ok")
        return 0

    # run
    if args.config is None:
        text = DEFAULT_CONFIG
    else:
        try:
            text = args.config.read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    try:
        config = validate(text)
    except ConfigError as exc:
        for err in exc.errors:
            print(f"invalid: {err}", file=sys.stderr)
        return 1
    sweep = None
    if args.sweep:
        try:
            sweep = _parse_sweep(args.sweep)
        except ValueError as exc:
            print(f"invalid: {exc}", file=sys.stderr)
            return 1
    return run(args.subcommand, config, args.out, sweep)


if __name__ == "__main__":
    sys.exit(main())
