"""Command-line interface: single points, stability reports, sweeps, presets.

Configuration is a single JSON document with up to three sections::

    {
      "physical":  { ... SI parameters ... },
      "effective": { ... dimensionless overrides ... },
      "sweep":     { "axis": "U0", "start": 0.0, "stop": 0.02, ... }
    }

Frequency-like keys carry an explicit unit suffix: ``kappa_hz`` (plain Hz,
converted internally to angular frequency) or ``kappa_wm`` (units of the
reference mechanical frequency).  Exactly one form per key; unknown keys are
rejected.  The reference frequency itself (``omega_m1`` in the physical
section) must be absolute, i.e. ``omega_m1_hz``.  Values given in the
``effective`` section take precedence over anything derived from the
``physical`` section.

Subcommands
-----------
point      evaluate one parameter set and print every observable
stability  eigenvalues and stability margin of the drift matrix
sweep      run the sweep described by the config, emit CSV
figure     run a bundled preset (fig1|fig2|fig3), one CSV per curve
hybrid     bright/dark hybrid-mode coefficients and dark-mode flag

Exit codes: 0 success, 1 configuration error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, replace
from pathlib import Path

from .dynamics import StepTooLarge, Unstable, build_drift, stability
from .hybrid import ZeroCoupling, dark_mode_broken, hybrid_decomposition
from .linalg import NonConvergence, SingularMatrix
from .meanfield import NoConvergence
from .observables import NotPositive, NotSymmetric, ObservablesRecord
from .params import (TWO_PI, EffectiveParams, PhysicalParams,
                     lambda_from_voltage, n_th_from_temperature)
from .sweep import (ConfigError, SweepResult, SweepRow, SweepSpec,
                    evaluate_point, figure_preset, run_sweep)

__all__ = ["main", "load_config", "write_csv", "read_csv", "CSV_COLUMNS"]

#: Exact CSV column order of sweep output.
CSV_COLUMNS = (
    "axis_value", "lambda_wm", "stable", "n1", "n2",
    "s_db_b1", "s_db_b2", "s_db_b1_opt", "s_db_b2_opt",
    "en_a_b1", "en_a_b2", "en_b1_b2",
    "en_a_b1b2", "en_b1_ab2", "en_b2_ab1", "r_min",
)

_NUMERICAL_ERRORS = (Unstable, StepTooLarge, SingularMatrix, NonConvergence,
                     NoConvergence, NotPositive, NotSymmetric, ZeroCoupling)

_PHYS_PLAIN = ("m1", "m2", "C0", "U0", "L", "sigma1", "s", "T0")
_PHYS_FREQ = ("omega_m1", "omega_m2", "gamma1", "gamma2", "kappa")
_EFF_FREQ = ("g1_eff", "g2_eff", "Delta_a", "kappa", "gamma1", "gamma2",
             "lambda_mpa", "chi", "omega_m1", "omega_m2")
_EFF_PLAIN = ("theta", "n_th1", "n_th2")
_SWEEP_KEYS = ("axis", "start", "stop", "n_points", "couple_opa_to_optimal",
               "track_delta_a", "label")


def _check_keys(section: dict, allowed: set, where: str) -> None:
    unknown = sorted(set(section) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in {where!r} section: "
                          f"{', '.join(unknown)}")


def _freq_value(section: dict, key: str, to_wm: bool,
                ref_rad_s: float | None, where: str):
    """Resolve ``key_hz``/``key_wm`` into rad/s (or units of omega_m)."""
    has_hz = f"{key}_hz" in section
    has_wm = f"{key}_wm" in section
    if has_hz and has_wm:
        raise ConfigError(f"{where}: give exactly one of {key}_hz / {key}_wm")
    if not has_hz and not has_wm:
        return None
    if has_hz:
        rad_s = TWO_PI * float(section[f"{key}_hz"])
        if not to_wm:
            return rad_s
        if ref_rad_s is None:
            raise ConfigError(
                f"{where}: {key}_hz needs a physical section to fix the "
                f"reference frequency; use {key}_wm instead")
        return rad_s / ref_rad_s
    value = float(section[f"{key}_wm"])
    if to_wm:
        return value
    if ref_rad_s is None:
        raise ConfigError(f"{where}: {key}_wm needs the reference "
                          f"frequency omega_m1_hz")
    return value * ref_rad_s


def _load_physical(section: dict) -> PhysicalParams:
    allowed = set(_PHYS_PLAIN)
    for key in _PHYS_FREQ:
        allowed.update((f"{key}_hz", f"{key}_wm"))
    _check_keys(section, allowed, "physical")
    if "omega_m1_wm" in section:
        raise ConfigError("physical: the reference frequency must be "
                          "absolute; use omega_m1_hz")
    omega_m1 = _freq_value(section, "omega_m1", to_wm=False, ref_rad_s=None,
                           where="physical")
    if omega_m1 is None:
        raise ConfigError("physical: omega_m1_hz is required")
    kwargs = {"omega_m1": omega_m1}
    for key in ("omega_m2", "gamma1", "gamma2", "kappa"):
        value = _freq_value(section, key, to_wm=False, ref_rad_s=omega_m1,
                            where="physical")
        if value is None:
            raise ConfigError(f"physical: {key}_hz or {key}_wm is required")
        kwargs[key] = value
    for key in _PHYS_PLAIN:
        if key in section:
            kwargs[key] = float(section[key])
    missing = [k for k in ("m1", "m2", "C0", "U0", "L", "sigma1", "s")
               if k not in kwargs]
    if missing:
        raise ConfigError(f"physical: missing key(s): {', '.join(missing)}")
    try:
        return PhysicalParams(**kwargs)
    except ValueError as err:
        raise ConfigError(f"physical: {err}") from None


def _load_effective(section: dict, phys: PhysicalParams | None) -> EffectiveParams:
    allowed = set(_EFF_PLAIN)
    for key in _EFF_FREQ:
        allowed.update((f"{key}_hz", f"{key}_wm"))
    _check_keys(section, allowed, "effective")
    ref = phys.omega_m1 if phys is not None else None

    values: dict = {}
    if phys is not None:
        w = phys.omega_m1
        values.update(
            kappa=phys.kappa / w,
            gamma1=phys.gamma1 / w,
            gamma2=phys.gamma2 / w,
            omega_m1=1.0,
            omega_m2=phys.omega_m2 / w,
            lambda_mpa=lambda_from_voltage(phys) / w,
        )
        if phys.T0 is not None:
            values["n_th1"] = n_th_from_temperature(phys.omega_m1, phys.T0)
            values["n_th2"] = n_th_from_temperature(phys.omega_m2, phys.T0)

    for key in _EFF_FREQ:
        value = _freq_value(section, key, to_wm=True, ref_rad_s=ref,
                            where="effective")
        if value is not None:
            values[key] = value
    for key in _EFF_PLAIN:
        if key in section:
            values[key] = float(section[key])

    values.setdefault("g1_eff", 0.0)
    values.setdefault("g2_eff", 0.0)
    values.setdefault("chi", 0.0)
    values.setdefault("theta", 0.0)
    missing = [k for k in ("Delta_a", "kappa", "gamma1", "gamma2")
               if k not in values]
    if missing:
        raise ConfigError(f"effective: missing key(s): {', '.join(missing)}"
                          f" (give them here or derive them from a physical"
                          f" section)")
    try:
        return EffectiveParams(**values)
    except ValueError as err:
        raise ConfigError(f"effective: {err}") from None


def _load_sweep(section: dict, base: EffectiveParams,
                phys: PhysicalParams | None,
                n_points_override: int | None) -> SweepSpec:
    _check_keys(section, set(_SWEEP_KEYS), "sweep")
    for key in ("axis", "start", "stop"):
        if key not in section:
            raise ConfigError(f"sweep: {key} is required")
    n_points = int(section.get("n_points", 201))
    if n_points_override is not None:
        n_points = n_points_override
    return SweepSpec(
        base=base,
        axis=str(section["axis"]),
        start=float(section["start"]),
        stop=float(section["stop"]),
        n_points=n_points,
        physical=phys,
        couple_opa_to_optimal=bool(section.get("couple_opa_to_optimal", False)),
        track_delta_a=bool(section.get("track_delta_a", False)),
        label=str(section.get("label", "")),
    )


def load_config(path: str) -> dict:
    """Parse and validate a JSON run configuration.

    Returns a dict with keys ``physical`` (PhysicalParams or None),
    ``effective`` (EffectiveParams) and ``raw`` (the parsed document; the
    ``sweep`` section, if any, stays raw until a sweep is requested).
    """
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise ConfigError(f"cannot read config {path!r}: {err}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f"config {path!r} is not valid JSON: {err}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    _check_keys(doc, {"physical", "effective", "sweep"}, "top-level")
    phys = _load_physical(doc["physical"]) if "physical" in doc else None
    effective = _load_effective(doc.get("effective", {}), phys)
    return {"physical": phys, "effective": effective, "raw": doc}


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(float(value))


def _record_cells(record: ObservablesRecord) -> list:
    one_vs_two = record.en_one_vs_two or (None, None, None)
    return [record.stable, record.n1, record.n2,
            record.s_db_b1, record.s_db_b2,
            record.s_db_b1_opt, record.s_db_b2_opt,
            record.en_a_b1, record.en_a_b2, record.en_b1_b2,
            one_vs_two[0], one_vs_two[1], one_vs_two[2], record.r_min]


def write_csv(result: SweepResult, stream) -> None:
    """Emit a sweep as CSV with ``#`` metadata lines above the header."""
    meta = dict(result.metadata)
    timestamp = meta.pop("timestamp", None)
    version = meta.pop("version", None)
    stream.write("# three-mode optomechanics sweep\n")
    if version is not None:
        stream.write(f"# version: {version}\n")
    if timestamp is not None:
        stream.write(f"# timestamp: {timestamp}\n")
    stream.write(f"# config: {json.dumps(meta, sort_keys=True)}\n")
    stream.write(",".join(CSV_COLUMNS) + "\n")
    for row in result.rows:
        cells = [row.axis_value, row.lambda_wm] + _record_cells(row.record)
        stream.write(",".join(_format_cell(c) for c in cells) + "\n")


def read_csv(stream) -> list[dict]:
    """Parse CSV produced by :func:`write_csv` back into row dicts."""
    rows = []
    header = None
    for line in stream:
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split(",")
            continue
        cells = line.split(",")
        row = {}
        for key, cell in zip(header, cells):
            if cell == "":
                row[key] = None
            elif cell in ("true", "false"):
                row[key] = cell == "true"
            else:
                row[key] = float(cell)
        rows.append(row)
    return rows


def _print_record(record: ObservablesRecord, out) -> None:
    print(f"stable = {'true' if record.stable else 'false'}", file=out)
    if not record.stable:
        return
    for name in ("n1", "n2", "s_db_b1", "s_db_b2", "s_db_b1_opt",
                 "s_db_b2_opt", "en_a_b1", "en_a_b2", "en_b1_b2"):
        print(f"{name} = {getattr(record, name):.12g}", file=out)
    labels = ("en_a_b1b2", "en_b1_ab2", "en_b2_ab1")
    for name, value in zip(labels, record.en_one_vs_two):
        print(f"{name} = {value:.12g}", file=out)
    for name, value in zip(("res_a", "res_b1", "res_b2"), record.residuals):
        print(f"{name} = {value:.12g}", file=out)
    print(f"r_min = {record.r_min:.12g}", file=out)


def _cmd_point(args) -> int:
    cfg = load_config(args.config)
    ep = cfg["effective"]
    record = evaluate_point(ep)
    if not args.quiet:
        _print_record(record, sys.stdout)
    if not record.stable:
        print("error: no steady state: drift matrix is unstable or marginal",
              file=sys.stderr)
        return 2
    if args.out:
        result = SweepResult(
            rows=[SweepRow(axis_value=0.0, lambda_wm=ep.lambda_mpa,
                           record=record)],
            metadata={"config": cfg["raw"]})
        with open(args.out, "w") as fh:
            write_csv(result, fh)
    return 0


def _cmd_stability(args) -> int:
    cfg = load_config(args.config)
    rep = stability(build_drift(cfg["effective"]))
    print(f"stable = {'true' if rep.stable else 'false'}")
    print(f"max_real_part = {rep.max_real_part!r}")
    for ev in sorted(rep.eigenvalues, key=lambda z: (z.real, z.imag)):
        print(f"eigenvalue = {ev.real:+.12e} {ev.imag:+.12e}j")
    return 0


def _cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    raw = cfg["raw"]
    if "sweep" not in raw:
        raise ConfigError("config has no 'sweep' section")
    spec = _load_sweep(raw["sweep"], cfg["effective"], cfg["physical"],
                       args.points)
    result = run_sweep(spec)
    if args.out:
        with open(args.out, "w") as fh:
            write_csv(result, fh)
        if not args.quiet:
            print(f"wrote {len(result.rows)} rows to {args.out}")
    else:
        write_csv(result, sys.stdout)
    return 0


def _cmd_figure(args) -> int:
    specs = figure_preset(args.name)
    out_dir = Path(args.out) if args.out else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    points = args.points
    for spec in specs:
        if points is not None:
            spec = replace(spec, n_points=points)
        result = run_sweep(spec)
        path = out_dir / f"{args.name}_{spec.label}.csv"
        with open(path, "w") as fh:
            write_csv(result, fh)
        if not args.quiet:
            print(f"wrote {len(result.rows)} rows to {path}")
    return 0


def _cmd_hybrid(args) -> int:
    cfg = load_config(args.config)
    ep = cfg["effective"]
    h = hybrid_decomposition(ep)
    for f in fields(h):
        print(f"{f.name} = {getattr(h, f.name):.12g}")
    broken = dark_mode_broken(ep)
    print(f"dark_mode_broken = {'true' if broken else 'false'}")
    return 0


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the config-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="omtrio",
        description="Steady-state observables of a three-mode "
                    "optomechanical system (cooling, squeezing, "
                    "entanglement).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_config=True):
        p = sub.add_parser(name, help=help_text)
        if needs_config:
            p.add_argument("--config", required=True,
                           help="path to the JSON run configuration")
        p.add_argument("--out", help="output path (CSV file, or directory "
                                     "for 'figure')")
        p.add_argument("--points", type=int,
                       help="override the number of sweep grid points")
        p.add_argument("--quiet", action="store_true",
                       help="suppress informational output")
        p.set_defaults(func=func)
        return p

    add("point", _cmd_point, "evaluate one parameter set")
    add("stability", _cmd_stability, "stability report of the drift matrix")
    add("sweep", _cmd_sweep, "run the sweep from the config file")
    fig = add("figure", _cmd_figure, "run a bundled figure preset",
              needs_config=False)
    fig.add_argument("name", choices=("fig1", "fig2", "fig3"),
                     help="preset name")
    add("hybrid", _cmd_hybrid, "hybrid-mode coefficients and dark-mode flag")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except _NUMERICAL_ERRORS as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
