"""Parameter sweeps and the bundled figure presets.

A sweep varies one axis — the bias gate voltage or any effective
parameter — and evaluates the full set of steady-state observables at each
point.  Rows are completely independent: each one can be reproduced by a
single :func:`evaluate_point` call with the same effective parameters, and
repeated runs of the same spec produce identical output.

Three presets reproduce the bundled reference study:

* ``fig1`` — simultaneous ground-state cooling of both resonators versus
  bias voltage, with and without the optical parametric amplifier
  (``kappa = 20``, ``n_th = 1000``).
* ``fig2`` — mechanical squeezing of the charged resonator past the 3 dB
  limit (``kappa = 20``, ``n_th = 100``).
* ``fig3`` — bipartite and genuine tripartite entanglement at
  ``kappa = 1`` for three bath occupations.

In all presets the detuning tracks the voltage-shifted mechanical frequency
(``Delta_a = omega_m1 + 2*lambda(U0)``), under which the optimal
parametric-amplifier parameters stay pinned at ``(kappa/4, pi)``.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field, fields, replace

import numpy as np

from . import __version__
from .dynamics import (MARGINAL_TOL, build_drift, build_noise, stability,
                       steady_state)
from .observables import ObservablesRecord, compute_observables
from .params import (REFERENCE_PARAMS, EffectiveParams, PhysicalParams,
                     lambda_from_voltage, optimal_opa)

__all__ = [
    "ConfigError",
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "evaluate_point",
    "run_sweep",
    "figure_preset",
    "FIGURE_NAMES",
]

#: Axis aliases that sweep the bias voltage through the physical overlay.
VOLTAGE_AXES = ("U0", "bias_voltage")

#: Default number of grid points; resolves the narrow cooling minimum.
DEFAULT_N_POINTS = 201

FIGURE_NAMES = ("fig1", "fig2", "fig3")


class ConfigError(ValueError):
    """Invalid sweep or run configuration (unknown axis, bad keys, ...)."""


_EFFECTIVE_FIELDS = tuple(f.name for f in fields(EffectiveParams))


@dataclass(frozen=True)
class SweepSpec:
    """Declarative description of a one-dimensional parameter sweep.

    Attributes
    ----------
    base : EffectiveParams
        Effective parameters shared by every point.
    axis : str
        ``"U0"`` (bias voltage, requires ``physical``) or the name of any
        :class:`EffectiveParams` field.
    start, stop : float
        Axis bounds in the axis' own units (volts for ``U0``).
    n_points : int
        Grid size (at least 2, endpoints included).
    physical : PhysicalParams or None
        SI overlay used to convert voltage to parametric strength.
    couple_opa_to_optimal : bool
        Recompute the optimal amplifier gain and phase at every point (the
        shifted frequency moves with the axis).
    track_delta_a : bool
        Pin ``Delta_a`` to the shifted frequency ``omega_m1 + 2*lambda`` at
        every point.
    label : str
        Free-form tag used in file names and metadata.
    """

    base: EffectiveParams
    axis: str
    start: float
    stop: float
    n_points: int = DEFAULT_N_POINTS
    physical: PhysicalParams | None = None
    couple_opa_to_optimal: bool = False
    track_delta_a: bool = False
    label: str = ""

    def __post_init__(self):
        if self.n_points < 2:
            raise ConfigError("n_points must be at least 2")
        if not self.start < self.stop:
            raise ConfigError("start must be less than stop")
        if self.axis not in VOLTAGE_AXES and self.axis not in _EFFECTIVE_FIELDS:
            raise ConfigError(
                f"unknown sweep axis {self.axis!r}; expected 'U0' or one of "
                f"{_EFFECTIVE_FIELDS}")
        if self.axis in VOLTAGE_AXES and self.physical is None:
            raise ConfigError(
                "voltage sweeps need the physical parameter overlay")


@dataclass(frozen=True)
class SweepRow:
    """One sweep point: axis value, parametric strength and observables."""

    axis_value: float
    lambda_wm: float
    record: ObservablesRecord


@dataclass(frozen=True)
class SweepResult:
    """Ordered sweep rows plus a full parameter echo for reproducibility."""

    rows: list[SweepRow]
    metadata: dict = field(default_factory=dict)


def params_at(spec: SweepSpec, value: float) -> EffectiveParams:
    """Effective parameters of the sweep point at ``value`` on the axis."""
    if spec.axis in VOLTAGE_AXES:
        phys = replace(spec.physical, U0=value)
        lam = lambda_from_voltage(phys) / phys.omega_m1
        ep = replace(spec.base, lambda_mpa=lam)
    else:
        ep = replace(spec.base, **{spec.axis: value})
    if spec.track_delta_a:
        ep = replace(ep, Delta_a=ep.omega_m1_prime)
    if spec.couple_opa_to_optimal:
        chi_opt, theta_opt = optimal_opa(ep.Delta_a, ep.omega_m1_prime,
                                         ep.kappa)
        ep = replace(ep, chi=chi_opt, theta=theta_opt)
    return ep


def evaluate_point(ep: EffectiveParams) -> ObservablesRecord:
    """Observables of a single parameter set.

    Unstable (or marginal) points return a record with ``stable=False``
    and every observable absent.
    """
    a = build_drift(ep)
    if stability(a).max_real_part >= -MARGINAL_TOL:
        return ObservablesRecord(stable=False)
    v = steady_state(a, build_noise(ep))
    return compute_observables(v)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate a sweep spec into ordered, independent rows."""
    values = np.linspace(spec.start, spec.stop, spec.n_points)
    rows = []
    for value in values:
        ep = params_at(spec, float(value))
        rows.append(SweepRow(axis_value=float(value),
                             lambda_wm=ep.lambda_mpa,
                             record=evaluate_point(ep)))
    return SweepResult(rows=rows, metadata=_metadata(spec))


def _metadata(spec: SweepSpec) -> dict:
    base = {f.name: getattr(spec.base, f.name) for f in fields(spec.base)}
    phys = None
    if spec.physical is not None:
        phys = {f.name: getattr(spec.physical, f.name)
                for f in fields(spec.physical)}
    return {
        "axis": spec.axis,
        "start": spec.start,
        "stop": spec.stop,
        "n_points": spec.n_points,
        "couple_opa_to_optimal": spec.couple_opa_to_optimal,
        "track_delta_a": spec.track_delta_a,
        "label": spec.label,
        "base": base,
        "physical": phys,
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def _preset_base(kappa: float, n_th: float, chi: float) -> EffectiveParams:
    return EffectiveParams(
        g1_eff=0.3, g2_eff=0.3,
        Delta_a=1.0, kappa=kappa,
        gamma1=1e-6, gamma2=1e-6,
        lambda_mpa=0.0, chi=chi, theta=np.pi,
        omega_m1=1.0, omega_m2=1.0,
        n_th1=n_th, n_th2=n_th,
    )


def figure_preset(name: str) -> list[SweepSpec]:
    """Sweep specs reproducing one of the bundled reference figures.

    ``fig1`` and ``fig2`` return two specs (amplifier off / at the optimal
    working point); ``fig3`` returns three (one per bath occupation).
    """
    common = dict(axis="U0", physical=REFERENCE_PARAMS,
                  n_points=DEFAULT_N_POINTS, track_delta_a=True)
    if name == "fig1":
        return [
            SweepSpec(base=_preset_base(20.0, 1000.0, 0.0),
                      start=0.0, stop=0.02, label="chi0", **common),
            SweepSpec(base=_preset_base(20.0, 1000.0, 5.0),
                      start=0.0, stop=0.02, label="chiopt",
                      couple_opa_to_optimal=True, **common),
        ]
    if name == "fig2":
        return [
            SweepSpec(base=_preset_base(20.0, 100.0, 0.0),
                      start=0.0, stop=0.5, label="chi0", **common),
            SweepSpec(base=_preset_base(20.0, 100.0, 5.0),
                      start=0.0, stop=0.5, label="chiopt",
                      couple_opa_to_optimal=True, **common),
        ]
    if name == "fig3":
        return [
            SweepSpec(base=_preset_base(1.0, n_th, 0.25),
                      start=0.0, stop=0.5, label=f"nth{int(n_th)}",
                      couple_opa_to_optimal=True, **common)
            for n_th in (100.0, 500.0, 1000.0)
        ]
    raise ConfigError(f"unknown figure preset {name!r}; "
                      f"expected one of {FIGURE_NAMES}")
