"""Scenario configs: parsing, validation, simulation and output tables.

A scenario is a single JSON object::

    {
      "spacetime":  {"alpha": 1.0, "beta": 0.9}
                    -- or -- {"mass_kg": ..., "r_a_m": ..., "r_b_m": ...},
      "channel":    {"kind": "phase_damping" | "amplitude_damping"
                              | "generalized_amplitude_damping",
                     "gamma": 1.0,
                     "include_hamiltonian": bool,      # default: per kind
                     "omega": 1.0,
                     "redshift_hamiltonian": false,
                     "n_th_a": 0.0, "n_th_b": 0.0,
                     "nonmarkovian": false},           # phase damping only
      "kernel":     {"gamma0": 1.0, "lambda": 0.3,     # iff nonmarkovian
                     "kernel_variant": "paper" | "literature",
                     "dilate_kernel_argument": false},
      "integrator": {"method": "rk4" | "rk45", "step": 1e-3,
                     "rel_tol": 1e-8, "abs_tol": 1e-12,
                     "t_max": 5.0, "sample_every": 0.01, "hermitize": true},
      "outputs":    {"path": "out.csv", "format": "csv" | "json",
                     "include_oracle": false, "include_state": false}
    }

Every run starts from the Bell pair.  Non-Markovian runs whose horizon would
cross the first kernel pole are truncated one sampling interval short of it
and finish with status "pole": the time-local dynamics beyond the pole is
undefined and is never extrapolated.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import metrics
from .channels import (
    ChannelKind,
    ChannelSpec,
    dephasing_rhs,
    effective_rates,
    gad_rhs,
    hamiltonian_term,
    amplitude_damping_rhs,
)
from .evolution import (
    RK4_FIXED,
    RK45_ADAPTIVE,
    STATUS_POLE,
    IntegratorConfig,
    Trajectory,
    evolve,
)
from .memory_kernel import (
    VARIANTS,
    KernelParams,
    KernelRegime,
    PoleError,
    classify,
    first_pole_time,
    nonmarkov_dephasing_rhs,
    scaled_rates,
)
from .oracles import DephasingOracle
from .spacetime import GravitationalScenario, RedshiftPair, schwarzschild_radius
from .states import bell_state

SCHEMA_VERSION = "1"

CATEGORY_SCHEMA = "schema"
CATEGORY_PHYSICS = "physics"

_BASE_COLUMNS = (
    "t", "gamma_a", "gamma_b", "concurrence", "negativity",
    "l1_coherence", "purity", "pop_excited_a", "pop_excited_b",
)
_STATE_PAIRS = (
    (0, 0), (0, 1), (0, 2), (0, 3), (1, 1),
    (1, 2), (1, 3), (2, 2), (2, 3), (3, 3),
)
_ORACLE_COLUMNS = ("oracle_rho14", "oracle_dev")


@dataclass(frozen=True)
class ConfigIssue:
    path: str
    message: str
    category: str = CATEGORY_SCHEMA

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class ConfigError(ValueError):
    def __init__(self, issues: list[ConfigIssue]):
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = issues


class PhysicsDomainError(ValueError):
    def __init__(self, issues: list[ConfigIssue] | str):
        if isinstance(issues, str):
            issues = [ConfigIssue("", issues, CATEGORY_PHYSICS)]
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = issues


@dataclass(frozen=True)
class OutputSpec:
    path: str
    format: str = "csv"
    include_oracle: bool = False
    include_state: bool = False


@dataclass(frozen=True)
class ScenarioConfig:
    redshift: RedshiftPair
    channel: ChannelSpec
    integrator: IntegratorConfig
    outputs: OutputSpec
    nonmarkovian: bool = False
    kernel: KernelParams | None = None
    kernel_variant: str = "paper"
    dilate_kernel_argument: bool = False
    scenario: GravitationalScenario | None = None
    raw: dict | None = None


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _check_keys(section: dict, path: str, allowed: set[str],
                issues: list[ConfigIssue]) -> None:
    for key in section:
        if key not in allowed:
            issues.append(ConfigIssue(f"{path}.{key}", "unknown key"))


def _number(section, path, key, issues, *, required=False, default=None,
            minimum=None, exclusive=False):
    if key not in section:
        if required:
            issues.append(ConfigIssue(f"{path}.{key}", "required key missing"))
        return default
    value = section[key]
    if not _is_number(value):
        issues.append(ConfigIssue(f"{path}.{key}", f"expected a number, got {value!r}"))
        return default
    value = float(value)
    if minimum is not None:
        if exclusive and value <= minimum:
            issues.append(ConfigIssue(f"{path}.{key}", f"must be > {minimum}, got {value}"))
            return default
        if not exclusive and value < minimum:
            issues.append(ConfigIssue(f"{path}.{key}", f"must be >= {minimum}, got {value}"))
            return default
    return value


def _boolean(section, path, key, issues, default):
    if key not in section:
        return default
    value = section[key]
    if not isinstance(value, bool):
        issues.append(ConfigIssue(f"{path}.{key}", f"expected a boolean, got {value!r}"))
        return default
    return value


def validate_config(data) -> list[ConfigIssue]:
    """Collect every schema and physics violation with its config path."""
    issues: list[ConfigIssue] = []
    if not isinstance(data, dict):
        return [ConfigIssue("", "top-level value must be a JSON object")]
    _check_keys(data, "$", {"spacetime", "channel", "kernel", "integrator", "outputs"},
                issues)

    # spacetime: exactly one of the two forms
    st = data.get("spacetime")
    if not isinstance(st, dict):
        issues.append(ConfigIssue("spacetime", "required section missing or not an object"))
    else:
        _check_keys(st, "spacetime",
                    {"alpha", "beta", "mass_kg", "r_a_m", "r_b_m"}, issues)
        dimless = {"alpha", "beta"} & st.keys()
        physical = {"mass_kg", "r_a_m", "r_b_m"} & st.keys()
        if dimless and physical:
            issues.append(ConfigIssue(
                "spacetime",
                "both the (alpha, beta) and (mass_kg, r_a_m, r_b_m) forms are "
                "present; exactly one is allowed"))
        elif dimless:
            for key in ("alpha", "beta"):
                value = _number(st, "spacetime", key, issues, required=True)
                if value is not None and not 0.0 < value <= 1.0:
                    issues.append(ConfigIssue(
                        f"spacetime.{key}", f"must lie in (0, 1], got {value}"))
        elif physical:
            mass = _number(st, "spacetime", "mass_kg", issues, required=True, minimum=0.0)
            r_a = _number(st, "spacetime", "r_a_m", issues, required=True,
                          minimum=0.0, exclusive=True)
            r_b = _number(st, "spacetime", "r_b_m", issues, required=True,
                          minimum=0.0, exclusive=True)
            if mass is not None and r_a is not None and r_b is not None:
                r_s = schwarzschild_radius(mass)
                for key, r in (("r_a_m", r_a), ("r_b_m", r_b)):
                    if r <= r_s:
                        issues.append(ConfigIssue(
                            f"spacetime.{key}",
                            f"radius {r} m is at or inside the horizon "
                            f"({r_s} m)", CATEGORY_PHYSICS))
        else:
            issues.append(ConfigIssue(
                "spacetime",
                "provide either (alpha, beta) or (mass_kg, r_a_m, r_b_m)"))

    # channel
    nonmarkovian = False
    ch = data.get("channel")
    if not isinstance(ch, dict):
        issues.append(ConfigIssue("channel", "required section missing or not an object"))
    else:
        _check_keys(ch, "channel",
                    {"kind", "gamma", "include_hamiltonian", "omega",
                     "redshift_hamiltonian", "n_th_a", "n_th_b", "nonmarkovian"},
                    issues)
        kind = ch.get("kind")
        valid_kinds = [k.value for k in ChannelKind]
        if kind not in valid_kinds:
            issues.append(ConfigIssue(
                "channel.kind", f"must be one of {valid_kinds}, got {kind!r}"))
        _number(ch, "channel", "gamma", issues, required=True, minimum=0.0)
        _number(ch, "channel", "omega", issues, minimum=0.0, default=1.0)
        _number(ch, "channel", "n_th_a", issues, minimum=0.0, default=0.0)
        _number(ch, "channel", "n_th_b", issues, minimum=0.0, default=0.0)
        _boolean(ch, "channel", "include_hamiltonian", issues, None)
        _boolean(ch, "channel", "redshift_hamiltonian", issues, False)
        nonmarkovian = _boolean(ch, "channel", "nonmarkovian", issues, False)
        if nonmarkovian and kind != ChannelKind.PHASE_DAMPING.value:
            issues.append(ConfigIssue(
                "channel.nonmarkovian",
                "only supported for kind = phase_damping"))

    # kernel: present iff the channel is non-Markovian dephasing
    kn = data.get("kernel")
    if nonmarkovian and kn is None:
        issues.append(ConfigIssue(
            "kernel", "required when channel.nonmarkovian is true"))
    if not nonmarkovian and kn is not None:
        issues.append(ConfigIssue(
            "kernel", "only allowed when channel.nonmarkovian is true"))
    if kn is not None:
        if not isinstance(kn, dict):
            issues.append(ConfigIssue("kernel", "must be an object"))
        else:
            _check_keys(kn, "kernel",
                        {"gamma0", "lambda", "kernel_variant",
                         "dilate_kernel_argument"}, issues)
            _number(kn, "kernel", "gamma0", issues, required=True,
                    minimum=0.0, exclusive=True)
            _number(kn, "kernel", "lambda", issues, required=True,
                    minimum=0.0, exclusive=True)
            variant = kn.get("kernel_variant", "paper")
            if variant not in VARIANTS:
                issues.append(ConfigIssue(
                    "kernel.kernel_variant",
                    f"must be one of {list(VARIANTS)}, got {variant!r}"))
            _boolean(kn, "kernel", "dilate_kernel_argument", issues, False)

    # integrator
    it = data.get("integrator", {})
    if not isinstance(it, dict):
        issues.append(ConfigIssue("integrator", "must be an object"))
    else:
        _check_keys(it, "integrator",
                    {"method", "step", "rel_tol", "abs_tol", "t_max",
                     "sample_every", "hermitize"}, issues)
        method = it.get("method")
        if method is not None and method not in (RK4_FIXED, RK45_ADAPTIVE):
            issues.append(ConfigIssue(
                "integrator.method",
                f"must be '{RK4_FIXED}' or '{RK45_ADAPTIVE}', got {method!r}"))
        step = _number(it, "integrator", "step", issues, minimum=0.0, exclusive=True)
        _number(it, "integrator", "rel_tol", issues, minimum=0.0, exclusive=True)
        _number(it, "integrator", "abs_tol", issues, minimum=0.0, exclusive=True)
        t_max = _number(it, "integrator", "t_max", issues, minimum=0.0,
                        exclusive=True, default=5.0)
        sample_every = _number(it, "integrator", "sample_every", issues,
                               minimum=0.0, exclusive=True, default=1e-2)
        _boolean(it, "integrator", "hermitize", issues, True)
        if step is not None and sample_every is not None and sample_every < step:
            issues.append(ConfigIssue(
                "integrator.sample_every",
                f"must be >= step ({step}), got {sample_every}"))
        if t_max is not None and sample_every is not None and t_max < sample_every:
            issues.append(ConfigIssue(
                "integrator.t_max",
                f"must be >= sample_every ({sample_every}), got {t_max}"))

    # outputs
    out = data.get("outputs")
    if not isinstance(out, dict):
        issues.append(ConfigIssue("outputs", "required section missing or not an object"))
    else:
        _check_keys(out, "outputs",
                    {"path", "format", "include_oracle", "include_state"}, issues)
        path = out.get("path")
        if not isinstance(path, str) or not path:
            issues.append(ConfigIssue("outputs.path", "required non-empty string"))
        fmt = out.get("format", "csv")
        if fmt not in ("csv", "json"):
            issues.append(ConfigIssue(
                "outputs.format", f"must be 'csv' or 'json', got {fmt!r}"))
        _boolean(out, "outputs", "include_oracle", issues, False)
        _boolean(out, "outputs", "include_state", issues, False)

    return issues


def _probe_reference_rate(rates, t_max: float) -> float:
    worst = 0.0
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        try:
            ga, gb = rates(frac * t_max)
        except PoleError:
            continue
        worst = max(worst, abs(ga), abs(gb))
    return worst


def load_config(data: dict) -> ScenarioConfig:
    """Validated ScenarioConfig; raises ConfigError / PhysicsDomainError."""
    issues = validate_config(data)
    schema = [i for i in issues if i.category == CATEGORY_SCHEMA]
    physics = [i for i in issues if i.category == CATEGORY_PHYSICS]
    if schema:
        raise ConfigError(schema)
    if physics:
        raise PhysicsDomainError(physics)

    st = data["spacetime"]
    scenario = None
    if "alpha" in st:
        redshift = RedshiftPair(float(st["alpha"]), float(st["beta"]))
    else:
        scenario = GravitationalScenario(
            float(st["mass_kg"]), float(st["r_a_m"]), float(st["r_b_m"]))
        redshift = scenario.redshift_pair()

    ch = data["channel"]
    channel = ChannelSpec(
        kind=ChannelKind(ch["kind"]),
        gamma=float(ch["gamma"]),
        include_hamiltonian=ch.get("include_hamiltonian"),
        omega=float(ch.get("omega", 1.0)),
        n_th_a=float(ch.get("n_th_a", 0.0)),
        n_th_b=float(ch.get("n_th_b", 0.0)),
        redshift_hamiltonian=bool(ch.get("redshift_hamiltonian", False)),
    )
    nonmarkovian = bool(ch.get("nonmarkovian", False))

    kernel = None
    kernel_variant = "paper"
    dilate = False
    if nonmarkovian:
        kn = data["kernel"]
        kernel = KernelParams(float(kn["gamma0"]), float(kn["lambda"]))
        kernel_variant = kn.get("kernel_variant", "paper")
        dilate = bool(kn.get("dilate_kernel_argument", False))

    it = data.get("integrator", {})
    method = it.get("method")
    if method is None:
        method = RK45_ADAPTIVE if nonmarkovian else RK4_FIXED
    t_max = float(it.get("t_max", 5.0))
    sample_every = float(it.get("sample_every", 1e-2))
    step = it.get("step")
    if step is None:
        # default step: resolve the fastest rate seen on a coarse probe grid
        _, rates, _ = _build_generator_parts(
            redshift, channel, nonmarkovian, kernel, kernel_variant, dilate)
        ref = max(_probe_reference_rate(rates, t_max), 1.0)
        step = min(1e-3 / ref, sample_every)
    integrator = IntegratorConfig(
        method=method,
        step=float(step),
        rel_tol=float(it.get("rel_tol", 1e-8)),
        abs_tol=float(it.get("abs_tol", 1e-12)),
        t_max=t_max,
        sample_every=sample_every,
        hermitize=bool(it.get("hermitize", True)),
    )

    out = data["outputs"]
    outputs = OutputSpec(
        path=out["path"],
        format=out.get("format", "csv"),
        include_oracle=bool(out.get("include_oracle", False)),
        include_state=bool(out.get("include_state", False)),
    )

    return ScenarioConfig(
        redshift=redshift,
        channel=channel,
        integrator=integrator,
        outputs=outputs,
        nonmarkovian=nonmarkovian,
        kernel=kernel,
        kernel_variant=kernel_variant,
        dilate_kernel_argument=dilate,
        scenario=scenario,
        raw=copy.deepcopy(data),
    )


def load_config_file(path) -> ScenarioConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError([ConfigIssue(str(path), f"cannot read file: {exc}")])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([ConfigIssue(str(path), f"invalid JSON: {exc}")])
    return load_config(data)


def _build_generator_parts(redshift, channel, nonmarkovian, kernel,
                           kernel_variant, dilate):
    """(generator, rates, regime) for the configured channel."""
    h_alpha, h_beta = (
        (redshift.alpha, redshift.beta)
        if channel.redshift_hamiltonian else (1.0, 1.0)
    )
    include_h = bool(channel.include_hamiltonian)
    omega = channel.omega

    if channel.kind is ChannelKind.PHASE_DAMPING and nonmarkovian:
        def rates(t):
            r = scaled_rates(kernel, redshift, t, kernel_variant, dilate)
            return r.gamma_a, r.gamma_b

        def generator(t, m):
            out = nonmarkov_dephasing_rhs(
                m, kernel, redshift, t, kernel_variant, dilate)
            if include_h:
                out = out + hamiltonian_term(m, omega, h_alpha, h_beta)
            return out

        return generator, rates, classify(kernel)

    er = effective_rates(channel.gamma, redshift)

    def rates(t):
        return er.gamma_a, er.gamma_b

    if channel.kind is ChannelKind.PHASE_DAMPING:
        def generator(t, m):
            out = dephasing_rhs(m, er)
            if include_h:
                out = out + hamiltonian_term(m, omega, h_alpha, h_beta)
            return out
    elif channel.kind is ChannelKind.AMPLITUDE_DAMPING:
        def generator(t, m):
            out = amplitude_damping_rhs(m, er)
            if include_h:
                out = out + hamiltonian_term(m, omega, h_alpha, h_beta)
            return out
    else:
        n_a, n_b = channel.n_th_a, channel.n_th_b

        def generator(t, m):
            out = gad_rhs(m, er, n_a, n_b)
            if include_h:
                out = out + hamiltonian_term(m, omega, h_alpha, h_beta)
            return out

    return generator, rates, None


def build_generator(config: ScenarioConfig):
    return _build_generator_parts(
        config.redshift, config.channel, config.nonmarkovian,
        config.kernel, config.kernel_variant, config.dilate_kernel_argument)


@dataclass
class RunResult:
    config: ScenarioConfig
    trajectory: Trajectory
    regime: KernelRegime | None
    oracle: DephasingOracle | None
    warnings: list[str]
    pole_time: float | None = None


def simulate(config: ScenarioConfig) -> RunResult:
    """Run the configured scenario from the Bell pair."""
    generator, rates, regime = build_generator(config)
    integrator = config.integrator
    warnings: list[str] = []
    pole_time = None

    if config.nonmarkovian:
        pole = first_pole_time(config.kernel, config.kernel_variant)
        if pole is not None and config.dilate_kernel_argument:
            pole = pole / max(config.redshift.alpha, config.redshift.beta)
        if pole is not None and pole <= integrator.t_max:
            n_keep = int(math.floor(pole / integrator.sample_every - 1e-9)) - 1
            if n_keep < 1:
                raise PhysicsDomainError(
                    f"first kernel pole at t={pole:.6g} precedes the sampling "
                    "cadence; reduce sample_every")
            integrator = replace(integrator,
                                 t_max=n_keep * integrator.sample_every)
            pole_time = pole

    oracle = None
    if config.channel.kind is ChannelKind.PHASE_DAMPING and not config.nonmarkovian:
        oracle = DephasingOracle(
            config.channel.gamma, config.redshift.alpha, config.redshift.beta)
    if config.outputs.include_oracle and oracle is None:
        warnings.append(
            "oracle columns omitted: no closed form exists for this channel")

    trajectory = evolve(bell_state(), generator, integrator, rates=rates)
    if pole_time is not None and trajectory.status == "ok":
        trajectory.status = STATUS_POLE
        trajectory.status_detail = (
            f"stopped one sampling interval short of the first rate pole "
            f"at t={pole_time:.6g}")

    return RunResult(
        config=config,
        trajectory=trajectory,
        regime=regime,
        oracle=oracle,
        warnings=warnings,
        pole_time=pole_time,
    )


def result_columns(result: RunResult) -> list[str]:
    cols = list(_BASE_COLUMNS)
    if result.config.outputs.include_state:
        cols += [f"rho_re_{i + 1}{j + 1}" for i, j in _STATE_PAIRS]
        cols += [f"rho_im_{i + 1}{j + 1}" for i, j in _STATE_PAIRS]
    if result.config.outputs.include_oracle and result.oracle is not None:
        cols += list(_ORACLE_COLUMNS)
    return cols


def result_rows(result: RunResult) -> list[list[float]]:
    traj = result.trajectory
    include_state = result.config.outputs.include_state
    include_oracle = (result.config.outputs.include_oracle
                      and result.oracle is not None)
    rows = []
    for k, t in enumerate(traj.times):
        m = np.asarray(traj.states[k])
        row = [
            float(t),
            float(traj.rates_a[k]),
            float(traj.rates_b[k]),
            metrics.concurrence(m),
            metrics.negativity(m),
            metrics.l1_coherence(m),
            metrics.purity(m),
            metrics.pop_excited(m, "a"),
            metrics.pop_excited(m, "b"),
        ]
        if include_state:
            row += [float(m[i, j].real) for i, j in _STATE_PAIRS]
            row += [float(m[i, j].imag) for i, j in _STATE_PAIRS]
        if include_oracle:
            ref = result.oracle.coherence(float(t))
            row += [ref, abs(complex(m[0, 3]) - ref)]
        rows.append(row)
    return rows


def write_csv(result: RunResult, path) -> None:
    cols = result_columns(result)
    lines = [",".join(cols)]
    for row in result_rows(result):
        lines.append(",".join(repr(float(x)) for x in row))
    Path(path).write_text("\n".join(lines) + "\n")


def write_json(result: RunResult, path) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": result.config.raw,
        "regime": result.regime.kind if result.regime else None,
        "termination_status": result.trajectory.status,
        "status_detail": result.trajectory.status_detail,
        "warnings": result.warnings,
        "columns": result_columns(result),
        "rows": result_rows(result),
    }
    Path(path).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def write_result(result: RunResult, path) -> None:
    if result.config.outputs.format == "json":
        write_json(result, path)
    else:
        write_csv(result, path)


def measured_halflife(times, coherence) -> float | None:
    """First time the series crosses half its initial value, interpolated."""
    if len(times) == 0 or coherence[0] <= 0:
        return None
    target = 0.5 * coherence[0]
    for i in range(1, len(times)):
        if coherence[i] <= target:
            c0, c1 = coherence[i - 1], coherence[i]
            if c1 == c0:
                return float(times[i])
            frac = (c0 - target) / (c0 - c1)
            return float(times[i - 1] + frac * (times[i] - times[i - 1]))
    return None


SWEEP_AXES = {
    "alpha": ("spacetime", "alpha"),
    "beta": ("spacetime", "beta"),
    "mass_kg": ("spacetime", "mass_kg"),
    "r_a_m": ("spacetime", "r_a_m"),
    "r_b_m": ("spacetime", "r_b_m"),
    "gamma": ("channel", "gamma"),
    "omega": ("channel", "omega"),
    "n_th_a": ("channel", "n_th_a"),
    "n_th_b": ("channel", "n_th_b"),
    "gamma0": ("kernel", "gamma0"),
    "lambda": ("kernel", "lambda"),
    "t_max": ("integrator", "t_max"),
    "step": ("integrator", "step"),
    "sample_every": ("integrator", "sample_every"),
}


@dataclass
class SweepEntry:
    value: float
    result: RunResult | None = None
    error: str | None = None
    error_category: str | None = None


def sweep(base: ScenarioConfig, axis: str, values) -> list[SweepEntry]:
    """One independent run per value; per-run failures do not abort siblings."""
    if axis not in SWEEP_AXES:
        raise ConfigError([ConfigIssue(
            "--sweep", f"unknown axis {axis!r}; known axes: {sorted(SWEEP_AXES)}")])
    section, key = SWEEP_AXES[axis]
    entries: list[SweepEntry] = []
    for value in values:
        raw = copy.deepcopy(base.raw)
        raw.setdefault(section, {})[key] = value
        entry = SweepEntry(value=value)
        try:
            cfg = load_config(raw)
            entry.result = simulate(cfg)
        except ConfigError as exc:
            entry.error = str(exc)
            entry.error_category = CATEGORY_SCHEMA
        except PhysicsDomainError as exc:
            entry.error = str(exc)
            entry.error_category = CATEGORY_PHYSICS
        entries.append(entry)
    return entries


SUMMARY_COLUMNS = (
    "value", "status", "regime", "half_life", "final_concurrence",
    "revival_count",
)


def summary_rows(entries: list[SweepEntry]) -> list[list]:
    rows = []
    for entry in entries:
        if entry.result is None:
            rows.append([entry.value, f"error:{entry.error_category}",
                         "", "", "", ""])
            continue
        traj = entry.result.trajectory
        data = result_rows(entry.result)
        times = [row[0] for row in data]
        l1 = [row[5] for row in data]
        conc = [row[3] for row in data]
        half = measured_halflife(times, l1)
        revivals = metrics.detect_revivals(list(zip(times, conc)))
        regime = entry.result.regime.kind if entry.result.regime else ""
        rows.append([
            entry.value, traj.status, regime,
            "" if half is None else half,
            conc[-1] if conc else "",
            len(revivals),
        ])
    return rows


def write_summary_csv(entries: list[SweepEntry], axis: str, path) -> None:
    lines = [",".join((axis,) + SUMMARY_COLUMNS[1:])]
    for row in summary_rows(entries):
        rendered = []
        for x in row:
            if isinstance(x, bool):
                rendered.append(str(x).lower())
            elif isinstance(x, float):
                rendered.append(repr(x))
            else:
                rendered.append(str(x))
        lines.append(",".join(rendered))
    Path(path).write_text("\n".join(lines) + "\n")
