"""Command-line front-end: run, validate and sweep scenario configs.

Data goes to files, logging to stderr.  Exit codes: 0 ok, 2 config error,
3 physics domain error (e.g. an observer at or inside the horizon), 4 run
terminated at a kernel pole (partial output retained), 5 state invariant
violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .constants import C_LIGHT, G
from .evolution import STATUS_INVARIANT, STATUS_OK, STATUS_POLE, STATUS_UNDERFLOW
from .scenarios import (
    CATEGORY_PHYSICS,
    ConfigError,
    PhysicsDomainError,
    load_config_file,
    simulate,
    sweep,
    validate_config,
    write_result,
    write_summary_csv,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_POLE = 4
EXIT_INVARIANT = 5

_STATUS_EXIT = {
    STATUS_OK: EXIT_OK,
    STATUS_POLE: EXIT_POLE,
    STATUS_UNDERFLOW: EXIT_INVARIANT,
    STATUS_INVARIANT: EXIT_INVARIANT,
}


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _output_path(configured: str, out_dir: str | None) -> Path:
    path = Path(configured)
    if out_dir is not None:
        path = Path(out_dir) / path.name
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _cmd_run(args) -> int:
    config = load_config_file(args.config)
    result = simulate(config)
    for warning in result.warnings:
        _log(f"warning: {warning}")
    path = _output_path(config.outputs.path, args.out)
    write_result(result, path)
    traj = result.trajectory
    _log(f"wrote {len(traj.times)} samples to {path} (status: {traj.status})")
    if traj.status_detail:
        _log(traj.status_detail)
    return _STATUS_EXIT.get(traj.status, EXIT_INVARIANT)


def _cmd_validate(args) -> int:
    import json

    try:
        data = json.loads(Path(args.config).read_text())
    except OSError as exc:
        _log(f"cannot read {args.config}: {exc}")
        return EXIT_CONFIG
    except json.JSONDecodeError as exc:
        print(f"{args.config}: invalid JSON: {exc}")
        return EXIT_CONFIG
    issues = validate_config(data)
    for issue in issues:
        print(f"{issue.path}: {issue.message} [{issue.category}]")
    if not issues:
        return EXIT_OK
    if all(i.category == CATEGORY_PHYSICS for i in issues):
        return EXIT_PHYSICS
    return EXIT_CONFIG


def _cmd_sweep(args) -> int:
    try:
        axis, _, rest = args.sweep.partition("=")
        axis = axis.strip()
        if not axis or not rest:
            raise ValueError("expected axis=v1,v2,...")
        values = [float(v) for v in rest.split(",")]
    except ValueError as exc:
        _log(f"bad --sweep argument {args.sweep!r}: {exc}")
        return EXIT_CONFIG

    config = load_config_file(args.config)
    entries = sweep(config, axis, values)

    configured = Path(config.outputs.path)
    stem, suffix = configured.stem, configured.suffix or ".csv"
    worst = EXIT_OK
    for entry in entries:
        if entry.result is None:
            _log(f"{axis}={entry.value!r}: error ({entry.error_category}): "
                 f"{entry.error}")
            code = (EXIT_PHYSICS if entry.error_category == CATEGORY_PHYSICS
                    else EXIT_CONFIG)
        else:
            name = f"{stem}__{axis}={entry.value!r}{suffix}"
            path = _output_path(str(configured.with_name(name)), args.out)
            write_result(entry.result, path)
            status = entry.result.trajectory.status
            _log(f"{axis}={entry.value!r}: {len(entry.result.trajectory.times)} "
                 f"samples -> {path} (status: {status})")
            code = _STATUS_EXIT.get(status, EXIT_INVARIANT)
        if worst == EXIT_OK:
            worst = code

    summary = _output_path(
        str(configured.with_name(f"{stem}__sweep_summary.csv")), args.out)
    write_summary_csv(entries, axis, summary)
    _log(f"sweep summary -> {summary}")
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravbell",
        description=(
            "Simulate decoherence of an entangled qubit pair whose local "
            "noise rates are scaled by gravitational redshift."
        ),
        epilog=(
            f"Physical constants: G = {G} m^3 kg^-1 s^-2, c = {C_LIGHT} m/s. "
            "Exit codes: 0 ok, 2 config error, 3 physics domain error, "
            "4 kernel-pole termination (partial output retained), "
            "5 invariant violation."
        ),
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario and write its table")
    p_run.add_argument("config", help="path to the scenario JSON file")
    p_run.add_argument("--out", help="directory overriding the configured "
                                     "output location")
    p_run.set_defaults(func=_cmd_run)

    p_val = sub.add_parser("validate", help="check a scenario file, report "
                                            "every violation")
    p_val.add_argument("config", help="path to the scenario JSON file")
    p_val.set_defaults(func=_cmd_validate)

    p_sweep = sub.add_parser("sweep", help="run the scenario once per value "
                                           "of one numeric axis")
    p_sweep.add_argument("config", help="path to the scenario JSON file")
    p_sweep.add_argument("--sweep", required=True, metavar="AXIS=V1,V2,...",
                         help="axis name and comma-separated values")
    p_sweep.add_argument("--out", help="directory overriding the configured "
                                       "output location")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        for issue in exc.issues:
            _log(f"config error: {issue}")
        return EXIT_CONFIG
    except PhysicsDomainError as exc:
        for issue in exc.issues:
            _log(f"physics domain error: {issue}")
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())
