"""Command-line front end.

Subcommands::

    map to-bounded|to-unbounded VALUE     evaluate one of the two maps
    relative DEF LAW --body x,t[,T] --observer x,t[,T]
                                          relative velocity of a scenario
    scan convergence|light-cone ...       emit a table (csv/json/plain)
    verify                                run the seeded property suite

Exit codes: 0 success, 1 usage error, 2 domain/numeric error,
3 verification failure.  Tables go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from dataclasses import dataclass

from .core import (
    BoundedVelocity,
    LightSpeed,
    NumericPolicy,
    SaturationMode,
    SI_LIGHT_SPEED,
    UnboundedVelocity,
    VelocityError,
    representation_of,
    to_bounded,
    to_unbounded,
)
from .definitions import (
    ConvergenceRow,
    DefinitionTag,
    DegenerateFit,
    ObservationRecord,
    convergence_scan,
)
from .equivalence import (
    CompositionTag,
    Scenario,
    light_cone_divergence_scan,
    relative_velocity,
)
from .properties import run_property_suite

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAILED = 3

ENV_LIGHT_SPEED = "RS_VELOCITY_C"

# anything starting '-<digit>' or '-.<digit>' is a value, not an option
_NEGATIVE_VALUE = re.compile(r"^-\d|^-\.\d")


@dataclass(frozen=True)
class CliConfig:
    c: LightSpeed
    rel_tol: float
    output_format: str
    seed: int
    saturation: SaturationMode

    @property
    def policy(self) -> NumericPolicy:
        return NumericPolicy(rel_tol=self.rel_tol, abs_tol=1e-15 * self.c.c,
                             saturation_mode=self.saturation)

    def echo(self) -> dict:
        return {
            "c": self.c.c,
            "rel_tol": self.rel_tol,
            "format": self.output_format,
            "seed": self.seed,
            "saturation": self.saturation.value,
        }


def _parse_light_speed(text: str) -> float:
    if text.strip().lower() == "si":
        return SI_LIGHT_SPEED
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number or 'si', got {text!r}")
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"light speed must be positive and finite, got {text!r}")
    return value


def _parse_positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}")
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive value, got {text!r}")
    return value


def _parse_seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {text!r}")
    return value


def parse_observation(text: str) -> ObservationRecord:
    """Parse the positional ``x,t[,T]`` observation syntax."""
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise ValueError(f"observation must be 'x,t' or 'x,t,T', got {text!r}")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"observation fields must be real numbers, got {text!r}")
    return ObservationRecord(x=numbers[0], t=numbers[1],
                             T=numbers[2] if len(numbers) == 3 else None)


def parse_grid(text: str) -> list[float]:
    """Expand ``start:stop:logN`` into N log-spaced points inclusive."""
    parts = text.split(":")
    if len(parts) != 3 or not parts[2].startswith("log"):
        raise ValueError(f"grid must look like 'start:stop:logN', got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2][3:])
    except ValueError:
        raise ValueError(f"grid must look like 'start:stop:logN', got {text!r}")
    if not (0.0 < start < stop) or count < 2:
        raise ValueError(f"grid needs 0 < start < stop and at least 2 points, got {text!r}")
    # interpolate in log10 so decade grids come out on exact decades
    lo, hi = math.log10(start), math.log10(stop)
    points = [10.0 ** (lo + (hi - lo) * i / (count - 1)) for i in range(count)]
    points[0], points[-1] = start, stop
    return points


def parse_epsilons(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"epsilons must be comma-separated reals, got {text!r}")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the exit-code contract reserves
    # 2 for domain errors, so remap usage problems to 1
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_config_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the flags are accepted both before and after the subcommand; the
    # subparser copies suppress their defaults so they never clobber a
    # value already parsed by the main parser
    def dflt(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--c", default=dflt(None),
                        help="light speed: a positive real or 'si' "
                             f"(default: ${ENV_LIGHT_SPEED} or 1.0)")
    parser.add_argument("--tol", type=_parse_positive, default=dflt(1e-12),
                        help="relative tolerance (default 1e-12)")
    parser.add_argument("--format", choices=("csv", "json", "plain"), default=dflt("csv"),
                        help="table output format (default csv)")
    parser.add_argument("--seed", type=_parse_seed, default=dflt(42),
                        help="seed for the property suite (default 42)")
    parser.add_argument("--saturation", choices=("clamp", "error"), default=dflt("clamp"),
                        help="what to do when a bounded result rounds onto c")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_config_flags(common, suppress=True)

    parser = _Parser(prog="rs-velocity",
                     description="Bounded/unbounded velocity maps, composition laws, "
                                 "and the equivalence verification suite.")
    _add_config_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_map = sub.add_parser("map", parents=[common],
                           help="evaluate one of the two representation maps")
    p_map.add_argument("direction", choices=("to-bounded", "to-unbounded"))
    p_map.add_argument("value", type=float)

    p_rel = sub.add_parser("relative", parents=[common],
                           help="relative velocity of body against observer")
    p_rel.add_argument("definition",
                       choices=tuple(tag.value for tag in DefinitionTag))
    p_rel.add_argument("law", choices=tuple(tag.value for tag in CompositionTag))
    p_rel.add_argument("--body", required=True, metavar="x,t[,T]")
    p_rel.add_argument("--observer", required=True, metavar="x,t[,T]")
    # let observation triples with a leading minus ('-1,2') parse as values
    p_rel._negative_number_matcher = _NEGATIVE_VALUE

    p_scan = sub.add_parser("scan", parents=[common], help="emit a scan table")
    p_scan.add_argument("kind", choices=("convergence", "light-cone"))
    p_scan.add_argument("--def", dest="definition", choices=("def2", "def3"),
                        help="finite-T definition for convergence scans")
    p_scan.add_argument("--x", type=float, help="displacement (convergence)")
    p_scan.add_argument("--t", type=_parse_positive, required=True, help="duration")
    p_scan.add_argument("--T-grid", dest="T_grid", metavar="start:stop:logN",
                        help="regularization grid (convergence)")
    p_scan.add_argument("--eps", metavar="e1,e2,...",
                        help="descending light-cone offsets (light-cone)")

    sub.add_parser("verify", parents=[common],
                   help="run the seeded property suite")
    return parser


def _resolve_config(ns: argparse.Namespace) -> CliConfig:
    text = ns.c if ns.c is not None else os.environ.get(ENV_LIGHT_SPEED, "1.0")
    try:
        c_value = _parse_light_speed(text)
    except argparse.ArgumentTypeError as exc:
        raise ValueError(str(exc))
    return CliConfig(
        c=LightSpeed(c_value),
        rel_tol=ns.tol,
        output_format=ns.format,
        seed=ns.seed,
        saturation=SaturationMode(ns.saturation),
    )


def _fmt(value: float) -> str:
    # repr of a float is its shortest round-trip form (<= 17 significant digits)
    return repr(float(value))


def _csv_writer():
    return csv.writer(sys.stdout)  # RFC-4180 line endings


def _cell(value) -> str:
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def _emit_rows(config: CliConfig, header: list[str], rows: list[list],
               summary: dict, plain_title: str) -> None:
    if config.output_format == "csv":
        writer = _csv_writer()
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(cell) for cell in row])
        for key, value in summary.items():
            print(f"# {key}={_cell(value)}", end="\r\n")
    elif config.output_format == "json":
        payload = {
            "config": config.echo(),
            "rows": [dict(zip(header, row)) for row in rows],
        }
        payload.update(summary)
        print(json.dumps(payload, indent=2))
    else:
        print(plain_title)
        print("  ".join(header))
        for row in rows:
            print("  ".join(_cell(cell) for cell in row))
        for key, value in summary.items():
            print(f"{key} = {_cell(value)}")


def cmd_map(ns: argparse.Namespace, config: CliConfig) -> int:
    if ns.direction == "to-unbounded":
        result = to_unbounded(BoundedVelocity(ns.value, config.c), config.c)
    else:
        result = to_bounded(UnboundedVelocity(ns.value), config.c, config.policy)
    print(_fmt(result.value))
    return EXIT_OK


def cmd_relative(ns: argparse.Namespace, config: CliConfig) -> int:
    scenario = Scenario(
        obs_body=parse_observation(ns.body),
        obs_observer=parse_observation(ns.observer),
        definition=DefinitionTag.parse(ns.definition),
        law=CompositionTag.parse(ns.law),
    )
    result = relative_velocity(scenario, config.c, config.policy)
    print(f"{_fmt(result.value)} {representation_of(result)}")
    return EXIT_OK


def _convergence_rows(rows: tuple[ConvergenceRow, ...]) -> list[list]:
    return [[row.T, row.value, row.abs_error] for row in rows]


def cmd_scan(ns: argparse.Namespace, config: CliConfig) -> int:
    if ns.kind == "convergence":
        if ns.definition is None or ns.x is None or ns.T_grid is None:
            raise ValueError("convergence scans need --def, --x and --T-grid")
        obs = ObservationRecord(x=ns.x, t=ns.t)
        grid = parse_grid(ns.T_grid)
        header = ["T", "value", "abs_error"]
        try:
            scan = convergence_scan(DefinitionTag.parse(ns.definition), obs,
                                    config.c, grid, config.policy)
        except DegenerateFit as exc:
            _emit_rows(config, header, _convergence_rows(exc.rows),
                       {"order": None} if config.output_format == "json" else {},
                       "convergence scan (degenerate)")
            print(f"DegenerateFit: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit_rows(config, header, _convergence_rows(scan.rows),
                   {"fitted_order" if config.output_format == "csv" else "order": scan.order},
                   "convergence scan")
        return EXIT_OK

    if ns.eps is None:
        raise ValueError("light-cone scans need --eps")
    scan = light_cone_divergence_scan(ns.t, config.c, parse_epsilons(ns.eps),
                                      config.policy)
    rows = [[row.epsilon, row.x, row.def2_limit, row.def3_limit] for row in scan.rows]
    _emit_rows(config, ["epsilon", "x", "def2_limit", "def3_limit"], rows,
               {}, "light-cone scan")
    return EXIT_OK


def cmd_verify(ns: argparse.Namespace, config: CliConfig) -> int:
    results = run_property_suite(config.c, config.rel_tol, config.seed,
                                 config.policy)
    all_pass = all(r.passed for r in results)
    if config.output_format == "csv":
        writer = _csv_writer()
        writer.writerow(["property", "cases", "max_residual", "pass"])
        for r in results:
            writer.writerow([r.name, str(r.cases), _fmt(r.max_residual),
                             "true" if r.passed else "false"])
    elif config.output_format == "json":
        print(json.dumps({
            "config": config.echo(),
            "rows": [{"property": r.name, "cases": r.cases,
                      "max_residual": r.max_residual, "pass": r.passed}
                     for r in results],
            "all_pass": all_pass,
        }, indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<24} cases={r.cases}  max_residual={_fmt(r.max_residual)}")
        print("all properties pass" if all_pass else "some properties FAILED")
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


_COMMANDS = {
    "map": cmd_map,
    "relative": cmd_relative,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _resolve_config(ns)
        return _COMMANDS[ns.command](ns, config)
    except VelocityError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
