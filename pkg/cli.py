"""ranklab: exact rank tables, verification suites and asymptotic scans.

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 I/O error.
"""

import os.path as osp
import pathlib
import sys
from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter
from dataclasses import dataclass, field
from typing import Any

from cfg_loader import load, make_parser, merge_overrides
from ranklab import __version__
from ranklab.errors import DomainError, OracleLimitError, PrecisionError, RanklabError, UsageError
from ranklab.ranks import partition_numbers, rank_mod_table, rank_table
from ranklab.reports import dumps, jsonable, write_csv
from suites import make_suite
from suites.utils import HiddenPrints, Profiler


EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

TABLES = ("rank", "mod", "p")

# suite name -> {cli flag: config key}
VERIFY_FLAGS = {
    "lemmas": {"max_n": "N_max"},
    "monotonicity": {"max_n": "N_max", "max_m": "m_max"},
    "identities": {"t": "t", "max_n": "N_max", "tol": "tol"},
    "transforms": {"samples": "samples", "seed": "seed", "tol": "tol"},
    "bound": {"samples": "samples", "seed": "seed"},
}
SCAN_FLAGS = {
    "equidistribution": {"t": "t", "n": "n"},
    "a3": {"u": "u", "eps": "eps"},
    "phi": {"eps": "eps"},
    "convexity": {"t": "t", "r": "r", "cap": "n_cap"},
    "bessenrodt-ono": {"cap": "n_cap"},
}
PARAMS = ("max_n", "max_m", "t", "r", "n", "u", "eps", "cap", "tol", "samples", "seed")


@dataclass
class RunConfig:
    command: str
    subcommand: str
    params: dict[str, Any] = field(default_factory=dict)
    fmt: str = "json"
    output: str | None = None
    digits: int | None = None
    n_jobs: int | None = None
    quiet: bool = False
    profile: bool = False

    def validate(self) -> None:
        """checks the parameters against the target operation before dispatch"""
        p = self.params
        if self.command == "table":
            if p.get("max_n") is None or p["max_n"] < 0:
                raise UsageError("table needs --max-n >= 0")
            if self.subcommand == "mod" and (p.get("t") is None or min(_listed(p["t"])) < 1):
                raise UsageError("table mod needs --t >= 1")
            if self.fmt not in ("csv", "json"):
                raise UsageError(f"unknown format '{self.fmt}'")
        else:
            allowed = (VERIFY_FLAGS if self.command == "verify" else SCAN_FLAGS)[self.subcommand]
            extra = [k for k, v in p.items() if v is not None and k not in allowed]
            if extra:
                flags = ", ".join("--" + k.replace("_", "-") for k in extra)
                raise UsageError(f"{self.command} {self.subcommand} does not take {flags}")
        for key in ("max_n", "max_m", "cap", "samples"):
            if p.get(key) is not None and p[key] < 0:
                raise UsageError(f"--{key.replace('_', '-')} must be non-negative")
        if p.get("t") is not None and min(_listed(p["t"])) < 1:
            raise UsageError("--t must be >= 1")
        if p.get("r") is not None and p.get("t") is not None:
            if not all(0 <= r < t for r in _listed(p["r"]) for t in _listed(p["t"])):
                raise UsageError("--r must lie in 0..t-1")
        if p.get("seed") is not None and not 0 <= p["seed"] < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if p.get("tol") is not None and not p["tol"] > 0:
            raise UsageError("--tol must be positive")
        if self.digits is not None and self.digits < 16:
            raise UsageError("--digits must be >= 16")

    def overrides(self) -> dict[str, Any]:
        """config overrides for verify/scan runs; None never overrides"""
        section = "verify" if self.command == "verify" else "scan"
        flags = (VERIFY_FLAGS if self.command == "verify" else SCAN_FLAGS)[self.subcommand]
        suite = {flags[k]: v for k, v in self.params.items() if k in flags}
        return {
            section: {self.subcommand: suite | {"output": self.output}},
            "precision": {"digits": self.digits},
            "parallel": {"n_jobs": self.n_jobs},
            "quiet": self.quiet or None,
        }


def main(argv: list[str] | None = None) -> int:
    try:
        args = make_cli_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version and 2 on errors
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    run = RunConfig(
        command=args.command,
        subcommand=args.subcommand,
        params={k: getattr(args, k, None) for k in PARAMS},
        fmt=args.fmt,
        output=args.output,
        digits=args.digits,
        n_jobs=args.n_jobs,
        quiet=args.quiet,
        profile=args.profile,
    )

    try:
        run.validate()
        with HiddenPrints(run.quiet), Profiler(run.profile):
            if run.command == "table":
                return cmd_table(run, load(args.filename))
            cfg = merge_overrides(load(args.filename), run.overrides())
            if run.command == "verify":
                return cmd_verify(run, cfg)
            return cmd_scan(run, cfg)
    except (UsageError, DomainError, PrecisionError, OracleLimitError) as e:
        print(f"error: {e}", file=sys.stderr, flush=True)
        return EXIT_USAGE
    except AssertionError as e:
        # registry asserts on a malformed config
        print(f"error: {e}", file=sys.stderr, flush=True)
        return EXIT_USAGE
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr, flush=True)
        return EXIT_IO
    except RanklabError as e:
        print(f"check failed: {e}", file=sys.stderr, flush=True)
        return EXIT_FAIL


def cmd_table(run: RunConfig, cfg: dict[str, Any]) -> int:
    N = run.params["max_n"]
    kind = run.subcommand
    print(f"Building {kind} table to n={N}.", flush=True)
    if kind == "rank":
        table = rank_table(N)
        header, rows, params = table.CSV_HEADER, table.csv_rows(), {"max_n": N}
    elif kind == "mod":
        t = _listed(run.params["t"])[0]
        table = rank_mod_table(t, N)
        header, rows, params = table.CSV_HEADER, table.csv_rows(), {"max_n": N, "t": t}
    else:
        header, rows, params = ("n", "p"), list(enumerate(partition_numbers(N))), {"max_n": N}

    output = run.output or osp.join(cfg["output"]["artifacts_dir"], f"table_{kind}.{run.fmt}")
    pathlib.Path(osp.dirname(output) or ".").mkdir(parents=True, exist_ok=True)
    if run.fmt == "csv":
        write_csv(list(header), rows, output)
    else:
        document = {
            "version": __version__,
            "table": kind,
            "params": params,
            "columns": list(header),
            "rows": jsonable(rows),
        }
        with open(output, "w", encoding="utf-8", newline="\n") as fp:
            fp.write(dumps(document))
    print(f"Table written to {output}", flush=True)
    return EXIT_PASS


def cmd_verify(run: RunConfig, cfg: dict[str, Any]) -> int:
    return EXIT_PASS if make_suite(cfg, "verify", run.subcommand).run() else EXIT_FAIL


def cmd_scan(run: RunConfig, cfg: dict[str, Any]) -> int:
    return EXIT_PASS if make_suite(cfg, "scan", run.subcommand).run() else EXIT_FAIL


def make_cli_parser() -> ArgumentParser:
    common = make_parser(ArgumentParser(add_help=False))
    common.add_argument("--digits", type=int, help="working precision in decimal digits")
    common.add_argument("--n-jobs", dest="n_jobs", type=int, help="parallel workers")
    common.add_argument("--quiet", action="store_true", help="silence progress output")
    common.add_argument("--profile", action="store_true", help="profile the run")
    common.add_argument("--output", help="artifact path (default: under artifacts_dir)")
    common.add_argument("--format", dest="fmt", choices=["csv", "json"], default="json")

    parser = ArgumentParser(
        prog="ranklab", description=__doc__, formatter_class=ArgumentDefaultsHelpFormatter
    )
    parser.add_argument("--version", action="version", version=f"ranklab {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help: str) -> ArgumentParser:
        return commands.add_parser(
            name, help=help, parents=[common], formatter_class=ArgumentDefaultsHelpFormatter
        )

    table = add_command("table", "exact tables")
    table.add_argument("subcommand", choices=TABLES)
    table.add_argument("--max-n", dest="max_n", type=int, required=True)
    table.add_argument("--t", type=_int_list)

    verify = add_command("verify", "verification suites")
    verify.add_argument("subcommand", choices=list(VERIFY_FLAGS))
    verify.add_argument("--max-n", dest="max_n", type=int)
    verify.add_argument("--max-m", dest="max_m", type=int)
    verify.add_argument("--t", type=_int_list)
    verify.add_argument("--tol", type=float)
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int)

    scan = add_command("scan", "asymptotic scans")
    scan.add_argument("subcommand", choices=list(SCAN_FLAGS))
    scan.add_argument("--t", type=_int_list)
    scan.add_argument("--r", type=_int_list)
    scan.add_argument("--n", type=_int_list)
    scan.add_argument("--u", type=_float_list)
    scan.add_argument("--eps", type=_float_list)
    scan.add_argument("--cap", type=int)

    return parser


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",")]


def _listed(value) -> list:
    return value if isinstance(value, list) else [value]


if __name__ == "__main__":
    sys.exit(main())
