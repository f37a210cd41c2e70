"""
Command-line entry point.

Usage:
    teich spectrum --point 3,3,3 --max-trace 300 --format json
    python -m src.cli markoff verify --max 1000000
"""

import argparse
import json
import sys
import traceback
from dataclasses import dataclass
from datetime import datetime
from typing import List, Optional

from dotenv import load_dotenv

import src.cli.commands  # noqa: F401  registers the subcommands
from src.cli.output import FORMATS, render, write_output
from src.cli.registry import CommandResult, get_registry
from src.config.loader import load_config, resolve_jobs, section
from src.errors import DomainError, SearchFailure

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_DOMAIN = 2
EXIT_SEARCH = 3


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    output_format: str
    output_path: Optional[str]
    jobs: int
    digits: int
    log_file: Optional[str]

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise DomainError(f"Unknown output format {self.output_format!r}, expected one of {FORMATS}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be at least 1, got {self.jobs}")
        if not 1 <= self.digits <= 17:
            raise DomainError(f"significant_digits must be in 1..17, got {self.digits}")

    @classmethod
    def from_args(cls, args: argparse.Namespace, config: dict) -> "RunConfig":
        output = section(config, "output")
        return cls(
            subcommand=args.command,
            output_format=args.format or output.get("format", "json"),
            output_path=args.output,
            jobs=resolve_jobs(args.jobs, config),
            digits=int(output.get("significant_digits", 15)),
            log_file=args.log_file or section(config, "run").get("log_file"),
        )


def common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default: json)")
    common.add_argument("--output", type=str, default=None, help="Output file (default: stdout)")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes (fallback: $TEICH_JOBS)")
    common.add_argument("--config", type=str, default=None, help="YAML config (fallback: $TEICH_CONFIG)")
    common.add_argument("--log-file", type=str, default=None, help="Append a JSON line per run to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teich",
        description="Length spectra, equal-length loci and Markoff triples of one-holed tori",
    )
    get_registry().build_parser(parser, common_arguments())
    return parser


def append_run_log(path: str, argv: List[str], command: str, exit_code: int, result: Optional[CommandResult]):
    entry = {
        "timestamp": datetime.now().isoformat(),
        "command": command,
        "argv": argv,
        "exit_code": exit_code,
        "records": len(result.records) if result is not None else 0,
    }
    with open(path, "a") as f:
        f.write(json.dumps(entry) + "\n")
        f.flush()


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run one command and write its output.

    Returns:
        Exit code: 0 success, 2 domain error, 3 search failure, 1 anything else
    """
    load_dotenv()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)

    result = None
    log_file = args.log_file
    try:
        config = load_config(args.config)
        run_config = RunConfig.from_args(args, config)
        log_file = run_config.log_file
        command = get_registry().create(run_config.subcommand, config=config, jobs=run_config.jobs)
        result = command.execute(args)
        write_output(render(result, run_config.output_format, run_config.digits), run_config.output_path)
        exit_code = EXIT_OK
    except SearchFailure as e:
        print(f"❌ Search failed: {e}", file=sys.stderr)
        exit_code = EXIT_SEARCH
    except (DomainError, ValueError) as e:
        print(f"❌ {e}", file=sys.stderr)
        exit_code = EXIT_DOMAIN
    except Exception:
        traceback.print_exc()
        exit_code = EXIT_UNEXPECTED

    if log_file:
        append_run_log(log_file, argv, args.command, exit_code, result)
    return exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
