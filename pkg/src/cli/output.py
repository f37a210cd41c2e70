"""
Writers for command results.

- json: envelope {command, parameters, summary, records}
- csv: one row per record via pandas
- plot-data: '#' header lines, whitespace-separated columns
"""

import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import numpy as np
import pandas as pd

from src.cli.registry import CommandResult
from src.errors import DomainError

FORMATS = ("json", "csv", "plot-data")


def _number(value: float, digits: int):
    if math.isinf(value) or math.isnan(value):
        return str(value)
    return float(f"{value:.{digits}g}")


def normalize(value: Any, digits: int = 15) -> Any:
    """JSON-ready copy with floats rounded to `digits` significant digits."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, Fraction)):
        return _number(float(value), digits)
    if isinstance(value, dict):
        return {str(k): normalize(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [normalize(v, digits) for v in value]
    return str(value)


def to_json(result: CommandResult, digits: int = 15) -> str:
    envelope = {
        "command": result.command,
        "parameters": normalize(result.parameters, digits),
        "summary": normalize(result.summary, digits),
        "records": normalize(result.records, digits),
    }
    return json.dumps(envelope, indent=2, ensure_ascii=False) + "\n"


def to_frame(result: CommandResult) -> pd.DataFrame:
    columns = result.column_names()
    rows = [{k: normalize(v) if isinstance(v, (list, tuple, dict)) else v for k, v in r.items()} for r in result.records]
    return pd.DataFrame(rows, columns=columns)


def to_csv(result: CommandResult, digits: int = 15) -> str:
    return to_frame(result).to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n")


def _cell(value: Any, digits: int) -> str:
    if isinstance(value, (float, np.floating, Fraction)):
        return f"{float(value):.{digits}g}"
    text = str(value)
    return text.replace(" ", "_") if text else "-"


def to_plot_data(result: CommandResult, digits: int = 15) -> str:
    columns = result.column_names()
    lines = [f"# {result.command}", "# " + " ".join(columns)]
    for record in result.records:
        lines.append(" ".join(_cell(record.get(c, ""), digits) for c in columns))
    return "\n".join(lines) + "\n"


def render(result: CommandResult, fmt: str = "json", digits: int = 15) -> str:
    if fmt not in FORMATS:
        raise DomainError(f"Unknown output format {fmt!r}, expected one of {FORMATS}")
    if fmt == "json":
        return to_json(result, digits)
    if fmt == "csv":
        return to_csv(result, digits)
    return to_plot_data(result, digits)


def write_output(text: str, output_path: Optional[str] = None) -> Optional[Path]:
    """
    Write rendered output to a file, or to stdout when no path is given.

    Returns:
        Path written, or None for stdout
    """
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(text)
    return path
