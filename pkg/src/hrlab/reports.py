"""CSV / JSON-lines rendering shared by the CLI and the reproduce driver.

Floats use ``repr`` (shortest round-trip form), so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _json_cell(value: Any):
    if isinstance(value, Fraction):
        return format_cell(value)
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


@dataclass
class Report:
    """A table with a fixed column order and optional trailing summary."""

    columns: Sequence[str]
    rows: list[Sequence[Any]] = field(default_factory=list)
    config: dict[str, Any] | None = None
    summary: dict[str, Any] | None = None

    def add(self, *row: Any) -> None:
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} cells, expected {len(self.columns)}")
        self.rows.append(row)

    def config_line(self) -> str:
        return json.dumps(self.config, sort_keys=True, separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.config is not None:
            buf.write("# config " + self.config_line() + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(v) for v in row])
        if self.summary is not None:
            buf.write("# " + " ".join(f"{k}={format_cell(v)}" for k, v in self.summary.items()) + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        """One flat JSON object per line: config string, rows, then summary."""
        lines = []
        if self.config is not None:
            lines.append(json.dumps({"config": self.config_line()}))
        for row in self.rows:
            lines.append(json.dumps({c: _json_cell(v) for c, v in zip(self.columns, row)}))
        if self.summary is not None:
            lines.append(json.dumps({k: _json_cell(v) for k, v in self.summary.items()}))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "csv") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")
