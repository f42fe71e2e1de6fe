"""Reading and validating the seeded-ising CSV schemas.

Values are kept exactly as parsed; the renderer plots them as-is and the
probe mode re-emits them, so nothing here may aggregate or rebin.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path


class SchemaError(ValueError):
    pass


@dataclass
class Table:
    path: Path
    meta: dict[str, str]
    columns: list[str]
    rows: list[list[str]]

    def floats(self, column: str) -> list[float]:
        idx = self._index(column)
        try:
            return [float(r[idx]) for r in self.rows]
        except ValueError as exc:
            raise SchemaError(f"{self.path}: column {column!r} is not numeric: {exc}") from exc

    def strings(self, column: str) -> list[str]:
        idx = self._index(column)
        return [r[idx] for r in self.rows]

    def _index(self, column: str) -> int:
        if column not in self.columns:
            raise SchemaError(f"{self.path}: missing column {column!r} (have {self.columns})")
        return self.columns.index(column)

    def require(self, *columns: str) -> None:
        for c in columns:
            self._index(c)


def read_table(path) -> Table:
    path = Path(path)
    meta: dict[str, str] = {}
    lines = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            body = line[1:].strip()
            if " = " in body:
                key, value = body.split(" = ", 1)
                meta[key] = value
            continue
        if line:
            lines.append(line)
    rows = list(csv.reader(lines))
    if len(rows) < 2:
        raise SchemaError(f"{path}: expected a header row and at least one data row")
    return Table(path=path, meta=meta, columns=rows[0], rows=rows[1:])
