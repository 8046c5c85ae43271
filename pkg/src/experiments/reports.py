"""
CSV / JSON report files for census and counterexample records.

CSV layout (comma separated, '.' decimals, LF line endings):
    # spectree-<kind> v1        versioned schema comment
    col_a,col_b,...             header row
    ...                         one row per record

JSON layout: a list with one object per record.

Records are pydantic models that declare `report_kind` and `csv_columns`
and implement `to_csv_row` / `from_csv_row`; output contains no timestamps,
so the same records always produce byte-identical files.
"""

import csv
import io
import json
import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, ClassVar, Protocol

from src.core.errors import SpectreeError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class ReportFormatError(SpectreeError):
    """A report file that does not match its declared schema."""


class ReportRecord(Protocol):
    report_kind: ClassVar[str]
    csv_columns: ClassVar[tuple[str, ...]]

    def to_csv_row(self) -> list[str]: ...

    def model_dump(self, **kwargs: Any) -> dict[str, Any]: ...


@dataclass
class ReportStats:
    """Statistics from a report write."""

    records_count: int
    report_path: str
    report_size_bytes: int
    report_time_seconds: float


def schema_line(kind: str) -> str:
    return f"# spectree-{kind} v{SCHEMA_VERSION}"


def render_csv(records: Sequence[ReportRecord], model: type[ReportRecord]) -> str:
    """CSV text for a homogeneous list of records."""
    buffer = io.StringIO()
    buffer.write(schema_line(model.report_kind) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(model.csv_columns)
    for record in records:
        writer.writerow(record.to_csv_row())
    return buffer.getvalue()


def render_json(records: Sequence[ReportRecord]) -> str:
    return json.dumps([record.model_dump(mode="json") for record in records], indent=2) + "\n"


def _write(text: str, output_path: Path | str, count: int) -> ReportStats:
    start = time.perf_counter()
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    stats = ReportStats(
        records_count=count,
        report_path=str(output_path),
        report_size_bytes=output_path.stat().st_size,
        report_time_seconds=time.perf_counter() - start,
    )
    logger.info(f"Wrote {count} records to {output_path}")
    return stats


def write_csv(
    records: Sequence[ReportRecord], model: type[ReportRecord], output_path: Path | str
) -> ReportStats:
    return _write(render_csv(records, model), output_path, len(records))


def write_json(records: Sequence[ReportRecord], output_path: Path | str) -> ReportStats:
    return _write(render_json(records), output_path, len(records))


def parse_csv(text: str, model: Any) -> list[Any]:
    """
    Re-parse CSV text produced by render_csv into records of `model`.

    Raises:
        ReportFormatError: On a missing or mismatched schema line or header
    """
    lines = text.splitlines()
    expected = schema_line(model.report_kind)
    if not lines or lines[0].strip() != expected:
        found = lines[0] if lines else "<empty>"
        raise ReportFormatError(f"expected schema line {expected!r}, found {found!r}")

    reader = csv.reader(lines[1:])
    header = next(reader, None)
    if header is None or tuple(header) != tuple(model.csv_columns):
        raise ReportFormatError(f"unexpected CSV header {header!r}")

    records = []
    for lineno, row in enumerate(reader, start=3):
        if len(row) != len(header):
            raise ReportFormatError(f"line {lineno}: expected {len(header)} cells, got {len(row)}")
        records.append(model.from_csv_row(dict(zip(header, row))))
    return records


def read_csv(path: Path | str, model: Any) -> list[Any]:
    return parse_csv(Path(path).read_text(encoding="utf-8"), model)
