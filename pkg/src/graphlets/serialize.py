"""JSON/CSV serialization helpers.

Counts can exceed 2^53, which JavaScript JSON consumers silently mangle, so
any integer above that threshold is emitted as a decimal string. Readers
accept both forms.
"""

from __future__ import annotations

import csv
import io

JSON_SAFE_MAX = 2 ** 53


def json_int(value: int):
    """Ints above 2^53 become decimal strings; smaller ones stay numbers."""
    return str(value) if abs(value) > JSON_SAFE_MAX else value


def parse_json_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError("expected integer, got bool")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value)
    raise ValueError(f"expected integer or decimal string, got {type(value).__name__}")


def counts_to_json(counts: dict[str, int]) -> dict:
    return {k: json_int(v) for k, v in counts.items()}


def counts_from_json(obj: dict) -> dict[str, int]:
    return {k: parse_json_int(v) for k, v in obj.items()}


def write_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
