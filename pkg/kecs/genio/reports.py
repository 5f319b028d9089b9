"""
Line-delimited JSON report streams (``.report.jsonl``): one JSON object
per line, written with sorted keys so equal runs give identical files.
"""
from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import IO, Any

from kecs.exceptions import GenioError
from kecs.genio import messages


def dump_record(record: Mapping[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(", ", ": "))


def write_reports(target: str | Path | IO[str], records: Iterable[Mapping[str, Any]]) -> int:
    """
    Writes one line per record to a path or an open text stream.

    Returns
    -------
    int
        Number of records written
    """
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as stream:
            return write_reports(stream, records)
    count = 0
    for record in records:
        target.write(dump_record(record) + "\n")
        count += 1
    return count


def read_reports(path: str | Path) -> list[dict[str, Any]]:
    """
    Reads every record of a report file, skipping blank lines.

    Raises
    ------
    GenioError
        Some line is not a JSON object
    """
    records = []
    with open(path, encoding="utf-8") as stream:
        for number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                record = None
            if not isinstance(record, dict):
                message = messages.REPORT_LINE.format(path=path, line=number)
                raise GenioError(message)
            records.append(record)
    return records
