"""JSON Lines reading and atomic file writing shared by the CLI."""
from __future__ import annotations

import json
import os
import tempfile

from .errors import SchemaError


def read_records(path: str) -> list[dict]:
    """Read one JSON object per nonempty line; malformed lines are errors."""
    records = []
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                doc = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"{path}:{line_number}: invalid JSON: {exc}") from exc
            if not isinstance(doc, dict):
                raise SchemaError(f"{path}:{line_number}: expected a JSON object")
            records.append(doc)
    return records


def write_text_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so failures leave no partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def write_records_atomic(path: str, records: list[dict]) -> None:
    lines = [json.dumps(record, ensure_ascii=False) for record in records]
    write_text_atomic(path, "\n".join(lines) + ("\n" if lines else ""))


def write_json_atomic(path: str, document) -> None:
    write_text_atomic(path, json.dumps(document, ensure_ascii=False, indent=2) + "\n")
