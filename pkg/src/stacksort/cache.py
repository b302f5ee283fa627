"""Append-only JSON-lines cache of computed fertilities.

One record per line: ``{"perm":"3 1 4 2 5 6 7","fertility":"27"}``. Keys are
the space-separated text of the normalized word; fertility values travel as
decimal strings so arbitrarily large counts survive serialization. Appends
take an exclusive lock on the file, reads a shared one.
"""
from __future__ import annotations

import fcntl
import json
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CorruptRecordError
from .hooks import fertility
from .perms import normalize, parse_permutation


@dataclass(frozen=True)
class CacheRecord:
    perm: str  # canonical spaced text of a normalized word
    fertility: int


def cache_key(p: Sequence[int]) -> str:
    """Canonical cache key: the normalized word, space-separated."""
    return " ".join(str(x) for x in normalize(p))


def record_line(record: CacheRecord) -> str:
    return json.dumps({"perm": record.perm, "fertility": str(record.fertility)},
                      separators=(",", ":"))


def _parse_line(line: str, lineno: int) -> CacheRecord:
    try:
        obj = json.loads(line)
        perm_text = obj["perm"]
        value = int(obj["fertility"])
        word = parse_permutation(perm_text)
    except (ValueError, KeyError, TypeError) as exc:
        raise CorruptRecordError(f"line {lineno}: {exc}") from None
    if value < 0 or perm_text != cache_key(word):
        raise CorruptRecordError(f"line {lineno}: non-canonical record {line!r}")
    return CacheRecord(perm_text, value)


def read_records(path: str | os.PathLike) -> list[CacheRecord]:
    """All records in file order; missing file reads as empty."""
    if not os.path.exists(path):
        return []
    with open(path, encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_SH)
        lines = fh.read().splitlines()
    return [_parse_line(line, i) for i, line in enumerate(lines, start=1) if line]


def append_records(path: str | os.PathLike, records: Iterable[CacheRecord]) -> None:
    """Append records under an exclusive file lock."""
    payload = "".join(record_line(r) + "\n" for r in records)
    if not payload:
        return
    with open(path, "a", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        fh.write(payload)
        fh.flush()


def load(path: str | os.PathLike) -> dict[str, int]:
    """Collapse the record stream into a key -> fertility map.

    Rewriting a key is only legal with the same value; a conflicting
    duplicate means the file is corrupt.
    """
    table: dict[str, int] = {}
    for record in read_records(path):
        old = table.get(record.perm)
        if old is not None and old != record.fertility:
            raise CorruptRecordError(
                f"conflicting values for {record.perm!r}: {old} and {record.fertility}")
        table[record.perm] = record.fertility
    return table


def audit(path: str | os.PathLike) -> int:
    """Recompute every cached value with the engine; return the record count."""
    table = load(path)
    for text, value in table.items():
        got = fertility(parse_permutation(text))
        if got != value:
            raise CorruptRecordError(f"cache says {value} for {text!r}, engine says {got}")
    return len(table)
