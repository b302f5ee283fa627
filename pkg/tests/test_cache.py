import pytest

from stacksort import (
    CacheRecord,
    CorruptRecordError,
    append_records,
    audit,
    cache_key,
    load,
    read_records,
)


def test_cache_key_normalizes():
    assert cache_key((3, 1, 4, 2, 5, 6, 7)) == "3 1 4 2 5 6 7"
    assert cache_key((13, 2, 12, 15, 9, 10, 16)) == "5 1 4 6 2 3 7"


def test_round_trip_is_byte_identical(tmp_path):
    path = tmp_path / "cache.jsonl"
    records = [CacheRecord("3 1 4 2 5 6 7", 27), CacheRecord("1 2", 2)]
    append_records(path, records)
    first = path.read_bytes()
    assert read_records(path) == records
    copy = tmp_path / "copy.jsonl"
    append_records(copy, read_records(path))
    assert copy.read_bytes() == first


def test_missing_file_reads_empty(tmp_path):
    assert read_records(tmp_path / "absent.jsonl") == []
    assert load(tmp_path / "absent.jsonl") == {}


def test_append_is_append_only(tmp_path):
    path = tmp_path / "cache.jsonl"
    append_records(path, [CacheRecord("1 2", 2)])
    append_records(path, [CacheRecord("2 1", 0)])
    assert load(path) == {"1 2": 2, "2 1": 0}


def test_duplicate_with_equal_value_is_fine(tmp_path):
    path = tmp_path / "cache.jsonl"
    append_records(path, [CacheRecord("1 2", 2), CacheRecord("1 2", 2)])
    assert load(path) == {"1 2": 2}


def test_conflicting_duplicate_is_corrupt(tmp_path):
    path = tmp_path / "cache.jsonl"
    append_records(path, [CacheRecord("1 2", 2), CacheRecord("1 2", 3)])
    with pytest.raises(CorruptRecordError):
        load(path)


def test_unparseable_line_is_corrupt(tmp_path):
    path = tmp_path / "cache.jsonl"
    path.write_text('{"perm":"1 2","fertility":"2"}\nnot json\n')
    with pytest.raises(CorruptRecordError):
        read_records(path)


def test_non_canonical_key_is_corrupt(tmp_path):
    path = tmp_path / "cache.jsonl"
    path.write_text('{"perm":"2 4","fertility":"2"}\n')  # not normalized
    with pytest.raises(CorruptRecordError):
        read_records(path)


def test_audit_accepts_true_values(tmp_path):
    path = tmp_path / "cache.jsonl"
    append_records(path, [CacheRecord("3 1 4 2 5 6 7", 27), CacheRecord("2 1", 0)])
    assert audit(path) == 2


def test_audit_detects_a_wrong_value(tmp_path):
    path = tmp_path / "cache.jsonl"
    append_records(path, [CacheRecord("3 1 4 2 5 6 7", 26)])
    with pytest.raises(CorruptRecordError):
        audit(path)
