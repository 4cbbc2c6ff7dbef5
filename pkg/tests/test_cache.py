import json

from heckez import cache
from heckez.center import class_polynomials


def test_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    table = class_polynomials(4)
    cache.store_class_polynomials(table)
    loaded = cache.load_class_polynomials(4)
    assert loaded.table == table.table
    doc = json.loads((tmp_path / "classpoly-4.json").read_text())
    assert doc["schema_version"] == cache.SCHEMA_VERSION


def test_version_mismatch_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    (tmp_path / "classpoly-3.json").write_text(json.dumps({"schema_version": -1, "data": []}))
    assert cache.load_class_polynomials(3) is None


def test_corrupt_entry_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    (tmp_path / "classpoly-3.json").write_text("{not json")
    assert cache.load_class_polynomials(3) is None
    (tmp_path / "classpoly-3.json").write_text(json.dumps(
        {"schema_version": cache.SCHEMA_VERSION, "data": [{"w": [1]}]}))
    assert cache.load_class_polynomials(3) is None


def test_disabled_without_env(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.cache_dir() is None
    assert cache.load("anything") is None
    cache.store("anything", {"x": 1})


def test_no_temporary_files_left(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    cache.store("x", [1, 2])
    assert [p.name for p in tmp_path.iterdir()] == ["x.json"]
