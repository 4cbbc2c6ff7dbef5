"""
Optional on-disk cache for expensive tables.

Active only when the environment variable `HECKEZ_CACHE_DIR` names a
directory. Entries are JSON documents carrying `schema_version`; an entry with
any other version, or one that fails to parse, is ignored and recomputed.
Writes go to a temporary file in the same directory and are renamed into
place, so readers never see a partial entry.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .ratfun import RatFun

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENV_VAR = "HECKEZ_CACHE_DIR"


def cache_dir() -> Path | None:
    root = os.environ.get(ENV_VAR)
    if not root:
        return None
    path = Path(root)
    path.mkdir(parents=True, exist_ok=True)
    return path


def load(name: str):
    root = cache_dir()
    if root is None:
        return None
    path = root / f"{name}.json"
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return None
    if doc.get("schema_version") != SCHEMA_VERSION:
        return None
    return doc.get("data")


def store(name: str, data) -> None:
    root = cache_dir()
    if root is None:
        return
    doc = {"schema_version": SCHEMA_VERSION, "data": data}
    fd, tmp = tempfile.mkstemp(prefix=f".{name}.", suffix=".tmp", dir=root)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, root / f"{name}.json")
    except OSError as exc:
        log.warning("could not write cache entry %s: %s", name, exc)
        try:
            os.unlink(tmp)
        except OSError:
            pass


def load_class_polynomials(n: int):
    from .center import ClassPolyTable

    data = load(f"classpoly-{n}")
    if data is None:
        return None
    try:
        table = {}
        for row in data:
            table[tuple(row["w"])] = {tuple(t["lambda"]): RatFun.parse(t["f"])
                                      for t in row["f"]}
    except (KeyError, TypeError, ValueError):
        return None
    return ClassPolyTable(n, table)


def store_class_polynomials(table) -> None:
    if cache_dir() is None:
        return
    data = [{"w": list(w),
             "f": [{"lambda": list(lam), "f": str(c)} for lam, c in sorted(row.items())]}
            for w, row in sorted(table.table.items())]
    store(f"classpoly-{table.n}", data)
