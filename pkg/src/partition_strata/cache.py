"""On-disk cache of per-n local dimensions.

One JSON file per (n, schema version). Entries carry a SHA-256 digest of
their payload; anything that fails to validate is treated as absent.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from .partitions import enumerate_partitions, partition_count
from .strata import Stratification

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CacheEntry:
    n: int
    schema: int
    dims: tuple[int, ...]
    cross_checked: bool
    digest: str


def _digest(n: int, dims, cross_checked: bool) -> str:
    payload = json.dumps([SCHEMA_VERSION, n, list(dims), cross_checked], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"dims-n{n}-v{SCHEMA_VERSION}.json"


def cache_store(cache_dir, s: Stratification, cross_checked: bool = False) -> Path:
    path = cache_path(cache_dir, s.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "n": s.n,
        "schema": SCHEMA_VERSION,
        "cross_checked": cross_checked,
        "dims": list(s.dims),
        "digest": _digest(s.n, s.dims, cross_checked),
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, separators=(",", ":")))
    os.replace(tmp, path)
    return path


def cache_load_entry(cache_dir, n: int) -> CacheEntry | None:
    path = cache_path(cache_dir, n)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
        entry = CacheEntry(
            n=int(doc["n"]),
            schema=int(doc["schema"]),
            dims=tuple(int(d) for d in doc["dims"]),
            cross_checked=bool(doc["cross_checked"]),
            digest=str(doc["digest"]),
        )
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unreadable cache file %s: %s", path, exc)
        return None
    if entry.schema != SCHEMA_VERSION or entry.n != n:
        log.warning("ignoring cache file %s: wrong schema or n", path)
        return None
    if entry.digest != _digest(n, entry.dims, entry.cross_checked) or len(entry.dims) != partition_count(n):
        log.warning("ignoring cache file %s: digest mismatch", path)
        return None
    return entry


def cache_load(cache_dir, n: int, require_cross_check: bool = False) -> Stratification | None:
    entry = cache_load_entry(cache_dir, n)
    if entry is None or (require_cross_check and not entry.cross_checked):
        return None
    return Stratification.from_dims(n, enumerate_partitions(n), entry.dims)
