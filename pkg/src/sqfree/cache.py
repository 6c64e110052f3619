"""Persistent cache of count records.

File format (line-delimited JSON): a header line

    {"format": "sqfree-count-cache", "engine": "1.0", "symmetry": "prefix"}

followed by one record per line, counts as decimal strings so consumers
never truncate past 2^53 or 2^64:

    {"x": 3, "n": 10, "total": "144", "ext": ["0", "84", "60"]}

``ext`` lists extension-class counts by ascending class; trailing
all-zero classes are omitted.  Loading validates every record's
total-vs-classes invariant; merging refuses any record that disagrees
with one already present, including caches written by other engine
versions, so a cache can never silently contradict a fresh count.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .counting import ENGINE_VERSION, CountRecord, count_up_to

CACHE_FORMAT = "sqfree-count-cache"


class CacheIntegrityError(Exception):
    """Malformed cache file or cached records contradicting fresh ones."""


@dataclass
class CountCache:
    """In-memory map (x, n) -> CountRecord plus provenance."""

    engine: str = ENGINE_VERSION
    symmetry: str = "prefix"
    records: dict[tuple[int, int], CountRecord] = field(default_factory=dict)

    def add(self, record: CountRecord) -> None:
        key = (record.x, record.n)
        old = self.records.get(key)
        if old is not None and old != record:
            raise CacheIntegrityError(
                f"cache record for x={record.x}, n={record.n} disagrees with "
                f"a freshly computed one: cached total {old.total}, new {record.total}"
            )
        self.records[key] = record

    def has_range(self, x: int, n_max: int) -> bool:
        return all((x, n) in self.records for n in range(n_max + 1))

    def row(self, x: int, n_max: int) -> list[CountRecord]:
        return [self.records[(x, n)] for n in range(n_max + 1)]


def _encode_record(rec: CountRecord) -> str:
    ext = list(rec.ext)
    while len(ext) > 1 and ext[-1] == 0:
        ext.pop()
    return json.dumps(
        {"x": rec.x, "n": rec.n, "total": str(rec.total), "ext": [str(e) for e in ext]},
        separators=(",", ":"),
    )


def _decode_record(line: str, lineno: int) -> CountRecord:
    try:
        obj = json.loads(line)
        x = int(obj["x"])
        n = int(obj["n"])
        total = int(obj["total"])
        ext = [int(e) for e in obj["ext"]]
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise CacheIntegrityError(f"malformed cache record on line {lineno}: {exc}") from exc
    if len(ext) > x + 1 or any(e < 0 for e in ext):
        raise CacheIntegrityError(f"impossible class counts on line {lineno}: {ext}")
    ext = ext + [0] * (x + 1 - len(ext))
    if sum(ext) != total:
        raise CacheIntegrityError(
            f"integrity failure on line {lineno}: total {total} != class sum {sum(ext)}"
        )
    return CountRecord(x=x, n=n, total=total, ext=tuple(ext))


def checkpoint_save(cache: CountCache, path: str | os.PathLike) -> None:
    """Write the cache; records are sorted by (x, n) for stable bytes."""
    lines = [
        json.dumps(
            {"format": CACHE_FORMAT, "engine": cache.engine, "symmetry": cache.symmetry},
            separators=(",", ":"),
        )
    ]
    for key in sorted(cache.records):
        lines.append(_encode_record(cache.records[key]))
    tmp = f"{path}.tmp"
    with open(tmp, "w") as f:
        f.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def checkpoint_load(path: str | os.PathLike) -> CountCache:
    with open(path) as f:
        lines = f.read().splitlines()
    if not lines:
        raise CacheIntegrityError(f"{path}: empty cache file")
    try:
        header = json.loads(lines[0])
        if header.get("format") != CACHE_FORMAT:
            raise CacheIntegrityError(
                f"{path}: not a {CACHE_FORMAT} file (header {header!r})"
            )
    except json.JSONDecodeError as exc:
        raise CacheIntegrityError(f"{path}: unreadable header: {exc}") from exc
    cache = CountCache(
        engine=str(header.get("engine", "?")),
        symmetry=str(header.get("symmetry", "prefix")),
    )
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        rec = _decode_record(line, i)
        if (rec.x, rec.n) in cache.records:
            raise CacheIntegrityError(f"duplicate record for x={rec.x}, n={rec.n}")
        cache.records[(rec.x, rec.n)] = rec
    return cache


def cached_count_up_to(
    x: int,
    n_max: int,
    path: str | os.PathLike | None,
    **options,
) -> list[CountRecord]:
    """count_up_to with read-through caching.

    A fully covered range is served from the cache.  Otherwise counts
    are recomputed, cross-checked against any overlapping cached
    records (disagreement raises :class:`CacheIntegrityError`) and the
    merged cache is written back.  Output is identical to a cold run
    either way.
    """
    if path is None:
        return count_up_to(x, n_max, **options)
    cache = checkpoint_load(path) if os.path.exists(path) else CountCache(
        symmetry=options.get("symmetry", "prefix")
    )
    if cache.has_range(x, n_max):
        return cache.row(x, n_max)
    fresh = count_up_to(x, n_max, **options)
    for rec in fresh:
        cache.add(rec)
    checkpoint_save(cache, path)
    return fresh
