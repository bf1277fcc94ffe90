"""Sequence generators, b-file parsing, and a cached HTTP fetcher.

Eight sequences are supported; each is generated from this package's
own formulas (triangle rows flattened row by row, or closed forms), and
a b-file fixture produced by the same generator ships inside the
package so every check can run offline. The fetcher only touches the
network in CACHED (on miss) and REFRESH modes.

b-file format: one "index value" pair per line; "#" comment lines and
blank lines are ignored on input and never emitted on output; indices
must be consecutive from the offset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from itertools import count as _count
from pathlib import Path

import httpx

from .exactmath import binomial
from .triangles import rascal_coeff, u_coeff

DEFAULT_BASE_URL = "https://oeis.org"
CACHE_DIR_ENV = "TRIPOWER_CACHE_DIR"
BASE_URL_ENV = "TRIPOWER_OEIS_URL"


class OeisError(Exception):
    """Raised for unsupported ids, malformed b-files, and fetch failures."""


def _rows_flattened(entry):
    for n in _count():
        for k in range(n + 1):
            yield entry(n, k)


def _closed_form(f):
    return lambda: (f(n) for n in _count())


_GENERATORS = {
    "A287326": lambda: _rows_flattened(u_coeff),
    "A007318": lambda: _rows_flattened(binomial),
    "A077028": lambda: _rows_flattened(rascal_coeff),
    "A008458": _closed_form(lambda n: 1 if n == 0 else 6 * n),
    "A000124": _closed_form(lambda n: (n * n + n + 2) // 2),
    "A275709": _closed_form(lambda n: 2 * n ** 3 + 3 * n * n),
    "A028896": _closed_form(lambda n: 3 * n * n + 3 * n),
    "A000012": _closed_form(lambda n: 1),
}

SEQUENCE_IDS = tuple(sorted(_GENERATORS))

#: index of the first term, per sequence (all families here start at 0)
OFFSETS = {sid: 0 for sid in SEQUENCE_IDS}


def generate(sequence_id: str, count: int) -> list:
    """First `count` terms at the sequence's standard offset."""
    if sequence_id not in _GENERATORS:
        raise OeisError(
            f"unsupported sequence {sequence_id!r} (supported: {', '.join(SEQUENCE_IDS)})"
        )
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    gen = _GENERATORS[sequence_id]()
    return [next(gen) for _ in range(count)]


class Source(Enum):
    BUNDLED = "bundled"
    CACHED = "cached"
    NETWORK = "network"
    INLINE = "inline"


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    offset: int
    entries: tuple
    source: Source = field(compare=False, default=Source.INLINE)

    @property
    def values(self) -> list:
        return [v for _, v in self.entries]


def parse_bfile(text: str, sequence_id: str = "", source: Source = Source.INLINE) -> BFile:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise OeisError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise OeisError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and idx != entries[-1][0] + 1:
            raise OeisError(
                f"line {lineno}: gap at index {entries[-1][0] + 1} (got {idx})"
            )
        entries.append((idx, val))
    if not entries:
        raise OeisError("b-file has no data lines")
    return BFile(
        sequence_id=sequence_id,
        offset=entries[0][0],
        entries=tuple(entries),
        source=source,
    )


def serialize_bfile(b: BFile) -> str:
    return "".join(f"{i} {v}\n" for i, v in b.entries)


class FetchMode(Enum):
    OFFLINE = "offline"
    CACHED = "cached"
    REFRESH = "refresh"


def _validate_id(sequence_id: str) -> str:
    if (
        len(sequence_id) != 7
        or sequence_id[0] != "A"
        or not sequence_id[1:].isdigit()
    ):
        raise OeisError(f"bad sequence id {sequence_id!r} (want A followed by 6 digits)")
    return sequence_id[1:]


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tripower"


def resolve_base_url(explicit: str | None = None) -> str:
    if explicit is not None:
        return explicit.rstrip("/")
    return os.environ.get(BASE_URL_ENV, DEFAULT_BASE_URL).rstrip("/")


def _bundled_text(digits: str) -> str | None:
    ref = resources.files("tripower").joinpath(f"data/b{digits}.txt")
    if ref.is_file():
        return ref.read_text(encoding="ascii")
    return None


def fetch_bfile(
    sequence_id: str,
    mode: FetchMode = FetchMode.OFFLINE,
    cache_dir: str | os.PathLike | None = None,
    base_url: str | None = None,
) -> BFile:
    """Obtain a b-file per the mode's bundled/cache/network policy.

    OFFLINE: bundled fixture, else cache, else error. CACHED: cache,
    else one GET that also writes the cache. REFRESH: always GET and
    overwrite the cache. Cache files hold the verbatim fetched bytes.
    """
    digits = _validate_id(sequence_id)
    cache_file = resolve_cache_dir(cache_dir) / f"b{digits}.txt"

    if mode is FetchMode.OFFLINE:
        bundled = _bundled_text(digits)
        if bundled is not None:
            return parse_bfile(bundled, sequence_id, Source.BUNDLED)
        if cache_file.is_file():
            return parse_bfile(
                cache_file.read_text(encoding="ascii"), sequence_id, Source.CACHED
            )
        raise OeisError(
            f"{sequence_id}: no bundled fixture and no cache file at {cache_file} "
            "(OFFLINE mode performs no network access)"
        )

    if mode is FetchMode.CACHED and cache_file.is_file():
        return parse_bfile(
            cache_file.read_text(encoding="ascii"), sequence_id, Source.CACHED
        )

    url = f"{resolve_base_url(base_url)}/{sequence_id}/b{digits}.txt"
    try:
        response = httpx.get(url, timeout=30.0, follow_redirects=True)
        response.raise_for_status()
    except httpx.HTTPError as exc:
        raise OeisError(f"fetch of {url} failed: {exc}") from exc
    text = response.text
    parsed = parse_bfile(text, sequence_id, Source.NETWORK)  # validate before caching
    cache_file.parent.mkdir(parents=True, exist_ok=True)
    cache_file.write_text(text, encoding="ascii")
    return parsed


@dataclass(frozen=True)
class CompareReport:
    sequence_id: str
    terms_compared: int
    first_mismatch: tuple | None  # (index, expected, actual) or None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def compare(
    sequence_id: str,
    count: int | None = None,
    mode: FetchMode = FetchMode.OFFLINE,
    cache_dir: str | os.PathLike | None = None,
    base_url: str | None = None,
) -> CompareReport:
    """Element-wise check of generate() against the b-file from its offset.

    count None compares every term the b-file holds.  "expected" in a
    mismatch is the b-file's value, "actual" the generator's.
    """
    b = fetch_bfile(sequence_id, mode=mode, cache_dir=cache_dir, base_url=base_url)
    if count is None:
        count = len(b.entries)
    if count > len(b.entries):
        raise OeisError(
            f"{sequence_id}: b-file has {len(b.entries)} terms, cannot compare {count}"
        )
    ours = generate(sequence_id, count)
    for (idx, expected), actual in zip(b.entries, ours):
        if expected != actual:
            return CompareReport(sequence_id, count, (idx, expected, actual))
    return CompareReport(sequence_id, count, None)


def write_fixture(sequence_id: str, count: int, directory: str | os.PathLike) -> Path:
    """Emit the generator's own b-file (used to build the bundled data)."""
    digits = _validate_id(sequence_id)
    values = generate(sequence_id, count)
    offset = OFFSETS[sequence_id]
    b = BFile(
        sequence_id=sequence_id,
        offset=offset,
        entries=tuple((offset + i, v) for i, v in enumerate(values)),
    )
    path = Path(directory) / f"b{digits}.txt"
    path.write_text(serialize_bfile(b), encoding="ascii")
    return path
