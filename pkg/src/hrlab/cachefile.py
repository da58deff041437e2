"""Binary cache for :class:`~hrlab.sieve.RangeStats`.

Layout, little-endian::

    magic      8 bytes   b"HRSTATS1"
    version    u16       1
    start      u64
    len        u64
    payload    len * 2   interleaved (omega u8, Omega u8) pairs
    crc32      u32       CRC-32 of the payload bytes
"""

from __future__ import annotations

import os
import struct
import zlib
from pathlib import Path

import numpy as np

from .errors import CacheFormatError
from .sieve import RangeStats

MAGIC = b"HRSTATS1"
VERSION = 1
_HEADER = struct.Struct("<8sHQQ")
_CRC = struct.Struct("<I")


def encode_stats(stats: RangeStats) -> bytes:
    payload = stats.values.tobytes()
    return (
        _HEADER.pack(MAGIC, VERSION, stats.start, len(stats))
        + payload
        + _CRC.pack(zlib.crc32(payload))
    )


def decode_stats(blob: bytes, source: str = "<bytes>") -> RangeStats:
    if len(blob) < _HEADER.size + _CRC.size:
        raise CacheFormatError(f"{source}: file too short for a stats header")
    magic, version, start, length = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise CacheFormatError(f"{source}: bad magic {magic!r}")
    if version != VERSION:
        raise CacheFormatError(f"{source}: unsupported version {version}")
    expected = _HEADER.size + 2 * length + _CRC.size
    if len(blob) != expected:
        raise CacheFormatError(f"{source}: expected {expected} bytes, found {len(blob)}")
    payload = memoryview(blob)[_HEADER.size : _HEADER.size + 2 * length]
    (crc,) = _CRC.unpack_from(blob, _HEADER.size + 2 * length)
    if zlib.crc32(payload) != crc:
        raise CacheFormatError(f"{source}: CRC mismatch")
    if start < 1:
        raise CacheFormatError(f"{source}: start must be positive, found {start}")
    pairs = np.frombuffer(payload, dtype=np.uint8).reshape(length, 2)
    return RangeStats(int(start), pairs[:, 0].copy(), pairs[:, 1].copy())


def write_stats(path, stats: RangeStats) -> Path:
    """Write ``stats`` atomically (temp file + rename)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(encode_stats(stats))
    os.replace(tmp, path)
    return path


def read_stats(path) -> RangeStats:
    """Load a cache file, rejecting wrong magic, version or CRC."""
    path = Path(path)
    return decode_stats(path.read_bytes(), str(path))
