"""graph6 codec and a lazy reader for graph6 files."""

from __future__ import annotations

import gzip
import os
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int, line: int | None = None):
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{msg} at {where}")
        self.msg = msg
        self.offset = offset
        self.line = line

    def at_line(self, line: int) -> "Graph6Error":
        return Graph6Error(self.msg, self.offset, line)

    def __reduce__(self):
        return (Graph6Error, (self.msg, self.offset, self.line))


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def encode(g: Graph) -> bytes:
    n = g.n
    nbits = n * (n - 1) // 2
    out = bytearray(_encode_n(n))
    acc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
    pad = (-nbits) % 6
    acc <<= pad
    nchunks = (nbits + pad) // 6
    for c in range(nchunks - 1, -1, -1):
        out.append(63 + ((acc >> (6 * c)) & 63))
    return bytes(out)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte value {b} out of range", base + i)
    if not data:
        raise Graph6Error("empty record", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order field", base + len(data))
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order field", base + len(data))
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    nbits = n * (n - 1) // 2
    nchunks = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nchunks:
        raise Graph6Error(
            f"malformed length: need {nchunks} edge bytes, got {len(body)}", base + len(data))
    if len(body) > nchunks:
        raise Graph6Error("trailing garbage", base + pos + nchunks)
    acc = 0
    for b in body:
        acc = (acc << 6) | (b - 63)
    pad = 6 * nchunks - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + nchunks - 1)
    acc >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (acc >> k) & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


@dataclass
class Graph6Reader:
    """Iterate the graphs of a newline-separated graph6 file.

    With ``skip_bad`` a malformed record is logged in ``errors`` and skipped;
    otherwise the first one raises :class:`Graph6Error` carrying its line.
    """

    path: str | os.PathLike
    skip_bad: bool = False
    count: int = 0
    errors: list[Graph6Error] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        for lineno, rec in iter_records(self.path):
            try:
                g = decode(rec)
            except Graph6Error as exc:
                err = exc.at_line(lineno)
                if not self.skip_bad:
                    raise err from None
                self.errors.append(err)
                continue
            self.count += 1
            yield g


def iter_records(path: str | os.PathLike) -> Iterator[tuple[int, bytes]]:
    """``(line number, raw record)`` for each non-blank, non-header line.

    Files ending in ``.gz`` are decompressed on the fly.
    """
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            rec = raw.rstrip(b"\r\n")
            if rec and rec != HEADER:
                yield lineno, rec


def ingest_graph6_stream(path: str | os.PathLike, skip_bad: bool = False) -> Graph6Reader:
    return Graph6Reader(path, skip_bad)
