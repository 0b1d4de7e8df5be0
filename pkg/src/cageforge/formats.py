"""graph6 and edge-list serialization, plus certificate JSON."""

from __future__ import annotations

import json
import warnings
from typing import Mapping

import numpy as np

from .certify import Certificate
from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 68719476735


class FormatError(ValueError):
    """A document could not be parsed; ``offset`` is a byte or line position."""

    def __init__(self, message: str, offset: int | None = None):
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(message + where)
        self.offset = offset


# ---------------------------------------------------------------- graph6


def _encode_n(n: int) -> bytes:
    if n < 0 or n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph, header: bool = False) -> bytes:
    """Encode ``g`` as graph6 (no trailing newline)."""
    n = g.n
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = np.zeros(nbytes, dtype=np.int64)
    if g.size:
        e = np.array(list(g.edges()), dtype=np.int64)
        i, j = e[:, 0], e[:, 1]
        pos = j * (j - 1) // 2 + i
        body = np.bincount(pos // 6, weights=1 << (5 - pos % 6), minlength=nbytes).astype(np.int64)
    out = _encode_n(n) + (body + 63).astype(np.uint8).tobytes()
    return GRAPH6_HEADER + out if header else out


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 string; an optional header and trailing newline are allowed."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    end = len(data)
    while end > start and data[end - 1 : end] in (b"\n", b"\r"):
        end -= 1
    s = data[start:end]

    for k, c in enumerate(s):
        if not 63 <= c <= 126:
            raise FormatError(f"byte {c!r} outside the graph6 range 63..126", start + k)
    if not s:
        raise FormatError("empty graph6 string", start)

    if s[0] != 126:
        n, pos = s[0] - 63, 1
    elif len(s) >= 2 and s[1] == 126:
        if len(s) < 8:
            raise FormatError("truncated 8-byte length prefix", start + len(s))
        n, pos = _decode_digits(s[2:8]), 8
    else:
        if len(s) < 4:
            raise FormatError("truncated 4-byte length prefix", start + len(s))
        n, pos = _decode_digits(s[1:4]), 4
        if n <= 62:
            raise FormatError(f"non-canonical length prefix for n={n}", start)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[pos:]
    if len(body) < nbytes:
        raise FormatError(f"expected {nbytes} adjacency bytes, found {len(body)}", start + len(s))
    if len(body) > nbytes:
        raise FormatError("trailing bytes after adjacency data", start + pos + nbytes)

    vals = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[nbits:].any():
        raise FormatError("nonzero padding bits", start + len(s) - 1)
    pos_set = np.flatnonzero(bits[:nbits])
    j = ((1 + np.sqrt(1 + 8 * pos_set.astype(np.float64))) / 2).astype(np.int64)
    # float sqrt may be off by one near triangular numbers
    j -= (j * (j - 1) // 2 > pos_set).astype(np.int64)
    j += ((j + 1) * j // 2 <= pos_set).astype(np.int64)
    i = pos_set - j * (j - 1) // 2
    return build_graph(n, zip(i.tolist(), j.tolist()))


def _decode_digits(chunk: bytes) -> int:
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n


# ---------------------------------------------------------------- edge list


def write_edge_list(g: Graph, meta: Mapping[str, object] | None = None) -> str:
    """Text document: ``# n=..`` and ``# key=value`` headers, then one ``u v`` per edge."""
    lines = [f"# n={g.n}"]
    for key, value in (meta or {}).items():
        lines.append(f"# {key}={value}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_header(doc: str) -> dict[str, str]:
    meta = {}
    for line in doc.splitlines():
        line = line.strip()
        if line.startswith("#") and "=" in line:
            key, _, value = line[1:].partition("=")
            meta[key.strip()] = value.strip()
    return meta


def read_edge_list(doc: str) -> Graph:
    """Parse an edge-list document; duplicate edges are dropped with a warning."""
    n_header: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(doc.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "n":
                try:
                    n_header = int(value)
                except ValueError:
                    raise FormatError(f"bad n header {value.strip()!r}", lineno) from None
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"expected two ids, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise FormatError(f"negative id in {line!r}", lineno)
        if n_header is not None and max(u, v) >= n_header:
            raise FormatError(f"id {max(u, v)} >= n={n_header}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge {key} on line {lineno} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    n = n_header if n_header is not None else 1 + max((v for e in edges for v in e), default=-1)
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------- sniffing


def looks_like_graph6(data: bytes) -> bool:
    first = next((ln for ln in data.splitlines() if ln.strip()), b"")
    if first.startswith(GRAPH6_HEADER):
        return True
    return bool(first) and not first.startswith(b"#") and all(63 <= c <= 126 for c in first.strip())


def load_graph(data: bytes) -> Graph:
    """Decode graph6 or edge-list content, chosen by inspecting the bytes."""
    if looks_like_graph6(data):
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError("expected exactly one graph6 line", len(lines[0]) if lines else 0)
        return from_graph6(lines[0].strip())
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError("file is neither graph6 nor UTF-8 text", exc.start) from None
    return read_edge_list(text)


def certificate_json(cert: Certificate, extra: Mapping[str, object] | None = None) -> str:
    doc = cert.as_dict()
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"
