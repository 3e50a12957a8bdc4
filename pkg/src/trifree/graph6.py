"""graph6 serialization (the standard compact ASCII encoding).

The encoding is a size header followed by the upper triangle of the
adjacency matrix in column order -- bit (i, j) for j = 1..n-1, i < j --
packed into 6-bit groups offset by 63.  Sizes up to 62 use one header
byte; larger sizes use the ``~`` and ``~~`` multi-byte headers.
"""

from __future__ import annotations

from .graphs import Graph

_HEADER = b">>graph6<<"
_MAX_N = 68719476735  # 36-bit size field


class Graph6DecodeError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        groups = [(n >> 12) & 63, (n >> 6) & 63, n & 63]
        return bytes([126] + [g + 63 for g in groups])
    groups = [(n >> shift) & 63 for shift in (30, 24, 18, 12, 6, 0)]
    return bytes([126, 126] + [g + 63 for g in groups])


def to_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 bytes (no trailing newline)."""
    if g.n > _MAX_N:
        raise ValueError(f"graph6 supports at most {_MAX_N} vertices")
    out = bytearray(_encode_size(g.n))
    group = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    """Parse the size header; returns (n, offset of first payload byte)."""
    if not data:
        raise Graph6DecodeError("empty input", 0)
    if data[0] != 126:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise Graph6DecodeError(f"invalid size byte {data[0]}", 0)
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        start, count = 2, 6
    else:
        start, count = 1, 3
    if len(data) < start + count:
        raise Graph6DecodeError("truncated size header", len(data))
    n = 0
    for k in range(count):
        b = data[start + k]
        if not 63 <= b <= 126:
            raise Graph6DecodeError(f"invalid size byte {b}", start + k)
        n = n << 6 | (b - 63)
    return n, start + count


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 value.

    Accepts an optional ``>>graph6<<`` header and trailing newline, as
    produced by common tools.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    data = data.rstrip(b"\r\n")

    n, pos = _decode_size(data)
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    if len(data) - pos < ngroups:
        raise Graph6DecodeError(
            f"truncated payload: need {ngroups} bytes, have {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > ngroups:
        raise Graph6DecodeError("unexpected trailing bytes", pos + ngroups)

    edges = []
    bit_index = 0
    group = 0
    have = 0
    i, j = 0, 1
    for k in range(npairs):
        if have == 0:
            b = data[pos + bit_index // 6]
            if not 63 <= b <= 126:
                raise Graph6DecodeError(
                    f"invalid payload byte {b}", pos + bit_index // 6
                )
            group = b - 63
            have = 6
        have -= 1
        if group >> have & 1:
            edges.append((i, j))
        bit_index += 1
        i += 1
        if i == j:
            i, j = 0, j + 1
    # Padding bits must be zero per the format.
    if npairs % 6:
        last = data[pos + ngroups - 1]
        if not 63 <= last <= 126:
            raise Graph6DecodeError(f"invalid payload byte {last}", pos + ngroups - 1)
        pad = 6 - npairs % 6
        if (last - 63) & ((1 << pad) - 1):
            raise Graph6DecodeError("nonzero padding bits", pos + ngroups - 1)
    return Graph(n, edges)
