"""graph6 encoding of simple graphs held as adjacency bitmasks.

Only the plain graph6 format is handled (no sparse6 / digraph6).  The
optional ``>>graph6<<`` header is accepted on input and never written.
"""

from __future__ import annotations

HEADER = b">>graph6<<"
_MAX_N = 258047


class Graph6Error(ValueError):
    """Raised for malformed graph6 data."""


def _encode_n(n: int) -> bytes:
    if n < 0 or n > _MAX_N:
        raise Graph6Error(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def encode(n: int, adj: tuple[int, ...] | list[int]) -> bytes:
    """Encode an adjacency-bitmask graph as graph6 bytes (no newline)."""
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode(data: bytes | str) -> tuple[int, tuple[int, ...]]:
    """Decode one graph6 string into ``(n, adj)``.

    Trailing whitespace is ignored; anything else that is not valid graph6
    raises :class:`Graph6Error`.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if b < 63 or b > 126:
            raise Graph6Error(f"invalid graph6 byte {b!r}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 with n > 258047 is not supported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # padding bits must be zero
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    return n, tuple(adj)
