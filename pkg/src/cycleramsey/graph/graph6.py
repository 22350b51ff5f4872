"""graph6 encoding of the red subgraph (blue is the complement)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .core import RED, Colour, RedBlueGraph


class Graph6Error(ValueError):
    pass


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"vertex count {n} too large")


def graph6_encode(g: RedBlueGraph, colour: Colour = RED) -> bytes:
    masks = g.masks(colour)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(masks[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    payload = bytearray()
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        payload.append(value + 63)
    return _size_header(g.n) + bytes(payload)


def graph6_decode(data: bytes, colour: Colour = RED) -> RedBlueGraph:
    """Inverse of :func:`graph6_encode`; ``colour`` says which subgraph the bytes store."""
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("byte outside the printable graph6 range")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} payload bytes for n={n}, got {len(body)}")
    values = [c - 63 for c in body]
    pad = len(values) * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    g = RedBlueGraph(n, tuple(masks))
    return g if colour is RED else g.swap_colours()


def write_graph6_lines(graphs: Iterable[RedBlueGraph]) -> bytes:
    return b"".join(graph6_encode(g) + b"\n" for g in graphs)


def read_graph6_lines(data: bytes, colour: Colour = RED) -> Iterator[RedBlueGraph]:
    for line in data.splitlines():
        line = line.strip()
        if line and not line.startswith(b"#"):
            yield graph6_decode(line, colour)

