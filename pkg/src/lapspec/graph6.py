"""graph6 encoding and decoding.

Format (McKay): the order ``N(n)`` followed by the upper triangle of the
adjacency matrix in column order ``(0,1), (0,2), (1,2), (0,3), ...``, packed
big-endian into 6-bit groups, each group offset by 63.  The final group is
zero-padded.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text."""


class Graph6OrderError(Graph6Error):
    """Well-formed header, but the order is outside the supported range."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} too large")


def encode(G: Graph) -> str:
    out = [_encode_order(G.n)]
    acc = nbits = 0
    for j in range(1, G.n):
        col = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated order header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0:
        raise Graph6Error("order 0 is not supported")
    if n > MAX_ORDER:
        raise Graph6OrderError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
