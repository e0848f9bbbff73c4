"""graph6 encoding (the ``nauty`` text format for simple graphs)."""

from __future__ import annotations

from .graph import Graph


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    # four-byte form: '~' followed by 18 bits
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        vals.append(c - 63)
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))
