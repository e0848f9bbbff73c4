"""Immutable simple graphs stored as one adjacency bitmask per vertex."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` has bit ``u`` set iff ``v ~ u``. Instances validate symmetry
    and the absence of loops on construction and are never mutated; the
    editing helpers return new graphs.
    """

    n: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        adj = tuple(int(r) for r in self.adj)
        if len(adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(adj)}")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full or row < 0:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            m = row
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low
            total += row.bit_count()
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_numpy(cls, a: np.ndarray) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        rows = tuple(sum(1 << int(u) for u in np.flatnonzero(a[v])) for v in range(n))
        return cls(n, rows)

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield v, u + v + 1

    def to_numpy(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def to_int_matrix(self) -> list[list[int]]:
        return [[(self.adj[i] >> j) & 1 for j in range(self.n)] for i in range(self.n)]

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u}, {v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v})")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``perm[i]`` becomes vertex ``i``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = tuple(_map_bits(self.adj[v], pos) for v in perm)
        return Graph(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self.n) if u != v])


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _map_bits(mask: int, pos: Sequence[int]) -> int:
    r = 0
    while mask:
        low = mask & -mask
        r |= 1 << pos[low.bit_length() - 1]
        mask ^= low
    return r


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.adj)))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def is_connected(g: Graph) -> bool:
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << g.n) - 1


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal increases the number of components."""
    base = len(components(g))
    out = []
    for v in range(g.n):
        if g.n == 1:
            break
        if len(components(g.delete_vertex(v))) > base:
            out.append(v)
    return out


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True
