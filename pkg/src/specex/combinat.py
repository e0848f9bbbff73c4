"""Exact independence number, independent-set and clique counts, and
chromatic number on bitmask graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graphcore import Graph, complement

COUNT_MAX_N = 24
CHROMATIC_MAX_N = 16


def _greedy_color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Sequential colouring of ``cand``; returns vertices and their colour bounds."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(adj: tuple[int, ...]) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, bounds = _greedy_color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            new = cand & adj[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << len(adj)) - 1)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique(g.adj)


def independence_number(g: Graph) -> int:
    """Exact alpha(G) as the clique number of the complement (colouring bound B&B)."""
    return _max_clique(complement(g).adj)


@dataclass(frozen=True)
class CountTable:
    mode: Literal["independent", "clique"]
    counts: tuple[int, ...]  # counts[s] for s = 0..n

    def __getitem__(self, s: int) -> int:
        return self.counts[s] if 0 <= s < len(self.counts) else 0


def count_sets(g: Graph, mode: Literal["independent", "clique"] = "independent") -> CountTable:
    """Number of independent sets (or cliques) of every size."""
    if g.n > COUNT_MAX_N:
        raise ValueError(f"set counting capped at n={COUNT_MAX_N}, got {g.n}")
    if mode == "independent":
        adj = complement(g).adj
    elif mode == "clique":
        adj = g.adj
    else:
        raise ValueError(f"unknown mode {mode!r}")
    counts = [0] * (g.n + 1)

    def walk(size: int, cand: int) -> None:
        counts[size] += 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            walk(size + 1, cand & adj[v])

    walk(0, (1 << g.n) - 1)
    return CountTable(mode, tuple(counts))


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking colour assignment with a clique lower bound."""
    n = g.n
    if n > CHROMATIC_MAX_N:
        raise ValueError(f"chromatic number capped at n={CHROMATIC_MAX_N}, got {n}")
    if g.edge_count == 0:
        return 1
    adj = g.adj
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def colorable(c: int) -> bool:
        classes = [0] * c

        def place(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            # a fresh colour is only tried once (symmetry breaking)
            for col in range(min(used + 1, c)):
                if not classes[col] & adj[v]:
                    classes[col] |= 1 << v
                    if place(i + 1, max(used, col + 1)):
                        return True
                    classes[col] &= ~(1 << v)
            return False

        return place(0, 0)

    c = max(clique_number(g), 2)
    while not colorable(c):
        c += 1
    return c
