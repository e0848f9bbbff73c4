"""Isomorph-free generation of small graphs and the filtered families built on it.

Graphs of order ``n`` are grown from order ``n - 1`` by adding one vertex with
every possible neighbourhood. A child is kept iff its canonical deletion
vertex (the minimum-degree vertex placed last in canonical order) leaves a
graph isomorphic to the parent; siblings are deduplicated by canonical form.
Each level is sorted by canonical rows, so the output order is fixed.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .combinat import independence_number
from .graphcore import (
    CliqueTreeSpec,
    Graph,
    balanced_sizes,
    blowup,
    canonical_label,
    is_connected,
)

DEFAULT_MAX_N = 9


def max_n_cap() -> int:
    """Enumeration cap; ``SPECEX_MAX_N`` overrides the default."""
    env = os.environ.get("SPECEX_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, cap: int | None) -> None:
    cap = max_n_cap() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the enumeration cap {cap}")
    if n < 1:
        raise ValueError("order must be positive")


def _children(parent: Graph) -> list[Graph]:
    m = parent.n
    n = m + 1
    new_bit = 1 << m
    pdeg = parent.degrees()
    parent_rows = parent.adj
    seen: set[tuple[int, ...]] = set()
    out = []
    for s in range(1 << m):
        d = s.bit_count()
        # canonical deletion picks a minimum-degree vertex; reject early if
        # the new vertex cannot be one
        if any(pdeg[u] + (s >> u & 1) < d for u in range(m)):
            continue
        rows = tuple(r | new_bit if s >> u & 1 else r for u, r in enumerate(parent_rows)) + (s,)
        child = Graph(n, rows)
        cf = canonical_label(child)
        if cf.rows in seen:
            continue
        ties = [u for u in range(m) if pdeg[u] + (s >> u & 1) == d]
        if ties:
            pos = {v: i for i, v in enumerate(cf.perm)}
            w = max(ties + [m], key=pos.__getitem__)
            if w != m and canonical_label(child.delete_vertex(w)).rows != parent_rows:
                continue
        seen.add(cf.rows)
        out.append(cf.graph())
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    kids: dict[tuple[int, ...], Graph] = {}
    for parent in _level(n - 1):
        for child in _children(parent):
            kids.setdefault(child.adj, child)
    return tuple(kids[k] for k in sorted(kids))


def all_graphs(n: int, cap: int | None = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``."""
    _check_cap(n, cap)
    yield from _level(n)


def connected_graphs(n: int, cap: int | None = None) -> Iterator[Graph]:
    for g in all_graphs(n, cap):
        if is_connected(g):
            yield g


@dataclass(frozen=True)
class FamilyFilter:
    n: int
    alpha: int | None = None
    connected: bool = True
    include_disconnected: bool = False

    def __post_init__(self) -> None:
        if self.alpha is not None and not 1 <= self.alpha <= self.n:
            raise ValueError(f"alpha must be in 1..n, got {self.alpha} for n={self.n}")

    def stream(self, cap: int | None = None) -> Iterator[Graph]:
        source = (
            all_graphs(self.n, cap)
            if self.include_disconnected or not self.connected
            else connected_graphs(self.n, cap)
        )
        for g in source:
            if self.alpha is None or independence_number(g) == self.alpha:
                yield g


def family_G(n: int, alpha: int, cap: int | None = None) -> Iterator[Graph]:
    """Connected graphs of order ``n`` with independence number exactly ``alpha``."""
    yield from FamilyFilter(n, alpha).stream(cap)


# -- tree blowups ------------------------------------------------------------

@lru_cache(maxsize=None)
def unlabeled_trees(a: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Edge lists of all trees on ``a`` nodes up to isomorphism.

    Every tree on ``a`` nodes arises from one on ``a - 1`` nodes by adding a
    leaf, so each level extends the previous one and dedupes canonically.
    """
    if a < 1:
        raise ValueError("trees need at least one node")
    if a == 1:
        return ((),)
    found: dict[tuple[int, ...], tuple[tuple[int, int], ...]] = {}
    for edges in unlabeled_trees(a - 1):
        for v in range(a - 1):
            grown = Graph.from_edges(a, (*edges, (v, a - 1)))
            key = canonical_label(grown).rows
            if key not in found:
                found[key] = tuple(sorted(grown.edges()))
    return tuple(found[k] for k in sorted(found))


def tree_blowup_specs(n: int, alpha: int) -> Iterator[CliqueTreeSpec]:
    """Every blueprint: tree shape x balanced size assignment x attachment choice."""
    k, t, _ = balanced_sizes(n, alpha)
    base = [k + 1] * t + [k] * (alpha - t)
    assignments = sorted(set(itertools.permutations(base)))
    for edges in unlabeled_trees(alpha):
        for sizes in assignments:
            choices = [
                [(i, j) for i in range(sizes[u]) for j in range(sizes[v])] for u, v in edges
            ]
            for att in itertools.product(*choices):
                yield CliqueTreeSpec(alpha, edges, sizes, tuple(att))


def family_T(n: int, alpha: int, require_alpha: bool = True) -> Iterator[Graph]:
    """Canonical representatives of clique blowups of trees on ``alpha`` nodes.

    With ``require_alpha`` (the default) only blowups whose independence
    number is exactly ``alpha`` are kept.
    """
    found: dict[tuple[int, ...], Graph] = {}
    for spec in tree_blowup_specs(n, alpha):
        g = blowup(spec)
        cf = canonical_label(g)
        if cf.rows in found:
            continue
        if require_alpha and independence_number(g) != alpha:
            found[cf.rows] = None  # type: ignore[assignment]
            continue
        found[cf.rows] = cf.graph()
    for key in sorted(found):
        if found[key] is not None:
            yield found[key]
