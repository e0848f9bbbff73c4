"""Canonical labeling by colour refinement plus individualization search.

The canonical form is the lexicographically smallest sequence of relabeled
adjacency rows over all leaves of the individualization-refinement tree.
Subtrees shown equivalent by automorphisms discovered during the search are
skipped, which keeps highly symmetric graphs (empty, complete, disjoint
cliques) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, _map_bits


@dataclass(frozen=True)
class CanonicalForm:
    """``perm[i]`` is the original vertex placed at canonical position ``i``."""

    perm: tuple[int, ...]
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.rows), self.rows)

    def graph(self) -> Graph:
        return Graph(len(self.rows), self.rows)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    while len(cells) < n:
        for w in cells:
            wmask = 0
            for v in w:
                wmask |= 1 << v
            new: list[list[int]] = []
            split = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(c)
                else:
                    split = True
                    for cnt in sorted(groups):
                        new.append(groups[cnt])
            if split:
                cells = new
                break
        else:
            break
    return cells


def _individualize(cells: list[list[int]], ci: int, v: int) -> list[list[int]]:
    rest = [u for u in cells[ci] if u != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for a, b in enumerate(g):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.first_key = None
        self.first_order: list[int] = []
        self.first_path: list[int] = []
        self.best_key = None
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def leaf(self, cells: list[list[int]], path: list[int]):
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        key = tuple(_map_bits(self.adj[v], pos) for v in order)
        if self.first_key is None:
            self.first_key = self.best_key = key
            self.first_order = self.best_order = order
            self.first_path = self.best_path = list(path)
            return None
        for ref_key, ref_order, ref_path in (
            (self.first_key, self.first_order, self.first_path),
            (self.best_key, self.best_order, self.best_path),
        ):
            if key == ref_key:
                gamma = [0] * self.n
                for a, b in zip(order, ref_order):
                    gamma[a] = b
                self.autos.append(tuple(gamma))
                common = 0
                while common < len(path) and common < len(ref_path) and path[common] == ref_path[common]:
                    common += 1
                return common
        if key < self.best_key:
            self.best_key = key
            self.best_order = order
            self.best_path = list(path)
        return None

    def run(self, cells: list[list[int]], path: list[int]):
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            return self.leaf(cells, path)
        ci = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: len(cells[i]),
        )
        depth = len(path)
        tried_roots: set[int] = set()
        for v in sorted(cells[ci]):
            if tried_roots:
                fixing = [g for g in self.autos if all(g[u] == u for u in path)]
                roots = _orbit_roots(self.n, fixing)
                if roots[v] in {roots[u] for u in tried_roots}:
                    continue
            tried_roots.add(v)
            path.append(v)
            back = self.run(_individualize(cells, ci, v), path)
            path.pop()
            if back is not None and back < depth:
                return back
        return None


@lru_cache(maxsize=200_000)
def _canon_rows(n: int, adj: tuple[int, ...]) -> CanonicalForm:
    s = _Search(adj)
    s.run([list(range(n))], [])
    return CanonicalForm(tuple(s.best_order), s.best_key)


def canonical_label(g: Graph) -> CanonicalForm:
    """Canonical vertex order and the relabeled rows it induces.

    Two graphs are isomorphic iff their ``rows`` are equal.
    """
    return _canon_rows(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    return canonical_label(g).graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_label(g).rows == canonical_label(h).rows


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest vertex) for every vertex of ``g``.

    ``u`` and ``v`` share an orbit iff the smallest leaf reachable after
    individualizing ``u`` first equals the one reached from ``v``.
    """
    rep: dict[tuple[int, ...], int] = {}
    out = []
    for v in range(g.n):
        s = _Search(g.adj)
        s.run(_individualize([list(range(g.n))], 0, v), [v])
        out.append(rep.setdefault(s.best_key, v))
    return out
