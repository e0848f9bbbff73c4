"""Constructors for the clique-blowup families and the disjoint-clique graph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, disjoint_union


def complete_graph(k: int) -> Graph:
    if not 1 <= k <= 64:
        raise ValueError(f"clique order must be in 1..64, got {k}")
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << v) for v in range(k)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def balanced_sizes(n: int, alpha: int) -> tuple[int, int, int]:
    """``(k, t, ceil)`` with ``n = k*alpha + t``."""
    if not 1 <= alpha <= n:
        raise ValueError(f"need 1 <= alpha <= n, got n={n}, alpha={alpha}")
    k, t = divmod(n, alpha)
    return k, t, k + (t > 0)


def turan_union(n: int, alpha: int) -> Graph:
    """Disjoint union of ``alpha`` cliques whose orders differ by at most one."""
    k, t, _ = balanced_sizes(n, alpha)
    return disjoint_union(*(complete_graph(k + (i < t)) for i in range(alpha)))


@dataclass(frozen=True)
class CliqueTreeSpec:
    """Blueprint for replacing every node of a tree by a clique.

    ``attachments[e] = (i, j)`` means tree edge ``tree_edges[e] = (a, b)`` is
    realised as one edge between vertex ``i`` of clique ``a`` and vertex
    ``j`` of clique ``b`` (indices local to each clique).
    """

    alpha: int
    tree_edges: tuple[tuple[int, int], ...]
    sizes: tuple[int, ...]
    attachments: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        a = self.alpha
        if a < 1:
            raise ValueError("a tree needs at least one node")
        if len(self.sizes) != a:
            raise ValueError(f"expected {a} clique sizes, got {len(self.sizes)}")
        if len(self.tree_edges) != a - 1:
            raise ValueError(f"a tree on {a} nodes has {a - 1} edges, got {len(self.tree_edges)}")
        if len(self.attachments) != len(self.tree_edges):
            raise ValueError("one attachment pair is required per tree edge")
        parent = list(range(a))

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        for u, v in self.tree_edges:
            if not (0 <= u < a and 0 <= v < a) or u == v:
                raise ValueError(f"bad tree edge ({u}, {v})")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("tree edges contain a cycle")
            parent[ru] = rv
        n = self.n
        lo, hi = n // a, -(-n // a)
        if any(s not in (lo, hi) for s in self.sizes) or min(self.sizes) < 1:
            raise ValueError(f"clique sizes {self.sizes} are not balanced for n={n}, alpha={a}")
        for (u, v), (i, j) in zip(self.tree_edges, self.attachments):
            if not (0 <= i < self.sizes[u] and 0 <= j < self.sizes[v]):
                raise ValueError(f"attachment ({i}, {j}) outside cliques of edge ({u}, {v})")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return out


def blowup(spec: CliqueTreeSpec) -> Graph:
    """Realise a :class:`CliqueTreeSpec`; clique ``i`` occupies a consecutive block."""
    off = spec.offsets()
    edges = []
    for node, size in enumerate(spec.sizes):
        base = off[node]
        edges.extend((base + i, base + j) for i in range(size) for j in range(i + 1, size))
    for (u, v), (i, j) in zip(spec.tree_edges, spec.attachments):
        edges.append((off[u] + i, off[v] + j))
    return Graph.from_edges(spec.n, edges)


def _size_assignment(n: int, alpha: int, preference: list[int]) -> tuple[int, ...]:
    k, t, _ = balanced_sizes(n, alpha)
    sizes = [k] * alpha
    for node in preference[:t]:
        sizes[node] += 1
    return tuple(sizes)


def clique_path_spec(n: int, alpha: int) -> CliqueTreeSpec:
    k, t, _ = balanced_sizes(n, alpha)
    order = [0, alpha - 1] + list(range(1, alpha - 1)) if alpha > 1 else [0]
    sizes = _size_assignment(n, alpha, order)
    if alpha >= 3 and min(sizes[1:-1]) < 2:
        raise ValueError(
            f"clique path ({n}, {alpha}) needs internal cliques of order >= 2 "
            "to host two distinct bridge ends"
        )
    edges = tuple((i, i + 1) for i in range(alpha - 1))
    # bridge leaves clique i at its last vertex and enters clique i+1 at vertex 0
    att = tuple((sizes[i] - 1, 0) for i in range(alpha - 1))
    return CliqueTreeSpec(alpha, edges, sizes, att)


def clique_path(n: int, alpha: int) -> Graph:
    """Path of ``alpha`` near-equal cliques, consecutive bridges on distinct vertices."""
    return blowup(clique_path_spec(n, alpha))


def clique_star_spec(n: int, alpha: int) -> CliqueTreeSpec:
    if alpha < 2:
        raise ValueError("a clique star needs alpha >= 2")
    balanced_sizes(n, alpha)
    sizes = _size_assignment(n, alpha, list(range(1, alpha)) + [0])
    edges = tuple((0, i) for i in range(1, alpha))
    att = tuple((0, 0) for _ in edges)
    return CliqueTreeSpec(alpha, edges, sizes, att)


def clique_star(n: int, alpha: int) -> Graph:
    """Star of cliques with every bridge sharing vertex 0 of the centre clique."""
    return blowup(clique_star_spec(n, alpha))
