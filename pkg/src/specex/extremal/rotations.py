"""Edge-rotation instances: a graph ``G`` and the graph ``G'`` obtained by
moving one bridge, together with the vertex labels of the moved edge.

Layout shared by the two clique-path rotations: a host graph ``H`` is joined
through one of its non-cut vertices to the first clique ``V_1`` of a clique
path ``V_1 ... V_{l+p}``. Clique ``V_i`` enters at its vertex ``v_{i,1}`` and
leaves towards ``V_{i+1}`` from ``v_{i,k}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from ..combinat import independence_number
from ..graphcore import (
    Graph,
    clique_path,
    clique_star,
    complete_graph,
    cut_vertices,
    disjoint_union,
    graph6_encode,
    is_connected,
    is_isomorphic,
)
from ..spectral import char_poly_exact, compare_largest_roots, spectral_radius
from .reports import CheckEntry, CheckReport, aggregate

STRICT_MARGIN = 1e-9
EXACT_BELOW = 1e-6


@dataclass(frozen=True)
class RotationInstance:
    lemma: str
    g: Graph
    g_prime: Graph
    labels: dict[str, int]
    params: dict[str, Any] = field(default_factory=dict)

    def __iter__(self):
        return iter((self.g, self.g_prime))


def contains_subgraph(host: Graph, pattern: Graph, forbidden: int = 0) -> bool:
    """Whether ``pattern`` embeds (not necessarily induced) into ``host``
    avoiding the vertex set ``forbidden`` (a bitmask)."""
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    placed: dict[int, int] = {}

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = ((1 << host.n) - 1) & ~used & ~forbidden
        for q, hq in placed.items():
            if pattern.has_edge(p, q):
                cand &= host.adj[hq]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            if host.degree(h) < pattern.degree(p):
                continue
            placed[p] = h
            if extend(i + 1, used | low):
                return True
            del placed[p]
        return False

    return extend(0, 0)


def _check_host(h: Graph, hv: int, k: int) -> None:
    if not is_connected(h):
        raise ValueError("host graph must be connected")
    if hv in cut_vertices(h):
        raise ValueError(f"vertex {hv} is a cut vertex of the host graph")
    a = independence_number(h)
    if h.n != k * a:
        raise ValueError(f"host order {h.n} is not k*alpha(H) = {k}*{a}")


def _attach_path(h: Graph, hv: int, k: int, l: int, p: int) -> tuple[Graph, dict[str, int]]:
    if k < 2:
        raise ValueError("k must be at least 2")
    if l < 1:
        raise ValueError("l >= 1 is required: no clique lies beyond V_p to move")
    if p < 1:
        raise ValueError("p must be at least 1")
    path = clique_path(k * (l + p), l + p)
    g = disjoint_union(h, path)
    off = h.n
    g = g.add_edge(hv, off)

    def v(i: int, j: int) -> int:
        return off + (i - 1) * k + (j - 1)

    labels = {"hv": hv, "v_11": v(1, 1), "v_p1": v(p, 1), "v_pk": v(p, k), "v_p+1,1": v(p + 1, 1)}
    return g, labels


def build_L2_instance(h: Graph, hv: int, k: int, l: int, p: int) -> RotationInstance:
    """Move the tail ``V_{p+1} ... V_{l+p}`` from ``v_3 = v_{p,k}`` onto ``v_1 = hv``."""
    _check_host(h, hv, k)
    if l >= 1 and not contains_subgraph(h, clique_path(k * l, l), forbidden=1 << hv):
        raise ValueError(f"host has no clique path P_{{{k * l},{l}}} avoiding vertex {hv}")
    g, lab = _attach_path(h, hv, k, l, p)
    v1, v2, v3, v4 = hv, lab["v_p1"], lab["v_pk"], lab["v_p+1,1"]
    g_prime = g.remove_edge(v3, v4).add_edge(v1, v4)
    labels = {"v1": v1, "v2": v2, "v3": v3, "v4": v4}
    return RotationInstance("L2", g, g_prime, labels, {"k": k, "l": l, "p": p})


def _clique_partner(h: Graph, hv: int, k: int) -> int:
    """Smallest vertex sharing a ``K_k`` with ``hv``."""
    nbrs = h.neighbors(hv)

    def grow(chosen: list[int], cand: list[int]) -> list[int] | None:
        if len(chosen) == k - 1:
            return chosen
        for i, u in enumerate(cand):
            rest = [w for w in cand[i + 1:] if h.has_edge(u, w)]
            found = grow(chosen + [u], rest)
            if found:
                return found
        return None

    for u in nbrs:
        if grow([u], [w for w in nbrs if w > u and h.has_edge(u, w)]):
            return u
    raise ValueError(f"vertex {hv} lies in no K_{k} of the host graph")


def build_L6_instance(
    h: Graph, hv: int, k: int, l: int, p: int, v01: int | None = None
) -> RotationInstance:
    """Move the tail ``V_{p+1} ... V_{l+p}`` from ``v_{p,k}`` onto ``v_{0,1}``,
    a clique-mate of the junction vertex ``v_{0,k} = hv`` inside ``H``."""
    if is_isomorphic(h, complete_graph(h.n)) and h.n == k:
        raise ValueError("host graph must differ from K_k")
    _check_host(h, hv, k)
    if v01 is None:
        v01 = _clique_partner(h, hv, k)
    elif not h.has_edge(v01, hv):
        raise ValueError("v01 must be adjacent to hv")
    g, lab = _attach_path(h, hv, k, l, p)
    g_prime = g.remove_edge(lab["v_pk"], lab["v_p+1,1"]).add_edge(v01, lab["v_p+1,1"])
    labels = {
        "v_01": v01,
        "v_0k": hv,
        "v_11": lab["v_11"],
        "v_pk": lab["v_pk"],
        "v_p+1,1": lab["v_p+1,1"],
    }
    return RotationInstance("L6", g, g_prime, labels, {"k": k, "l": l, "p": p})


def build_L5_instance(base: Graph, u: int, v: int, paths: Sequence[int]) -> RotationInstance:
    """Hang ``t = len(paths)`` clique paths on ``u`` and move the first onto ``v``.

    ``u`` and ``v`` must lie in a common ``K_k`` of ``base`` and have no other
    neighbours, so that ``d_G(u) - t = d_G(v) = k - 1``.
    """
    t = len(paths)
    if t < 2:
        raise ValueError("at least two pendant clique paths are required")
    if u == v or not base.has_edge(u, v):
        raise ValueError("u and v must be adjacent")
    k = base.degree(v) + 1
    closed_v = base.adj[v] | 1 << v
    closed_u = base.adj[u] | 1 << u
    members = [w for w in range(base.n) if closed_v >> w & 1]
    if closed_u != closed_v or any(closed_v & ~(base.adj[w] | 1 << w) for w in members):
        raise ValueError("degree hypothesis fails: u and v need identical closed neighbourhoods forming a clique")
    if k < 2:
        raise ValueError("k must be at least 2")
    g = base
    anchors = []
    for length in paths:
        if length < 1:
            raise ValueError("pendant clique paths need length >= 1")
        off = g.n
        g = disjoint_union(g, clique_path(k * length, length)).add_edge(u, off)
        anchors.append(off)
    if g.degree(u) - t != k - 1 or g.degree(v) != k - 1:
        raise ValueError("degree hypothesis fails")
    u1 = anchors[0]
    g_prime = g.remove_edge(u, u1).add_edge(v, u1)
    return RotationInstance(
        "L5", g, g_prime, {"u": u, "v": v, "u1": u1}, {"k": k, "paths": list(paths)}
    )


def verify_rotation(inst: RotationInstance, expected: str) -> CheckEntry:
    """Strict spectral radius change from ``G`` to ``G'`` in the expected direction."""
    if expected not in ("increase", "decrease"):
        raise ValueError("expected must be 'increase' or 'decrease'")
    g, gp = inst
    lam, lam_p = spectral_radius(g).lam, spectral_radius(gp).lam
    diff = lam_p - lam
    want = 1 if expected == "increase" else -1
    data: dict[str, Any] = {
        "lemma": inst.lemma,
        "params": inst.params,
        "labels": inst.labels,
        "lambda": lam,
        "lambda_prime": lam_p,
        "margin": diff * want,
        "g_prime": graph6_encode(gp),
    }
    entry = CheckEntry(graph6_encode(g), True, data=data)
    if abs(diff) < EXACT_BELOW and gp.n <= 16:
        exact = compare_largest_roots(char_poly_exact(gp), char_poly_exact(g))
        data["exact_sign"] = exact
        if exact != want:
            entry.violations.append({"detail": f"exact comparison contradicts {expected}", "exact_sign": exact})
            return entry
    if diff * want <= STRICT_MARGIN:
        entry.violations.append({"detail": f"no strict {expected}", "margin": diff * want})
    return entry


# -- parameter grid ------------------------------------------------------------

def _two_clique_ring(k: int) -> Graph:
    """Two copies of ``K_k`` joined by two disjoint edges."""
    g = disjoint_union(complete_graph(k), complete_graph(k))
    return g.add_edge(0, k).add_edge(k - 1, 2 * k - 1)


def host_catalog(k: int) -> list[tuple[str, Graph]]:
    return [
        (f"P_{{{2 * k},2}}", clique_path(2 * k, 2)),
        (f"P_{{{3 * k},3}}", clique_path(3 * k, 3)),
        (f"S({3 * k},3)", clique_star(3 * k, 3)),
        (f"ring({k})", _two_clique_ring(k)),
    ]


def _first_non_cut(h: Graph) -> int:
    cuts = set(cut_vertices(h))
    return min(v for v in range(h.n) if v not in cuts)


def l5_catalog(k: int) -> list[tuple[str, Graph, int, int]]:
    """Bases with two adjacent vertices of degree ``k-1`` in one clique."""
    out = [(f"K_{k}", complete_graph(k), 0, 1)]
    if k >= 3:
        out.append((f"P_{{{2 * k},2}}", clique_path(2 * k, 2), 0, 1))
        out.append((f"P_{{{3 * k},3}}", clique_path(3 * k, 3), 0, 1))
        star = clique_star(3 * k, 3)
        out.append((f"S({3 * k},3)", star, k + 1, k + 2))
    return out


L5_PATHS = ((1, 1), (1, 2), (2, 1), (2, 2), (1, 1, 1))


def rotation_grid(
    ks: Sequence[int] = (2, 3), ls: Sequence[int] = (0, 1), ps: Sequence[int] = (1, 2)
) -> CheckReport:
    """Every constructible L2/L5/L6 instance on the parameter grid."""
    entries: list[CheckEntry] = []
    skipped: list[str] = []
    for k in ks:
        for hname, h in host_catalog(k):
            hv = _first_non_cut(h)
            for l in ls:
                for p in ps:
                    for lemma, build in (("L2", build_L2_instance), ("L6", build_L6_instance)):
                        tag = f"{lemma} k={k} l={l} p={p} H={hname}"
                        try:
                            inst = build(h, hv, k, l, p)
                        except ValueError as exc:
                            skipped.append(f"{tag}: {exc}")
                            continue
                        e = verify_rotation(inst, "increase")
                        e.data["host"] = hname
                        entries.append(e)
        for bname, base, u, v in l5_catalog(k):
            for paths in L5_PATHS:
                tag = f"L5 k={k} base={bname} paths={paths}"
                try:
                    inst = build_L5_instance(base, u, v, paths)
                except ValueError as exc:
                    skipped.append(f"{tag}: {exc}")
                    continue
                e = verify_rotation(inst, "decrease")
                e.data["base"] = bname
                entries.append(e)
    reasons: dict[str, int] = {}
    for s in skipped:
        reason = s.split(": ", 1)[1]
        reasons[reason] = reasons.get(reason, 0) + 1
    rep = aggregate(
        "rotations",
        {"k": list(ks), "l": list(ls), "p": list(ps), "l5_paths": [list(x) for x in L5_PATHS]},
        entries,
        notes=[f"skipped {c} grid points: {r}" for r, c in reasons.items()],
    )
    rep.data = {
        "skipped": skipped,
        "instances": [{"graph6": e.subject, **e.data} for e in entries],
        "per_lemma": {
            name: sum(1 for e in entries if e.data["lemma"] == name) for name in ("L2", "L5", "L6")
        },
    }
    return rep
