"""Command-line entry point.

Usage:
    specex construct --family path --n 6 --alpha 3
    specex spectral Bw
    specex enumerate --n 6 --alpha 3 --connected --family g
    specex search --n 6 --alpha 3 --objective min --family g
    specex verify floor --n 6 --alpha 3

Exit status: 0 when every emitted report is free of violations, 2 when at
least one violation was recorded, 1 on usage or runtime errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from . import __version__, spectral
from .enumeration import CapExceeded, all_graphs, connected_graphs, family_G, family_T, max_n_cap
from .extremal import (
    bv_grid,
    check_L1,
    check_lambda_floor,
    check_T1,
    check_Z,
    innu_grid,
    limit_trend,
    rotation_grid,
    search_extremal,
    t4_grid,
)
from .extremal.parallel import default_jobs
from .graphcore import (
    Graph,
    Graph6Error,
    clique_path,
    clique_star,
    complete_graph,
    graph6_decode,
    graph6_encode,
    turan_union,
)

CHECKS = ("l1", "limit", "t4", "bv", "innu", "floor", "z", "t1", "l2", "l5", "l6", "all")
DESK_PAIRS = ((4, 2), (6, 2), (6, 3), (8, 2), (8, 4))


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    check: str | None = None
    n: int | None = None
    alpha: int | None = None
    k_range: list[int] = field(default_factory=list)
    family: str | None = None
    objective: str | None = None
    connected: bool = False
    max_n: int = 9
    iteration_cap: int = spectral.ITERATION_CAP
    tol: float = spectral.RESIDUAL_TOL
    format: str = "json"
    output: str | None = None
    jobs: int = 1
    graphs: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if self.max_n < 1 or self.iteration_cap < 1 or self.jobs < 1:
            raise UsageError("caps and parallelism must be positive")
        if not 0 < self.tol < 1e-3:
            raise UsageError("tolerance must lie in (0, 1e-3)")
        if self.format not in ("json", "csv", "graph6"):
            raise UsageError(f"unknown output format {self.format!r}")
        needs = {
            "construct": ("n", "alpha", "family"),
            "enumerate": ("n",),
            "search": ("n", "alpha", "objective", "family"),
        }.get(self.command, ())
        missing = [f for f in needs if getattr(self, f) in (None, [])]
        if missing:
            raise UsageError(f"{self.command} requires --{' --'.join(missing)}")
        if self.command == "verify":
            if self.check not in CHECKS:
                raise UsageError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")
            if self.check in ("l1", "floor", "z") and (self.n is None) != (self.alpha is None):
                raise UsageError(f"verify {self.check} needs both --n and --alpha (or neither)")
            if self.check == "limit" and self.alpha is None:
                raise UsageError("verify limit requires --alpha")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "graph6"), default=None)
    common.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    common.add_argument("--max-n", type=int, default=None, help="enumeration cap (env SPECEX_MAX_N)")
    common.add_argument("--iteration-cap", type=int, default=spectral.ITERATION_CAP)
    common.add_argument("--tol", type=float, default=spectral.RESIDUAL_TOL)

    p = _Parser(prog="specex", description="Spectral extremal graph verification.")
    p.add_argument("--version", action="version", version=f"specex {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="emit a family graph")
    c.add_argument("--family", required=True, choices=("path", "star", "turan", "complete"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", type=int, default=1)

    s = sub.add_parser("spectral", parents=[common], help="spectral data for graph6 input")
    s.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin)")

    e = sub.add_parser("enumerate", parents=[common], help="stream graphs of one order")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--alpha", type=int)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--family", choices=("g", "t", "all"), default="all")

    q = sub.add_parser("search", parents=[common], help="extremal spectral radius search")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--alpha", type=int, required=True)
    q.add_argument("--objective", choices=("min", "max"), required=True)
    q.add_argument("--family", choices=("g", "t"), required=True)

    v = sub.add_parser("verify", parents=[common], help="run a named check")
    v.add_argument("check", help=" | ".join(CHECKS))
    v.add_argument("--n", type=int)
    v.add_argument("--alpha", type=int)
    v.add_argument("--k-min", type=int, default=2)
    v.add_argument("--k-max", type=int, default=12)
    v.add_argument("--graph", action="append", default=[], help="graph6 input for t1")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    default_format = {"construct": "graph6", "enumerate": "graph6"}.get(ns.command, "json")
    cfg = RunConfig(
        command=ns.command,
        check=getattr(ns, "check", None),
        n=getattr(ns, "n", None),
        alpha=getattr(ns, "alpha", None),
        family=getattr(ns, "family", None),
        objective=getattr(ns, "objective", None),
        connected=getattr(ns, "connected", False),
        max_n=ns.max_n if ns.max_n is not None else max_n_cap(),
        iteration_cap=ns.iteration_cap,
        tol=ns.tol,
        format=ns.format or default_format,
        output=ns.output,
        jobs=ns.jobs if ns.jobs is not None else default_jobs(),
        graphs=list(getattr(ns, "graphs", None) or getattr(ns, "graph", None) or []),
    )
    if ns.command == "verify":
        cfg.k_range = list(range(ns.k_min, ns.k_max + 1))
    return cfg


# -- commands ----------------------------------------------------------------

def _construct(cfg: RunConfig) -> list[Graph]:
    n, a = cfg.n, cfg.alpha
    builders = {
        "path": lambda: clique_path(n, a),
        "star": lambda: clique_star(n, a),
        "turan": lambda: turan_union(n, a),
        "complete": lambda: complete_graph(n),
    }
    return [builders[cfg.family]()]


def _read_graphs(cfg: RunConfig) -> list[Graph]:
    lines = cfg.graphs or [ln for ln in sys.stdin.read().split() if ln]
    return [graph6_decode(ln) for ln in lines]


def _spectral_record(g: Graph) -> dict[str, Any]:
    res = spectral.spectral_radius(g)
    rec: dict[str, Any] = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "m": g.edge_count,
        "lambda": res.lam,
        "perron": list(res.perron),
        "residual": res.residual,
        "iterations": res.iterations,
    }
    if g.n <= spectral.CHARPOLY_MAX_N:
        rec["char_poly"] = list(spectral.char_poly_exact(g))
    return rec


def _enumerate(cfg: RunConfig) -> list[Graph]:
    n, a = cfg.n, cfg.alpha
    if cfg.family == "t":
        if a is None:
            raise UsageError("--family t requires --alpha")
        return list(family_T(n, a))
    if cfg.family == "g":
        if a is None:
            raise UsageError("--family g requires --alpha")
        return list(family_G(n, a, cfg.max_n))
    src = connected_graphs(n, cfg.max_n) if cfg.connected else all_graphs(n, cfg.max_n)
    if a is None:
        return list(src)
    from .combinat import independence_number

    return [g for g in src if independence_number(g) == a]


def _verify(cfg: RunConfig) -> list:
    chk = cfg.check
    reports = []
    pairs = [(cfg.n, cfg.alpha)] if cfg.n is not None else list(DESK_PAIRS)
    cap = min(cfg.max_n, 7) if cfg.n is None else cfg.max_n
    if chk in ("l1", "all"):
        l1_pairs = pairs if cfg.n is not None else [(6, 3), (6, 2), (7, 3), (8, 4), (8, 2)]
        reports += [check_L1(n, a, enumerate_up_to=min(cfg.max_n, 8)) for n, a in l1_pairs]
    if chk in ("limit", "all"):
        alphas = [cfg.alpha] if cfg.alpha is not None else [2, 3]
        ks = cfg.k_range or list(range(2, 13))
        reports += [limit_trend(a, ks) for a in alphas]
    if chk in ("t4", "all"):
        reports.append(t4_grid(cfg.n or cap))
    if chk in ("bv", "all"):
        reports.append(bv_grid(cfg.n or cap))
    if chk in ("innu", "all"):
        alphas = [cfg.alpha] if cfg.alpha is not None else [2, 3]
        reports.append(innu_grid(cfg.n or cap, alphas))
    if chk in ("floor", "all"):
        reports += [check_lambda_floor(n, a, cfg.max_n) for n, a in pairs]
    if chk in ("z", "all"):
        reports += [check_Z(n, a, cfg.max_n) for n, a in pairs]
    if chk in ("t1", "all"):
        from .graphcore import Graph as _G

        graphs = [graph6_decode(s) for s in cfg.graphs] or [
            _G.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
            clique_path(6, 2),
        ]
        reports.append(check_T1(graphs))
    if chk in ("l2", "l5", "l6", "all"):
        rep = rotation_grid()
        if chk != "all":
            lemma = chk.upper()
            keep = [i for i in rep.data["instances"] if i["lemma"] == lemma]
            rep.check = lemma
            rep.violations = [v for v in rep.violations if any(v["graph6"] == i["graph6"] for i in keep)]
            rep.graphs_tested = len(keep)
            rep.data["instances"] = keep
            rep.verdict = "fail" if rep.violations else ("pass" if keep else "vacuous")
        reports.append(rep)
    return reports


# -- output ------------------------------------------------------------------

def _render_json(cfg: RunConfig, payload: list[dict[str, Any]]) -> str:
    config = asdict(cfg)
    del config["output"]  # the destination does not affect the results
    doc = {
        "tool": "specex",
        "version": __version__,
        "config": config,
        "results": payload,
    }
    return json.dumps(doc, indent=2) + "\n"


def _report_rows(reports: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "name", "params", "verdict", "tested", "violations", "value", "graphs"])
    for r in reports:
        d = r.to_dict()
        if d["kind"] == "extremal":
            w.writerow([
                "extremal", f"{d['objective']}-{d['family']}",
                f"n={d['n']};alpha={d['alpha']}",
                "match" if d["matches_prediction"] else "mismatch",
                d["graphs_scanned"], 0, d["optimum_lambda"], " ".join(d["attainers"]),
            ])
        else:
            params = ";".join(f"{k}={v}" for k, v in d["params"].items())
            w.writerow([
                "check", d["check"], params, d["verdict"], d["graphs_tested"],
                len(d["violations"]), "", " ".join(d["witnesses"]),
            ])
    return buf.getvalue()


def _report_graph6(reports: list) -> str:
    lines = []
    for r in reports:
        d = r.to_dict()
        lines += d.get("attainers", []) or d.get("witnesses", [])
        lines += [v["graph6"] for v in d.get("violations", []) if "graph6" in v]
    return "".join(ln + "\n" for ln in lines)


def execute(cfg: RunConfig) -> tuple[str, int]:
    """Run one configured command; returns rendered output and exit status."""
    cfg.validate()
    spectral.RESIDUAL_TOL = cfg.tol
    spectral.ITERATION_CAP = cfg.iteration_cap
    if cfg.command in ("construct", "enumerate"):
        graphs = _construct(cfg) if cfg.command == "construct" else _enumerate(cfg)
        if cfg.format == "graph6":
            return "".join(graph6_encode(g) + "\n" for g in graphs), 0
        recs = [{"graph6": graph6_encode(g), "n": g.n, "m": g.edge_count} for g in graphs]
        if cfg.format == "csv":
            return "graph6,n,m\n" + "".join(f"{r['graph6']},{r['n']},{r['m']}\n" for r in recs), 0
        return _render_json(cfg, recs), 0
    if cfg.command == "spectral":
        recs = [_spectral_record(g) for g in _read_graphs(cfg)]
        if cfg.format == "graph6":
            return "".join(r["graph6"] + "\n" for r in recs), 0
        if cfg.format == "csv":
            rows = "".join(
                f"{r['graph6']},{r['lambda']!r},{r['residual']!r},{' '.join(map(str, r.get('char_poly', [])))}\n"
                for r in recs
            )
            return "graph6,lambda,residual,char_poly\n" + rows, 0
        return _render_json(cfg, recs), 0
    if cfg.command == "search":
        reports = [search_extremal(cfg.n, cfg.alpha, cfg.objective, cfg.family.upper(), cfg.jobs, cfg.max_n)]
    elif cfg.command == "verify":
        reports = _verify(cfg)
    else:
        raise UsageError(f"unknown command {cfg.command!r}")
    status = 2 if any(r.violations for r in reports) else 0
    if cfg.format == "csv":
        return _report_rows(reports), status
    if cfg.format == "graph6":
        return _report_graph6(reports), status
    return _render_json(cfg, [r.to_dict() for r in reports]), status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text, status = execute(cfg)
    except (UsageError, CapExceeded, Graph6Error, ValueError) as exc:
        print(f"specex: error: {exc}", file=sys.stderr)
        return 1
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
