"""Spectral radius, Perron vectors, exact characteristic polynomials and
closed-walk counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy

from .graphcore import Graph, components, is_bipartite, is_connected

RESIDUAL_TOL = 1e-10
ITERATION_CAP = 1_000_000
CHARPOLY_MAX_N = 16


class ConvergenceError(RuntimeError):
    """Power iteration hit its cap; the tolerance or cap is misconfigured."""


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    perron: tuple[float, ...]
    residual: float
    iterations: int
    component_map: tuple[SpectralResult, ...] = field(default=(), repr=False)
    vertices: tuple[int, ...] = ()


def _component_power(a: np.ndarray, tol: float, cap: int) -> tuple[float, np.ndarray, float, int]:
    n = a.shape[0]
    if n == 1:
        return 0.0, np.ones(1), 0.0, 0
    shifted = a + np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    for it in range(1, cap + 1):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        ax = a @ x
        lam = float(x @ ax)
        res = float(np.max(np.abs(ax - lam * x)))
        if res <= tol:
            return lam, x, res, it
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {cap} steps")


def spectral_radius(g: Graph, tol: float | None = None, cap: int | None = None) -> SpectralResult:
    """Largest adjacency eigenvalue by shifted power iteration per component.

    Iterates on ``A + I`` from the all-ones vector, which avoids the
    ``+-lambda`` oscillation of bipartite components. For a disconnected
    graph the result carries the component results; ``perron`` is then the
    dominant component's vector embedded with zeros elsewhere.
    """
    tol = RESIDUAL_TOL if tol is None else tol
    cap = ITERATION_CAP if cap is None else cap
    a = g.to_numpy()
    comps = components(g)
    parts = []
    for comp in comps:
        sub = a[np.ix_(comp, comp)]
        lam, x, res, it = _component_power(sub, tol, cap)
        parts.append(SpectralResult(lam, tuple(float(v) for v in x), res, it, (), tuple(comp)))
    if len(parts) == 1:
        p = parts[0]
        return SpectralResult(p.lam, p.perron, p.residual, p.iterations)
    best = max(parts, key=lambda p: p.lam)
    vec = np.zeros(g.n)
    vec[list(best.vertices)] = best.perron
    return SpectralResult(
        best.lam,
        tuple(float(v) for v in vec),
        max(p.residual for p in parts),
        sum(p.iterations for p in parts),
        tuple(parts),
    )


def spectral_radius_value(g: Graph) -> float:
    return spectral_radius(g).lam


# -- exact integer arithmetic ----------------------------------------------

def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


def char_poly_exact(g: Graph, max_n: int = CHARPOLY_MAX_N) -> tuple[int, ...]:
    """Coefficients of ``det(xI - A)``, highest degree first.

    Faddeev-LeVerrier in Python integers: ``M_k = A M_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(A M_k) / k``; every division is exact.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"exact characteristic polynomial capped at n={max_n}, got {n}")
    a = g.to_int_matrix()
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        am = _matmul(a, m) if k > 1 else m
        m = [[am[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        amk = _matmul(a, m)
        tr = sum(amk[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(q)
    return tuple(coeffs)


def poly_eval(coeffs: tuple[int, ...], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _max_root_interval(p: sympy.Poly, eps: Fraction) -> tuple[Fraction, Fraction]:
    ivs = p.intervals(eps=eps)
    (lo, hi), _ = ivs[-1]
    return Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))


def _roots_in(f: sympy.Poly, lo, hi) -> int:
    return f.count_roots(lo, hi)


def _roots_above(f: sympy.Poly, hi) -> int:
    return f.count_roots(hi, None) - (1 if f.eval(hi) == 0 else 0)


def compare_largest_roots(p: tuple[int, ...], q: tuple[int, ...]) -> int:
    """Exact sign of ``maxroot(p) - maxroot(q)`` for real-rooted integer polynomials."""
    if p == q:
        return 0
    x = sympy.Symbol("x")
    pp = sympy.Poly(list(p), x)
    qq = sympy.Poly(list(q), x)
    g = sympy.gcd(pp, qq)
    if g.degree() > 0 and g.count_roots() > 0:
        lo, hi = (sympy.Rational(b.numerator, b.denominator)
                  for b in _max_root_interval(g, Fraction(1, 10**6)))
        # the top root of g is shared; it is the top root of p (resp. q) iff
        # it is the only root of p in [lo, hi] and none lies above hi
        if all(_roots_in(f, lo, hi) == 1 and _roots_above(f, hi) == 0 for f in (pp, qq)):
            return 0
    eps = Fraction(1, 10**4)
    for _ in range(60):
        plo, phi = _max_root_interval(pp, eps)
        qlo, qhi = _max_root_interval(qq, eps)
        if plo > qhi:
            return 1
        if qlo > phi:
            return -1
        eps /= 1000
    raise ArithmeticError("could not separate largest roots")


# -- closed walks ----------------------------------------------------------

def matrix_power(a: list[list[int]], s: int) -> list[list[int]]:
    n = len(a)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = a
    while s:
        if s & 1:
            result = _matmul(result, base)
        s >>= 1
        if s:
            base = _matmul(base, base)
    return result


def closed_walks(g: Graph, v: int, s: int) -> int:
    """Number of closed walks of length ``s`` starting and ending at ``v``."""
    if s < 1:
        raise ValueError("walk length must be positive")
    return matrix_power(g.to_int_matrix(), s)[v][v]


@dataclass(frozen=True)
class WalkRatioTrace:
    vi: int
    vj: int
    ratios: tuple[tuple[int, int, int], ...]  # (s, sigma_s(vi), sigma_s(vj))
    perron_i: float
    perron_j: float
    final_ratio: float
    squared_perron_ratio: float
    limit_gap: float
    verdict: bool


def walk_ratio_check(
    g: Graph, vi: int, vj: int, s_max: int, tol: float = 1e-6
) -> WalkRatioTrace:
    """Compare ``sigma_s(vi)/sigma_s(vj)`` for large ``s`` with the Perron entries.

    The ratio tends to ``x_i**2 / x_j**2``; the verdict holds when the side of 1
    the ratio sits on at ``s_max`` agrees with the order of ``x_i`` and ``x_j``.
    """
    if vi == vj:
        raise ValueError("need two distinct vertices")
    if not is_connected(g) or is_bipartite(g):
        raise ValueError("walk ratio limits need a connected non-bipartite graph")
    a = g.to_int_matrix()
    trace = []
    power = a
    for s in range(1, s_max + 1):
        if s > 1:
            power = _matmul(power, a)
        si, sj = power[vi][vi], power[vj][vj]
        if sj:
            trace.append((s, si, sj))
    res = spectral_radius(g)
    xi, xj = res.perron[vi], res.perron[vj]
    _, si, sj = trace[-1]
    final = float(Fraction(si, sj))
    target = (xi / xj) ** 2
    gap = abs(final - target)
    if abs(xi - xj) <= tol:
        verdict = abs(final - 1.0) <= tol
    else:
        verdict = (final > 1.0) == (xi > xj)
    return WalkRatioTrace(vi, vj, tuple(trace), xi, xj, final, target, gap, verdict)
