"""Tradeoff solvers.

The production path reduces the exponent minimisation to two scalar levels
(direct-link level ``a`` and source-relay level ``b``) and minimises over the
feasible box with a dense grid pass followed by derivative-free local
refinement.  A brute-force grid oracle over the full exponent vectors
cross-checks it on small configurations, and the closed forms known for
special antenna arrangements are provided with their domain logic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import (
    AntennaConfig,
    ConfigurationError,
    DmtCurve,
    DmtPoint,
    DomainError,
    ExponentTriple,
    _coeffs,
    _pos,
    direct_level_range,
    exponent_profile,
    fd_dmt,
    ptp_dmt,
)

_TOL = 1e-9
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class SolverRefusal(RuntimeError):
    """A solver declined an instance that exceeds its practical size cap."""


@dataclass(frozen=True)
class LevelTriple:
    """Aggregate levels of the three links: direct a, in-hop b, out-hop s."""

    a: float
    b: float
    s: float


@dataclass(frozen=True)
class SolveResult:
    """Diversity value with the minimiser that attains it and solver stats."""

    d: float
    argmin: Union[LevelTriple, ExponentTriple]
    method: str
    evaluations: int


# ---------------------------------------------------------------------------
# scalar and vectorised evaluation of the reduced objective


def _profile_rows(levels: np.ndarray, length: int) -> np.ndarray:
    """Row-wise exponent profiles for an array of levels."""
    idx = np.arange(length, dtype=float)
    return np.clip(1.0 - np.clip(levels[:, None] - idx[None, :], 0.0, None), 0.0, 1.0)


def _objective_rows(config: AntennaConfig, pa, pb, pd) -> np.ndarray:
    """Objective on stacked profile rows; mirrors core.diversity_objective."""
    obj_alpha, _, w_beta, w_delta, ab_pairs, ad_pairs = _coeffs(config)
    total = pa @ np.asarray(obj_alpha)
    total += pb @ np.asarray(w_beta)
    total += pd @ np.asarray(w_delta)
    total -= 2.0 * config.k * config.u
    for i, j in ab_pairs:
        total += np.clip(1.0 - pa[:, i] - pb[:, j], 0.0, None)
    for i, l in ad_pairs:
        total += np.clip(1.0 - pa[:, i] - pd[:, l], 0.0, None)
    return total


class _TwoVarObjective:
    """Scalar objective over normalised coordinates (a, t) with t in [0, 1]
    spanning the feasible b interval at each a.  Counts evaluations."""

    def __init__(self, config: AntennaConfig, r: float):
        self.config = config
        self.r = r
        self.coeffs = _coeffs(config)
        self.evaluations = 0

    def levels(self, a: float, t: float):
        c, r = self.config, self.r
        b_cap = min(float(c.p), c.m - a)
        s_cap = min(float(c.q), c.n - a)
        rest = r - a
        if rest <= 1e-15:
            # no rate left for the relay path: the feasible set degenerates to
            # the two axis segments b = 0 or s = 0, swept back to back
            if t <= 0.5:
                return a, 0.0, (1.0 - 2.0 * t) * s_cap
            return a, (2.0 * t - 1.0) * b_cap, 0.0
        slack = s_cap - rest  # positive inside the level range, float dust aside
        b_lo = b_cap if slack <= 0.0 else min(s_cap * rest / slack, b_cap)
        b = b_lo + t * (b_cap - b_lo)
        denom = b - rest
        s = s_cap if denom <= 0.0 else min(b * rest / denom, s_cap)
        return a, b, s

    def value(self, a: float, b: float, s: float) -> float:
        self.evaluations += 1
        c = self.config
        obj_alpha, _, w_beta, w_delta, ab_pairs, ad_pairs = self.coeffs
        pa = exponent_profile(min(a, c.u), c.u)
        pb = exponent_profile(min(b, c.p), c.p)
        pd = exponent_profile(min(s, c.q), c.q)
        total = -2.0 * c.k * c.u
        for cf, x in zip(obj_alpha, pa):
            total += cf * x
        for cf, x in zip(w_beta, pb):
            total += cf * x
        for cf, x in zip(w_delta, pd):
            total += cf * x
        for i, j in ab_pairs:
            total += _pos(1.0 - pa[i] - pb[j])
        for i, l in ad_pairs:
            total += _pos(1.0 - pa[i] - pd[l])
        return total

    def __call__(self, a: float, t: float) -> float:
        a, b, s = self.levels(a, t)
        return self.value(a, b, s)


def _golden(fun, lo: float, hi: float, iters: int = 40):
    """Shrinking-interval minimisation on [lo, hi]; endpoint-aware."""
    lo0, hi0 = lo, hi
    if hi - lo <= 1e-15:
        x = 0.5 * (lo + hi)
        return x, fun(x)
    f_lo, f_hi = fun(lo0), fun(hi0)
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = fun(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = fun(x2)
    best = min([(f1, x1), (f2, x2), (f_lo, lo0), (f_hi, hi0)])
    return best[1], best[0]


def _refine_two_var(obj, a0, t0, a_lo, a_hi, cell_a, cell_t, sweeps=8):
    """Coordinate golden-section around (a0, t0), then a compass polish that
    also probes diagonal moves (the objective kinks need not be axis-aligned).
    """
    a, t = a0, t0
    f = obj(a, t)
    for _ in range(sweeps):
        a_new, f_a = _golden(
            lambda x: obj(x, t), max(a - cell_a, a_lo), min(a + cell_a, a_hi)
        )
        if f_a < f:
            a, f = a_new, f_a
        t_new, f_t = _golden(
            lambda y: obj(a, y), max(t - cell_t, 0.0), min(t + cell_t, 1.0)
        )
        if f_t < f:
            t, f = t_new, f_t
        else:
            break
    h_a, h_t = cell_a, cell_t
    while h_a > 1e-11 or h_t > 1e-11:
        moved = False
        for da, dt in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)):
            a_c = min(max(a + da * h_a, a_lo), a_hi)
            t_c = min(max(t + dt * h_t, 0.0), 1.0)
            f_c = obj(a_c, t_c)
            if f_c < f - 1e-15:
                a, t, f = a_c, t_c, f_c
                moved = True
        if not moved:
            h_a *= 0.5
            h_t *= 0.5
    return a, t, f


def _pinned_level_candidates(obj, config, r, a_lo, a_hi, n_grid=241):
    """Minimise along 1-D slices where one hop level is pinned.

    Kink minima sit where a hop level equals an integer or runs at its cap;
    each such pin leaves a single free variable a, handled by a masked grid
    plus golden refinement.
    """
    a_grid = np.linspace(a_lo, a_hi, n_grid) if a_hi > a_lo else np.array([a_lo])
    cell = (a_hi - a_lo) / (len(a_grid) - 1) if len(a_grid) > 1 else 1e-6
    out = []

    def levels_for(kind, pin, a):
        b_cap = min(float(config.p), config.m - a)
        s_cap = min(float(config.q), config.n - a)
        rest = r - a
        if rest <= 1e-15:
            if kind == "b":
                return (a, pin, 0.0) if pin <= b_cap + 1e-12 else None
            return (a, 0.0, pin) if pin <= s_cap + 1e-12 else None
        slack = s_cap - rest
        b_lo = b_cap if slack <= 0.0 else min(s_cap * rest / slack, b_cap)
        if kind == "b":
            if not (b_lo - 1e-12 <= pin <= b_cap + 1e-12):
                return None
            b = min(max(pin, b_lo), b_cap)
            denom = b - rest
            s = s_cap if denom <= 0.0 else min(b * rest / denom, s_cap)
            return (a, b, s)
        if pin <= rest + 1e-15:
            return None
        b = pin * rest / (pin - rest)
        if not (-1e-12 <= b <= b_cap + 1e-12):
            return None
        return (a, min(max(b, 0.0), b_cap), min(pin, s_cap))

    pins = [("b", float(L)) for L in range(config.p + 1)]
    pins += [("s", float(L)) for L in range(config.q + 1)]
    for kind, pin in pins:
        scored = []
        for a in a_grid:
            lv = levels_for(kind, pin, float(a))
            if lv is not None:
                scored.append((obj.value(*lv), float(a)))
        if not scored:
            continue
        f0, a0 = min(scored)

        def along(a, _kind=kind, _pin=pin):
            lv = levels_for(_kind, _pin, a)
            return obj.value(*lv) if lv is not None else math.inf

        a_best, f_best = _golden(along, max(a0 - cell, a_lo), min(a0 + cell, a_hi))
        f, a = min((f_best, a_best), (f0, a0))
        lv = levels_for(kind, pin, a)
        if lv is not None:
            out.append((f, *lv))
    return out


def solve_two_var(
    config: AntennaConfig,
    r: float,
    *,
    grid_step: float = 0.01,
    starts: int = 8,
) -> SolveResult:
    """Diversity order at multiplexing gain r via the two-level reduction.

    A dense (a, b) grid locates the basin, then coordinate golden-section and
    a compass polish push each of the best ``starts`` cells to ~1e-11 axis
    resolution.  Ties within 1e-9 resolve to the smallest a, then smallest b.
    """
    top = float(config.max_mux)
    if r < -_TOL or r > top + _TOL:
        raise DomainError(f"r={r} outside [0, {top}]")
    r = min(max(r, 0.0), top)
    a_lo, a_hi = direct_level_range(config, r)
    obj = _TwoVarObjective(config, r)

    n_a = max(2, int(math.ceil((a_hi - a_lo) / grid_step)) + 1) if a_hi > a_lo else 1
    n_t = max(2, int(math.ceil(config.p / grid_step)) + 1)
    a_grid = np.linspace(a_lo, a_hi, n_a)
    t_grid = np.linspace(0.0, 1.0, n_t)

    b_cap = np.minimum(float(config.p), config.m - a_grid)
    s_cap = np.minimum(float(config.q), config.n - a_grid)
    rest = r - a_grid
    live = rest > 1e-15
    b_lo = np.zeros_like(a_grid)
    slack = np.maximum(s_cap[live] - rest[live], 1e-300)
    b_lo[live] = np.minimum(s_cap[live] * rest[live] / slack, b_cap[live])
    aa = np.repeat(a_grid, n_t)
    tt = np.tile(t_grid, n_a)
    bb = np.repeat(b_lo, n_t) + tt * np.repeat(b_cap - b_lo, n_t)
    rr = np.repeat(rest, n_t)
    caps_b = np.repeat(b_cap, n_t)
    caps_s = np.repeat(s_cap, n_t)
    ss = np.zeros_like(bb)
    mask = rr > 1e-15
    denom = bb[mask] - rr[mask]
    ss[mask] = np.where(denom <= 0.0, np.inf, bb[mask] * rr[mask] / np.maximum(denom, 1e-300))
    ss = np.minimum(ss, caps_s)
    # degenerate rows sweep the two axis segments back to back
    deg = ~mask
    bb[deg] = np.where(tt[deg] > 0.5, (2.0 * tt[deg] - 1.0) * caps_b[deg], 0.0)
    ss[deg] = np.where(tt[deg] <= 0.5, (1.0 - 2.0 * tt[deg]) * caps_s[deg], 0.0)
    values = _objective_rows(
        config,
        _profile_rows(aa, config.u),
        _profile_rows(bb, config.p),
        _profile_rows(ss, config.q),
    )
    obj.evaluations += values.size

    order = np.lexsort((bb, aa, values))
    cell_a = (a_hi - a_lo) / (n_a - 1) if n_a > 1 else max(grid_step, 1e-6)
    cell_t = 1.0 / (n_t - 1)
    candidates = []
    for idx in order[: max(1, starts)]:
        a0 = float(aa[idx])
        t0 = float(tt[idx])
        a, t, f = _refine_two_var(obj, a0, t0, a_lo, a_hi, cell_a, cell_t)
        _, b, s = obj.levels(a, t)
        candidates.append((f, a, b, s))
    candidates.extend(_pinned_level_candidates(obj, config, r, a_lo, a_hi))

    d_min = min(f for f, *_ in candidates)
    best = min(
        (c for c in candidates if c[0] <= d_min + 1e-9), key=lambda c: (c[1], c[2])
    )
    f, a, b, s = best
    return SolveResult(
        d=max(f, 0.0),
        argmin=LevelTriple(a=a, b=b, s=s),
        method="two-var",
        evaluations=obj.evaluations,
    )


# ---------------------------------------------------------------------------
# brute-force oracle over the full exponent vectors


def solve_general_grid(config: AntennaConfig, r: float, step: float = 0.05) -> SolveResult:
    """Exhaustive minimisation over ordered exponent vectors on a [0, 1] grid.

    Only the grid points satisfying the support inequalities and the rate
    constraint are scored, so the result upper-bounds the exact optimum by at
    most the grid discretisation.  Serves as an independent cross-check for
    :func:`solve_two_var` on small configurations.
    """
    u, p, q = config.u, config.p, config.q
    if u + p + q > 6:
        raise SolverRefusal(
            f"grid oracle refuses u+p+q={u + p + q} > 6 (combinatorial blow-up)"
        )
    if not 0.0 < step <= 0.25:
        raise DomainError(f"step {step} outside (0, 0.25]")
    top = float(config.max_mux)
    if r < -_TOL or r > top + _TOL:
        raise DomainError(f"r={r} outside [0, {top}]")
    r = min(max(r, 0.0), top)

    n_levels = max(1, round(1.0 / step))
    values = np.linspace(0.0, 1.0, n_levels + 1)

    def combos(length):
        rows = list(itertools.combinations_with_replacement(values, length))
        return np.array(rows, dtype=float)

    A, B, D = combos(u), combos(p), combos(q)
    sa = (1.0 - A).sum(axis=1)
    sb = (1.0 - B).sum(axis=1)
    sd = (1.0 - D).sum(axis=1)
    m, k, n = config.m, config.k, config.n
    obj_alpha, _, w_beta, w_delta, ab_pairs, ad_pairs = _coeffs(config)
    fa = A @ np.asarray(obj_alpha) - 2.0 * k * u
    fb = B @ np.asarray(w_beta)
    fd_ = D @ np.asarray(w_delta)

    # support inequalities bind at the smallest admissible alpha index
    ok_ab = np.ones((len(A), len(B)), dtype=bool)
    cross_ab = np.zeros((len(A), len(B)))
    for j in range(p):
        i0 = m - 1 - j
        if 0 <= i0 < u:
            ok_ab &= A[:, i0][:, None] + B[:, j][None, :] >= 1.0 - _TOL
    for i, j in ab_pairs:
        cross_ab += np.clip(1.0 - A[:, i][:, None] - B[:, j][None, :], 0.0, None)
    ok_ad = np.ones((len(A), len(D)), dtype=bool)
    cross_ad = np.zeros((len(A), len(D)))
    for l in range(q):
        i0 = n - 1 - l
        if 0 <= i0 < u:
            ok_ad &= A[:, i0][:, None] + D[:, l][None, :] >= 1.0 - _TOL
    for i, l in ad_pairs:
        cross_ad += np.clip(1.0 - A[:, i][:, None] - D[:, l][None, :], 0.0, None)

    relay = np.zeros((len(B), len(D)))
    hop_sum = sb[:, None] + sd[None, :]
    np.divide(sb[:, None] * sd[None, :], hop_sum, out=relay, where=hop_sum > 0)

    best_val = math.inf
    best_idx = None
    evaluations = 0
    for x in range(len(A)):
        feas = relay <= (r - sa[x]) + _TOL
        pair_ok = ok_ab[x][:, None] & ok_ad[x][None, :] & feas
        if not pair_ok.any():
            continue
        total = fb[:, None] + fd_[None, :] + cross_ab[x][:, None] + cross_ad[x][None, :]
        total = np.where(pair_ok, total, math.inf)
        evaluations += int(pair_ok.sum())
        yz = int(np.argmin(total))
        val = float(total.flat[yz]) + float(fa[x])
        if val < best_val - 1e-12:
            best_val = val
            best_idx = (x, yz // len(D), yz % len(D))
    if best_idx is None:
        raise RuntimeError(f"grid oracle found no feasible point at r={r}")
    x, y, z = best_idx
    argmin = ExponentTriple(tuple(A[x]), tuple(B[y]), tuple(D[z]))
    return SolveResult(
        d=best_val, argmin=argmin, method="grid-oracle", evaluations=evaluations
    )


# ---------------------------------------------------------------------------
# closed forms


def dmt_1k1(k: int, r: float) -> float:
    """Closed-form tradeoff of the (1, k, 1) relay channel."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if r < -_TOL or r > 1.0 + _TOL:
        raise DomainError(f"r={r} outside [0, 1]")
    r = min(max(r, 0.0), 1.0)
    if r <= 1.0 / (k + 1):
        return (k + 1) * (1.0 - r)
    if r <= 0.5:
        return 1.0 + k * (1.0 - 2.0 * r) / (1.0 - r)
    return 2.0 * (1.0 - r)


def dmt_n1n(n: int, r: float) -> float:
    """Closed-form tradeoff of the (n, 1, n) relay channel: the (n+1) x n
    point-to-point curve, (n - r)(n + 1 - r) at integer r."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return ptp_dmt(n + 1, n, r)


def dmt_ddf_1k1(k: int, r: float) -> float:
    """Tradeoff achieved on (1, k, 1) when the relay decodes before
    forwarding; optimal below r = 1/2, (1 - r)/r above."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if r < -_TOL or r > 1.0 + _TOL:
        raise DomainError(f"r={r} outside [0, 1]")
    r = min(max(r, 0.0), 1.0)
    if r <= 1.0 / (k + 1):
        return (k + 1) * (1.0 - r)
    if r <= 0.5:
        return 1.0 + k * (1.0 - 2.0 * r) / (1.0 - r)
    return (1.0 - r) / r


def dmt_static_1k1(k: int, r: float) -> float:
    """Tradeoff of (1, k, 1) with a fixed half-time relay schedule, stated
    only for r in [1/2, 1]."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if r < 0.5 - _TOL:
        raise DomainError(
            f"r={r}: the static (1,k,1) closed form is only stated on [1/2, 1]"
        )
    if r > 1.0 + _TOL:
        raise DomainError(f"r={r} outside [1/2, 1]")
    r = min(max(r, 0.5), 1.0)
    return 2.0 * (1.0 - r)


def _saturated_out_hop_bound(n: int, k: int, N: int, r: float) -> float:
    """Bound from pinning the out-hop level at N with the in-hop saturated."""
    a_level = (n + r) / 2.0 - math.sqrt(((n - r) / 2.0) ** 2 + N * (n - r))
    length = n - N
    value = float(N * N)
    if length > 0:
        prof = exponent_profile(min(max(a_level, 0.0), float(length)), length)
        for i, x in enumerate(prof):
            value += (2 * n + k - N - 2 * i - 1) * x
    return value


def dmt_symmetric_upper(n: int, k: int, r: float) -> float:
    """Upper bound on the (n, k, n) tradeoff: minimum of the pinned-level
    bounds whose stated r-interval contains r."""
    if n < 1 or k < 1:
        raise DomainError(f"antenna counts must be positive, got ({n}, {k})")
    if r < -_TOL or r > n + _TOL:
        raise DomainError(f"r={r} outside [0, {n}]")
    r = min(max(r, 0.0), float(n))
    p = min(n, k)
    bounds = [ptp_dmt(n, n + k, r)]
    if r >= n - p / 2.0 - _TOL:
        bounds.append(ptp_dmt(2 * n, 2 * n, min(2.0 * r, 2.0 * n)))
    if r <= p / 2.0 + _TOL:
        out_level = min(p * r / (p - r), float(p)) if r < p else float(p)
        prof = exponent_profile(out_level, p)
        bounds.append(
            n * n + sum((n + k - 2 * l - 1) * x for l, x in enumerate(prof))
        )
    for N in range(1, p + 1):
        lo = N / 2.0
        hi = min(n - N / 2.0, n - N * N / (2.0 * p - N))
        if lo - _TOL <= r <= hi + _TOL and n - N >= 1:
            shifted = min(max(r - N / 2.0, 0.0), float(n - N))
            bounds.append(N * N + ptp_dmt(n - N, n + 2 * k - N, shifted))
    if k >= n:
        for N in range(1, p + 1):
            lo = max(N * n / (N + n), float(n - p))
            hi = n - N / 2.0
            if lo - _TOL <= r <= hi + _TOL:
                bounds.append(_saturated_out_hop_bound(n, k, N, r))
    return min(bounds)


# ---------------------------------------------------------------------------
# static (n, 1, n) solver


def _static_value(n: int, alpha, beta: float) -> float:
    total = n * beta - n
    for i, x in enumerate(alpha):
        total += (2 * n - 2 * i) * x
    for x in alpha[: n - 1]:
        total += _pos(1.0 - beta - x)
    return total


def _static_refine(n, r, alpha, beta, cell, sweeps=8):
    alpha = list(alpha)
    value = _static_value(n, alpha, beta)
    for _ in range(sweeps):
        improved = False
        for i in range(n):
            slack = r - 0.5 * (1.0 - beta)
            for j in range(n):
                if j != i:
                    slack -= 1.0 - alpha[j]
            lo = max(alpha[i - 1] if i > 0 else 0.0, 1.0 - slack)
            if i == n - 1:
                lo = max(lo, 1.0 - beta)
            hi = min(alpha[i + 1] if i < n - 1 else 1.0, 1.0)
            lo = min(max(lo, max(alpha[i] - cell, 0.0)), alpha[i])
            hi = max(min(hi, alpha[i] + cell), alpha[i])
            if hi <= lo:
                continue

            def along(x, idx=i):
                trial = alpha.copy()
                trial[idx] = x
                return _static_value(n, trial, beta)

            x, fx = _golden(along, lo, hi)
            if fx < value - 1e-15:
                alpha[i], value = x, fx
                improved = True
        used = sum(1.0 - x for x in alpha)
        lo = max(0.0, 1.0 - alpha[n - 1], 1.0 - 2.0 * (r - used), beta - cell)
        hi = min(1.0, beta + cell)
        if hi > lo:
            x, fx = _golden(lambda y: _static_value(n, alpha, y), lo, hi)
            if fx < value - 1e-15:
                beta, value = x, fx
                improved = True
        if not improved:
            break
    return alpha, beta, value


def solve_static_n1n(n: int, r: float, *, grid_step: float = 0.05, starts: int = 5) -> SolveResult:
    """Tradeoff of the (n, 1, n) channel under a fixed half-time relay
    schedule, by grid search plus coordinate refinement over the n direct
    exponents and the single in-hop exponent."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > 4:
        raise SolverRefusal(f"static solver refuses n={n} > 4 (grid blow-up)")
    if r < -_TOL or r > n + _TOL:
        raise DomainError(f"r={r} outside [0, {n}]")
    r = min(max(r, 0.0), float(n))

    n_levels = max(1, round(1.0 / grid_step))
    values = np.linspace(0.0, 1.0, n_levels + 1)
    A = np.array(list(itertools.combinations_with_replacement(values, n)))
    B = values
    deficits = (1.0 - A).sum(axis=1)
    feasible_pairs = []
    evaluations = 0
    coeff = np.array([2.0 * n - 2.0 * i for i in range(n)])
    for beta in B:
        mask = (deficits + 0.5 * (1.0 - beta) <= r + _TOL) & (
            A[:, n - 1] + beta >= 1.0 - _TOL
        )
        if not mask.any():
            continue
        sub = A[mask]
        vals = sub @ coeff + n * beta - n
        if n > 1:
            vals = vals + np.clip(1.0 - beta - sub[:, : n - 1], 0.0, None).sum(axis=1)
        evaluations += len(sub)
        order = np.argsort(vals, kind="stable")
        for idx in order[:2]:
            feasible_pairs.append((float(vals[idx]), tuple(sub[idx]), float(beta)))
    if not feasible_pairs:
        raise RuntimeError(f"static grid found no feasible point at r={r}")
    feasible_pairs.sort(key=lambda t: (t[0], t[1], t[2]))

    best = None
    for val, alpha, beta in feasible_pairs[: max(1, starts)]:
        alpha_r, beta_r, value = _static_refine(n, r, alpha, beta, cell=grid_step)
        cand = (value, tuple(alpha_r), beta_r)
        if best is None or cand[0] < best[0] - 1e-12:
            best = cand
    value, alpha, beta = best
    argmin = ExponentTriple(alpha, (beta,), ())
    return SolveResult(
        d=max(value, 0.0), argmin=argmin, method="static-grid", evaluations=evaluations
    )


# ---------------------------------------------------------------------------
# curve generation


def _variant_domain(config: AntennaConfig, variant: str):
    m, k, n = config.m, config.k, config.n
    if variant in ("hd-dynamic", "fd", "ptp"):
        return 0.0, float(config.max_mux)
    if variant in ("closed-1k1", "ddf-1k1"):
        if m != 1 or n != 1:
            raise ConfigurationError(f"variant {variant!r} needs m = n = 1, got {config}")
        return 0.0, 1.0
    if variant == "static-1k1":
        if m != 1 or n != 1:
            raise ConfigurationError(f"variant {variant!r} needs m = n = 1, got {config}")
        return 0.5, 1.0
    if variant in ("closed-n1n", "hd-static-n1n"):
        if m != n or k != 1:
            raise ConfigurationError(
                f"variant {variant!r} needs m = n and k = 1, got {config}"
            )
        return 0.0, float(n)
    if variant == "symmetric-upper":
        if m != n:
            raise ConfigurationError(f"variant {variant!r} needs m = n, got {config}")
        return 0.0, float(n)
    raise ConfigurationError(f"unknown variant {variant!r}")


def _variant_fn(config: AntennaConfig, variant: str):
    m, k, n = config.m, config.k, config.n
    return {
        "hd-dynamic": lambda r: solve_two_var(config, r).d,
        "fd": lambda r: fd_dmt(config, r),
        "ptp": lambda r: ptp_dmt(m, n, r),
        "closed-1k1": lambda r: dmt_1k1(k, r),
        "ddf-1k1": lambda r: dmt_ddf_1k1(k, r),
        "static-1k1": lambda r: dmt_static_1k1(k, r),
        "closed-n1n": lambda r: dmt_n1n(n, r),
        "hd-static-n1n": lambda r: solve_static_n1n(n, r).d,
        "symmetric-upper": lambda r: dmt_symmetric_upper(n, k, r),
    }[variant]


VARIANTS = (
    "hd-dynamic",
    "fd",
    "ptp",
    "closed-1k1",
    "closed-n1n",
    "hd-static-n1n",
    "symmetric-upper",
    "ddf-1k1",
    "static-1k1",
)


def dmt_curve(config: AntennaConfig, variant: str, r_grid: Sequence[float]) -> DmtCurve:
    """Sample one tradeoff variant on a sorted r grid."""
    lo, hi = _variant_domain(config, variant)
    grid = [float(r) for r in r_grid]
    if not grid:
        raise DomainError("r grid is empty")
    for a, b in zip(grid, grid[1:]):
        if b <= a:
            raise DomainError("r grid must be strictly increasing")
    if grid[0] < lo - _TOL or grid[-1] > hi + _TOL:
        raise DomainError(
            f"r grid [{grid[0]}, {grid[-1]}] outside the {variant!r} domain [{lo}, {hi}]"
        )
    fn = _variant_fn(config, variant)
    points = tuple(DmtPoint(r, fn(r)) for r in grid)
    return DmtCurve(config=config, variant=variant, points=points)
