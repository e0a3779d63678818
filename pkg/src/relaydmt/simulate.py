"""Monte Carlo validation layer.

Samples Rayleigh channel triples, evaluates the cut-set rate quantities,
estimates outage probabilities and diversity slopes, and provides the
empirical statistics used to check the exponent machinery.

Reproducibility contract: the sample index space is partitioned into fixed
blocks of ``BLOCK_SIZE``; block ``i`` draws from a counter-based generator
keyed on (seed, i), so outage counts are bit-identical for a given seed and
sample count no matter how many workers map over the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats

from .core import AntennaConfig, DomainError, ExponentTriple

BLOCK_SIZE = 65536

_LN2 = math.log(2.0)


class InsufficientDataError(RuntimeError):
    """Too few usable estimates to fit a slope."""


@dataclass(frozen=True)
class ChannelSample:
    """One realisation of the three channel matrices.

    Entries are i.i.d. circularly-symmetric complex Gaussian with unit
    variance; the three matrices are mutually independent.
    """

    h_sd: np.ndarray  # n x m, source -> destination
    h_sr: np.ndarray  # k x m, source -> relay
    h_rd: np.ndarray  # n x k, relay -> destination


@dataclass(frozen=True)
class CutsetTerms:
    """Base-2 log determinants of the three cut matrices at SNR ``rho``.

    ``log_l_sd`` covers the direct link alone, ``log_l_srd`` the joint
    transmission cut [H_SD H_RD] seen by the destination, ``log_l_s_rd`` the
    listening cut [H_SR; H_SD] seen by relay plus destination.
    """

    log_l_sd: float
    log_l_srd: float
    log_l_s_rd: float
    rho: float


@dataclass(frozen=True)
class OutageEstimate:
    rho: float
    r: float
    p_out: float
    n_samples: int
    ci_half_width: float


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    stderr: float
    rho_grid: tuple


@dataclass(frozen=True)
class IndependenceReport:
    max_abs_corr: float
    control_max_abs_corr: float
    unconditional_corr: float
    correlations: tuple
    bin_counts: tuple
    n_bins: int
    note: str


def channel_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator for (seed, stream); streams never overlap."""
    key = np.array([np.uint64(seed & (2**64 - 1)), np.uint64(stream)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """CN(0, 1) array: real and imaginary parts each N(0, 1/2)."""
    scale = math.sqrt(0.5)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def sample_channel(config: AntennaConfig, rng: np.random.Generator) -> ChannelSample:
    """Draw one Rayleigh channel triple (direct, in-hop, out-hop order)."""
    m, k, n = config.m, config.k, config.n
    return ChannelSample(
        h_sd=_complex_gaussian(rng, (n, m)),
        h_sr=_complex_gaussian(rng, (k, m)),
        h_rd=_complex_gaussian(rng, (n, k)),
    )


def _log2_det_eye_plus(rho: float, h: np.ndarray) -> float:
    """log2 det(I + rho h h'), via Cholesky of the smaller Gram side."""
    if h.shape[0] <= h.shape[1]:
        gram = h @ h.conj().T
    else:
        gram = h.conj().T @ h
    a = rho * gram + np.eye(gram.shape[0])
    chol = np.linalg.cholesky(a)
    return float(2.0 * np.log(np.diag(chol).real).sum() / _LN2)


def cutset_terms(sample: ChannelSample, rho: float) -> CutsetTerms:
    """Evaluate the three cut log determinants in the log domain."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    for h in (sample.h_sd, sample.h_sr, sample.h_rd):
        if not np.all(np.isfinite(h)):
            raise ValueError("channel matrices contain non-finite entries")
    joint_tx = np.concatenate([sample.h_sd, sample.h_rd], axis=1)  # n x (m+k)
    listen = np.concatenate([sample.h_sr, sample.h_sd], axis=0)  # (k+n) x m
    return CutsetTerms(
        log_l_sd=_log2_det_eye_plus(rho, sample.h_sd),
        log_l_srd=_log2_det_eye_plus(rho, joint_tx),
        log_l_s_rd=_log2_det_eye_plus(rho, listen),
        rho=rho,
    )


def _relay_gains(terms: CutsetTerms):
    a = max(terms.log_l_srd - terms.log_l_sd, 0.0)
    b = max(terms.log_l_s_rd - terms.log_l_sd, 0.0)
    return a, b


def optimal_switch_time(terms: CutsetTerms) -> float:
    """Listen fraction maximising the cut-set rate; 1/2 when both relay
    gains vanish (any split is then equally good)."""
    a, b = _relay_gains(terms)
    if a + b < 1e-12:
        return 0.5
    return a / (a + b)


def rate_upper(terms: CutsetTerms) -> float:
    """Cut-set rate ceiling in bits per channel use at the optimal switch."""
    a, b = _relay_gains(terms)
    relay = 0.0 if a + b < 1e-12 else a * b / (a + b)
    return relay + terms.log_l_sd


_EIG_FLOOR = 1e-300


def eigen_exponents(sample: ChannelSample, rho: float) -> ExponentTriple:
    """Negative SNR exponents of the ordered eigenvalues of the three
    composite channel matrices; requires rho > 1 so the log base is sound."""
    if not rho > 1.0:
        raise DomainError(f"rho must exceed 1, got {rho}")
    h_sd, h_sr, h_rd = sample.h_sd, sample.h_sr, sample.h_rd
    n, m = h_sd.shape
    k = h_sr.shape[0]
    u, p, q = min(m, n), min(m, k), min(n, k)

    w1 = h_sd @ h_sd.conj().T
    m2 = np.eye(m) + rho * (h_sd.conj().T @ h_sd)
    w2 = h_sr @ np.linalg.solve(m2, h_sr.conj().T)
    m3 = np.eye(n) + rho * w1
    w3 = h_rd.conj().T @ np.linalg.solve(m3, h_rd)

    log_rho = math.log(rho)

    def exponents(w, count):
        w = 0.5 * (w + w.conj().T)
        eig = np.linalg.eigvalsh(w)[-count:][::-1]  # descending nonzero part
        eig = np.maximum(eig, _EIG_FLOOR)  # clamp hermitian-solver negatives
        return tuple(-math.log(x) / log_rho for x in eig)

    return ExponentTriple(exponents(w1, u), exponents(w2, p), exponents(w3, q))


# ---------------------------------------------------------------------------
# outage estimation


def _log2_det_batch(rho: float, h: np.ndarray) -> np.ndarray:
    """Batched log2 det(I + rho h h') over the leading axis."""
    if h.shape[1] <= h.shape[2]:
        gram = h @ h.conj().transpose(0, 2, 1)
    else:
        gram = h.conj().transpose(0, 2, 1) @ h
    d = gram.shape[1]
    a = rho * gram + np.eye(d)
    chol = np.linalg.cholesky(a)
    diag = np.diagonal(chol, axis1=1, axis2=2).real
    return 2.0 * np.log(diag).sum(axis=1) / _LN2


def _block_rates(config: AntennaConfig, rho: float, rng: np.random.Generator, count: int) -> np.ndarray:
    """Cut-set rate ceilings for a block of samples (stacked draw order:
    direct, in-hop, out-hop)."""
    m, k, n = config.m, config.k, config.n
    h_sd = _complex_gaussian(rng, (count, n, m))
    h_sr = _complex_gaussian(rng, (count, k, m))
    h_rd = _complex_gaussian(rng, (count, n, k))
    l_sd = _log2_det_batch(rho, h_sd)
    l_srd = _log2_det_batch(rho, np.concatenate([h_sd, h_rd], axis=2))
    l_s_rd = _log2_det_batch(rho, np.concatenate([h_sr, h_sd], axis=1))
    a = np.maximum(l_srd - l_sd, 0.0)
    b = np.maximum(l_s_rd - l_sd, 0.0)
    gain = a + b
    relay = np.zeros_like(gain)
    live = gain >= 1e-12
    relay[live] = a[live] * b[live] / gain[live]
    return relay + l_sd


def _block_bounds(n_samples: int):
    blocks = []
    start = 0
    index = 0
    while start < n_samples:
        size = min(BLOCK_SIZE, n_samples - start)
        blocks.append((index, size))
        start += size
        index += 1
    return blocks


def outage_probability(
    config: AntennaConfig,
    rho: float,
    r: float,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> OutageEstimate:
    """Estimate the probability that the cut-set rate ceiling falls below
    r log2(rho) over ``n_samples`` Rayleigh draws."""
    if not rho > 1.0:
        raise DomainError(f"rho must exceed 1, got {rho}")
    if r <= 0.0:
        raise DomainError(f"r={r}: outage is degenerate at non-positive rates")
    if r >= config.max_mux:
        raise DomainError(f"r={r} must lie strictly below {config.max_mux}")
    if n_samples < 1000:
        raise DomainError(f"need at least 1000 samples, got {n_samples}")
    if workers < 1:
        raise DomainError(f"workers must be positive, got {workers}")
    threshold = r * math.log2(rho)

    def count_block(block):
        index, size = block
        rng = channel_rng(seed, index)
        rates = _block_rates(config, rho, rng, size)
        return int((rates < threshold).sum())

    blocks = _block_bounds(n_samples)
    if workers == 1:
        total = sum(count_block(b) for b in blocks)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(count_block, blocks))
    p_out = total / n_samples
    ci = 1.96 * math.sqrt(max(p_out * (1.0 - p_out), 0.0) / n_samples)
    return OutageEstimate(
        rho=rho, r=r, p_out=p_out, n_samples=n_samples, ci_half_width=ci
    )


_RELIABILITY_FLOOR = 20.0


def diversity_fit(estimates: Sequence[OutageEstimate]) -> SlopeFit:
    """Least-squares slope of -log10(p_out) against log10(rho).

    Estimates with zero outage count or fewer than 20 expected events are
    dropped as unreliable; at least three usable points are required.
    """
    usable = [
        e
        for e in estimates
        if e.p_out > 0.0 and e.n_samples * e.p_out >= _RELIABILITY_FLOOR
    ]
    if len(usable) < 3:
        raise InsufficientDataError(
            f"only {len(usable)} usable outage points (need 3); "
            "increase samples or lower the SNR range"
        )
    x = np.log10([e.rho for e in usable])
    y = -np.log10([e.p_out for e in usable])
    fit = stats.linregress(x, y)
    return SlopeFit(
        slope=float(fit.slope),
        stderr=float(fit.stderr),
        rho_grid=tuple(e.rho for e in usable),
    )


# ---------------------------------------------------------------------------
# eigenvalue statistics


def _top_eigenvalues(config: AntennaConfig, rho: float, rng: np.random.Generator, count: int):
    """Largest eigenvalue of each composite matrix for a block of samples."""
    m, k, n = config.m, config.k, config.n
    h_sd = _complex_gaussian(rng, (count, n, m))
    h_sr = _complex_gaussian(rng, (count, k, m))
    h_rd = _complex_gaussian(rng, (count, n, k))
    hd_t = h_sd.conj().transpose(0, 2, 1)
    w1 = h_sd @ hd_t
    m2 = np.eye(m) + rho * (hd_t @ h_sd)
    w2 = h_sr @ np.linalg.solve(m2, h_sr.conj().transpose(0, 2, 1))
    m3 = np.eye(n) + rho * w1
    w3 = h_rd.conj().transpose(0, 2, 1) @ np.linalg.solve(m3, h_rd)

    def top(w):
        w = 0.5 * (w + w.conj().transpose(0, 2, 1))
        return np.linalg.eigvalsh(w)[:, -1]

    return top(w1), top(w2), top(w3)


def conditional_independence_check(
    config: AntennaConfig,
    rho: float,
    n_samples: int,
    n_bins: int,
    seed: int = 0,
) -> IndependenceReport:
    """Test that the top in-hop and out-hop eigenvalues decorrelate once the
    direct-link eigenvalue is held (approximately) fixed.

    Samples are split into equal-count bins by the direct eigenvalue; within
    each bin the report records the correlation of the two hop eigenvalues,
    alongside a shuffled-pairing control and the unconditional correlation.
    """
    if n_samples < 1000:
        raise DomainError(f"need at least 1000 samples, got {n_samples}")
    note = ""
    if n_samples < 50 * n_bins:
        n_bins = max(2, n_samples // 50)
        note = f"reduced to {n_bins} bins to keep bins populated"

    lam = np.empty(n_samples)
    mu = np.empty(n_samples)
    gam = np.empty(n_samples)
    start = 0
    for index, size in _block_bounds(n_samples):
        rng = channel_rng(seed, index)
        l, m_, g = _top_eigenvalues(config, rho, rng, size)
        lam[start : start + size] = l
        mu[start : start + size] = m_
        gam[start : start + size] = g
        start += size

    shuffle_rng = channel_rng(seed, 2**32)
    order = np.argsort(lam, kind="stable")
    splits = np.array_split(order, n_bins)
    corrs = []
    control = []
    counts = []
    for idx in splits:
        counts.append(len(idx))
        corrs.append(float(np.corrcoef(mu[idx], gam[idx])[0, 1]))
        perm = shuffle_rng.permutation(len(idx))
        control.append(float(np.corrcoef(mu[idx], gam[idx][perm])[0, 1]))
    return IndependenceReport(
        max_abs_corr=float(np.max(np.abs(corrs))),
        control_max_abs_corr=float(np.max(np.abs(control))),
        unconditional_corr=float(np.corrcoef(mu, gam)[0, 1]),
        correlations=tuple(corrs),
        bin_counts=tuple(counts),
        n_bins=n_bins,
        note=note,
    )
