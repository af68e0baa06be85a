"""Monte Carlo falsifier for the analytic fidelity pipeline.

Samples the Heisenberg-picture construction directly: per-mode vacuum
quadratures are drawn as unit-variance Gaussians, scaled by the squeezed
thermal factors, pushed through the N-splitter, and combined into x_rel and
p_tot.  Nothing here touches the covariance-matrix code paths beyond reusing
the N-splitter matrix, so agreement is a genuine cross-check.

Reproducibility: a counter-based Philox generator keyed by (seed, shard)
drives each shard independently; identical configs give identical bytes, and
the shard merge is order independent by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gaussian import ResourceSpec, n_splitter
from .teleport import OPTIMAL, ProtocolParams, fidelity_from_variances

_CHUNK = 1 << 16


@dataclass(frozen=True)
class McConfig:
    samples: int
    seed: int
    spec: ResourceSpec
    params: ProtocolParams = field(default_factory=ProtocolParams)
    shards: int = 16

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError(f"need at least 2 samples, got {self.samples}")
        if self.shards < 2:
            raise ValueError("need at least 2 shards for the jackknife error")


@dataclass(frozen=True)
class McEstimate:
    fidelity_mean: float
    std_error: float
    var_x_rel_hat: float
    var_p_tot_hat: float
    samples: int


def _input_scales(spec: ResourceSpec) -> tuple[np.ndarray, np.ndarray]:
    """Per-mode standard deviations of the squeezed thermal inputs."""
    sx = np.full(spec.N, math.sqrt(spec.n2) * math.exp(-spec.r2))
    sp = np.full(spec.N, math.sqrt(spec.n2) * math.exp(spec.r2))
    sx[0] = math.sqrt(spec.n1) * math.exp(spec.r1)
    sp[0] = math.sqrt(spec.n1) * math.exp(-spec.r1)
    return sx, sp


def _shard_sums(
    rng: np.random.Generator,
    count: int,
    spec: ResourceSpec,
    wx: np.ndarray,
    wp: np.ndarray,
) -> tuple[float, float, float, float]:
    """Sums and sums of squares of (x_rel, p_tot) over one shard."""
    sx, sp = _input_scales(spec)
    s1 = s2 = t1 = t2 = 0.0
    done = 0
    while done < count:
        m = min(_CHUNK, count - done)
        x = rng.standard_normal((m, spec.N)) * sx
        p = rng.standard_normal((m, spec.N)) * sp
        xr = x @ wx
        pt = p @ wp
        s1 += float(xr.sum())
        s2 += float((xr * xr).sum())
        t1 += float(pt.sum())
        t2 += float((pt * pt).sum())
        done += m
    return s1, s2, t1, t2


def simulate(config: McConfig) -> McEstimate:
    """Estimate the teleportation fidelity by direct sampling.

    Variances are pooled over shards; the standard error of the fidelity is a
    delete-one-shard jackknife.
    """
    spec, params = config.spec, config.params
    if params.gain == OPTIMAL:
        from .optimize import g_N_opt

        gain = 1.0 if spec.N == 2 else g_N_opt(spec.N, spec.n1, spec.n2, spec.rbar)
    else:
        gain = float(params.gain)

    O = n_splitter(spec.N).entries[0::2, 0::2]  # x-sector orthogonal matrix
    # weights pulling x_rel / p_tot back onto the input modes
    c_x = np.zeros(spec.N)
    c_x[params.sender] = 1.0
    c_x[params.receiver] = -1.0
    c_p = np.full(spec.N, gain)
    c_p[params.sender] = 1.0
    c_p[params.receiver] = 1.0
    wx = O.T @ c_x
    wp = O.T @ c_p

    counts = [config.samples // config.shards] * config.shards
    counts[-1] += config.samples - sum(counts)
    sums = []
    for shard, count in enumerate(counts):
        rng = np.random.Generator(np.random.Philox(key=[config.seed, shard]))
        sums.append(_shard_sums(rng, count, spec, wx, wp))

    def variances(skip: int | None) -> tuple[float, float]:
        n = sum(c for i, c in enumerate(counts) if i != skip)
        s1 = sum(s[0] for i, s in enumerate(sums) if i != skip)
        s2 = sum(s[1] for i, s in enumerate(sums) if i != skip)
        t1 = sum(s[2] for i, s in enumerate(sums) if i != skip)
        t2 = sum(s[3] for i, s in enumerate(sums) if i != skip)
        vx = (s2 - s1 * s1 / n) / (n - 1)
        vp = (t2 - t1 * t1 / n) / (n - 1)
        return max(vx, 0.0), max(vp, 0.0)

    vx, vp = variances(None)
    fid = fidelity_from_variances(vx, vp)
    loo = [fidelity_from_variances(*variances(i)) for i in range(config.shards)]
    mean_loo = sum(loo) / config.shards
    se = math.sqrt(
        (config.shards - 1) / config.shards * sum((f - mean_loo) ** 2 for f in loo)
    )
    return McEstimate(fid, max(se, 1e-300), vx, vp, config.samples)


def variance_of_form(
    coefficients: np.ndarray, spec: ResourceSpec, samples: int, seed: int, shards: int = 16
) -> McEstimate:
    """Sampled estimate of u^T sigma u for the built resource.

    ``coefficients`` has length 2N in interleaved (x1, p1, ...) order.  The
    estimate converges to the quadratic form at the usual 1/sqrt(samples)
    rate; returned in the var_x_rel_hat slot with the matching jackknife
    standard error in std_error.
    """
    c = np.asarray(coefficients, dtype=float)
    if c.shape != (2 * spec.N,):
        raise ValueError(f"expected {2 * spec.N} coefficients, got shape {c.shape}")
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    O = n_splitter(spec.N).entries[0::2, 0::2]
    wx = O.T @ c[0::2]
    wp = O.T @ c[1::2]
    sx, sp = _input_scales(spec)
    counts = [samples // shards] * shards
    counts[-1] += samples - sum(counts)
    sums = []
    for shard, count in enumerate(counts):
        rng = np.random.Generator(np.random.Philox(key=[seed, shard]))
        s1 = s2 = 0.0
        done = 0
        while done < count:
            m = min(_CHUNK, count - done)
            v = (rng.standard_normal((m, spec.N)) * sx) @ wx
            v += (rng.standard_normal((m, spec.N)) * sp) @ wp
            s1 += float(v.sum())
            s2 += float((v * v).sum())
            done += m
        sums.append((s1, s2))

    def var(skip: int | None) -> float:
        n = sum(cn for i, cn in enumerate(counts) if i != skip)
        s1 = sum(s[0] for i, s in enumerate(sums) if i != skip)
        s2 = sum(s[1] for i, s in enumerate(sums) if i != skip)
        return (s2 - s1 * s1 / n) / (n - 1)

    v_hat = var(None)
    loo = [var(i) for i in range(shards)]
    mean_loo = sum(loo) / shards
    se = math.sqrt((shards - 1) / shards * sum((v - mean_loo) ** 2 for v in loo))
    return McEstimate(float("nan"), max(se, 1e-300), v_hat, float("nan"), samples)
