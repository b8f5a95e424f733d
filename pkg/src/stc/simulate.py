"""Seeded Monte Carlo harness for size/power verification of the t-test.

Two families of data-generating processes are provided:

  * NormalMeans — cluster estimates drawn directly as independent normals;
    control variances are either all 1 (dgp 1) or rise linearly from 1 to 2
    (dgp 2); the treated estimate is N(delta, rho^2).
  * Twfe — a two-way fixed-effects panel with AR(1) errors whose
    innovations are normal, normalized chi-square(2), or uniform, with the
    treated cluster's innovation scale multiplied by sigma; effects are
    re-extracted per cluster exactly as the designs module does.

Randomness is counter-based: replication r reads from a Philox stream
keyed by (seed, r // chunk), at a fixed offset within the chunk, so every
replication's variates are a pure function of (seed, r) — independent of
chunk evaluation order, total replication count, and worker count.
Normal variates come from numpy's Ziggurat sampler; the chi-square(2)
innovations are built from two squared normals normalized to mean 0 and
variance 1, and the uniforms by an affine map of standard uniforms.

The AR(1) error starts at its stationary scale: U_0 equals a single
innovation divided by sqrt(1 - eta^2).  For the non-normal innovations
this matches the stationary variance, not the full stationary law.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .critical_values import CriticalValueResult, critical_value
from .errors import InvalidParameterError
from .rejection import DEFAULT_SETTINGS, QuadratureSettings
from .worstcase import HeterogeneitySpec

__all__ = [
    "NormalMeansDesign",
    "TwfeDesign",
    "MCConfig",
    "MCResult",
    "run",
    "empirical_rejection_rate",
    "normal_means_t_statistics",
    "twfe_theta_hats",
    "t_statistics_from_thetas",
]

_CHUNK_ROWS = 4096
_MASK64 = (1 << 64) - 1

_TWFE_ETA = {1: 0.5, 2: 0.1, 3: 0.9, 4: 0.5, 5: 0.5}


@dataclass(frozen=True)
class NormalMeansDesign:
    """Direct draws of the m+1 cluster estimates.

    ``rho`` is the treated standard deviation; with the test's
    heterogeneity ratio set to the same value the restriction is exactly
    correctly specified.
    """

    dgp: int
    m: int
    delta: float = 0.0
    rho: float = 1.0

    def __post_init__(self):
        if self.dgp not in (1, 2):
            raise InvalidParameterError(f"NormalMeans dgp must be 1 or 2, got {self.dgp}")
        if int(self.m) < 2:
            raise InvalidParameterError(f"m must be >= 2, got {self.m}")
        if not (math.isfinite(self.rho) and self.rho >= 0):
            raise InvalidParameterError(f"rho must be finite and >= 0, got {self.rho}")
        if not math.isfinite(self.delta):
            raise InvalidParameterError("delta must be finite")
        object.__setattr__(self, "m", int(self.m))

    def control_sigmas(self) -> np.ndarray:
        j = np.arange(1, self.m + 1, dtype=float)
        if self.dgp == 1:
            return np.ones(self.m)
        return np.sqrt(1.0 + (j - 1.0) / (self.m - 1.0))

    @property
    def matched_rho(self) -> float:
        return self.rho


@dataclass(frozen=True)
class TwfeDesign:
    """Two-way fixed-effects panel generator.

    Y_jt = alpha_t + gamma_j + theta * D_jt + U_jt over periods 1..periods,
    with alpha_t = 1, gamma_j = 2*1{j <= m/2} - 1, and D_jt = 1 only for
    the treated cluster in periods strictly after ``intervention``.  The
    AR(1) error uses eta = 0.5 / 0.1 / 0.9 for dgp 1/2/3 with normal
    innovations, and eta = 0.5 with normalized chi-square(2) (dgp 4) or
    uniform[-sqrt(3), sqrt(3)] (dgp 5) innovations.  The treated cluster's
    innovations are scaled by ``sigma``.
    """

    dgp: int
    m: int
    sigma: float = 1.0
    theta: float = 0.0
    periods: int = 10
    intervention: int = 6

    def __post_init__(self):
        if self.dgp not in (1, 2, 3, 4, 5):
            raise InvalidParameterError(f"Twfe dgp must be in 1..5, got {self.dgp}")
        if int(self.m) < 2:
            raise InvalidParameterError(f"m must be >= 2, got {self.m}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise InvalidParameterError(f"sigma must be positive, got {self.sigma}")
        if not math.isfinite(self.theta):
            raise InvalidParameterError("theta must be finite")
        if not 1 <= int(self.intervention) < int(self.periods):
            raise InvalidParameterError("intervention must leave both pre and post periods")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "periods", int(self.periods))
        object.__setattr__(self, "intervention", int(self.intervention))

    @property
    def eta(self) -> float:
        return _TWFE_ETA[self.dgp]

    @property
    def post_start(self) -> int:
        """First treated period in the extractor's t >= post_start convention."""
        return self.intervention + 1

    @property
    def matched_rho(self) -> float:
        return self.sigma


@dataclass(frozen=True)
class MCConfig:
    """A design plus the test to run on each replication.

    ``rho`` defaults to the design's own heterogeneity (treated sd for
    NormalMeans, innovation scale for Twfe) so the restriction is matched.
    """

    design: NormalMeansDesign | TwfeDesign
    reps: int
    seed: int
    alpha: float = 0.05
    k: int = 1
    rho: float | None = None

    def __post_init__(self):
        if int(self.reps) < 1:
            raise InvalidParameterError(f"reps must be >= 1, got {self.reps}")
        object.__setattr__(self, "reps", int(self.reps))
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def test_rho(self) -> float:
        return self.design.matched_rho if self.rho is None else float(self.rho)


@dataclass(frozen=True)
class MCResult:
    """Rejection frequency with its binomial standard error."""

    rejection_rate: float
    se: float
    reps: int
    rejections: int
    critical_value: CriticalValueResult | None = None
    t_stats: np.ndarray | None = None


def _chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, chunk & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _chunks(reps: int):
    for chunk in range(math.ceil(reps / _CHUNK_ROWS)):
        rows = min(_CHUNK_ROWS, reps - chunk * _CHUNK_ROWS)
        yield chunk, rows


def t_statistics_from_thetas(thetas: np.ndarray) -> np.ndarray:
    """Row-wise t statistics; the last column is the treated estimate."""
    thetas = np.asarray(thetas, dtype=float)
    controls = thetas[:, :-1]
    diff = thetas[:, -1] - controls.mean(axis=1)
    s = controls.std(axis=1, ddof=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = diff / s
        fallback = np.where(diff == 0.0, 0.0, np.sign(diff) * np.inf)
    return np.where(s > 0.0, t, fallback)


def _normal_means_thetas(rows: int, rng: np.random.Generator,
                         sigmas: np.ndarray, delta: float) -> np.ndarray:
    z = rng.standard_normal((_CHUNK_ROWS, sigmas.size))[:rows]
    thetas = z * sigmas
    thetas[:, -1] += delta
    return thetas


def normal_means_t_statistics(
    sigmas: np.ndarray, delta: float, reps: int, seed: int
) -> np.ndarray:
    """t statistics for estimates drawn as N(0, sigma_j^2), treated last.

    ``sigmas`` lists the m control standard deviations followed by the
    treated one; ``delta`` shifts the treated mean.  This is the raw mode
    used to cross-check the analytic rejection probabilities.
    """
    sigmas = np.asarray(sigmas, dtype=float)
    if sigmas.ndim != 1 or sigmas.size < 3:
        raise InvalidParameterError("need at least 2 control sigmas plus the treated sigma")
    if not np.all(np.isfinite(sigmas)) or np.any(sigmas < 0):
        raise InvalidParameterError("sigmas must be finite and >= 0")
    out = np.empty(reps)
    for chunk, rows in _chunks(reps):
        rng = _chunk_generator(seed, chunk)
        thetas = _normal_means_thetas(rows, rng, sigmas, delta)
        out[chunk * _CHUNK_ROWS:chunk * _CHUNK_ROWS + rows] = t_statistics_from_thetas(thetas)
    return out


def _twfe_innovations(design: TwfeDesign, rng: np.random.Generator) -> np.ndarray:
    shape = (_CHUNK_ROWS, design.m + 1, design.periods + 1)
    if design.dgp == 4:
        z = rng.standard_normal(shape + (2,))
        return (np.square(z).sum(axis=-1) - 2.0) / 2.0
    if design.dgp == 5:
        return (2.0 * rng.random(shape) - 1.0) * math.sqrt(3.0)
    return rng.standard_normal(shape)


def _twfe_outcomes(design: TwfeDesign, rows: int, rng: np.random.Generator) -> np.ndarray:
    """Panel outcomes with shape (rows, m+1, periods); treated cluster last."""
    m, periods = design.m, design.periods
    v = _twfe_innovations(design, rng)[:rows]
    v[:, -1, :] *= design.sigma
    eta = design.eta
    u = np.empty_like(v[:, :, 1:])
    level = v[:, :, 0] / math.sqrt(1.0 - eta * eta)
    for t in range(periods):
        level = eta * level + v[:, :, t + 1]
        u[:, :, t] = level
    gamma = np.where(np.arange(1, m + 2) <= m / 2.0, 1.0, -1.0)
    y = u + 1.0 + gamma[None, :, None]
    y[:, -1, design.intervention:] += design.theta
    return y


def twfe_theta_hats(design: TwfeDesign, reps: int, seed: int) -> np.ndarray:
    """Per-cluster post/pre mean differences, shape (reps, m+1), treated last.

    This is the same estimator the designs extractor computes for the
    TwoWayFE design with post_start = intervention + 1.
    """
    pre = design.intervention
    out = np.empty((reps, design.m + 1))
    for chunk, rows in _chunks(reps):
        rng = _chunk_generator(seed, chunk)
        y = _twfe_outcomes(design, rows, rng)
        theta = y[:, :, pre:].mean(axis=2) - y[:, :, :pre].mean(axis=2)
        out[chunk * _CHUNK_ROWS:chunk * _CHUNK_ROWS + rows] = theta
    return out


def _design_t_statistics(design, reps: int, seed: int) -> np.ndarray:
    if isinstance(design, NormalMeansDesign):
        sigmas = np.append(design.control_sigmas(), design.rho)
        return normal_means_t_statistics(sigmas, design.delta, reps, seed)
    if isinstance(design, TwfeDesign):
        return t_statistics_from_thetas(twfe_theta_hats(design, reps, seed))
    raise InvalidParameterError(f"unknown design: {design!r}")


def run(
    config: MCConfig,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
    include_stats: bool = False,
) -> MCResult:
    """Rejection frequency of the two-sided t-test over seeded replications.

    Each replication draws estimates from the configured design, forms the
    t statistic, and rejects when it exceeds the critical value for
    (alpha, k, rho) — identical to running the full test on each draw.
    Identical configs (including seed) give bit-identical results.
    """
    spec = HeterogeneitySpec(config.design.m, config.k, config.test_rho)
    cv = critical_value(config.design.m, config.alpha, spec, settings)
    t = _design_t_statistics(config.design, config.reps, config.seed)
    rejections = int(np.count_nonzero(np.abs(t) > cv.cv))
    rate = rejections / config.reps
    return MCResult(
        rejection_rate=rate,
        se=math.sqrt(rate * (1.0 - rate) / config.reps),
        reps=config.reps,
        rejections=rejections,
        critical_value=cv,
        t_stats=t if include_stats else None,
    )


def empirical_rejection_rate(
    sigmas: np.ndarray, delta: float, c: float, reps: int, seed: int
) -> MCResult:
    """Empirical P[|T| > c] for explicit sigmas (controls first, treated last).

    Brute-force oracle for the analytic rejection probability: no
    worst-case search, just the configured normal draws against a fixed
    threshold.
    """
    if not reps >= 1:
        raise InvalidParameterError(f"reps must be >= 1, got {reps}")
    t = normal_means_t_statistics(sigmas, delta, int(reps), int(seed))
    rejections = int(np.count_nonzero(np.abs(t) > float(c)))
    rate = rejections / reps
    return MCResult(
        rejection_rate=rate,
        se=math.sqrt(rate * (1.0 - rate) / reps),
        reps=int(reps),
        rejections=rejections,
    )
