"""Characteristic function g_c and its unique negative root.

For a configuration of variance ratios gamma_j = sigma_j / sigma_{m+1} and a
threshold c, the null rejection probability is a singular integral whose
upper endpoint is t = |theta_{m+1}|, where theta_{m+1} is the unique
negative root of the characteristic function

    g_c(theta) = -(m + theta) * prod_i (kappa*gamma_i^2 - theta)
                 + (kappa + (kappa+1)/m * theta)
                   * sum_i gamma_i^2 * prod_{j != i} (kappa*gamma_j^2 - theta)

with kappa = m c^2 / (m - 1).  Rather than locating the root of this
(m+1)-degree polynomial directly, `negative_root` solves the equivalent
monotone constraint

    sum_i (1 + tau*x_i) / (x_i + t) = 1,      x_i = kappa*gamma_i^2,
    tau = (kappa + 1) / (m*kappa),

whose left side is strictly decreasing in t, so the root is unique and
bracketed by [m, m + max_i gamma_i^2].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import brentq

from .errors import BracketSignError, InvalidParameterError

__all__ = [
    "GammaConfig",
    "NegativeRoot",
    "g_value",
    "negative_root",
    "theta_lower_bound",
]

# relative tolerance for the root: far below quadrature error so the
# integral endpoint is effectively exact
_ROOT_RTOL = 1e-13


@dataclass(frozen=True)
class GammaConfig:
    """Variance-ratio configuration (gamma_1..gamma_m) with threshold c.

    Attributes:
        gammas: m nonnegative ratios sigma_j / sigma_{m+1}; at least one
            must be positive (an all-zero configuration makes the
            t-statistic degenerate and is rejected here).
        c: positive rejection threshold.
    """

    gammas: np.ndarray
    c: float

    def __post_init__(self):
        g = np.atleast_1d(np.asarray(self.gammas, dtype=np.float64)).copy()
        if g.ndim != 1 or g.size < 2:
            raise InvalidParameterError(f"need at least 2 ratios, got shape {g.shape}")
        if np.any(~np.isfinite(g)) or np.any(g < 0):
            raise InvalidParameterError("ratios must be finite and >= 0")
        if not np.any(g > 0):
            raise InvalidParameterError(
                "all-zero ratio configuration is degenerate (zero control variances)"
            )
        c = float(self.c)
        if not math.isfinite(c) or c <= 0:
            raise InvalidParameterError(f"threshold c must be finite and > 0, got {self.c!r}")
        g.flags.writeable = False
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "c", c)

    @property
    def m(self) -> int:
        """Number of control clusters."""
        return int(self.gammas.size)

    @cached_property
    def kappa(self) -> float:
        """kappa = m c^2 / (m - 1)."""
        return self.m * self.c**2 / (self.m - 1)

    @cached_property
    def tau(self) -> float:
        """tau = (kappa + 1) / (m * kappa)."""
        return (self.kappa + 1.0) / (self.m * self.kappa)

    @cached_property
    def x(self) -> np.ndarray:
        """x_i = kappa * gamma_i^2 (read-only)."""
        x = self.kappa * self.gammas**2
        x.flags.writeable = False
        return x


@dataclass(frozen=True)
class NegativeRoot:
    """Certified absolute value of the unique negative root.

    Attributes:
        abs_value: t = |theta_{m+1}|.
        bracket_low: certified lower bound (= m).
        bracket_high: certified upper bound (= m + max gamma_i^2 + eps).
        residual: value of the monotone constraint minus one at t.
    """

    abs_value: float
    bracket_low: float
    bracket_high: float
    residual: float


def g_value(cfg: GammaConfig, theta: float) -> float:
    """Evaluate g_c(theta) in the product/sum form.

    The leave-one-out products prod_{j != i}(x_j - theta) are obtained by
    dividing the full product by (x_i - theta) whenever every factor is
    safely away from zero/overflow, and by direct re-multiplication
    otherwise.
    """
    x = cfg.x
    m = cfg.m
    th = float(theta)
    factors = x - th
    full = float(np.prod(factors))
    if math.isfinite(full) and np.all(np.abs(factors) > 1e-150):
        loo = full / factors
    else:
        loo = np.empty(m)
        for i in range(m):
            loo[i] = np.prod(np.delete(factors, i))
    s = float(np.sum(cfg.gammas**2 * loo))
    return -(m + th) * full + (cfg.kappa + (cfg.kappa + 1.0) / m * th) * s


def _constraint_minus_one(t: float, x: np.ndarray, tau: float) -> float:
    """sum_i (1 + tau*x_i)/(x_i + t) - 1; strictly decreasing in t > 0."""
    return float(np.sum((1.0 + tau * x) / (x + t))) - 1.0


def negative_root(cfg: GammaConfig) -> NegativeRoot:
    """Locate t = |theta_{m+1}| on its certified bracket.

    Raises:
        BracketSignError: if the monotone constraint does not change sign
            over [m, m + max gamma^2 + eps] (impossible for valid input).
    """
    x = cfg.x
    tau = cfg.tau
    m = float(cfg.m)
    gmax2 = float(np.max(cfg.gammas)) ** 2
    eps = 1e-8 * (1.0 + gmax2)
    lo, hi = m, m + gmax2 + eps
    f_lo = _constraint_minus_one(lo, x, tau)
    f_hi = _constraint_minus_one(hi, x, tau)
    if f_lo < 0.0 or f_hi > 0.0:
        raise BracketSignError(
            f"no sign change over certified bracket [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}"
        )
    if f_lo == 0.0:
        t = lo
    elif f_hi == 0.0:
        t = hi
    else:
        t = brentq(
            _constraint_minus_one, lo, hi, args=(x, tau), xtol=1e-300, rtol=_ROOT_RTOL, maxiter=200
        )
    return NegativeRoot(
        abs_value=float(t),
        bracket_low=lo,
        bracket_high=hi,
        residual=_constraint_minus_one(float(t), x, tau),
    )


def theta_lower_bound(cfg: GammaConfig, k: int) -> float:
    """Positive root of h(theta; x_(k), k), a certified lower bound on |theta_{m+1}|.

    h(theta; x, k) = theta^2 - [m - x + (m+1-k)*tau*x]*theta - (k-1)*x,
    evaluated at x = the k-th smallest of the x_i.  Equals m when x = 0 and
    m + x/kappa when k = 1.
    """
    m = cfg.m
    if not 1 <= k <= m:
        raise InvalidParameterError(f"k must lie in 1..{m}, got {k}")
    xk = float(np.sort(cfg.x)[k - 1])
    b = m - xk + (m + 1 - k) * cfg.tau * xk
    q = (k - 1) * xk
    disc = math.sqrt(b * b + 4.0 * q)
    if b >= 0.0:
        return 0.5 * (b + disc)
    return 2.0 * q / (disc - b)
