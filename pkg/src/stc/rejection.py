"""Null rejection probability P0[|T_m| > c] for a ratio configuration.

The probability is the singular integral

    P = (1/pi) * Integral_0^t  U(x, s) / sqrt(t - s) ds,
    U(x, s) = s^(m/2 - 1) / sqrt(PQ(x, s)),

where t = |theta_{m+1}| is the negative-root magnitude from `charpoly` and
PQ is the fused sum-of-products

    PQ(x, s) = sum_i [(1 + tau*x_i) / (x_i + t)] * prod_{j != i} (x_j + s).

Fusing is mandatory: the unfused factors P and Q separately tend to
infinity and zero when some x_i = 0, while the fused form stays finite and
strictly positive on (0, t).  The endpoint singularity 1/sqrt(t - s) is
removed exactly by the substitution s = t*sin(u)^2:

    P = (1/pi) * Integral_0^{pi/2}  2*sqrt(t)*sin(u) * U(x, t*sin(u)^2) du,

after which the integrand is smooth (near u = 0 it behaves like an integer
power of sin(u)) and fixed-panel Gauss-Legendre converges spectrally.

The fused product is accumulated in log space in all regimes: the grid and
refinement searches upstream push x_i as high as ~1e10 at m = 50, where
plain products overflow, and the log-space path costs the same code for
every m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .charpoly import GammaConfig, negative_root
from .errors import InvalidParameterError, NumericalFailureError

__all__ = ["QuadratureSettings", "rejection_probability"]

# Chunk budget for the (batch, nodes, m) work arrays, in elements.
_CHUNK_ELEMENTS = 4_000_000


@dataclass(frozen=True)
class QuadratureSettings:
    """Fixed-panel Gauss-Legendre settings for the tail integral.

    Attributes:
        panels: number of equal panels on u in [0, pi/2].
        nodes_per_panel: Gauss-Legendre nodes per panel.
        abs_tol: target absolute error; doubling the panel count must move
            the result by less than this.
    """

    panels: int = 64
    nodes_per_panel: int = 16
    abs_tol: float = 1e-9

    def __post_init__(self):
        if int(self.panels) < 1:
            raise InvalidParameterError(f"panels must be >= 1, got {self.panels}")
        if int(self.nodes_per_panel) < 2:
            raise InvalidParameterError(
                f"nodes_per_panel must be >= 2, got {self.nodes_per_panel}"
            )
        object.__setattr__(self, "panels", int(self.panels))
        object.__setattr__(self, "nodes_per_panel", int(self.nodes_per_panel))
        object.__setattr__(self, "abs_tol", float(self.abs_tol))


DEFAULT_SETTINGS = QuadratureSettings()


@lru_cache(maxsize=16)
def _nodes_weights(panels: int, nodes_per_panel: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes/weights on [0, pi/2], read-only."""
    xi, w = np.polynomial.legendre.leggauss(nodes_per_panel)
    h = (math.pi / 2.0) / panels
    starts = h * np.arange(panels)
    u = (starts[:, None] + 0.5 * h * (xi[None, :] + 1.0)).ravel()
    wu = np.broadcast_to(0.5 * h * w, (panels, nodes_per_panel)).ravel().copy()
    u.flags.writeable = False
    wu.flags.writeable = False
    return u, wu


def _roots_batch(x: np.ndarray, tau: float, m: int) -> np.ndarray:
    """Vectorized |theta_{m+1}| for rows of x: bisection then Newton on the
    monotone constraint sum_i (1 + tau*x_i)/(x_i + t) = 1.

    The constraint's left side minus one is strictly decreasing and convex
    in t > 0, so Newton iterates started on the below-root side of the
    certified bracket converge monotonically upward; four steps after a
    coarse bisection reach machine precision.
    """
    # bracket [m, m + max gamma^2 + eps]; max gamma^2 = max x / kappa and
    # kappa = 1/(m*tau - 1)
    kappa = 1.0 / (m * tau - 1.0)
    top = np.max(x, axis=1) / kappa
    eps = 1e-8 * (1.0 + top)
    lo = np.full(x.shape[0], float(m))
    hi = float(m) + top + eps
    w = 1.0 + tau * x
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        f = np.sum(w / (x + mid[:, None]), axis=1) - 1.0
        take_lo = f > 0.0
        lo = np.where(take_lo, mid, lo)
        hi = np.where(take_lo, hi, mid)
    t = lo
    for _ in range(4):
        xt = x + t[:, None]
        f = np.sum(w / xt, axis=1) - 1.0
        fp = np.sum(w / (xt * xt), axis=1)
        t = np.minimum(t + f / fp, hi)
    return t


def _tail_quadrature(
    x: np.ndarray, t: np.ndarray, tau: float, m: int, settings: QuadratureSettings
) -> np.ndarray:
    """Evaluate the substituted integral for rows of x with endpoints t."""
    u, wu = _nodes_weights(settings.panels, settings.nodes_per_panel)
    sin_u = np.sin(u)
    sin2_u = sin_u * sin_u
    n_nodes = u.size
    out = np.empty(x.shape[0])
    chunk = max(1, _CHUNK_ELEMENTS // (n_nodes * m))
    for start in range(0, x.shape[0], chunk):
        xb = x[start : start + chunk]
        tb = t[start : start + chunk]
        s = tb[:, None] * sin2_u[None, :]                      # (B, N)
        xs = xb[:, None, :] + s[:, :, None]                    # (B, N, m)
        sum_log = np.sum(np.log(xs), axis=2)                   # (B, N): log Q
        a = (1.0 + tau * xb) / (xb + tb[:, None])              # (B, m)
        # PQ = Q * sum_i a_i/(x_i + s): the ratio sum stays well inside
        # float range (each term is between ~(x_max + t)^-2 and ~1/(t*s)),
        # so only Q itself needs log-space accumulation.
        ratio_sum = np.sum(a[:, None, :] / xs, axis=2)         # (B, N)
        log_pq = sum_log + np.log(ratio_sum)
        log_u_term = (0.5 * m - 1.0) * np.log(s) - 0.5 * log_pq
        integrand = 2.0 * np.sqrt(tb)[:, None] * sin_u[None, :] * np.exp(log_u_term)
        out[start : start + chunk] = integrand @ wu / math.pi
    return out


def _tails_for_gamma_rows(
    gammas: np.ndarray, c: float, settings: QuadratureSettings | None = None
) -> np.ndarray:
    """Rejection probabilities for a batch of ratio rows at a common c.

    Internal fast path for the worst-case optimizers; each row must be a
    valid (not all-zero) nonnegative configuration.
    """
    settings = settings or DEFAULT_SETTINGS
    g = np.asarray(gammas, dtype=np.float64)
    if g.ndim != 2:
        raise InvalidParameterError(f"expected a 2-d batch of ratio rows, got shape {g.shape}")
    m = g.shape[1]
    kappa = m * c * c / (m - 1)
    tau = (kappa + 1.0) / (m * kappa)
    x = kappa * g * g
    t = _roots_batch(x, tau, m)
    vals = _tail_quadrature(x, t, tau, m, settings)
    if not np.all(np.isfinite(vals)):
        bad = int(np.argmax(~np.isfinite(vals)))
        raise NumericalFailureError(
            f"non-finite tail integral: m={m}, c={c}, gammas={g[bad]!r}, t={t[bad]!r}"
        )
    if np.any(vals > 1.0 + 1e-6) or np.any(vals < -1e-6):
        bad = int(np.argmax(np.maximum(vals - 1.0, -vals)))
        raise NumericalFailureError(
            f"tail integral escaped [0,1]: value={vals[bad]!r}, m={m}, c={c}, gammas={g[bad]!r}"
        )
    return np.clip(vals, 0.0, 1.0)


def rejection_probability(
    cfg: GammaConfig, settings: QuadratureSettings | None = None
) -> float:
    """Null probability that |T_m| exceeds cfg.c under ratio configuration cfg.

    Args:
        cfg: validated ratio configuration (at least one positive ratio).
        settings: quadrature controls; defaults to 64 panels x 16 nodes.

    Returns:
        The tail probability in [0, 1].

    Raises:
        NumericalFailureError: if any intermediate is non-finite or the
            result escapes [0, 1] beyond tolerance.
    """
    settings = settings or DEFAULT_SETTINGS
    root = negative_root(cfg)
    vals = _tail_quadrature(
        cfg.x[None, :], np.array([root.abs_value]), cfg.tau, cfg.m, settings
    )
    val = float(vals[0])
    if not math.isfinite(val):
        raise NumericalFailureError(
            f"non-finite tail integral: m={cfg.m}, c={cfg.c}, t={root.abs_value}"
        )
    if val > 1.0 + 1e-6 or val < -1e-6:
        raise NumericalFailureError(
            f"tail integral escaped [0,1]: value={val}, m={cfg.m}, c={cfg.c}"
        )
    return min(max(val, 0.0), 1.0)
