"""Critical values: inversion of the worst-case rejection probability.

The critical value cv_{m,alpha,k,rho} is the smallest threshold c whose
worst-case rejection probability is at most alpha.  Two routes exist:

  * ClosedFormK1 — for k = 1, m >= 4, rho > 0 the worst case is attained at
    the all-equal configuration (every control SD at rho^{-1}) whenever the
    validity function `h_bar` is nonpositive at the candidate threshold,
    i.e. whenever alpha <= `alpha_underline`(m, rho).  The critical value is
    then sqrt(rho^2 + 1/m) * t_{m-1, 1-alpha/2} exactly.
  * Optimized — bisection on c against `worstcase.p_max`, which is
    nonincreasing in c.  The bracket is seeded with the large-m guess
    sqrt(m/(m-k+1)) * rho * z_{alpha/2} (never trusted as final) plus the
    k=1 closed-form value.

`generate_table` evaluates grids of critical values with per-cell error
capture and CSV/JSON export (3 decimals, half-away-from-zero).
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .distributions import normal_quantile, t_quantile, t_two_sided_tail
from .errors import InvalidParameterError, NoValidCriticalValueError
from .rejection import QuadratureSettings
from .worstcase import HeterogeneitySpec, WorstCaseResult, p_max

__all__ = [
    "CriticalValueResult",
    "h_bar",
    "c_underline",
    "alpha_underline",
    "critical_value",
    "one_sided_critical_value",
    "TableCell",
    "Table",
    "generate_table",
]

# bisection stops when the cv bracket is this tight (absolute), further
# narrowed so that cv*(1 - 1e-4) provably falls below the bracket
_CV_WIDTH = 5e-5


def _h_bar_domain(m: int) -> float:
    return math.sqrt(3.0 * (m - 1) / (m * (m - 3)))


def h_bar(m: int, c: float, rho: float) -> float:
    """Validity function for the k = 1 closed form; decreasing in c.

    The closed form holds at threshold c whenever h_bar(m, c, rho) <= 0.
    Defined for m >= 4, rho > 0 and c > sqrt(3(m-1)/(m(m-3))).
    """
    if int(m) < 4:
        raise InvalidParameterError(f"h_bar requires m >= 4, got {m}")
    if not (math.isfinite(rho) and rho > 0):
        raise InvalidParameterError(f"h_bar requires rho > 0, got {rho!r}")
    if not c > _h_bar_domain(int(m)):
        raise InvalidParameterError(
            f"h_bar requires c > {_h_bar_domain(int(m))!r}, got {c!r}"
        )
    m = int(m)
    kappa = m * c * c / (m - 1.0)
    tau = (kappa + 1.0) / (m * kappa)
    z_low = 1.0 / (2.0 * max(m * rho * rho + 1.0, kappa + 2.0))
    first = max(
        3.0 * (m * rho * rho + 1.0) / (m * rho * rho + kappa + 1.0),
        (2.0 * kappa + 3.0) / (kappa + 1.0),
    )
    second = (1.0 - tau) / (
        1.0 - tau + min((1.0 - 2.0 * tau) * kappa * z_low - 0.5, 0.0)
    )
    return first + second - m * kappa / (m * rho * rho + kappa + 1.0) - 1.0


def c_underline(m: int, rho: float) -> float:
    """Smallest threshold from which the k = 1 closed form is valid.

    Bisection on the decreasing h_bar over [domain edge, c_hi], doubling
    c_hi until h_bar < 0; absolute tolerance 1e-8 on c.
    """
    lo = _h_bar_domain(int(m)) + 1e-9
    if h_bar(m, lo, rho) <= 0.0:
        return lo
    hi = max(2.0 * lo, 2.0)
    for _ in range(200):
        if h_bar(m, hi, rho) < 0.0:
            break
        hi *= 2.0
    else:  # pragma: no cover - h_bar -> negative limit guarantees termination
        raise NoValidCriticalValueError("h_bar never became negative")
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if h_bar(m, mid, rho) <= 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def _c_underline_grid(m: int, rho: float, step: float = 0.01) -> float:
    """Smallest multiple of ``step`` at which h_bar is nonpositive.

    A conservative (rounded-up) version of `c_underline`; this coarser
    convention is what the frozen reference grids use for the cutoff.
    """
    edge = _h_bar_domain(int(m))
    n = math.floor(c_underline(m, rho) / step)
    for cand in (n - 1, n, n + 1, n + 2):
        c = cand * step
        if c > edge and h_bar(m, c, rho) <= 0.0:
            return c
    raise NoValidCriticalValueError(  # pragma: no cover - exact root brackets the grid
        f"no grid threshold near the h_bar crossing for m={m}, rho={rho}"
    )


def alpha_underline(m: int, rho: float) -> float:
    """Largest level alpha for which the k = 1 closed form is used.

    Equals the two-sided tail of sqrt(rho^2 + 1/m) * t_{m-1} at the
    validity threshold, with the threshold rounded up to the next 0.01
    grid point (a conservative quantization; the exact crossing is
    available via `c_underline`).
    """
    c_min = _c_underline_grid(m, rho)
    return float(t_two_sided_tail(int(m) - 1, c_min / math.sqrt(rho * rho + 1.0 / m)))


@dataclass(frozen=True)
class CriticalValueResult:
    """Critical value with its inversion diagnostics.

    Attributes:
        cv: the critical value.
        method: "ClosedFormK1" or "Optimized".
        alpha: two-sided level inverted.
        spec: the heterogeneity restriction used.
        worst_case: full worst-case evaluation at cv.
        iterations: bisection iterations (0 for the closed form).
    """

    cv: float
    method: str
    alpha: float
    spec: HeterogeneitySpec
    worst_case: WorstCaseResult
    iterations: int


def _closed_form_k1(m: int, alpha: float, rho: float) -> float:
    return math.sqrt(rho * rho + 1.0 / m) * float(t_quantile(m - 1, 1.0 - alpha / 2.0))


def critical_value(
    m: int,
    alpha: float,
    spec: HeterogeneitySpec,
    settings: QuadratureSettings | None = None,
) -> CriticalValueResult:
    """Smallest c with worst-case rejection probability <= alpha (two-sided).

    Uses the exact closed form when its validity condition holds (k = 1,
    m >= 4, rho > 0 and alpha <= alpha_underline); otherwise inverts
    `p_max` by bisection to a bracket width of 5e-5.

    Raises:
        InvalidParameterError: alpha outside (0, 0.5) or mismatched spec.
        NoValidCriticalValueError: no threshold attains level alpha (the
            attainable floor is attached).
    """
    if not (0.0 < alpha < 0.5):
        raise InvalidParameterError(f"alpha must lie in (0, 0.5), got {alpha!r}")
    m = int(m)
    if spec.m != m:
        raise InvalidParameterError(f"spec.m={spec.m} does not match m={m}")
    k, rho = spec.k, spec.rho

    if k == 1 and m >= 4 and rho > 0 and alpha <= alpha_underline(m, rho):
        cv = _closed_form_k1(m, alpha, rho)
        return CriticalValueResult(
            cv=cv,
            method="ClosedFormK1",
            alpha=alpha,
            spec=spec,
            worst_case=p_max(m, cv, spec, settings),
            iterations=0,
        )

    lo = 1.0 / math.sqrt(m) + 1e-6
    if p_max(m, lo, spec, settings, stop_above=alpha).value <= alpha:
        # every admissible threshold already attains the level
        return CriticalValueResult(
            cv=lo,
            method="Optimized",
            alpha=alpha,
            spec=spec,
            worst_case=p_max(m, lo, spec, settings),
            iterations=0,
        )

    guess = math.sqrt(m / (m - k + 1.0)) * rho * float(normal_quantile(1.0 - alpha / 2.0))
    hi = 2.0 * (guess + _closed_form_k1(m, alpha, max(rho, 0.0)) + 1.0)
    for _ in range(80):
        if p_max(m, hi, spec, settings, stop_above=alpha).value <= alpha:
            break
        hi *= 2.0
    else:
        floor = p_max(m, hi, spec, settings).value
        raise NoValidCriticalValueError(
            f"worst-case rejection probability stays above alpha={alpha}"
            f" for all thresholds searched (floor ~{floor})",
            floor=floor,
        )

    iterations = 0
    while (hi - lo) > min(_CV_WIDTH, 0.99e-4 * hi):
        mid = 0.5 * (lo + hi)
        if p_max(m, mid, spec, settings, stop_above=alpha).value > alpha:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return CriticalValueResult(
        cv=hi,
        method="Optimized",
        alpha=alpha,
        spec=spec,
        worst_case=p_max(m, hi, spec, settings),
        iterations=iterations,
    )


def one_sided_critical_value(
    m: int,
    alpha: float,
    spec: HeterogeneitySpec,
    settings: QuadratureSettings | None = None,
) -> CriticalValueResult:
    """One-sided critical value at level alpha: the two-sided value at 2*alpha."""
    if not (0.0 < alpha < 0.25):
        raise InvalidParameterError(
            f"one-sided alpha must lie in (0, 0.25), got {alpha!r}"
        )
    return critical_value(m, 2.0 * alpha, spec, settings)


def round3(x: float) -> str:
    """Format to 3 decimals, rounding halves away from zero."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class TableCell:
    """One grid cell; exactly one of cv/error is set."""

    alpha: float
    m: int
    rho: float
    cv: float | None
    method: str | None
    error: str | None


@dataclass(frozen=True)
class Table:
    """Critical-value grid with stable CSV/JSON export."""

    k: int
    alphas: tuple[float, ...]
    ms: tuple[int, ...]
    rhos: tuple[float, ...]
    cells: tuple[TableCell, ...]

    def cell(self, alpha: float, m: int, rho: float) -> TableCell:
        for cell in self.cells:
            if cell.alpha == alpha and cell.m == m and cell.rho == rho:
                return cell
        raise KeyError((alpha, m, rho))

    def to_csv(self) -> str:
        """Rows are rho values, one column per m; one block per alpha."""
        by_key = {(c.alpha, c.m, c.rho): c for c in self.cells}
        lines: list[str] = []
        for alpha in self.alphas:
            if len(self.alphas) > 1:
                lines.append(f"# alpha={alpha:g}")
            lines.append("rho," + ",".join(str(m) for m in self.ms))
            for rho in self.rhos:
                row = [f"{rho:g}"]
                for m in self.ms:
                    cell = by_key[(alpha, m, rho)]
                    row.append(round3(cell.cv) if cell.cv is not None else "ERROR")
                lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """Records with 3-decimal cells; stable field order."""
        records = []
        for cell in self.cells:
            rec: dict = {"alpha": cell.alpha, "m": cell.m, "rho": cell.rho, "k": self.k}
            if cell.cv is not None:
                rec["cv"] = float(round3(cell.cv))
                rec["method"] = cell.method
            else:
                rec["error"] = cell.error
            records.append(rec)
        return json.dumps(records, indent=2)


def _table_cell(args: tuple) -> TableCell:
    alpha, m, rho, k, settings = args
    try:
        res = critical_value(m, alpha, HeterogeneitySpec(m=m, k=k, rho=rho), settings)
        return TableCell(alpha, m, rho, res.cv, res.method, None)
    except Exception as exc:  # per-cell capture: a bad cell must not kill the grid
        return TableCell(alpha, m, rho, None, None, f"{type(exc).__name__}: {exc}")


def generate_table(
    alphas: list[float],
    ms: list[int],
    rhos: list[float],
    k: int,
    settings: QuadratureSettings | None = None,
    workers: int | None = None,
) -> Table:
    """Grid of critical values over alphas x rhos x ms at a fixed k.

    Cells are independent; failures are recorded in-cell.  ``workers`` > 1
    evaluates cells in a process pool (deterministic output order).
    """
    jobs = [
        (float(alpha), int(m), float(rho), int(k), settings)
        for alpha in alphas
        for rho in rhos
        for m in ms
    ]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_table_cell, jobs, chunksize=1))
    else:
        cells = [_table_cell(job) for job in jobs]
    return Table(
        k=int(k),
        alphas=tuple(float(a) for a in alphas),
        ms=tuple(int(m) for m in ms),
        rhos=tuple(float(r) for r in rhos),
        cells=tuple(cells),
    )
