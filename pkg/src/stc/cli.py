"""Command-line surface: critical values, tests on CSV panels, tables, MC.

Subcommands: cv, max-alpha, pvalue, test, ci, rho-frontier, table, simulate.
Output formats: text (default), json, csv via --output; --output-path writes
to a file instead of stdout.

Exit codes are a stable contract: 0 success, 2 usage/parameter error,
3 method infeasibility (no valid critical value / numerical failure),
4 data error (malformed CSV, design violations).

The panel CSV schema: UTF-8, '.' decimal, header ``cluster,unit,time,
outcome,c`` where ``unit`` and ``c`` (and ``time`` for cross-sections) may
be omitted; lines starting with '#' are comments.  The treated cluster is
designated by --treated, never by a column, so one schema serves every
design.

JSON output round-trips byte-identically: floats are pre-rounded (6
significant digits for diagnostics, 3 decimals for table cells), infinities
are emitted as the string "inf", missing values as null.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .critical_values import (
    alpha_underline,
    critical_value,
    generate_table,
    one_sided_critical_value,
    round3,
)
from .designs import DesignKind, PanelData, extract
from .errors import (
    BracketSignError,
    DataFormatError,
    DesignViolationError,
    InvalidParameterError,
    NoValidCriticalValueError,
    NumericalFailureError,
    RankDeficiencyError,
    StcError,
)
from .inference import Sided, confidence_interval, p_value, rho_frontier, run_test, t_statistic
from .simulate import MCConfig, NormalMeansDesign, TwfeDesign
from .simulate import run as mc_run
from .worstcase import Boundary, HeterogeneitySpec, ZeroTreated

__all__ = ["main", "read_panel_csv", "write_panel_csv"]

_CSV_COLUMNS = ("cluster", "unit", "time", "outcome", "c")
_DESIGNS = {
    "mean": DesignKind.CLUSTERED_MEAN,
    "did": DesignKind.DID,
    "twfe": DesignKind.TWO_WAY_FE,
    "tripled": DesignKind.TRIPLE_DIFF,
}
_SIDED = {"greater": Sided.ONE_SIDED_GREATER, "less": Sided.ONE_SIDED_LESS}


# ---------------------------------------------------------------------------
# panel CSV schema


def read_panel_csv(path: str) -> dict[str, np.ndarray | None]:
    """Parse the panel schema into column arrays (absent columns -> None)."""
    import csv as _csv

    rows: list[list[str]] = []
    numbers: list[int] = []
    with open(path, encoding="utf-8", newline="") as fh:
        for number, record in enumerate(_csv.reader(fh), start=1):
            if not record or (record[0].lstrip().startswith("#")):
                continue
            if all(not field.strip() for field in record):
                continue
            rows.append([field.strip() for field in record])
            numbers.append(number)
    if not rows:
        raise DataFormatError(f"{path}: no header row found")
    header, data, data_numbers = rows[0], rows[1:], numbers[1:]
    unknown = [name for name in header if name not in _CSV_COLUMNS]
    if unknown:
        raise DataFormatError(f"{path}: unknown column(s) {unknown}; expected {_CSV_COLUMNS}")
    if len(set(header)) != len(header):
        raise DataFormatError(f"{path}: duplicate column names in header")
    for required in ("cluster", "outcome"):
        if required not in header:
            raise DataFormatError(f"{path}: missing required column {required!r}")
    if not data:
        raise DataFormatError(f"{path}: no data rows")

    columns: dict[str, list] = {name: [] for name in header}
    for number, record in zip(data_numbers, data):
        if len(record) != len(header):
            raise DataFormatError(
                f"{path} line {number}: expected {len(header)} fields, got {len(record)}"
            )
        for name, field in zip(header, record):
            columns[name].append(_parse_field(path, number, name, field))

    out: dict[str, np.ndarray | None] = {name: None for name in _CSV_COLUMNS}
    casts = {"cluster": str, "unit": str, "time": int, "outcome": float, "c": int}
    for name, values in columns.items():
        out[name] = np.array(values, dtype=casts[name])
    return out


def _parse_field(path: str, number: int, name: str, field: str):
    try:
        if name == "outcome":
            return float(field)
        if name == "time":
            return int(field)
        if name == "c":
            value = int(field)
            if value not in (0, 1):
                raise ValueError
            return value
        if not field:
            raise ValueError
        return field
    except ValueError:
        raise DataFormatError(
            f"{path} line {number}: bad value {field!r} in column {name!r}"
        ) from None


def write_panel_csv(path: str, cluster, outcome, time=None, unit=None, c=None) -> None:
    """Write columns in the canonical header order, omitting absent ones."""
    named = [("cluster", cluster), ("unit", unit), ("time", time),
             ("outcome", outcome), ("c", c)]
    present = [(name, np.asarray(col)) for name, col in named if col is not None]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(name for name, _ in present) + "\n")
        for i in range(present[0][1].size):
            fh.write(",".join(_format_cell(col[i]) for _, col in present) + "\n")


def _format_cell(value) -> str:
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


# ---------------------------------------------------------------------------
# output plumbing


def _f6(x):
    """JSON-safe float at 6 significant digits; inf -> 'inf', None -> None."""
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):  # pragma: no cover - nothing emits NaN
        return None
    return float(f"{x:.6g}")


def _emit(args, text: str, json_obj, csv_text: str) -> None:
    if args.output == "json":
        out = json_obj if isinstance(json_obj, str) else json.dumps(json_obj, indent=2)
        out += "\n" if not out.endswith("\n") else ""
    elif args.output == "csv":
        out = csv_text if csv_text.endswith("\n") else csv_text + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.output_path:
        with open(args.output_path, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _csv_lines(header: str, rows: list[list]) -> str:
    return "\n".join([header] + [",".join(str(x) for x in row) for row in rows]) + "\n"


def _achieving_json(achieving) -> dict:
    if isinstance(achieving, ZeroTreated):
        return {"kind": "ZeroTreated", "active_controls": achieving.j}
    assert isinstance(achieving, Boundary)
    return {
        "kind": "Boundary",
        "m1": achieving.m1,
        "m0": achieving.m0,
        "gamma": _f6(achieving.gamma),
    }


def _achieving_text(achieving) -> str:
    if isinstance(achieving, ZeroTreated):
        return f"ZeroTreated(active_controls={achieving.j})"
    gamma = "none" if achieving.gamma is None else f"{achieving.gamma:.6g}"
    return f"Boundary(m1={achieving.m1}, m0={achieving.m0}, gamma={gamma})"


# ---------------------------------------------------------------------------
# flag parsing helpers


def _parse_floats(token: str) -> list[float]:
    """Comma list or inclusive range a:b:step."""
    if ":" in token:
        try:
            a, b, step = (float(x) for x in token.split(":"))
        except ValueError:
            raise InvalidParameterError(f"bad range {token!r}; expected a:b:step") from None
        if step <= 0 or b < a:
            raise InvalidParameterError(f"bad range {token!r}: need step > 0 and b >= a")
        n = int(math.floor((b - a) / step + 1e-9))
        return [round(a + i * step, 10) for i in range(n + 1)]
    try:
        return [float(x) for x in token.split(",") if x]
    except ValueError:
        raise InvalidParameterError(f"bad number list {token!r}") from None


def _parse_ints(token: str) -> list[int]:
    values = _parse_floats(token)
    out = [int(round(v)) for v in values]
    if any(abs(v - i) > 1e-9 for v, i in zip(values, out)):
        raise InvalidParameterError(f"expected integers, got {token!r}")
    return out


def _workers(args) -> int:
    workers = getattr(args, "workers", 1)
    cap = os.environ.get("STC_THREADS")
    if cap is not None:
        workers = min(workers, max(1, int(cap)))
    return max(1, workers)


def _panel_from_args(args) -> PanelData:
    cols = read_panel_csv(args.data)
    return PanelData(
        cluster=cols["cluster"],
        outcome=cols["outcome"],
        treated_cluster=args.treated,
        time=cols["time"],
        post_start=args.post_start,
        unit=cols["unit"],
        c_indicator=cols["c"],
    )


def _estimates_from_args(args):
    extraction = extract(_panel_from_args(args), _DESIGNS[args.design])
    return extraction, extraction.estimates


def _sided_from_args(args) -> Sided:
    one_sided = getattr(args, "one_sided", None)
    return _SIDED[one_sided] if one_sided else Sided.TWO_SIDED


# ---------------------------------------------------------------------------
# subcommands


def _cmd_cv(args) -> int:
    spec = HeterogeneitySpec(m=args.m, k=args.k, rho=args.rho)
    invert = one_sided_critical_value if args.one_sided else critical_value
    res = invert(args.m, args.alpha, spec)
    obj = {
        "m": args.m,
        "alpha": args.alpha,
        "k": args.k,
        "rho": args.rho,
        "one_sided": bool(args.one_sided),
        "cv": _f6(res.cv),
        "cv_rounded": float(round3(res.cv)),
        "method": res.method,
        "worst_case_at_cv": _f6(res.worst_case.value),
        "iterations": res.iterations,
    }
    text = (
        f"cv={round3(res.cv)} method={res.method}\n"
        f"  m={args.m} alpha={args.alpha:g} k={args.k} rho={args.rho:g}"
        f" one_sided={str(bool(args.one_sided)).lower()}\n"
        f"  cv_full={res.cv:.6g} worst_case_at_cv={res.worst_case.value:.6g}"
        f" iterations={res.iterations}"
    )
    csv_text = _csv_lines(
        "m,alpha,k,rho,one_sided,cv,method",
        [[args.m, f"{args.alpha:g}", args.k, f"{args.rho:g}",
          int(bool(args.one_sided)), round3(res.cv), res.method]],
    )
    _emit(args, text, obj, csv_text)
    return 0


def _cmd_max_alpha(args) -> int:
    ms, rhos = args.ms, args.rhos
    grid = {(m, rho): alpha_underline(m, rho) for m in ms for rho in rhos}
    records = [
        {"m": m, "rho": rho, "alpha_underline": _f6(grid[(m, rho)]),
         "percent": round(100.0 * grid[(m, rho)], 2)}
        for rho in rhos for m in ms
    ]
    header = "rho," + ",".join(str(m) for m in ms)
    rows = [[f"{rho:g}"] + [f"{100.0 * grid[(m, rho)]:.2f}" for m in ms] for rho in rhos]
    text_lines = ["largest valid alpha (percent) by rho (rows) and m (columns)",
                  "rho     " + "".join(f"{m:>8d}" for m in ms)]
    for rho in rhos:
        text_lines.append(
            f"{rho:<8g}" + "".join(f"{100.0 * grid[(m, rho)]:>8.2f}" for m in ms)
        )
    _emit(args, "\n".join(text_lines), records, _csv_lines(header, rows))
    return 0


def _cmd_pvalue(args) -> int:
    extraction, est = _estimates_from_args(args)
    spec = HeterogeneitySpec(m=est.m, k=args.k, rho=args.rho)
    sided = _sided_from_args(args)
    p = p_value(est, spec, sided)
    t, effect, s = t_statistic(est)
    obj = {
        "design": args.design,
        "treated": extraction.treated_cluster,
        "m": est.m,
        "k": args.k,
        "rho": args.rho,
        "sided": sided.value,
        "delta_hat": _f6(effect),
        "t_stat": _f6(t),
        "p_value": _f6(p),
    }
    text = (
        f"p={p:.6g} ({sided.value})\n"
        f"  t={t:.6g} delta_hat={effect:.6g} m={est.m} k={args.k} rho={args.rho:g}"
    )
    csv_text = _csv_lines(
        "design,treated,m,k,rho,sided,delta_hat,t_stat,p_value",
        [[args.design, extraction.treated_cluster, est.m, args.k, f"{args.rho:g}",
          sided.value, f"{effect:.6g}", f"{t:.6g}", f"{p:.6g}"]],
    )
    _emit(args, text, obj, csv_text)
    return 0


def _interval_json(ci: tuple[float, float]) -> list:
    return [_f6(ci[0]), _f6(ci[1])]


def _cmd_test(args) -> int:
    extraction, est = _estimates_from_args(args)
    spec = HeterogeneitySpec(m=est.m, k=args.k, rho=args.rho)
    sided = _sided_from_args(args)
    report = run_test(est, spec, args.alpha, sided)
    worst = report.cv.worst_case
    obj = {
        "design": args.design,
        "treated": extraction.treated_cluster,
        "m": est.m,
        "alpha": args.alpha,
        "k": args.k,
        "rho": args.rho,
        "sided": sided.value,
        "delta_hat": _f6(report.effect),
        "t_stat": _f6(report.t_stat),
        "control_sd": _f6(report.control_sd),
        "cv": _f6(report.cv.cv),
        "method": report.cv.method,
        "p_value": _f6(report.p_value),
        "ci": _interval_json(report.ci),
        "reject": report.reject,
        "degenerate": report.degenerate,
        "worst_case": {
            "value": _f6(worst.value),
            "achieving": _achieving_json(worst.achieving_config),
        },
    }
    lo, hi = report.ci
    text = (
        f"reject={str(report.reject).lower()} p={report.p_value:.6g}"
        f" (alpha={args.alpha:g}, {sided.value})\n"
        f"  delta_hat={report.effect:.6g} t={report.t_stat:.6g}"
        f" control_sd={report.control_sd:.6g} m={est.m}\n"
        f"  cv={report.cv.cv:.6g} method={report.cv.method}"
        f" k={args.k} rho={args.rho:g}\n"
        f"  ci=[{lo:.6g}, {hi:.6g}]\n"
        f"  worst_case={worst.value:.6g} at {_achieving_text(worst.achieving_config)}"
        + ("\n  note: zero control variance; degenerate statistic" if report.degenerate else "")
    )
    csv_text = _csv_lines(
        "design,treated,m,alpha,k,rho,sided,delta_hat,t_stat,cv,p_value,ci_lo,ci_hi,reject",
        [[args.design, extraction.treated_cluster, est.m, f"{args.alpha:g}", args.k,
          f"{args.rho:g}", sided.value, f"{report.effect:.6g}", f"{report.t_stat:.6g}",
          f"{report.cv.cv:.6g}", f"{report.p_value:.6g}", f"{lo:.6g}", f"{hi:.6g}",
          str(report.reject).lower()]],
    )
    _emit(args, text, obj, csv_text)
    return 0


def _cmd_ci(args) -> int:
    extraction, est = _estimates_from_args(args)
    spec = HeterogeneitySpec(m=est.m, k=args.k, rho=args.rho)
    lo, hi = confidence_interval(est, spec, args.alpha)
    _, effect, _ = t_statistic(est)
    obj = {
        "design": args.design,
        "treated": extraction.treated_cluster,
        "m": est.m,
        "alpha": args.alpha,
        "k": args.k,
        "rho": args.rho,
        "delta_hat": _f6(effect),
        "ci": _interval_json((lo, hi)),
    }
    text = (
        f"ci=[{lo:.6g}, {hi:.6g}] (alpha={args.alpha:g})\n"
        f"  delta_hat={effect:.6g} m={est.m} k={args.k} rho={args.rho:g}"
    )
    csv_text = _csv_lines(
        "design,treated,m,alpha,k,rho,delta_hat,ci_lo,ci_hi",
        [[args.design, extraction.treated_cluster, est.m, f"{args.alpha:g}", args.k,
          f"{args.rho:g}", f"{effect:.6g}", f"{lo:.6g}", f"{hi:.6g}"]],
    )
    _emit(args, text, obj, csv_text)
    return 0


def _frontier_cell(bound: float):
    """NA when nothing rejects (bound 0); 'inf' when everything does."""
    if bound == 0.0:
        return None
    return _f6(bound)


def _cmd_rho_frontier(args) -> int:
    extraction, est = _estimates_from_args(args)
    t, _, _ = t_statistic(est)
    records = []
    rows = []
    text_lines = [f"t={t:.6g} m={est.m}"]
    for alpha in args.alpha_list:
        frontier = rho_frontier(est, alpha)
        for k, bound in enumerate(frontier.bounds, start=1):
            cell = _frontier_cell(bound)
            records.append({"alpha": alpha, "k": k, "rho_hat": cell})
            rows.append([f"{alpha:g}", k, "NA" if cell is None else cell])
        shown = ["NA" if _frontier_cell(b) is None else f"{b:.4g}" for b in frontier.bounds]
        text_lines.append(f"alpha={alpha:g}: rho_hat by k = {', '.join(shown)}")
    obj = {"design": args.design, "treated": extraction.treated_cluster,
           "m": est.m, "t_stat": _f6(t), "frontier": records}
    _emit(args, "\n".join(text_lines), obj, _csv_lines("alpha,k,rho_hat", rows))
    return 0


def _cmd_table(args) -> int:
    table = generate_table(args.alphas, args.ms, args.rhos, args.k, workers=_workers(args))
    text = table.to_csv()
    _emit(args, text, table.to_json(), table.to_csv())
    return 0


def _cmd_simulate(args) -> int:
    if args.design == "normal":
        design = NormalMeansDesign(dgp=args.dgp, m=args.m, delta=args.delta, rho=args.rho)
    else:
        design = TwfeDesign(dgp=args.dgp, m=args.m, sigma=args.sigma, theta=args.theta)
    config = MCConfig(design=design, reps=args.reps, seed=args.seed,
                      alpha=args.alpha, k=args.k, rho=args.test_rho)
    result = mc_run(config, include_stats=args.per_rep is not None)
    if args.per_rep is not None:
        cv = result.critical_value.cv
        with open(args.per_rep, "w", encoding="utf-8") as fh:
            fh.write("rep,t_stat,reject\n")
            for r, t in enumerate(result.t_stats):
                fh.write(f"{r},{float(t)!r},{int(abs(t) > cv)}\n")
    obj = {
        "design": args.design,
        "dgp": args.dgp,
        "m": args.m,
        "reps": args.reps,
        "seed": args.seed,
        "alpha": args.alpha,
        "k": args.k,
        "rho": _f6(config.test_rho),
        "rejection_rate": _f6(result.rejection_rate),
        "se": _f6(result.se),
        "rejections": result.rejections,
        "cv": _f6(result.critical_value.cv),
        "method": result.critical_value.method,
    }
    text = (
        f"rejection_rate={result.rejection_rate:.6g} se={result.se:.3g}"
        f" ({result.rejections}/{result.reps} reps)\n"
        f"  design={args.design} dgp={args.dgp} m={args.m} alpha={args.alpha:g}"
        f" k={args.k} rho={config.test_rho:g} seed={args.seed}\n"
        f"  cv={result.critical_value.cv:.6g} method={result.critical_value.method}"
    )
    csv_text = _csv_lines(
        "design,dgp,m,reps,seed,alpha,k,rho,rejection_rate,se,rejections,cv",
        [[args.design, args.dgp, args.m, args.reps, args.seed, f"{args.alpha:g}",
          args.k, f"{config.test_rho:g}", f"{result.rejection_rate:.6g}",
          f"{result.se:.6g}", result.rejections, f"{result.critical_value.cv:.6g}"]],
    )
    _emit(args, text, obj, csv_text)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_output_flags(sub) -> None:
    sub.add_argument("--output", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--output-path", default=None)


def _add_spec_flags(sub, with_alpha: bool = True) -> None:
    if with_alpha:
        sub.add_argument("--alpha", type=float, default=0.05)
    sub.add_argument("--rho", type=float, required=True)
    sub.add_argument("--k", type=int, default=1)


def _add_data_flags(sub) -> None:
    sub.add_argument("--data", required=True, help="panel CSV path")
    sub.add_argument("--design", choices=tuple(_DESIGNS), required=True)
    sub.add_argument("--treated", required=True, help="treated cluster id")
    sub.add_argument("--post-start", type=int, default=None,
                     help="first post-treatment period (t0)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stc",
        description="Worst-case t-test inference with a single treated cluster",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    cv = subs.add_parser("cv", help="critical value for (m, alpha, k, rho)")
    cv.add_argument("--m", type=int, required=True)
    _add_spec_flags(cv)
    cv.add_argument("--one-sided", action="store_true")
    _add_output_flags(cv)
    cv.set_defaults(handler=_cmd_cv)

    ma = subs.add_parser("max-alpha", help="largest level with a valid closed form")
    ma.add_argument("--ms", type=_parse_ints, required=True)
    ma.add_argument("--rhos", type=_parse_floats, required=True)
    _add_output_flags(ma)
    ma.set_defaults(handler=_cmd_max_alpha)

    pv = subs.add_parser("pvalue", help="worst-case p-value from a panel CSV")
    _add_data_flags(pv)
    _add_spec_flags(pv, with_alpha=False)
    pv.add_argument("--one-sided", choices=tuple(_SIDED), default=None)
    _add_output_flags(pv)
    pv.set_defaults(handler=_cmd_pvalue)

    test = subs.add_parser("test", help="full test report from a panel CSV")
    _add_data_flags(test)
    _add_spec_flags(test)
    test.add_argument("--one-sided", choices=tuple(_SIDED), default=None)
    _add_output_flags(test)
    test.set_defaults(handler=_cmd_test)

    ci = subs.add_parser("ci", help="confidence interval for the effect")
    _add_data_flags(ci)
    _add_spec_flags(ci)
    _add_output_flags(ci)
    ci.set_defaults(handler=_cmd_ci)

    rf = subs.add_parser("rho-frontier", help="breakdown heterogeneity by k")
    _add_data_flags(rf)
    rf.add_argument("--alpha-list", type=_parse_floats, default=[0.05])
    _add_output_flags(rf)
    rf.set_defaults(handler=_cmd_rho_frontier)

    table = subs.add_parser("table", help="critical-value grid")
    table.add_argument("--k", type=int, default=1)
    table.add_argument("--alphas", type=_parse_floats, required=True)
    table.add_argument("--ms", type=_parse_ints, required=True)
    table.add_argument("--rhos", type=_parse_floats, required=True)
    table.add_argument("--workers", type=int, default=1)
    _add_output_flags(table)
    table.set_defaults(handler=_cmd_table)

    sim = subs.add_parser("simulate", help="seeded Monte Carlo size/power run")
    sim.add_argument("--design", choices=("normal", "twfe"), required=True)
    sim.add_argument("--dgp", type=int, required=True)
    sim.add_argument("--m", type=int, required=True)
    sim.add_argument("--delta", type=float, default=0.0, help="normal design: treated mean")
    sim.add_argument("--rho", type=float, default=1.0, help="normal design: treated sd")
    sim.add_argument("--sigma", type=float, default=1.0, help="twfe design: treated scale")
    sim.add_argument("--theta", type=float, default=0.0, help="twfe design: true effect")
    sim.add_argument("--reps", type=int, required=True)
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--alpha", type=float, default=0.05)
    sim.add_argument("--k", type=int, default=1)
    sim.add_argument("--test-rho", type=float, default=None,
                     help="heterogeneity ratio for the test (default: match the DGP)")
    sim.add_argument("--per-rep", default=None, help="write per-replication CSV here")
    _add_output_flags(sim)
    sim.set_defaults(handler=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoValidCriticalValueError, NumericalFailureError, BracketSignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DataFormatError, DesignViolationError, RankDeficiencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except StcError as exc:  # pragma: no cover - residual library failures
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
