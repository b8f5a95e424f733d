#!/usr/bin/env python3
"""Hypothesis tests, p-values, confidence intervals, and the rho frontier.

Work with per-cluster effect estimates directly: m control estimates plus
one treated estimate.  Everything downstream — the worst-case p-value, the
level-alpha decision, the confidence interval, and the heterogeneity
frontier — comes from the same t statistic.
"""
import numpy as np

from stc import ClusterEstimates, HeterogeneitySpec, run_test
from stc.inference import confidence_interval, p_value, rho_frontier, t_statistic

rng = np.random.default_rng(7)
controls = rng.normal(0.0, 1.0, size=12)
treated = 2.8

est = ClusterEstimates(controls, treated)
t, effect, s = t_statistic(est)
print(f"m = {controls.size} controls, treated estimate = {treated}")
print(f"effect = {effect:.4f}, scale s = {s:.4f}, t = {t:.4f}")

# --- worst-case p-value and the test decision --------------------------------
spec = HeterogeneitySpec(m=controls.size, k=1, rho=1.0)
report = run_test(est, spec, alpha=0.05)
print(f"\nk=1, rho=1: p = {report.p_value:.4f}, "
      f"reject at 5%: {report.reject}, cv = {report.cv.cv:.4f}")
print(f"95% CI for the effect: [{report.ci[0]:.4f}, {report.ci[1]:.4f}]")

# the p-value is the worst-case tail probability at |t|
print(f"p_value directly: {p_value(est, spec):.4f}")

# --- sensitivity: how much heterogeneity can the finding tolerate? -----------
# rho_frontier reports, for each k, the largest rho at which the test still
# rejects; larger frontiers mean a more robust finding
frontier = rho_frontier(est, alpha=0.05)
print("\nrho frontier at 5% (0 = never rejects, inf = always):")
for k, rho_hat in enumerate(frontier.bounds, start=1):
    print(f"  k = {k:2d}: rho_hat = {rho_hat:.4f}")

# --- intervals under stronger assumed heterogeneity ---------------------------
for rho in (0.5, 1.0, 2.0):
    ci = confidence_interval(est, HeterogeneitySpec(controls.size, 1, rho), 0.05)
    print(f"rho = {rho}: 95% CI = [{ci[0]:.4f}, {ci[1]:.4f}]")
