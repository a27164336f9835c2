#!/usr/bin/env python3
"""Convergence/calibration study behind the frozen test-suite bounds.

Recomputes, on the exact fixtures used by the tests:
  * the near-conformal scenario deviation profile (m = 0.01, vacuum),
  * the panel-a (m = 0.2, vacuum) deviation profile and its small-a /
    relativistic-a trend statistics,
  * the stimulated-mode deviation ratio between m = 2 and m = 0.2 at aL = 0.2,
  * the k15 vs k30 truncation drift at the five acceptance grid points.

Run from the repository root: python scripts/calibrate_bounds.py
"""

import math

import numpy as np

from qaccel.experiments import GridSpec, SweepConfig, SweepMode, conformal_check, sweep
from qaccel.params import PhysicalParams, Scenario
from qaccel.response import stimulated_only_probability, transition_probability

ACCEPTANCE_PANEL_GRID = GridSpec(0.02, 1.8, 24, "log")
TRUNCATION_POINTS = (0.02, 0.065, 0.21, 0.68, 1.8)


def study_conformal() -> None:
    grid = GridSpec(0.05, 0.3, 12, "log")
    res = conformal_check(grid.values(), 0.01)
    print("== conformal check fixture (m=0.01, vacuum, 12 log pts aL in [0.05,0.3]) ==")
    for a, pr, pb, dev in res.rows:
        print(f"  a={a:.4f}  p_rob={pr:.4e}  p_bob={pb:.4e}  dev={dev:.4f}")
    print(f"  max deviation: {res.max_deviation:.4f}  (frozen bound 0.12)")


def study_panel_a() -> None:
    config = SweepConfig(m=0.2, n1=0)
    table = sweep(config, ACCEPTANCE_PANEL_GRID, SweepMode.VACUUM)
    print("== panel-a fixture (m=0.2, vacuum, 24 log pts aL in [0.02,1.8]) ==")
    devs = []
    for r in table.rows:
        dev = abs(r.p_bob - r.p_rob) / max(r.p_rob, r.p_bob)
        devs.append((r.a, dev))
        print(f"  a={r.a:.4f}  dev={dev:.4f}")
    small = [d for a, d in devs if a <= 0.3]
    large = [d for a, d in devs if a >= 0.9]
    print(f"  max dev aL<=0.3: {max(small):.4f}  (frozen bound 0.16)")
    print(f"  mean dev aL<=0.3: {np.mean(small):.4f}  mean dev aL>=0.9: {np.mean(large):.4f}")
    print(f"  trend ratio: {np.mean(large) / np.mean(small):.2f}  (frozen threshold 2.0)")


def study_mass_contrast() -> None:
    print("== stimulated deviation at aL = 0.2 ==")
    devs = {}
    for m in (0.2, 2.0):
        omega = math.sqrt(math.pi**2 + m * m)
        p = PhysicalParams(a=0.2, L=1.0, m=m, omega=omega)
        vals = {
            s: stimulated_only_probability(s, p).total for s in Scenario
        }
        rob, bob = vals[Scenario.ACCELERATED_DETECTOR], vals[Scenario.ACCELERATED_CAVITY]
        devs[m] = abs(bob - rob) / max(rob, bob)
        print(f"  m={m}: rob={rob:.5e} bob={bob:.5e} dev={devs[m]:.5f}")
    print(f"  ratio m=2 / m=0.2: {devs[2.0] / devs[0.2]:.2f}  (frozen threshold 5.0)")


def study_truncation() -> None:
    print("== truncation drift k15 vs k30, panel-a config ==")
    omega = math.sqrt(math.pi**2 + 0.04)
    for a in TRUNCATION_POINTS:
        p = PhysicalParams(a=a, L=1.0, m=0.2, omega=omega)
        for scen in Scenario:
            t15 = transition_probability(scen, p, 15).total
            t30 = transition_probability(scen, p, 30).total
            drift = abs(t15 - t30) / t30
            marker = "" if drift < 0.01 else "   <-- exceeds 1%"
            print(f"  a={a:.3f} {scen.value}: drift={drift:.4f}{marker}")


if __name__ == "__main__":
    study_conformal()
    study_panel_a()
    study_mass_contrast()
    study_truncation()
