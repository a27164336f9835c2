#!/usr/bin/env python3
"""Compute the three published probability-vs-acceleration panels and plot them.

Writes panel_{a,b,c}.csv plus panels.png into --outdir (default: ./panels).
Panel a: vacuum field, m = 0.2. Panel b: occupied ground mode (per photon),
m = 0.2. Panel c: occupied ground mode (per photon), m = 2. The detector gap
is resonant with the lowest mode in every panel; pass --omega to override.

    python scripts/run_panels.py --points 60
"""

import argparse
import time
from pathlib import Path

from qaccel.cli import main as qaccel_main


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", type=Path, default=Path("panels"))
    parser.add_argument("--points", type=int, default=60, help="grid points per panel")
    parser.add_argument("--omega", type=float, default=None, help="detector gap override")
    parser.add_argument("--kmax", type=int, default=15)
    parser.add_argument("--no-plot", action="store_true")
    return parser.parse_args()


def main():
    args = parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    grid = f"0.02:1.8:{args.points}:log"
    for panel in ("a", "b", "c"):
        out = args.outdir / f"panel_{panel}.csv"
        argv = ["sweep", "--panel", panel, "--grid", grid,
                "--kmax", str(args.kmax), "--out", str(out)]
        if args.omega is not None:
            argv += ["--omega", str(args.omega)]
        t0 = time.time()
        rc = qaccel_main(argv)
        if rc != 0:
            raise SystemExit(f"panel {panel} sweep failed with exit code {rc}")
        print(f"panel {panel}: {out} ({time.time() - t0:.1f}s)")
    if not args.no_plot:
        import subprocess
        import sys

        script = args.outdir / "plot_panels.py"
        subprocess.run([sys.executable, str(script)], check=True)


if __name__ == "__main__":
    main()
