"""Normalized force over braid angle for several wall thicknesses.

Writes the sweep as CSV and, if matplotlib is importable, a PNG of
F_hat against theta with the zero-force angle of each curve marked.

    python scripts/normalized_force_sweep.py --out sweep.csv --plot sweep.png
"""

import argparse
import csv
import sys
from collections import defaultdict

from mckibben.cli import main


def load(path):
    curves = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            curves[float(row["t_hat"])].append(
                (float(row["theta [deg]"]), float(row["F_hat"]), row["zero_force_theta [deg]"]))
    return curves


def plot(curves, path):
    try:
        import matplotlib
    except ImportError:
        print("matplotlib not available, skipping plot", file=sys.stderr)
        return
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for t_hat, points in sorted(curves.items()):
        theta, f_hat, zero = zip(*points)
        line, = ax.plot(theta, f_hat, label=f"t_hat = {t_hat:g}")
        if zero[0]:
            ax.axvline(float(zero[0]), color=line.get_color(), lw=0.5, ls=":")
    ax.axhline(0.0, color="k", lw=0.5)
    ax.set_xlabel("braid angle [deg]")
    ax.set_ylabel("normalized force")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    print(f"wrote {path}")


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="sweep.csv")
    parser.add_argument("--plot", default=None, help="PNG path")
    parser.add_argument("--t-hat-step", default="0.1")
    args = parser.parse_args()

    code = main(["sweep", "--format", "csv", "--out", args.out,
                 "--theta-min", "45deg", "--theta-max", "90deg", "--theta-step", "0.5deg",
                 "--t-hat-step", args.t_hat_step])
    if code != 0:
        return code
    curves = load(args.out)
    print(f"wrote {args.out}: {len(curves)} curves")
    if args.plot:
        plot(curves, args.plot)
    return 0


if __name__ == "__main__":
    sys.exit(run())
