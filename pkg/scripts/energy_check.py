"""Work integral vs. pressure-volume work over random strokes.

    python scripts/energy_check.py --strokes 500 --seed 0
"""

import argparse
import math

import numpy as np

from mckibben.energy_audit import bore_volume_of, delta_volume, work_integral
from mckibben.force_model import WallSpec
from mckibben.geometry import BraidSpec, StrokeSpec


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--strokes", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--pressure", type=float, default=1e3, help="Pa")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    thin, thick = [], []
    for _ in range(args.strokes):
        braid = BraidSpec(rng.uniform(0.05, 2.0), rng.uniform(2, 60))
        t1, t2 = np.radians(rng.uniform(5, 85, 2))
        stroke = StrokeSpec(float(t1), float(t2))
        pv = -args.pressure * delta_volume(braid, stroke)
        work, _ = work_integral(braid, stroke, args.pressure)
        thin.append(abs(work - pv) / max(abs(pv), 1e-300))

        # thick wall: fixed t_k, bore diameter D - 2 t_k must stay positive
        t_k = 0.4 * braid.d0 * min(math.sin(t1), math.sin(t2))
        bore = bore_volume_of(braid, float(t2), t_k) - bore_volume_of(braid, float(t1), t_k)
        work, _ = work_integral(braid, stroke, args.pressure, WallSpec.from_thickness(t_k))
        pv = -args.pressure * bore
        thick.append(abs(work - pv) / max(abs(pv), 1e-300))

    for name, res in (("thin wall", thin), ("thick wall, bore volume", thick)):
        res = np.array(res)
        print(f"{name:24s} median {np.median(res):.2e}  max {res.max():.2e}")


if __name__ == "__main__":
    main()
