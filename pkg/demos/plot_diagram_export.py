"""
Exporting diagram curves
========================

The package draws nothing; it samples curves and writes them as CSV or JSON
for any plotting tool.
"""

import sys
from pathlib import Path

from twolevel.diagrams import cycle_path, export, panel, panel_cycles

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")

# the four panels of the classic figure, one file each
for name in "abcd":
    series = panel(name, n=128, n_per_leg=32)
    path = export(series, "csv", out / f"panel_{name}.csv")
    print(f"panel {name}: {len(series)} series -> {path}")

# the Carnot cycle is a rectangle in the S-T plane
carnot, otto = panel_cycles("a")
legs = cycle_path(carnot, ("S", "T"), n_per_leg=5)
for leg in legs:
    print(leg.label, leg.points[0], "->", leg.points[-1])
export(legs + cycle_path(otto, ("S", "T"), n_per_leg=5), "json", out / "cycles_s_t.json")

# optional: plot if matplotlib is around
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    fig, ax = plt.subplots()
    for leg in legs:
        ax.plot(leg.xs, leg.ys)
    ax.set_xlabel(legs[0].x_name)
    ax.set_ylabel(legs[0].y_name)
    fig.savefig(out / "carnot_s_t.png")
