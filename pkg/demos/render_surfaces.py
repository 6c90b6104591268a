"""Render emitted surface CSVs as 3D plots (requires matplotlib).

The package itself never depends on a plotting library; this script is a
consumer of the emitted data.  Run demos/05_surfaces_and_montecarlo.py
first, then:  python demos/render_surfaces.py
"""

import sys
from pathlib import Path

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib is not installed; any CSV-reading plotter works too")

from insdel_bounds import load_surface_csv

out = Path(__file__).parent / "out"
pairs = [
    ("q5_combined-outer.csv", "combined outer bound, q=5"),
    ("q5_inner.csv", "random-coding inner bound, q=5"),
]

fig = plt.figure(figsize=(12, 5))
for idx, (name, title) in enumerate(pairs, start=1):
    path = out / name
    if not path.exists():
        sys.exit(f"{path} missing; run demos/05_surfaces_and_montecarlo.py first")
    grid = load_surface_csv(path, 5)
    ax = fig.add_subplot(1, 2, idx, projection="3d")
    gammas, deltas = grid.gamma_axis, grid.delta_axis
    import numpy as np

    gg, dd = np.meshgrid(gammas, deltas)
    ax.plot_surface(gg, dd, grid.rates(), cmap="viridis", linewidth=0)
    ax.set_xlabel("insertion rate")
    ax.set_ylabel("deletion rate")
    ax.set_zlabel("rate bound")
    ax.set_title(title)

target = out / "q5_surfaces.png"
fig.tight_layout()
fig.savefig(target, dpi=130)
print(f"wrote {target}")
