"""
Ordering the regions
====================

The visiting order is a Christofides tour over the launch point and the
region centers. For small inputs we can check it against the exact optimum.
"""

import numpy as np

from sprayplan import (
    MetricInstance,
    PlanarPoint,
    brute_force_tour,
    christofides_tour,
    minimum_spanning_tree,
    odd_degree_vertices,
)

rng = np.random.default_rng(4)
points = [PlanarPoint(0.0, 0.0)] + [PlanarPoint(*p) for p in rng.uniform(0, 200, (8, 2))]
inst = MetricInstance.from_points(points)

# Step by step: spanning tree, then the vertices left with odd degree.
tree = minimum_spanning_tree(inst)
print("MST edges:", tree)
print("odd-degree vertices:", odd_degree_vertices(tree, inst.n))

tour = christofides_tour(inst)
best = brute_force_tour(inst)
print("christofides:", tour.order, f"{tour.length:.1f} m")
print("optimal:     ", best.order, f"{best.length:.1f} m")
print(f"ratio {tour.length / best.length:.3f} (guaranteed <= 1.5)")

# Over many random fields the ratio stays well under the bound.
ratios = []
for _ in range(50):
    pts = [PlanarPoint(*p) for p in rng.uniform(0, 100, (7, 2))]
    m = MetricInstance.from_points(pts)
    ratios.append(christofides_tour(m).length / brute_force_tour(m).length)
print(f"50 fields: mean ratio {np.mean(ratios):.3f}, worst {np.max(ratios):.3f}")
