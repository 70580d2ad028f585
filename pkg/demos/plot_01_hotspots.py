"""
Finding the disease hotspot
===========================

Regions whose centers lie within the neighbor radius are linked, and two
rounds of inverse-distance aggregation pull area toward crowded spots.
"""

# A dense cluster near the origin and two isolated patches further out.
from sprayplan import DiseasedRegion, PlanarPoint, build_graph, hotspot_scores

regions = [
    DiseasedRegion("core", PlanarPoint(-1.0, -1.0), 2.0, 2.0),
    DiseasedRegion("east", PlanarPoint(7.5, -0.5), 1.0, 1.0),
    DiseasedRegion("north", PlanarPoint(-0.5, 7.5), 1.0, 1.0),
    DiseasedRegion("west", PlanarPoint(-8.5, -0.5), 1.0, 1.0),
    DiseasedRegion("far-a", PlanarPoint(80.0, 80.0), 2.0, 2.0),
    DiseasedRegion("far-b", PlanarPoint(-90.0, 60.0), 1.0, 1.0),
]

# The graph only stores edges, so a small radius leaves the far patches alone.
graph = build_graph(regions, neighbor_radius=25.0)
for i in range(graph.n):
    print(f"{graph.ids[i]:>6} area {graph.features[i]:5.1f} neighbors {[graph.ids[j] for j in graph.neighbors(i)]}")

# Scores are normalised so the hotspot gets exactly 1.
scores = hotspot_scores(graph)
for rid, s in scores.as_dict().items():
    print(f"{rid:>6} {s:.3f} " + "#" * int(40 * s))
print("primary hotspot:", scores.ids[scores.primary_hotspot])

# far-a has the same area as the core but no neighbors: area alone is not the
# score, neighbors count too.
