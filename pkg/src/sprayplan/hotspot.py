"""Proximity graph over diseased regions and hotspot scoring.

Each region becomes a node whose initial feature is its area. Regions whose
centers lie within ``neighbor_radius`` of each other are joined by an edge
weighted with the center distance. A message-passing round adds to every node
the inverse-distance weighted features of its neighbors::

    H' = H + inv(A) @ H

where ``inv`` is the elementwise reciprocal of the nonzero entries of the
adjacency matrix (zeros mean "no edge" and stay zero). After a fixed number of
rounds (two by default) the features are divided by their maximum, giving a
hotspot probability in (0, 1] with the primary hotspot at exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import DiseasedRegion, ValidationError

# Centers closer than this are treated as the same location.
COINCIDENCE_EPS = 1e-9


@dataclass(frozen=True)
class DiseaseGraph:
    ids: tuple
    features: np.ndarray
    edges: tuple
    adjacency: np.ndarray

    @property
    def n(self) -> int:
        return len(self.ids)

    def neighbors(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]


@dataclass(frozen=True)
class HotspotScores:
    ids: tuple
    scores: np.ndarray
    primary_hotspot: int

    def as_dict(self) -> dict:
        return {rid: float(s) for rid, s in zip(self.ids, self.scores)}


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_graph(regions: Sequence[DiseasedRegion], neighbor_radius: float = 25.0) -> DiseaseGraph:
    n = len(regions)
    if neighbor_radius <= 0:
        raise ValidationError(f"neighbor_radius must be > 0, got {neighbor_radius}")
    centers = np.array([[r.center.x, r.center.y] for r in regions], dtype=float).reshape(n, 2)
    features = np.array([r.area for r in regions], dtype=float)
    diff = centers[:, None, :] - centers[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])

    adjacency = np.zeros((n, n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            d = dist[i, j]
            if d < COINCIDENCE_EPS:
                raise ValidationError(
                    f"regions {regions[i].id!r} and {regions[j].id!r} have coincident centers"
                )
            if d <= neighbor_radius:
                adjacency[i, j] = adjacency[j, i] = d
                edges.append((i, j, float(d)))
    return DiseaseGraph(
        ids=tuple(r.id for r in regions),
        features=_frozen(features),
        edges=tuple(edges),
        adjacency=_frozen(adjacency),
    )


def inverse_weights(adjacency: np.ndarray) -> np.ndarray:
    """Elementwise reciprocal of nonzero entries; zero entries stay zero."""
    inv = np.zeros_like(adjacency, dtype=float)
    mask = adjacency != 0
    inv[mask] = 1.0 / adjacency[mask]
    return inv


def message_passing_step(g: DiseaseGraph, h) -> np.ndarray:
    h = np.asarray(h, dtype=float)
    if h.shape != (g.n,):
        raise ValueError(f"feature vector has shape {h.shape}, graph has {g.n} nodes")
    return h + inverse_weights(g.adjacency) @ h


def hotspot_scores(g: DiseaseGraph, rounds: int = 2) -> HotspotScores:
    if g.n == 0:
        raise ValidationError("cannot score an empty graph")
    inv = inverse_weights(g.adjacency)
    h = np.array(g.features, dtype=float)
    for _ in range(rounds):
        h = h + inv @ h
    scores = h / h.max()
    # argmax returns the first maximal index, which is the documented tie rule
    return HotspotScores(ids=g.ids, scores=_frozen(scores), primary_hotspot=int(np.argmax(scores)))
