"""Seeded random instances.

All randomness comes from one ``random.Random(seed)``, i.e. CPython's
Mersenne Twister (MT19937) seeded from the integer ``seed``.  Draws happen in
a fixed order (geometry, then weights, then matroid), so a seed and a set
of options always produce the same instance dictionary.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .instances import FORMAT_VERSION

GEOMETRIES = ("euclidean", "graph")
MATROID_KINDS = ("uniform", "partition", "graphic", "transversal")


@dataclass
class GenOptions:
    n: int = 10
    geometry: str = "graph"
    dim: int = 2
    coord_max: int = 20
    edge_prob: float = 0.3
    max_edge_weight: int = 10
    weight_min: int = 1
    weight_max: int = 10
    matroid: str = "uniform"
    rank: int = 3
    classes: int = 3
    m_fraction: float = 0.7

    def check(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"geometry must be one of {GEOMETRIES}")
        if self.matroid not in MATROID_KINDS:
            raise ValueError(f"matroid must be one of {MATROID_KINDS}")
        if not 0 <= self.weight_min <= self.weight_max:
            raise ValueError("need 0 <= weight-min <= weight-max")
        if self.rank < 0 or self.classes < 1 or self.dim < 1:
            raise ValueError("rank must be >= 0, classes and dim >= 1")
        if self.max_edge_weight < 1 or self.coord_max < 0:
            raise ValueError("max-edge-weight must be >= 1 and coord-max >= 0")
        if not 0.0 <= self.edge_prob <= 1.0 or not 0.0 <= self.m_fraction <= 1.0:
            raise ValueError("edge-prob and m-fraction must lie in [0, 1]")


def graph_metric(rng: random.Random, n: int, edge_prob: float, max_edge_weight: int) -> list[list[int]]:
    """Shortest-path distances of a random connected graph with integer edge lengths.

    A shortest-path closure always satisfies the triangle inequality.
    """
    adj = np.zeros((n, n))
    for v in range(1, n):
        u = rng.randrange(v)  # random spanning tree keeps the graph connected
        adj[u, v] = adj[v, u] = rng.randint(1, max_edge_weight)
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u, v] == 0 and rng.random() < edge_prob:
                adj[u, v] = adj[v, u] = rng.randint(1, max_edge_weight)
    dist = shortest_path(adj, method="FW", directed=False)
    return [[int(x) for x in row] for row in dist]


def random_matroid(rng: random.Random, n: int, kind: str, rank: int, classes: int) -> dict:
    if kind == "uniform":
        return {"type": "uniform", "k": min(rank, n)}
    if kind == "partition":
        caps = [0] * classes
        for _ in range(max(rank, 1)):
            caps[rng.randrange(classes)] += 1
        return {"type": "partition", "classes": [rng.randrange(classes) for _ in range(n)], "capacities": caps}
    if kind == "graphic":
        vertices = rank + 1
        edges = []
        for _ in range(n):
            u = rng.randrange(vertices)
            v = u if rng.random() < 0.05 else rng.randrange(vertices)
            edges.append([u, v])
        return {"type": "graphic", "vertices": vertices, "edges": edges}
    if kind == "transversal":
        family = []
        for _ in range(rank):
            size = rng.randint(1, max(1, n // 2))
            family.append(sorted(rng.sample(range(n), size)))
        return {"type": "transversal", "family": family}
    raise ValueError(f"unknown matroid kind {kind!r}")


def generate_instance(seed: int, opts: GenOptions) -> dict:
    opts.check()
    rng = random.Random(seed)
    n = opts.n
    if opts.geometry == "graph":
        points = {"matrix": graph_metric(rng, n, opts.edge_prob, opts.max_edge_weight)}
    else:
        points = {"euclidean": [[rng.randint(0, opts.coord_max) for _ in range(opts.dim)] for _ in range(n)]}
    weights = [rng.randint(opts.weight_min, opts.weight_max) for _ in range(n)]
    m = math.floor(opts.m_fraction * sum(weights))
    return {
        "format": FORMAT_VERSION,
        "points": points,
        "weights": weights,
        "m": m,
        "matroid": random_matroid(rng, n, opts.matroid, opts.rank, opts.classes),
    }
