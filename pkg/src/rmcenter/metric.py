"""Weighted finite metric spaces, closed balls and candidate radii."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

TRIANGLE_TOL = 1e-9


class MetricInstance:
    """A Robust Matroid Center instance minus the matroid.

    Points are the indices ``0..n-1``.  ``dist`` is an explicit symmetric
    matrix; coordinates are expanded once by :meth:`from_euclidean` and never
    seen again by the algorithms.

    The instance is read-only after construction.  The only mutable bit is the
    ``metric_checked`` flag, which :func:`validate_metric` flips on success.
    """

    __slots__ = ("_dist", "_weights", "_m", "_metric_checked")

    def __init__(
        self,
        dist: Sequence[Sequence[float]],
        weights: Sequence[float],
        coverage_target: float,
    ) -> None:
        n = len(weights)
        if len(dist) != n or any(len(row) != n for row in dist):
            raise ValueError(f"distance matrix must be {n}x{n} to match {n} weights")
        rows = tuple(tuple(float(v) for v in row) for row in dist)
        for i in range(n):
            for j in range(n):
                if not rows[i][j] >= 0.0:  # also rejects NaN
                    raise ValueError(f"dist[{i}][{j}] = {rows[i][j]!r} is not a nonnegative number")
        w = tuple(float(x) for x in weights)
        for i, x in enumerate(w):
            if not x >= 0.0:
                raise ValueError(f"weights[{i}] = {x!r} is negative")
        m = float(coverage_target)
        if not m >= 0.0:
            raise ValueError(f"coverage target {m!r} is negative")
        self._dist = rows
        self._weights = w
        self._m = m
        self._metric_checked = False

    @classmethod
    def from_euclidean(
        cls,
        coords: Sequence[Sequence[float]],
        weights: Sequence[float],
        coverage_target: float,
    ) -> "MetricInstance":
        pts = np.asarray(coords, dtype=float)
        if pts.ndim != 2 or pts.shape[0] != len(weights):
            raise ValueError("need one coordinate row per weight")
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.sqrt((diff * diff).sum(axis=-1))
        # exact symmetry regardless of rounding
        dist = np.minimum(dist, dist.T)
        np.fill_diagonal(dist, 0.0)
        return cls(dist.tolist(), weights, coverage_target)

    @property
    def n(self) -> int:
        return len(self._weights)

    @property
    def dist(self) -> tuple[tuple[float, ...], ...]:
        return self._dist

    @property
    def weights(self) -> tuple[float, ...]:
        return self._weights

    @property
    def coverage_target(self) -> float:
        return self._m

    @property
    def metric_checked(self) -> bool:
        return self._metric_checked

    def total_weight(self) -> float:
        return sum(self._weights)

    def __repr__(self) -> str:
        return f"MetricInstance(n={self.n}, m={self._m})"


def _check_index(inst: MetricInstance, u: int) -> None:
    if not 0 <= u < inst.n:
        raise IndexError(f"point index {u} out of range for n={inst.n}")


def ball(inst: MetricInstance, center: int, radius: float) -> frozenset[int]:
    """Closed ball: every point at distance <= ``radius`` from ``center``."""
    _check_index(inst, center)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    row = inst.dist[center]
    return frozenset(v for v in range(inst.n) if row[v] <= radius)


def ball_union(inst: MetricInstance, centers: Iterable[int], radius: float) -> frozenset[int]:
    covered: set[int] = set()
    for c in centers:
        covered |= ball(inst, c, radius)
    return frozenset(covered)


def set_weight(inst: MetricInstance, points: Iterable[int]) -> float:
    """Sum of weights in ascending index order, so equal sets give equal floats."""
    w = inst.weights
    return sum(w[v] for v in sorted(points))


def ball_union_weight(inst: MetricInstance, centers: Iterable[int], radius: float) -> float:
    return set_weight(inst, ball_union(inst, centers, radius))


def candidate_radii(inst: MetricInstance) -> list[float]:
    """Distinct pairwise distances in increasing order, always starting at 0."""
    values = {0.0}
    for i, j in combinations(range(inst.n), 2):
        values.add(inst.dist[i][j])
    return sorted(values)


def validate_metric(inst: MetricInstance, tol: float = TRIANGLE_TOL) -> list[tuple]:
    """Return every metric-axiom violation found by an exhaustive scan.

    Entries are ``("diagonal", i)``, ``("symmetry", i, j)`` with ``i < j``, or
    a sorted triple ``(i, j, k)`` naming a triangle in which one side is longer
    than the other two combined (beyond ``tol``).  Each offending triangle is
    listed once.

    An empty result marks the instance as ``metric_checked``.
    """
    d = inst.dist
    n = inst.n
    violations: list[tuple] = []
    for i in range(n):
        if d[i][i] != 0.0:
            violations.append(("diagonal", i))
    for i, j in combinations(range(n), 2):
        if abs(d[i][j] - d[j][i]) > tol:
            violations.append(("symmetry", i, j))
    for i, j, k in combinations(range(n), 3):
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j), (j, i, k), (k, j, i), (i, k, j)):
            # side a-b against the detour through c
            if d[a][b] > d[a][c] + d[c][b] + tol:
                violations.append((i, j, k))
                break
    if not violations:
        inst._metric_checked = True
    return violations
