"""Maximum-cardinality matroid intersection by shortest augmenting paths."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .matroid import Matroid


class OracleInconsistencyError(RuntimeError):
    """An augmenting path broke independence, so an oracle is not a matroid."""


class IntersectionState:
    """A set independent in two matroids over the same ground set.

    :meth:`augment` grows ``current`` by exactly one element whenever a larger
    common independent set exists.  Starting from any common independent set
    and augmenting until it returns False yields a maximum one.
    """

    def __init__(self, m1: Matroid, m2: Matroid, current: Iterable[int] = ()) -> None:
        if m1.ground_size != m2.ground_size:
            raise ValueError(f"ground sizes differ: {m1.ground_size} vs {m2.ground_size}")
        self.m1 = m1
        self.m2 = m2
        self.current = frozenset(current)
        if not (m1.is_independent(self.current) and m2.is_independent(self.current)):
            raise ValueError(f"{sorted(self.current)} is not independent in both matroids")

    def augment(self) -> bool:
        I = self.current
        cache1: dict[frozenset[int], bool] = {}
        cache2: dict[frozenset[int], bool] = {}

        def ind1(s: frozenset[int]) -> bool:
            if s not in cache1:
                cache1[s] = self.m1.is_independent(s)
            return cache1[s]

        def ind2(s: frozenset[int]) -> bool:
            if s not in cache2:
                cache2[s] = self.m2.is_independent(s)
            return cache2[s]

        inside = sorted(I)
        # an element that is a loop of either matroid can never lie on a path
        outside = [
            z
            for z in range(self.m1.ground_size)
            if z not in I and ind1(frozenset((z,))) and ind2(frozenset((z,)))
        ]
        sources = [z for z in outside if ind1(I | {z})]
        sinks = {z for z in outside if ind2(I | {z})}
        if not sources or not sinks:
            return False
        for z in sources:
            if z in sinks:
                self._apply([z])
                return True

        succ: dict[int, list[int]] = {v: [] for v in inside + outside}
        pred: dict[int, list[int]] = {v: [] for v in inside + outside}
        for y in inside:
            without_y = I - {y}
            for z in outside:
                swapped = without_y | {z}
                if ind1(swapped):
                    succ[y].append(z)
                    pred[z].append(y)
                if ind2(swapped):
                    succ[z].append(y)
                    pred[y].append(z)

        # distances to the nearest sink, by BFS on reversed arcs
        to_sink = {z: 0 for z in sinks}
        queue = deque(sorted(sinks))
        while queue:
            v = queue.popleft()
            for u in pred[v]:
                if u not in to_sink:
                    to_sink[u] = to_sink[v] + 1
                    queue.append(u)
        reachable = [z for z in sources if z in to_sink]
        if not reachable:
            return False

        # lexicographically smallest among the shortest source-to-sink paths
        length = min(to_sink[z] for z in reachable)
        v = min(z for z in reachable if to_sink[z] == length)
        path = [v]
        while to_sink[v] > 0:
            v = min(w for w in succ[v] if to_sink.get(w) == to_sink[v] - 1)
            path.append(v)
        self._apply(path)
        return True

    def _apply(self, path: list[int]) -> None:
        new = self.current.symmetric_difference(path)
        if len(new) != len(self.current) + 1:
            raise OracleInconsistencyError(f"path {path} does not alternate correctly")
        if not (self.m1.is_independent(new) and self.m2.is_independent(new)):
            raise OracleInconsistencyError(
                f"augmenting along {path} produced {sorted(new)}, which is dependent in one of the matroids"
            )
        self.current = new


def max_common_independent(m1: Matroid, m2: Matroid) -> frozenset[int]:
    state = IntersectionState(m1, m2)
    while state.augment():
        pass
    return state.current
