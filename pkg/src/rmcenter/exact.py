"""Brute-force reference solvers.  Exponential on purpose; small inputs only."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .matroid import Matroid, enumerate_independent_sets
from .metric import MetricInstance, candidate_radii
from .rado import RadoSystem

DEFAULT_MAX_ENUM = 2**20
MAX_RADO_CHECK = 7


class EnumerationLimitError(RuntimeError):
    """The brute force would exceed its configured size limit."""


@dataclass
class ExactResult:
    opt_radius: Optional[float]  # None: infeasible at every radius
    witness: frozenset[int]
    table: list[tuple[float, float, frozenset[int]]] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.opt_radius is not None

    def best_coverage(self, r: float) -> tuple[float, frozenset[int]]:
        for radius, value, best in self.table:
            if radius == r:
                return value, best
        raise KeyError(f"{r} is not a candidate radius of this instance")

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "opt_radius": self.opt_radius,
            "witness": sorted(self.witness),
            "table": [{"r": r, "best_coverage": v, "centers": sorted(s)} for r, v, s in self.table],
        }


def _independent_sets(base: Matroid, max_enum: int) -> list[frozenset[int]]:
    try:
        return enumerate_independent_sets(base, limit=max_enum)
    except OverflowError:
        raise EnumerationLimitError(
            f"matroid has more than {max_enum} independent sets; raise the limit to enumerate anyway"
        ) from None


class _Coverage:
    """Ball membership as bitmasks, with the weight of each covered mask memoized."""

    def __init__(self, inst: MetricInstance) -> None:
        self.inst = inst
        self._weight: dict[int, float] = {}

    def ball_masks(self, r: float) -> list[int]:
        n = self.inst.n
        return [sum(1 << v for v in range(n) if self.inst.dist[u][v] <= r) for u in range(n)]

    def weight(self, mask: int) -> float:
        w = self._weight.get(mask)
        if w is None:
            weights = self.inst.weights
            w = sum(weights[v] for v in range(self.inst.n) if mask >> v & 1)
            self._weight[mask] = w
        return w


def _best(cov: _Coverage, sets: list[frozenset[int]], r: float) -> tuple[float, frozenset[int]]:
    masks = cov.ball_masks(r)
    best_value, best_set = -1.0, frozenset()
    # sets arrive in lexicographic order, so strict improvement keeps the smallest maximizer
    for s in sets:
        covered = 0
        for c in s:
            covered |= masks[c]
        value = cov.weight(covered)
        if value > best_value:
            best_value, best_set = value, s
    return best_value, best_set


def best_coverage_at(
    inst: MetricInstance, base: Matroid, r: float, max_enum: int = DEFAULT_MAX_ENUM
) -> tuple[float, frozenset[int]]:
    """Largest weight any independent set covers at radius ``r``, with its maximizer."""
    return _best(_Coverage(inst), _independent_sets(base, max_enum), r)


def exact_solve(inst: MetricInstance, base: Matroid, max_enum: int = DEFAULT_MAX_ENUM) -> ExactResult:
    """Optimal radius by trying every independent set at every candidate radius."""
    if base.ground_size != inst.n:
        raise ValueError(f"matroid has {base.ground_size} elements but the instance has {inst.n} points")
    sets = _independent_sets(base, max_enum)
    cov = _Coverage(inst)
    table = [(r, *_best(cov, sets, r)) for r in candidate_radii(inst)]
    for r, value, best in table:
        if value >= inst.coverage_target:
            return ExactResult(r, best, table)
    return ExactResult(None, frozenset(), table)


def exhaustive_rado_check(sys: RadoSystem, J: Iterable[int], max_size: int = MAX_RADO_CHECK) -> bool:
    """Search all injective representative choices for ``J`` directly."""
    elems = sorted(set(J))
    if len(elems) > max_size:
        raise EnumerationLimitError(f"|J| = {len(elems)} exceeds the exhaustive limit {max_size}")
    for y in elems:
        if not 0 <= y < sys.ground_size:
            raise IndexError(f"element {y} outside Rado ground set of size {sys.ground_size}")

    def assign(i: int, image: list[int]) -> bool:
        if i == len(elems):
            return sys.base.is_independent(image)
        for x in sorted(sys.candidate_sets[elems[i]]):
            if x in image:
                continue
            image.append(x)
            found = assign(i + 1, image)
            image.pop()
            if found:
                return True
        return False

    return assign(0, [])
