"""Rado matroids: independence through an independent system of representatives.

Given a base matroid on ``X`` and a candidate set ``X_y`` for each ``y`` in
another ground set ``Y``, a set ``J`` of ``Y`` is independent when every
``y`` in ``J`` can pick its own representative from ``X_y``, all distinct,
with the picked representatives independent in the base matroid.

Both questions, "is J independent?" and "which representatives?", reduce
to intersecting the base matroid with the transversal matroid of the family
``{X_y : y in J}``.  A maximum common independent set of size ``|J|`` is
exactly such a set of representatives, and the transversal matching that
certifies it says which ``y`` each representative belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .intersection import IntersectionState, max_common_independent
from .matroid import Matroid, TransversalMatroid
from .metric import MetricInstance, ball


class NoRepresentativesError(ValueError):
    """The queried set has no independent system of distinct representatives."""


@dataclass(frozen=True)
class RadoSystem:
    base: Matroid
    candidate_sets: tuple[frozenset[int], ...]
    radius: float | None = None  # the r of the relaxed specialization, if built from balls

    def __post_init__(self) -> None:
        for y, xs in enumerate(self.candidate_sets):
            for x in xs:
                if not 0 <= x < self.base.ground_size:
                    raise ValueError(f"candidate set of {y} contains {x}, outside the base ground set")

    @property
    def ground_size(self) -> int:
        return len(self.candidate_sets)

    def _check(self, J: Iterable[int]) -> list[int]:
        elems = sorted(set(J))
        for y in elems:
            if not 0 <= y < self.ground_size:
                raise IndexError(f"element {y} outside Rado ground set of size {self.ground_size}")
        return elems

    def transversal_for(self, J: Sequence[int]) -> TransversalMatroid:
        """Transversal matroid over the base ground set whose i-th set is ``X_{J[i]}``."""
        return TransversalMatroid(self.base.ground_size, [self.candidate_sets[y] for y in J])

    def is_independent(self, J: Iterable[int]) -> bool:
        return is_rado_independent(self, J)


def make_rado(base: Matroid, candidate_sets: Sequence[Iterable[int]]) -> RadoSystem:
    return RadoSystem(base, tuple(frozenset(xs) for xs in candidate_sets))


def build_relax(inst: MetricInstance, base: Matroid, r: float) -> RadoSystem:
    """Relaxed matroid at radius ``r``: element ``e`` may be represented by any point within ``2r``."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if base.ground_size != inst.n:
        raise ValueError(f"matroid has {base.ground_size} elements but the instance has {inst.n} points")
    return RadoSystem(base, tuple(ball(inst, e, 2 * r) for e in range(inst.n)), radius=r)


def _witness(sys: RadoSystem, J: list[int]) -> dict[int, int] | None:
    transversal = sys.transversal_for(J)
    common = max_common_independent(sys.base, transversal)
    if len(common) < len(J):
        return None
    matching = transversal.matching(common)
    return {J[idx]: x for x, idx in matching.items()}


def is_rado_independent(sys: RadoSystem, J: Iterable[int]) -> bool:
    elems = sys._check(J)
    if not elems:
        return True
    transversal = sys.transversal_for(elems)
    return len(max_common_independent(sys.base, transversal)) == len(elems)


def representatives(sys: RadoSystem, J: Iterable[int]) -> dict[int, int]:
    """A map ``y -> x`` with ``x`` in ``X_y``, injective, and with base-independent image."""
    elems = sys._check(J)
    rep = _witness(sys, elems)
    if rep is None:
        raise NoRepresentativesError(f"{elems} has no independent system of distinct representatives")
    return rep


def check_representatives(sys: RadoSystem, J: Iterable[int], rep: dict[int, int]) -> list[str]:
    """List the ways ``rep`` fails to be a system of distinct representatives for ``J``."""
    problems = []
    J = set(J)
    if set(rep) != J:
        problems.append(f"domain {sorted(rep)} differs from {sorted(J)}")
    image = list(rep.values())
    if len(set(image)) != len(image):
        problems.append("not injective")
    for y, x in sorted(rep.items()):
        if y < len(sys.candidate_sets) and x not in sys.candidate_sets[y]:
            problems.append(f"representative {x} of {y} is not a candidate")
    if not sys.base.is_independent(image):
        problems.append(f"image {sorted(image)} is dependent in the base matroid")
    return problems


class RadoContext:
    """Witness for a growing Rado-independent set, for the greedy loop.

    Holds ``J`` together with a base-independent set ``I`` of size ``|J|``
    that the transversal matroid of ``J`` accepts.  Extending by ``t`` needs a
    single augmentation: ``I`` stays common-independent when ``X_t`` joins the
    family, and the new maximum is at most one larger.
    """

    def __init__(self, sys: RadoSystem) -> None:
        self.sys = sys
        self.members: list[int] = []
        self.common: frozenset[int] = frozenset()
        self.probes = 0

    def representatives(self) -> dict[int, int]:
        matching = self.sys.transversal_for(self.members).matching(self.common)
        if matching is None or len(self.common) != len(self.members):
            raise AssertionError("incremental Rado context lost its witness")
        return {self.members[idx]: x for x, idx in matching.items()}


def incremental_extend(sys: RadoSystem, ctx: RadoContext, t: int) -> bool:
    """Try to add ``t`` to the context's set; on rejection nothing changes."""
    if ctx.sys is not sys:
        raise ValueError("context belongs to a different Rado system")
    if not 0 <= t < sys.ground_size:
        raise IndexError(f"element {t} outside Rado ground set of size {sys.ground_size}")
    if len(ctx.common) != len(ctx.members):
        raise AssertionError("incremental Rado context is corrupted")
    ctx.probes += 1
    if t in ctx.members:
        return True  # J + t == J, which the context already witnesses
    members = ctx.members + [t]
    state = IntersectionState(sys.base, sys.transversal_for(members), ctx.common)
    if not state.augment():
        return False
    ctx.members = members
    ctx.common = state.current
    return True
