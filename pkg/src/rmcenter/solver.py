"""Greedy 5-approximation for Robust Matroid Center.

For a radius guess ``r`` the greedy picks ``rank(M)`` centres one at a time.
Each pick is the point whose ``r``-ball holds the most still-uncovered weight,
subject to the picked points staying independent in the relaxed matroid,
where a point may be stood in for by any point within ``2r``.  Each pick
marks its ``3r``-ball as covered.  The stand-ins (representatives) form the
returned centre set, which covers everything the picks cover at ``3r`` once
the radius is raised to ``5r``.

If some independent set covers weight ``m`` at radius ``r``, the returned
centres cover weight ``m`` at ``5r``.  Searching the candidate radii for a
failing radius directly below a succeeding one therefore gives a
5-approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .matroid import Matroid, rank
from .metric import MetricInstance, ball, ball_union_weight, candidate_radii, set_weight
from .rado import RadoContext, build_relax, incremental_extend, representatives

RADIUS_FACTOR = 5


class GreedyStallError(RuntimeError):
    """No candidate extends the greedy set although its rank says one must."""


class InfeasibleInstanceError(ValueError):
    """Even the largest candidate radius misses the coverage target."""

    def __init__(self, message: str, solution: "Solution") -> None:
        super().__init__(message)
        self.solution = solution


@dataclass
class IterationRecord:
    center: int
    gain: float  # uncovered weight inside the r-ball of ``center`` when picked
    uncovered: int  # points left uncovered after removing the 3r-ball
    probes: int  # Rado independence probes spent on this pick

    def to_dict(self) -> dict:
        return {"center": self.center, "gain": self.gain, "uncovered": self.uncovered, "probes": self.probes}


@dataclass
class GreedyRun:
    r: float
    T: list[int]
    trace: list[IterationRecord]
    R: frozenset[int]
    rep_map: dict[int, int]
    rank: int

    @property
    def probes_per_iteration(self) -> list[int]:
        return [rec.probes for rec in self.trace]


@dataclass
class Solution:
    r: float
    radius: float
    centers: list[int]
    covered_weight: float
    feasible: bool
    representative_map: list[tuple[int, int]] = field(default_factory=list)
    trace: list[IterationRecord] = field(default_factory=list)
    picked: list[int] = field(default_factory=list)
    probed_radii: list[float] = field(default_factory=list)

    def to_dict(self, include_trace: bool = True) -> dict:
        out = {
            "r": self.r,
            "radius": self.radius,
            "centers": list(self.centers),
            "representative_map": [list(p) for p in self.representative_map],
            "covered_weight": self.covered_weight,
            "feasible": self.feasible,
        }
        if include_trace:
            out["trace"] = [rec.to_dict() for rec in self.trace]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Solution":
        return cls(
            r=float(data["r"]),
            radius=float(data["radius"]),
            centers=[int(c) for c in data["centers"]],
            covered_weight=float(data["covered_weight"]),
            feasible=bool(data["feasible"]),
            representative_map=[(int(t), int(x)) for t, x in data.get("representative_map", [])],
            trace=[IterationRecord(**rec) for rec in data.get("trace", [])],
        )


def greedy_fixed_radius(inst: MetricInstance, base: Matroid, r: float) -> GreedyRun:
    if r < 0:
        raise ValueError("radius guess must be nonnegative")
    sys = build_relax(inst, base, r)
    rho = rank(base)
    n = inst.n
    small = [ball(inst, t, r) for t in range(n)]
    large = [ball(inst, t, 3 * r) for t in range(n)]

    uncovered = set(range(n))
    picked: list[int] = []
    trace: list[IterationRecord] = []
    ctx = RadoContext(sys)
    for _ in range(rho):
        gain = {t: set_weight(inst, small[t] & uncovered) for t in range(n) if t not in ctx.members}
        before = ctx.probes
        chosen: Optional[int] = None
        # descending gain, ascending index: the first accepted point is the tie-broken argmax
        for t in sorted(gain, key=lambda t: (-gain[t], t)):
            if incremental_extend(sys, ctx, t):
                chosen = t
                break
        if chosen is None:
            raise GreedyStallError(
                f"no point extends {picked} although the base matroid has rank {rho}; the oracle is inconsistent"
            )
        picked.append(chosen)
        uncovered -= large[chosen]
        trace.append(IterationRecord(chosen, gain[chosen], len(uncovered), ctx.probes - before))

    rep = representatives(sys, picked)
    return GreedyRun(r=r, T=picked, trace=trace, R=frozenset(rep.values()), rep_map=rep, rank=rho)


def solution_from_run(inst: MetricInstance, run: GreedyRun) -> Solution:
    radius = RADIUS_FACTOR * run.r
    covered = ball_union_weight(inst, run.R, radius)
    return Solution(
        r=run.r,
        radius=radius,
        centers=sorted(run.R),
        covered_weight=covered,
        feasible=covered >= inst.coverage_target,
        representative_map=[(t, run.rep_map[t]) for t in run.T],
        trace=list(run.trace),
        picked=list(run.T),
    )


def solve_fixed_radius(inst: MetricInstance, base: Matroid, r: float) -> Solution:
    sol = solution_from_run(inst, greedy_fixed_radius(inst, base, r))
    sol.probed_radii = [r]
    return sol


def search_radius(inst: MetricInstance, base: Matroid) -> Solution:
    """Smallest-looking radius certified by a fail/succeed boundary.

    ``success(r)`` runs the greedy at ``r`` and checks the ``5r`` coverage.
    It need not be monotone in ``r``, so we bisect between an index known to
    fail and one known to succeed; the answer sits just above a failure, and
    a failure at ``r'`` proves the optimum exceeds ``r'``.
    """
    radii = candidate_radii(inst)
    memo: dict[int, Solution] = {}
    probed: list[float] = []

    def attempt(i: int) -> Solution:
        if i not in memo:
            memo[i] = solution_from_run(inst, greedy_fixed_radius(inst, base, radii[i]))
            probed.append(radii[i])
        return memo[i]

    def finish(sol: Solution) -> Solution:
        sol.probed_radii = list(probed)
        return sol

    if attempt(0).feasible:
        return finish(attempt(0))
    hi = len(radii) - 1
    if not attempt(hi).feasible:
        raise InfeasibleInstanceError(
            f"no solution: even at radius {radii[hi]} the greedy covers {attempt(hi).covered_weight} < m = {inst.coverage_target}",
            finish(attempt(hi)),
        )
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if attempt(mid).feasible:
            hi = mid
        else:
            lo = mid
    return finish(attempt(hi))


@dataclass
class VerificationReport:
    checks: dict[str, bool]
    details: list[str]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": dict(self.checks), "details": list(self.details)}


def verify_solution(inst: MetricInstance, base: Matroid, sol: Solution) -> VerificationReport:
    """Recheck a solution from scratch.  Never raises on bad solutions."""
    checks: dict[str, bool] = {}
    details: list[str] = []

    in_range = all(0 <= c < inst.n for c in sol.centers)
    checks["centers_in_range"] = in_range
    if not in_range:
        details.append(f"centre index outside 0..{inst.n - 1}")
        checks["centers_independent"] = False
        checks["covered_weight_matches"] = False
        checks["coverage_meets_target"] = False
    else:
        independent = base.is_independent(sol.centers) and len(set(sol.centers)) == len(sol.centers)
        checks["centers_independent"] = independent
        if not independent:
            details.append(f"centres {sorted(sol.centers)} are dependent in the matroid")
        covered = ball_union_weight(inst, sol.centers, sol.radius) if sol.radius >= 0 else 0.0
        checks["covered_weight_matches"] = covered == sol.covered_weight
        if covered != sol.covered_weight:
            details.append(f"recomputed coverage {covered} differs from reported {sol.covered_weight}")
        checks["coverage_meets_target"] = covered >= inst.coverage_target
        if covered < inst.coverage_target:
            details.append(f"coverage {covered} at radius {sol.radius} is below m = {inst.coverage_target}")

    checks["radius_is_five_r"] = sol.radius == RADIUS_FACTOR * sol.r
    if not checks["radius_is_five_r"]:
        details.append(f"radius {sol.radius} is not {RADIUS_FACTOR} * {sol.r}")

    if sol.representative_map:
        ok = set(x for _, x in sol.representative_map) == set(sol.centers)
        for t, x in sol.representative_map:
            if not (0 <= t < inst.n and 0 <= x < inst.n) or inst.dist[t][x] > 2 * sol.r:
                ok = False
                details.append(f"representative {x} of {t} is farther than 2r = {2 * sol.r}")
        checks["representatives_valid"] = ok
    return VerificationReport(checks, details)
