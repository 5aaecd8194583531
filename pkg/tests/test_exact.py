import random
from itertools import combinations

import pytest

from helpers import corpus_instance, random_concrete_matroid, random_instance, random_rado, subsets
from rmcenter.exact import EnumerationLimitError, best_coverage_at, exact_solve, exhaustive_rado_check
from rmcenter.matroid import UniformMatroid
from rmcenter.metric import MetricInstance, ball_union_weight, candidate_radii
from rmcenter.rado import is_rado_independent, make_rado
from rmcenter.solver import search_radius


def collinear(m):
    return MetricInstance.from_euclidean([[0], [1], [2]], [1, 1, 1], m)


def test_single_point():
    res = exact_solve(MetricInstance([[0]], [4], 4), UniformMatroid(1, 1))
    assert res.opt_radius == 0 and res.witness == {0}


def test_target_above_total_weight():
    res = exact_solve(collinear(4), UniformMatroid(3, 3))
    assert not res.feasible and res.opt_radius is None


def test_collinear_enumeration():
    # singletons {0}, {1}, {2} at radii 0, 1, 2 cover 1/1/1, 2/3/2, 3/3/3
    res = exact_solve(collinear(3), UniformMatroid(3, 1))
    assert res.opt_radius == 1
    assert res.witness == {1}
    assert [(r, v) for r, v, _ in res.table] == [(0, 1), (1, 3), (2, 3)]


def test_best_coverage_examples():
    rng = random.Random(41)
    inst = random_instance(rng, 8)
    diameter = max(max(row) for row in inst.dist)
    assert best_coverage_at(inst, UniformMatroid(8, 1), diameter)[0] == sum(inst.weights)
    # radius 0: each centre covers only itself
    value, best = best_coverage_at(inst, UniformMatroid(8, 3), 0)
    assert value == sum(sorted(inst.weights)[-3:])
    assert sum(inst.weights[c] for c in best) == value


def _best_by_combinations(inst, base, r):
    best = -1.0
    # a different order from the depth-first enumeration: largest sets first
    for k in range(base.ground_size, -1, -1):
        for c in combinations(range(base.ground_size), k):
            if base.is_independent(c):
                best = max(best, ball_union_weight(inst, c, r))
    return best


def test_best_coverage_two_enumeration_orders():
    rng = random.Random(42)
    for _ in range(25):
        inst = random_instance(rng, rng.randint(1, 8))
        base = random_concrete_matroid(rng, inst.n)
        for r in candidate_radii(inst):
            value, best = best_coverage_at(inst, base, r)
            assert value == _best_by_combinations(inst, base, r)
            assert base.is_independent(best)
            assert ball_union_weight(inst, best, r) == value
            # lexicographically smallest maximizer
            for s in subsets(inst.n):
                if base.is_independent(s) and ball_union_weight(inst, s, r) == value:
                    assert tuple(sorted(best)) <= tuple(sorted(s))


def test_guardrails():
    inst = random_instance(random.Random(43), 12)
    with pytest.raises(EnumerationLimitError):
        exact_solve(inst, UniformMatroid(12, 6), max_enum=1000)
    sys = make_rado(UniformMatroid(9, 9), [[i] for i in range(9)])
    with pytest.raises(EnumerationLimitError):
        exhaustive_rado_check(sys, range(8))


def test_exhaustive_rado_examples():
    sys = make_rado(UniformMatroid(3, 2), [[0, 1], [], [2]])
    assert exhaustive_rado_check(sys, [])
    assert not exhaustive_rado_check(sys, [1])
    assert exhaustive_rado_check(sys, [0, 2])


def test_exhaustive_rado_agrees_with_intersection():
    rng = random.Random(44)
    for _ in range(40):
        sys = random_rado(rng, rng.randint(1, 7), rng.randint(1, 6))
        for J in subsets(sys.ground_size, 5):
            assert exhaustive_rado_check(sys, J) == is_rado_independent(sys, J)


def test_table_properties_and_search_sandwich():
    for seed in range(60):
        inst, base = corpus_instance(seed, n_max=9)
        res = exact_solve(inst, base)
        values = [v for _, v, _ in res.table]
        assert values == sorted(values)
        if not res.feasible:
            continue
        assert res.opt_radius in candidate_radii(inst)
        assert base.is_independent(res.witness)
        assert ball_union_weight(inst, res.witness, res.opt_radius) >= inst.coverage_target
        sol = search_radius(inst, base)
        assert res.opt_radius <= sol.radius <= 5 * res.opt_radius
