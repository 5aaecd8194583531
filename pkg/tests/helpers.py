"""Random inputs and brute-force reference answers shared by the tests."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from rmcenter.generate import GenOptions, generate_instance, graph_metric
from rmcenter.instances import parse_instance
from rmcenter.matroid import (
    ExplicitMatroid,
    GraphicMatroid,
    PartitionMatroid,
    TransversalMatroid,
    UniformMatroid,
)
from rmcenter.metric import MetricInstance
from rmcenter.rado import make_rado

KINDS = ("uniform", "partition", "graphic", "transversal")


def subsets(n, max_size=None):
    top = n if max_size is None else min(n, max_size)
    for k in range(top + 1):
        yield from (frozenset(c) for c in combinations(range(n), k))


def random_instance(rng: random.Random, n: int, max_edge: int = 10, wmax: int = 10) -> MetricInstance:
    dist = graph_metric(rng, n, 0.3, max_edge)
    weights = [rng.randint(0, wmax) for _ in range(n)]
    return MetricInstance(dist, weights, rng.randint(0, max(1, sum(weights))))


def random_concrete_matroid(rng: random.Random, n: int, kind: str | None = None, max_rank: int = 4):
    kind = kind or rng.choice(KINDS)
    r = rng.randint(0, max_rank)
    if kind == "uniform":
        return UniformMatroid(n, r)
    if kind == "partition":
        c = rng.randint(1, 3)
        return PartitionMatroid([rng.randrange(c) for _ in range(n)], [rng.randint(0, 2) for _ in range(c)])
    if kind == "graphic":
        v = r + 1
        return GraphicMatroid(v, [(rng.randrange(v), rng.randrange(v)) for _ in range(n)])
    family = [rng.sample(range(n), rng.randint(0, n)) for _ in range(r)] if n else [[] for _ in range(r)]
    return TransversalMatroid(n, family)


def random_explicit_matroid(rng: random.Random, n: int) -> ExplicitMatroid:
    return ExplicitMatroid.from_oracle(random_concrete_matroid(rng, n))


def random_rado(rng: random.Random, base_n: int, y_n: int):
    base = random_concrete_matroid(rng, base_n)
    cands = [[x for x in range(base_n) if rng.random() < 0.35] for _ in range(y_n)]
    return make_rado(base, cands)


def injection_exists(sys, J) -> bool:
    """Exhaustive: some injective choice from the candidate sets with independent image."""
    J = sorted(J)
    for image in permutations(range(sys.base.ground_size), len(J)):
        if all(x in sys.candidate_sets[y] for y, x in zip(J, image)) and sys.base.is_independent(image):
            return True
    return False


def corpus_instance(seed: int, n_max: int = 12, rank_max: int = 4):
    """The acceptance corpus generator: matroid type cycles with the seed."""
    rng = random.Random(10_000 + seed)
    opts = GenOptions(n=rng.randint(3, n_max), matroid=KINDS[seed % 4], rank=rng.randint(1, rank_max))
    return parse_instance(generate_instance(seed, opts))
