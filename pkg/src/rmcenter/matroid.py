"""Matroids given by independence oracles.

Every matroid here has ground set ``{0, ..., ground_size - 1}`` and answers
``is_independent(S)`` for any iterable of elements.  Queries are stateless:
an oracle never remembers a previous call in a way that could change an
answer.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from itertools import combinations
from typing import Iterable, Optional, Sequence


class MatroidError(ValueError):
    """Invalid matroid description (bad fields, or family violating the axioms)."""


class Matroid(ABC):
    ground_size: int

    @abstractmethod
    def _independent(self, elements: frozenset[int]) -> bool:
        """Answer for an already range-checked set."""

    def is_independent(self, elements: Iterable[int]) -> bool:
        s = frozenset(elements)
        for e in s:
            if not 0 <= e < self.ground_size:
                raise IndexError(f"element {e} outside ground set of size {self.ground_size}")
        return self._independent(s)

    def to_dict(self) -> dict:
        raise NotImplementedError


class UniformMatroid(Matroid):
    def __init__(self, ground_size: int, k: int) -> None:
        if ground_size < 0 or k < 0:
            raise MatroidError("ground_size and k must be nonnegative")
        self.ground_size = ground_size
        self.k = k

    def _independent(self, elements: frozenset[int]) -> bool:
        return len(elements) <= self.k

    def to_dict(self) -> dict:
        return {"type": "uniform", "k": self.k}

    def __repr__(self) -> str:
        return f"UniformMatroid({self.ground_size}, k={self.k})"


class PartitionMatroid(Matroid):
    """At most ``capacities[c]`` elements from each class ``c``."""

    def __init__(self, classes: Sequence[int], capacities: Sequence[int]) -> None:
        for e, c in enumerate(classes):
            if not 0 <= c < len(capacities):
                raise MatroidError(f"element {e} has class {c}, but only {len(capacities)} capacities")
        if any(cap < 0 for cap in capacities):
            raise MatroidError("capacities must be nonnegative")
        self.ground_size = len(classes)
        self.classes = tuple(classes)
        self.capacities = tuple(capacities)

    def _independent(self, elements: frozenset[int]) -> bool:
        used = [0] * len(self.capacities)
        for e in elements:
            c = self.classes[e]
            used[c] += 1
            if used[c] > self.capacities[c]:
                return False
        return True

    def to_dict(self) -> dict:
        return {"type": "partition", "classes": list(self.classes), "capacities": list(self.capacities)}

    def __repr__(self) -> str:
        return f"PartitionMatroid(classes={self.classes}, capacities={self.capacities})"


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the two classes; False if they were already one (a cycle)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``.

    Loops are allowed (always dependent), and so are parallel edges.
    """

    def __init__(self, num_vertices: int, edges: Sequence[tuple[int, int]]) -> None:
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise MatroidError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{num_vertices - 1}")
        self.num_vertices = num_vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.ground_size = len(self.edges)

    def _independent(self, elements: frozenset[int]) -> bool:
        uf = UnionFind(self.num_vertices)
        return all(uf.union(*self.edges[e]) for e in elements)

    def to_dict(self) -> dict:
        return {"type": "graphic", "vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        return f"GraphicMatroid({self.num_vertices} vertices, {self.ground_size} edges)"


class TransversalMatroid(Matroid):
    """Partial transversals of a set family.

    A set ``S`` is independent when its elements can be matched to pairwise
    distinct members of ``family``, each element into a member containing it.
    :meth:`matching` returns such a matching, which callers use as a witness.
    """

    def __init__(self, ground_size: int, family: Sequence[Iterable[int]]) -> None:
        self.ground_size = ground_size
        self.family = tuple(frozenset(a) for a in family)
        member_of: list[list[int]] = [[] for _ in range(ground_size)]
        for idx, members in enumerate(self.family):
            for e in members:
                if not 0 <= e < ground_size:
                    raise MatroidError(f"family member {idx} contains {e}, outside ground set")
                member_of[e].append(idx)
        self._member_of = tuple(tuple(sorted(lst)) for lst in member_of)

    def matching(self, elements: Iterable[int]) -> Optional[dict[int, int]]:
        """Map each element to a distinct family index, or None if impossible.

        Simple augmenting paths (Kuhn's algorithm), elements and family
        indices tried in ascending order so the result is deterministic.
        """
        order = sorted(elements)
        owner: dict[int, int] = {}  # family index -> element

        def try_assign(e: int, seen: set[int]) -> bool:
            for idx in self._member_of[e]:
                if idx in seen:
                    continue
                seen.add(idx)
                if idx not in owner or try_assign(owner[idx], seen):
                    owner[idx] = e
                    return True
            return False

        for e in order:
            if not try_assign(e, set()):
                return None
        return {e: idx for idx, e in owner.items()}

    def _independent(self, elements: frozenset[int]) -> bool:
        if len(elements) > len(self.family):
            return False
        return self.matching(elements) is not None

    def to_dict(self) -> dict:
        return {"type": "transversal", "family": [sorted(a) for a in self.family]}

    def __repr__(self) -> str:
        return f"TransversalMatroid({self.ground_size}, {len(self.family)} sets)"


class ExplicitMatroid(Matroid):
    """A matroid listed set by set.  Only sensible for tiny ground sets.

    The listed family is checked against the matroid axioms on construction:
    it must contain the empty set, be closed under taking subsets and satisfy
    the exchange property for every pair of members.
    """

    MAX_GROUND = 12

    def __init__(self, ground_size: int, independent_sets: Iterable[Iterable[int]]) -> None:
        if ground_size > self.MAX_GROUND:
            raise MatroidError(f"explicit matroids are limited to ground size {self.MAX_GROUND}")
        family = {frozenset(s) for s in independent_sets}
        for s in family:
            for e in s:
                if not 0 <= e < ground_size:
                    raise MatroidError(f"independent set {sorted(s)} leaves the ground set")
        self.ground_size = ground_size
        self.family = frozenset(family)
        problem = _axiom_violation(self.family)
        if problem:
            raise MatroidError(problem)

    @classmethod
    def from_oracle(cls, matroid: Matroid) -> "ExplicitMatroid":
        return cls(matroid.ground_size, enumerate_independent_sets(matroid))

    def _independent(self, elements: frozenset[int]) -> bool:
        return elements in self.family

    def to_dict(self) -> dict:
        sets = sorted((sorted(s) for s in self.family), key=lambda s: (len(s), s))
        return {"type": "explicit", "ground_size": self.ground_size, "independent_sets": sets}

    def __repr__(self) -> str:
        return f"ExplicitMatroid({self.ground_size}, {len(self.family)} independent sets)"


def _axiom_violation(family: frozenset[frozenset[int]]) -> Optional[str]:
    if frozenset() not in family:
        return "the empty set must be independent"
    for s in family:
        for e in s:
            if s - {e} not in family:
                return f"not downward closed: {sorted(s)} listed but {sorted(s - {e})} is not"
    # with downward closure, exchange between sizes k and k+1 implies the rest
    by_size: dict[int, list[frozenset[int]]] = {}
    for s in family:
        by_size.setdefault(len(s), []).append(s)
    for k, smalls in by_size.items():
        for small in smalls:
            for big in by_size.get(k + 1, ()):
                if not any(small | {e} in family for e in big - small):
                    return f"exchange fails between {sorted(small)} and {sorted(big)}"
    return None


class CountingMatroid(Matroid):
    """Proxy that counts independence queries forwarded to ``inner``."""

    def __init__(self, inner: Matroid) -> None:
        self.inner = inner
        self.ground_size = inner.ground_size
        self.calls = 0

    def _independent(self, elements: frozenset[int]) -> bool:
        self.calls += 1
        return self.inner._independent(elements)

    def __getattr__(self, name):
        if name == "inner":
            raise AttributeError(name)
        # e.g. TransversalMatroid.matching stays reachable through the proxy
        return getattr(self.inner, name)

    def to_dict(self) -> dict:
        return self.inner.to_dict()


def is_independent(matroid: Matroid, elements: Iterable[int]) -> bool:
    return matroid.is_independent(elements)


def rank(matroid: Matroid) -> int:
    """Size of the greedy basis built by scanning elements in ascending order."""
    basis: set[int] = set()
    for e in range(matroid.ground_size):
        if matroid.is_independent(basis | {e}):
            basis.add(e)
    return len(basis)


def extend(matroid: Matroid, independent: Iterable[int], candidates: Iterable[int]) -> Optional[int]:
    """Smallest candidate that keeps ``independent`` independent, if any."""
    base = set(independent)
    if not matroid.is_independent(base):
        raise MatroidError(f"{sorted(base)} is not independent")
    for e in sorted(set(candidates) - base):
        if matroid.is_independent(base | {e}):
            return e
    return None


def enumerate_independent_sets(matroid: Matroid, limit: Optional[int] = None) -> list[frozenset[int]]:
    """All independent sets, by depth-first extension in ascending index.

    Children of a set are only generated from independent sets, which is
    enough because the family is closed under subsets.  ``limit`` bounds the
    number of sets produced; exceeding it raises ``OverflowError``.
    """
    out: list[frozenset[int]] = []
    n = matroid.ground_size

    def visit(current: frozenset[int], start: int) -> None:
        out.append(current)
        if limit is not None and len(out) > limit:
            raise OverflowError(f"more than {limit} independent sets")
        for e in range(start, n):
            nxt = current | {e}
            if matroid.is_independent(nxt):
                visit(nxt, e + 1)

    visit(frozenset(), 0)
    return out


def check_axioms(matroid: Matroid) -> Optional[str]:
    """Exhaustively test the independence axioms over all subsets of the ground set.

    Returns a description of the first violation, or None.  Exponential in
    the ground size; meant for grounds of at most about ten elements.
    """
    n = matroid.ground_size
    family = frozenset(
        frozenset(c) for k in range(n + 1) for c in combinations(range(n), k) if matroid.is_independent(c)
    )
    return _axiom_violation(family)


def matroid_from_dict(data: dict, ground_size: int) -> Matroid:
    """Build a matroid from its JSON description over ``ground_size`` elements."""
    kind = data.get("type")
    if kind == "uniform":
        return UniformMatroid(ground_size, int(data["k"]))
    if kind == "partition":
        m = PartitionMatroid(data["classes"], data["capacities"])
    elif kind == "graphic":
        m = GraphicMatroid(int(data["vertices"]), [tuple(e) for e in data["edges"]])
    elif kind == "transversal":
        m = TransversalMatroid(ground_size, data["family"])
    elif kind == "explicit":
        m = ExplicitMatroid(int(data.get("ground_size", ground_size)), data["independent_sets"])
    else:
        raise MatroidError(f"unknown matroid type {kind!r}")
    if m.ground_size != ground_size:
        raise MatroidError(f"{kind} matroid has {m.ground_size} elements but the instance has {ground_size} points")
    return m
